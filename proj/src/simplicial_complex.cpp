#include "dchar/simplicial_complex.hpp"

#include <algorithm>
#include <sstream>

namespace dchar {

std::string Simplex::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        os << v[static_cast<std::size_t>(i)];
    }
    os << "]";
    return os.str();
}

SimplicialComplex SimplicialComplex::from_facets(index_t vertex_count, std::vector<Simplex> facets) {
    if (vertex_count <= 0) throw DescriptorError("complex needs at least one vertex");
    for (const auto& f : facets) {
        if (f.n == 0) throw DescriptorError("empty facet");
        if (!f.strictly_increasing())
            throw DescriptorError("facet " + f.str() + " is not strictly increasing");
        if (f[0] < 0 || f[f.n - 1] >= vertex_count)
            throw DescriptorError("facet " + f.str() + " has out-of-range vertices");
    }

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    SimplicialComplex K;
    K.vertex_count_ = vertex_count;

    int dim = -1;
    for (const auto& f : facets) dim = std::max(dim, f.dim());
    K.dimension_ = dim;

    // Enumerate every face of every facet, one bucket per dimension.
    K.faces_.assign(static_cast<std::size_t>(dim + 1), {});
    for (const auto& f : facets) {
        unsigned full = (1u << f.n) - 1;
        for (unsigned mask = 1; mask <= full; ++mask) {
            Simplex s = f.subset(mask);
            K.faces_[static_cast<std::size_t>(s.dim())].push_back(s);
        }
    }
    for (auto& bucket : K.faces_) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }

    // Isolated vertices are not representable via facets; require coverage so
    // that every vertex id is an actual 0-face.
    if (static_cast<index_t>(K.faces_[0].size()) != vertex_count)
        throw DescriptorError("every vertex must appear in some facet");

    // Keep only maximal elements as the facet list.
    K.facets_.clear();
    std::vector<std::vector<const Simplex*>> by_size(9);
    for (const auto& f : facets) by_size[static_cast<std::size_t>(f.n)].push_back(&f);
    for (const auto& f : facets) {
        bool maximal = true;
        for (int m = f.n + 1; m <= 8 && maximal; ++m) {
            for (const Simplex* g : by_size[static_cast<std::size_t>(m)]) {
                int found = 0, gi = 0;
                for (int fi = 0; fi < f.n; ++fi) {
                    while (gi < g->n && (*g)[gi] < f[fi]) ++gi;
                    if (gi < g->n && (*g)[gi] == f[fi]) ++found;
                }
                if (found == f.n) {
                    maximal = false;
                    break;
                }
            }
        }
        if (maximal) K.facets_.push_back(f);
    }

    K.index_.resize(K.faces_.size());
    for (std::size_t p = 0; p < K.faces_.size(); ++p) {
        K.index_[p].reserve(K.faces_[p].size() * 2);
        for (index_t i = 0; i < static_cast<index_t>(K.faces_[p].size()); ++i)
            K.index_[p].emplace(K.faces_[p][static_cast<std::size_t>(i)], i);
    }
    return K;
}

const std::vector<Simplex>& SimplicialComplex::faces(int p) const {
    static const std::vector<Simplex> empty;
    if (p < 0 || p > dimension_) return empty;
    return faces_[static_cast<std::size_t>(p)];
}

index_t SimplicialComplex::index_of(const Simplex& s) const {
    int p = s.dim();
    if (p < 0 || p > dimension_) return -1;
    const auto& idx = index_[static_cast<std::size_t>(p)];
    auto it = idx.find(s);
    return it == idx.end() ? -1 : it->second;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int p = 0; p <= dimension_; ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(face_count(p));
    return chi;
}

std::vector<index_t> SimplicialComplex::f_vector() const {
    std::vector<index_t> f;
    for (int p = 0; p <= dimension_; ++p) f.push_back(face_count(p));
    return f;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int p) {
    if (p < 1 || p > K.dimension()) throw DegreeError("boundary_matrix: degree out of range");
    SparseIntMatrix m(K.face_count(p - 1), K.face_count(p));
    const auto& fs = K.faces(p);
    for (index_t j = 0; j < static_cast<index_t>(fs.size()); ++j) {
        const Simplex& s = fs[static_cast<std::size_t>(j)];
        for (int k = 0; k < s.n; ++k) {
            index_t i = K.index_of(s.face_opposite(k));
            m.set(i, j, Int(k % 2 ? -1 : 1));
        }
    }
    return m;
}

bool VertexMap::order_preserving() const {
    for (const auto& f : source->facets()) {
        for (int i = 0; i + 1 < f.n; ++i)
            if (image[static_cast<std::size_t>(f[i])] > image[static_cast<std::size_t>(f[i + 1])]) return false;
    }
    return true;
}

std::pair<int, Simplex> VertexMap::map_simplex(const Simplex& s) const {
    std::array<index_t, 8> img;
    for (int i = 0; i < s.n; ++i) img[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(s[i])];
    // Sort with parity tracking; a repeated vertex collapses the simplex.
    int sign = 1;
    for (int i = 1; i < s.n; ++i)
        for (int j = i; j > 0 && img[static_cast<std::size_t>(j - 1)] >= img[static_cast<std::size_t>(j)]; --j) {
            if (img[static_cast<std::size_t>(j - 1)] == img[static_cast<std::size_t>(j)]) return {0, Simplex{}};
            std::swap(img[static_cast<std::size_t>(j - 1)], img[static_cast<std::size_t>(j)]);
            sign = -sign;
        }
    Simplex out;
    for (int i = 0; i < s.n; ++i) out.push(img[static_cast<std::size_t>(i)]);
    return {sign, out};
}

}  // namespace dchar
