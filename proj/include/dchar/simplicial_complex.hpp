#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dchar/rings.hpp"
#include "dchar/sparse.hpp"

namespace dchar {

// A simplex as a strictly increasing vertex tuple. Inline storage; dimension
// is capped at 7 which covers every complex this library builds.
struct Simplex {
    int8_t n = 0;
    std::array<index_t, 8> v{};

    Simplex() = default;
    Simplex(std::initializer_list<index_t> verts) {
        for (index_t x : verts) push(x);
    }

    int dim() const { return n - 1; }
    index_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    void push(index_t x) { v[static_cast<std::size_t>(n++)] = x; }

    // Face obtained by dropping the j-th vertex.
    Simplex face_opposite(int j) const {
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (i != j) f.push(v[static_cast<std::size_t>(i)]);
        return f;
    }

    // Subface selected by bitmask over vertex positions.
    Simplex subset(unsigned mask) const {
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push(v[static_cast<std::size_t>(i)]);
        return f;
    }

    bool strictly_increasing() const {
        for (int i = 0; i + 1 < n; ++i)
            if (v[static_cast<std::size_t>(i)] >= v[static_cast<std::size_t>(i + 1)]) return false;
        return true;
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.v[static_cast<std::size_t>(i)] != b.v[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator<(const Simplex& a, const Simplex& b) {
        int m = a.n < b.n ? a.n : b.n;
        for (int i = 0; i < m; ++i) {
            if (a.v[static_cast<std::size_t>(i)] != b.v[static_cast<std::size_t>(i)])
                return a.v[static_cast<std::size_t>(i)] < b.v[static_cast<std::size_t>(i)];
        }
        return a.n < b.n;
    }

    std::string str() const;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < s.n; ++i) {
            h ^= static_cast<std::size_t>(s.v[static_cast<std::size_t>(i)]) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h ^ static_cast<std::size_t>(s.n);
    }
};

// Finite ordered simplicial complex. faces[p] is lexicographically sorted,
// which fixes the basis order of every matrix derived from the complex.
// Immutable after construction.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(index_t vertex_count, std::vector<Simplex> facets);

    index_t vertex_count() const { return vertex_count_; }
    int dimension() const { return dimension_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    index_t face_count(int p) const {
        return (p < 0 || p > dimension_) ? 0 : static_cast<index_t>(faces_[static_cast<std::size_t>(p)].size());
    }
    const std::vector<Simplex>& faces(int p) const;
    const Simplex& face(int p, index_t i) const { return faces_[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]; }

    // Index of a simplex among faces of its dimension, or -1 if absent.
    index_t index_of(const Simplex& s) const;

    // Euler characteristic from face counts.
    long euler_characteristic() const;

    std::vector<index_t> f_vector() const;

private:
    index_t vertex_count_ = 0;
    int dimension_ = -1;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, index_t, SimplexHash>> index_;
};

// Boundary operator as a sparse integer matrix: rows are (p-1)-faces, columns
// are p-faces, column j the alternating-sign face expansion.
SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int p);

template <class R>
struct Cochain {
    int degree = 0;
    SparseVec<R> coeffs;

    bool is_zero() const { return coeffs.is_zero(); }
    friend bool operator==(const Cochain& a, const Cochain& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }
};

template <class R>
struct Chain {
    int degree = 0;
    SparseVec<R> coeffs;

    bool is_zero() const { return coeffs.is_zero(); }
    friend bool operator==(const Chain& a, const Chain& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }
};

template <class R>
Cochain<R> coboundary(const SimplicialComplex& K, const Cochain<R>& f) {
    Cochain<R> out;
    out.degree = f.degree + 1;
    if (f.degree + 1 > K.dimension() || f.is_zero()) return out;
    const auto& top = K.faces(f.degree + 1);
    for (index_t s = 0; s < static_cast<index_t>(top.size()); ++s) {
        const Simplex& sx = top[static_cast<std::size_t>(s)];
        R acc = RingTraits<R>::zero();
        for (int j = 0; j < sx.n; ++j) {
            index_t fi = K.index_of(sx.face_opposite(j));
            R val = f.coeffs.get(fi);
            if (RingTraits<R>::is_zero(val)) continue;
            if (j % 2)
                acc -= val;
            else
                acc += val;
        }
        out.coeffs.set(s, acc);
    }
    return out;
}

template <class R>
Chain<R> boundary(const SimplicialComplex& K, const Chain<R>& c) {
    Chain<R> out;
    out.degree = c.degree - 1;
    if (c.degree <= 0) return out;
    for (const auto& [i, val] : c.coeffs.entries) {
        const Simplex& sx = K.face(c.degree, i);
        for (int j = 0; j < sx.n; ++j) {
            index_t fi = K.index_of(sx.face_opposite(j));
            out.coeffs.add(fi, (j % 2) ? R(-val) : val);
        }
    }
    return out;
}

// Kronecker pairing of equal-degree cochain and chain.
template <class R>
R pair(const Cochain<R>& f, const Chain<R>& c) {
    if (f.degree != c.degree) throw DegreeError("pair: degree mismatch");
    R acc = RingTraits<R>::zero();
    const auto& small = f.coeffs.size() <= c.coeffs.size() ? f.coeffs : c.coeffs;
    const auto& large = f.coeffs.size() <= c.coeffs.size() ? c.coeffs : f.coeffs;
    for (const auto& [i, v] : small.entries) {
        R w = large.get(i);
        if (!RingTraits<R>::is_zero(w)) acc += v * w;
    }
    return acc;
}

template <class R>
Cochain<R> cochain_add(const Cochain<R>& a, const Cochain<R>& b) {
    if (a.degree != b.degree) throw DegreeError("cochain_add: degree mismatch");
    Cochain<R> r = a;
    r.coeffs += b.coeffs;
    return r;
}

template <class R>
Cochain<R> cochain_sub(const Cochain<R>& a, const Cochain<R>& b) {
    if (a.degree != b.degree) throw DegreeError("cochain_sub: degree mismatch");
    Cochain<R> r = a;
    r.coeffs -= b.coeffs;
    return r;
}

template <class R>
Cochain<R> cochain_scaled(const Cochain<R>& a, const R& c) {
    return Cochain<R>{a.degree, a.coeffs.scaled(c)};
}

inline Cochain<Rat> to_rational(const Cochain<Int>& c) {
    Cochain<Rat> r;
    r.degree = c.degree;
    for (const auto& [i, v] : c.coeffs.entries) r.coeffs.entries.emplace(i, Rat(v));
    return r;
}

inline Cochain<F2> reduce_mod2(const Cochain<Int>& c) {
    Cochain<F2> r;
    r.degree = c.degree;
    for (const auto& [i, v] : c.coeffs.entries)
        if (mpz_odd_p(v.get_mpz_t())) r.coeffs.entries.emplace(i, F2(1));
    return r;
}

inline Chain<F2> reduce_mod2(const Chain<Int>& c) {
    Chain<F2> r;
    r.degree = c.degree;
    for (const auto& [i, v] : c.coeffs.entries)
        if (mpz_odd_p(v.get_mpz_t())) r.coeffs.entries.emplace(i, F2(1));
    return r;
}

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Simplicial map between ordered complexes, given on vertices. Collapsing
// simplices is allowed (the map of a simplex may hit a lower-dimensional
// face); order_preserving reports whether the map is monotone on every face,
// which is what cochain-level naturality of the cup-i family requires.
struct VertexMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<index_t> image;  // per source vertex

    bool order_preserving() const;

    // Image simplex with orientation sign; {0, zero-simplex} when degenerate.
    std::pair<int, Simplex> map_simplex(const Simplex& s) const;
};

// Pullback along a simplicial map: (f^* c)(s) = sign * c(f(s)), zero on
// collapsed simplices. For order preserving maps all signs are +1.
template <class R>
Cochain<R> pullback(const VertexMap& f, const Cochain<R>& c) {
    Cochain<R> out;
    out.degree = c.degree;
    const int p = c.degree;
    if (p > f.source->dimension()) return out;
    const auto& fs = f.source->faces(p);
    for (index_t s = 0; s < static_cast<index_t>(fs.size()); ++s) {
        auto [sign, img] = f.map_simplex(fs[static_cast<std::size_t>(s)]);
        if (sign == 0) continue;
        index_t ti = f.target->index_of(img);
        if (ti < 0) throw NotSimplicialError("pullback: vertex map is not simplicial");
        R val = c.coeffs.get(ti);
        if (RingTraits<R>::is_zero(val)) continue;
        out.coeffs.set(s, sign < 0 ? R(-val) : val);
    }
    return out;
}

template <class R>
Chain<R> pushforward(const VertexMap& f, const Chain<R>& c) {
    Chain<R> out;
    out.degree = c.degree;
    for (const auto& [i, val] : c.coeffs.entries) {
        auto [sign, img] = f.map_simplex(f.source->face(c.degree, i));
        if (sign == 0) continue;
        index_t ti = f.target->index_of(img);
        if (ti < 0) throw NotSimplicialError("pushforward: vertex map is not simplicial");
        out.coeffs.add(ti, sign < 0 ? R(-val) : val);
    }
    return out;
}

}  // namespace dchar
