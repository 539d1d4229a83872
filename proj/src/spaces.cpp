#include "dchar/spaces.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace dchar {

namespace {

ComplexPtr own(SimplicialComplex&& K) { return std::make_shared<const SimplicialComplex>(std::move(K)); }

}  // namespace

ComplexPtr make_point() { return own(SimplicialComplex::from_facets(1, {Simplex{0}})); }

ComplexPtr make_circle(index_t m) {
    if (m < 3) throw DescriptorError("circle needs at least 3 vertices");
    std::vector<Simplex> facets;
    for (index_t i = 0; i + 1 < m; ++i) facets.push_back(Simplex{i, i + 1});
    facets.push_back(Simplex{0, m - 1});
    return own(SimplicialComplex::from_facets(m, std::move(facets)));
}

ComplexPtr make_simplex_sphere(int n) {
    if (n < 0 || n > 6) throw DescriptorError("simplex_sphere: dimension out of range [0,6]");
    index_t nv = static_cast<index_t>(n) + 2;
    std::vector<Simplex> facets;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        if (__builtin_popcount(mask) != n + 1) continue;
        Simplex s;
        for (index_t v = 0; v < nv; ++v)
            if (mask & (1u << v)) s.push(v);
        facets.push_back(s);
    }
    return own(SimplicialComplex::from_facets(nv, std::move(facets)));
}

ComplexPtr make_cross_polytope_sphere(int n) {
    if (n < 1 || n > 6) throw DescriptorError("cross_polytope_sphere: dimension out of range [1,6]");
    // vertex 2i = +e_i, vertex 2i+1 = -e_i; one facet per sign pattern
    index_t nv = 2 * (static_cast<index_t>(n) + 1);
    std::vector<Simplex> facets;
    for (unsigned signs = 0; signs < (1u << (n + 1)); ++signs) {
        Simplex s;
        for (int i = 0; i <= n; ++i) s.push(static_cast<index_t>(2 * i + ((signs >> i) & 1)));
        facets.push_back(s);
    }
    return own(SimplicialComplex::from_facets(nv, std::move(facets)));
}

ComplexPtr make_klein_bottle() {
    // 3x3 grid, columns glued straight, rows glued with a column flip.
    auto vid = [](index_t i, index_t j) { return 3 * i + j; };
    auto flip = [](index_t j) { return (3 - j) % 3; };
    std::vector<Simplex> tris;
    auto add = [&](index_t a, index_t b, index_t c) {
        std::array<index_t, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        tris.push_back(Simplex{t[0], t[1], t[2]});
    };
    for (index_t i = 0; i < 3; ++i)
        for (index_t j = 0; j < 3; ++j) {
            index_t j1 = (j + 1) % 3;
            index_t A = vid(i, j), C = vid(i, j1);
            index_t B = (i < 2) ? vid(i + 1, j) : vid(0, flip(j));
            index_t D = (i < 2) ? vid(i + 1, j1) : vid(0, flip(j1));
            add(A, B, D);
            add(A, C, D);
        }
    return own(SimplicialComplex::from_facets(9, std::move(tris)));
}

ProductResult product_complex(ComplexPtr K1, ComplexPtr K2) {
    if (!K1 || !K2) throw DescriptorError("product of empty complex");
    if (K1->dimension() + K2->dimension() > 7)
        throw DescriptorError("product dimension exceeds supported bound 7");
    const index_t v2 = K2->vertex_count();
    auto vid = [&](index_t a, index_t b) { return a * v2 + b; };

    std::vector<Simplex> facets;
    for (const auto& s : K1->facets())
        for (const auto& t : K2->facets()) {
            const int a = s.dim(), b = t.dim();
            // staircase paths from (0,0) to (a,b) with unit steps, by DFS
            struct Frame {
                int x, y;
                int next;  // 0 = try x-step, 1 = try y-step, 2 = done
            };
            std::vector<Frame> fs{{0, 0, 0}};
            std::vector<std::pair<int, int>> pathxy{{0, 0}};
            while (!fs.empty()) {
                Frame& f = fs.back();
                if (f.x == a && f.y == b) {
                    Simplex sp;
                    for (auto [x, y] : pathxy) sp.push(vid(s[x], t[y]));
                    facets.push_back(sp);
                    fs.pop_back();
                    pathxy.pop_back();
                    continue;
                }
                if (f.next == 0) {
                    f.next = 1;
                    if (f.x < a) {
                        const int nx = f.x + 1, ny = f.y;
                        fs.push_back({nx, ny, 0});  // invalidates f
                        pathxy.emplace_back(nx, ny);
                        continue;
                    }
                }
                if (f.next == 1) {
                    f.next = 2;
                    if (f.y < b) {
                        const int nx = f.x, ny = f.y + 1;
                        fs.push_back({nx, ny, 0});  // invalidates f
                        pathxy.emplace_back(nx, ny);
                        continue;
                    }
                }
                fs.pop_back();
                pathxy.pop_back();
            }
        }

    ProductResult out;
    out.complex = own(SimplicialComplex::from_facets(K1->vertex_count() * v2, std::move(facets)));
    out.proj1.source = out.complex;
    out.proj1.target = K1;
    out.proj2.source = out.complex;
    out.proj2.target = K2;
    for (index_t a = 0; a < K1->vertex_count(); ++a)
        for (index_t b = 0; b < v2; ++b) {
            out.proj1.image.push_back(a);
            out.proj2.image.push_back(b);
        }
    return out;
}

SubdivisionResult barycentric_subdivision(const SimplicialComplex& K) {
    SubdivisionResult out;
    // dimension-major vertex numbering: all base vertices, then edges, ...
    std::vector<index_t> offset(static_cast<std::size_t>(K.dimension() + 1));
    index_t nv = 0;
    for (int p = 0; p <= K.dimension(); ++p) {
        offset[static_cast<std::size_t>(p)] = nv;
        nv += K.face_count(p);
    }
    out.vertex_face.resize(static_cast<std::size_t>(nv));
    for (int p = 0; p <= K.dimension(); ++p)
        for (index_t i = 0; i < K.face_count(p); ++i)
            out.vertex_face[static_cast<std::size_t>(offset[static_cast<std::size_t>(p)] + i)] = K.face(p, i);

    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        std::vector<index_t> verts(f.v.begin(), f.v.begin() + f.n);
        std::sort(verts.begin(), verts.end());
        do {
            Simplex flag;
            Simplex prefix;
            for (int k = 0; k < f.n; ++k) {
                prefix.push(verts[static_cast<std::size_t>(k)]);
                Simplex sorted = prefix;
                std::sort(sorted.v.begin(), sorted.v.begin() + sorted.n);
                index_t fi = K.index_of(sorted);
                flag.push(offset[static_cast<std::size_t>(k)] + fi);
            }
            facets.push_back(flag);
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    out.complex = own(SimplicialComplex::from_facets(nv, std::move(facets)));
    return out;
}

QuotientResult quotient_by_free_involution(ComplexPtr K, const std::vector<index_t>& tau) {
    const SimplicialComplex& C = *K;
    if (static_cast<index_t>(tau.size()) != C.vertex_count())
        throw DescriptorError("involution must be defined on all vertices");
    for (index_t v = 0; v < C.vertex_count(); ++v) {
        if (tau[static_cast<std::size_t>(v)] < 0 || tau[static_cast<std::size_t>(v)] >= C.vertex_count())
            throw DescriptorError("involution image out of range");
        if (tau[static_cast<std::size_t>(tau[static_cast<std::size_t>(v)])] != v)
            throw DescriptorError("map is not an involution");
        if (tau[static_cast<std::size_t>(v)] == v) throw NotFreeError("involution fixes vertex " + std::to_string(v));
    }

    auto image_of = [&](const Simplex& s) {
        Simplex t;
        for (int i = 0; i < s.n; ++i) t.push(tau[static_cast<std::size_t>(s[i])]);
        std::sort(t.v.begin(), t.v.begin() + t.n);
        return t;
    };

    // simplicial + free on every face
    for (int p = 0; p <= C.dimension(); ++p)
        for (const auto& s : C.faces(p)) {
            Simplex t = image_of(s);
            if (!t.strictly_increasing()) throw InternalError("involution image has repeated vertices");
            if (C.index_of(t) < 0) throw NotSimplicialError("involution is not simplicial on " + s.str());
            if (t == s) throw NotFreeError("involution fixes simplex " + s.str());
        }

    // orbit labels in the order of the smaller representative
    std::vector<index_t> label(static_cast<std::size_t>(C.vertex_count()), -1);
    index_t next = 0;
    for (index_t v = 0; v < C.vertex_count(); ++v) {
        if (label[static_cast<std::size_t>(v)] >= 0) continue;
        label[static_cast<std::size_t>(v)] = next;
        label[static_cast<std::size_t>(tau[static_cast<std::size_t>(v)])] = next;
        ++next;
    }

    std::vector<Simplex> qfacets;
    for (const auto& f : C.facets()) {
        Simplex q;
        for (int i = 0; i < f.n; ++i) q.push(label[static_cast<std::size_t>(f[i])]);
        std::sort(q.v.begin(), q.v.begin() + q.n);
        if (!q.strictly_increasing()) throw InternalError("orbit collision inside facet " + f.str());
        qfacets.push_back(q);
    }
    QuotientResult out;
    out.complex = own(SimplicialComplex::from_facets(next, std::move(qfacets)));

    // Identification collapse check: every quotient face must have exactly the
    // two tau-related preimages.
    for (int p = 0; p <= C.dimension(); ++p) {
        if (2 * out.complex->face_count(p) != C.face_count(p))
            throw NotSimplicialError("identification collapses distinct simplices in dimension " +
                                     std::to_string(p) + " (subdivide first)");
    }
    std::unordered_map<Simplex, index_t, SimplexHash> seen;
    for (int p = 0; p <= C.dimension(); ++p) {
        seen.clear();
        for (const auto& s : C.faces(p)) {
            Simplex q;
            for (int i = 0; i < s.n; ++i) q.push(label[static_cast<std::size_t>(s[i])]);
            std::sort(q.v.begin(), q.v.begin() + q.n);
            ++seen[q];
        }
        for (const auto& [q, count] : seen)
            if (count != 2)
                throw NotSimplicialError("identification collapse at " + q.str() + " (subdivide first)");
    }

    out.projection.source = K;
    out.projection.target = out.complex;
    out.projection.image = std::move(label);
    return out;
}

RpResult make_rp_with_covering(int n) {
    if (n < 1 || n > 5) throw DescriptorError("rp: dimension out of range [1,5]");
    auto sphere = make_cross_polytope_sphere(n);
    auto sd = barycentric_subdivision(*sphere);

    // antipode on cross-polytope vertices: 2i <-> 2i+1; induce on subdivision
    // vertices (faces of the sphere).
    std::vector<index_t> tau(static_cast<std::size_t>(sd.complex->vertex_count()));
    for (index_t v = 0; v < sd.complex->vertex_count(); ++v) {
        const Simplex& f = sd.vertex_face[static_cast<std::size_t>(v)];
        Simplex img;
        for (int i = 0; i < f.n; ++i) img.push(f[i] ^ 1);
        std::sort(img.v.begin(), img.v.begin() + img.n);
        index_t fi = sphere->index_of(img);
        // subdivision vertices are numbered dimension-major in face order
        index_t off = 0;
        for (int p = 0; p < img.dim(); ++p) off += sphere->face_count(p);
        tau[static_cast<std::size_t>(v)] = off + fi;
    }

    auto q = quotient_by_free_involution(sd.complex, tau);
    return RpResult{q.complex, q.projection};
}

ComplexPtr make_rp(int n) { return make_rp_with_covering(n).complex; }

ComplexPtr make_torus() { return product_complex(make_circle(3), make_circle(3)).complex; }

ComplexPtr build_standard_space(const std::string& spec) {
    std::vector<std::string> atoms;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t x = spec.find('x', start);
        if (x == std::string::npos) {
            atoms.push_back(spec.substr(start));
            break;
        }
        atoms.push_back(spec.substr(start, x - start));
        start = x + 1;
    }

    auto build_atom = [](const std::string& a) -> ComplexPtr {
        auto split = [&](const std::string& name) -> long {
            if (a.size() <= name.size()) return -1;
            return std::stol(a.substr(name.size()));
        };
        if (a == "point") return make_point();
        if (a == "klein") return make_klein_bottle();
        if (a == "circle") return make_circle(3);
        if (a.rfind("circle", 0) == 0) return make_circle(static_cast<index_t>(split("circle")));
        if (a == "torus") return make_torus();
        if (a.rfind("torus", 0) == 0) {
            long n = split("torus");
            if (n < 1) throw DescriptorError("torusN needs N >= 1");
            ComplexPtr K = make_circle(3);
            for (long i = 1; i < n; ++i) K = product_complex(K, make_circle(3)).complex;
            return K;
        }
        if (a == "sphere") return make_simplex_sphere(2);
        if (a.rfind("sphere", 0) == 0) return make_simplex_sphere(static_cast<int>(split("sphere")));
        if (a.rfind("cross", 0) == 0) return make_cross_polytope_sphere(static_cast<int>(split("cross")));
        if (a == "rp") return make_rp(2);
        if (a.rfind("rp", 0) == 0) return make_rp(static_cast<int>(split("rp")));
        throw DescriptorError("unknown space '" + a + "'");
    };

    ComplexPtr K;
    for (const auto& a : atoms) {
        if (a.empty()) throw DescriptorError("empty atom in space spec '" + spec + "'");
        ComplexPtr next = build_atom(a);
        K = K ? product_complex(K, next).complex : next;
    }
    if (!K) throw DescriptorError("empty space spec");
    return K;
}

namespace {

struct DualGraph {
    // per top cell: list of (neighbor, dropped-vertex-index here, dropped there)
    std::vector<std::vector<std::tuple<index_t, int, int>>> adj;
    index_t n_top = 0;
};

DualGraph dual_graph(const SimplicialComplex& K) {
    const int n = K.dimension();
    if (n < 1) throw ShapeError("fundamental cycle needs positive dimension");
    for (const auto& f : K.facets())
        if (f.dim() != n) throw ShapeError("complex is not pure of top dimension");

    DualGraph g;
    g.n_top = K.face_count(n);
    g.adj.resize(static_cast<std::size_t>(g.n_top));
    // ridge -> incident top cells with the index of the dropped vertex
    std::unordered_map<Simplex, std::vector<std::pair<index_t, int>>, SimplexHash> ridge;
    const auto& tops = K.faces(n);
    for (index_t t = 0; t < g.n_top; ++t) {
        const Simplex& s = tops[static_cast<std::size_t>(t)];
        for (int j = 0; j < s.n; ++j) ridge[s.face_opposite(j)].emplace_back(t, j);
    }
    for (const auto& [r, inc] : ridge) {
        if (inc.size() != 2)
            throw ShapeError("face " + r.str() + " lies in " + std::to_string(inc.size()) +
                             " top cells; not a closed pseudomanifold");
        auto [t0, j0] = inc[0];
        auto [t1, j1] = inc[1];
        g.adj[static_cast<std::size_t>(t0)].emplace_back(t1, j0, j1);
        g.adj[static_cast<std::size_t>(t1)].emplace_back(t0, j1, j0);
    }
    return g;
}

}  // namespace

Chain<Int> fundamental_cycle_int(const SimplicialComplex& K) {
    DualGraph g = dual_graph(K);
    const int n = K.dimension();
    std::vector<int> sign(static_cast<std::size_t>(g.n_top), 0);
    sign[0] = 1;
    std::queue<index_t> bfs;
    bfs.push(0);
    index_t visited = 1;
    while (!bfs.empty()) {
        index_t t = bfs.front();
        bfs.pop();
        for (auto [nb, j_here, j_there] : g.adj[static_cast<std::size_t>(t)]) {
            // coherent orientation: induced orientations on the shared ridge
            // must be opposite
            int want = -sign[static_cast<std::size_t>(t)] * ((j_here + j_there) % 2 ? -1 : 1);
            if (sign[static_cast<std::size_t>(nb)] == 0) {
                sign[static_cast<std::size_t>(nb)] = want;
                ++visited;
                bfs.push(nb);
            } else if (sign[static_cast<std::size_t>(nb)] != want) {
                throw OrientabilityError("complex is not orientable");
            }
        }
    }
    if (visited != g.n_top) throw ShapeError("dual graph is not connected");

    Chain<Int> z;
    z.degree = n;
    for (index_t t = 0; t < g.n_top; ++t) z.coeffs.set(t, Int(sign[static_cast<std::size_t>(t)]));
    if (!boundary(K, z).is_zero()) throw InternalError("oriented top cycle has nonzero boundary");
    return z;
}

Chain<F2> fundamental_cycle_mod2(const SimplicialComplex& K) {
    dual_graph(K);  // validates the closed pseudomanifold shape
    Chain<F2> z;
    z.degree = K.dimension();
    for (index_t t = 0; t < K.face_count(K.dimension()); ++t) z.coeffs.set(t, F2(1));
    if (!boundary(K, z).is_zero()) throw InternalError("mod-2 top cycle has nonzero boundary");
    return z;
}

}  // namespace dchar
