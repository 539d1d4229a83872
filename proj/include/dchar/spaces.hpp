#pragma once

#include <string>
#include <vector>

#include "dchar/simplicial_complex.hpp"

namespace dchar {

ComplexPtr make_point();
ComplexPtr make_circle(index_t m);
ComplexPtr make_simplex_sphere(int n);
ComplexPtr make_cross_polytope_sphere(int n);
ComplexPtr make_klein_bottle();

struct ProductResult {
    ComplexPtr complex;
    VertexMap proj1, proj2;
};

// Staircase (Eilenberg-Zilber) triangulation of |K1| x |K2| on the
// lexicographically ordered vertex set V1 x V2. Both projections are
// order preserving simplicial maps.
ProductResult product_complex(ComplexPtr K1, ComplexPtr K2);

struct SubdivisionResult {
    ComplexPtr complex;
    // new vertex id -> face of the base complex it subdivides. Vertices are
    // ordered dimension-first, so every flag is strictly increasing.
    std::vector<Simplex> vertex_face;
};

SubdivisionResult barycentric_subdivision(const SimplicialComplex& K);

struct QuotientResult {
    ComplexPtr complex;
    VertexMap projection;  // source = input complex, target = quotient
};

// Quotient by a simplicial involution that is free on all simplices. Orbit
// labels are assigned by the order of the smaller orbit representative.
QuotientResult quotient_by_free_involution(ComplexPtr K, const std::vector<index_t>& tau);

struct RpResult {
    ComplexPtr complex;
    // Double covering: barycentric subdivision of the cross-polytope sphere
    // onto the quotient. Order preserving on every simplex.
    VertexMap covering;
};

RpResult make_rp_with_covering(int n);
ComplexPtr make_rp(int n);

ComplexPtr make_torus();  // circle(3) x circle(3)

// Space registry used by the CLI and the test fixtures. Grammar:
// atom("x" atom)* with atoms point, circleN, sphereN, crossN, rpN, torus,
// torusN (N-fold product of circle(3)), klein.
ComplexPtr build_standard_space(const std::string& spec);

// Coherently oriented top cycle of a closed oriented pseudomanifold, found by
// sign propagation over the dual graph.
Chain<Int> fundamental_cycle_int(const SimplicialComplex& K);
// Sum of all top simplices of a closed pseudomanifold.
Chain<F2> fundamental_cycle_mod2(const SimplicialComplex& K);

// JSON complex file loader/saver: {"vertices": n, "facets": [[...], ...]}.
ComplexPtr load_complex_json(const std::string& path);
void save_complex_json(const SimplicialComplex& K, const std::string& path);

}  // namespace dchar
