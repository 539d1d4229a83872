#pragma once

#include <cstdint>
#include <vector>

#include "dchar/simplicial_complex.hpp"

namespace dchar {

// Chain-level higher diagonals D_i on the standard simplex, as integer
// combinations of subset pairs (S0, S1) encoded by vertex-position bitmasks.
//
// D_0 is the Alexander-Whitney front/back diagonal. For i >= 1 the family is
// produced by solving
//
//   bnd(D_i sigma) = (-1)^i D_i(bnd sigma) + D_{i-1}(sigma) + (-1)^i T D_{i-1}(sigma)
//
// with the explicit cone contraction of C(simplex) tensor C(simplex); the
// construction is deterministic, the recurrence is re-verified exactly after
// every build, and the resulting tables are frozen by regression tests.
class CupTables {
public:
    struct Term {
        uint8_t mask0 = 0, mask1 = 0;
        Int coef;
    };

    static CupTables& instance();

    // D_i on the standard m-simplex (lazily built and memoized).
    const std::vector<Term>& coproduct(int i, int m);

    // Terms of D_i(simplex of dim m) whose left factor has p+1 vertices.
    const std::vector<Term>& slice(int i, int m, int p);

    int max_built_i() const { return max_built_i_; }

private:
    CupTables() = default;
    void build(int i, int m);

    std::vector<std::vector<std::vector<Term>>> tables_;          // [i][m]
    std::vector<std::vector<char>> built_;                        // [i][m]
    std::vector<std::vector<std::vector<std::vector<Term>>>> slices_;  // [i][m][p]
    int max_built_i_ = -1;
};

// Alexander-Whitney cup product.
template <class R>
Cochain<R> cup(const SimplicialComplex& K, const Cochain<R>& f, const Cochain<R>& g);

// Higher cup-i product D^i(f tensor g), lowering total degree by i.
template <class R>
Cochain<R> cup_i(const SimplicialComplex& K, int i, const Cochain<R>& f, const Cochain<R>& g);

// Defect of the structural relation
//   D^i delta - (-1)^i delta D^i - D^{i-1} - (-1)^i D^{i-1} T
// applied to f tensor g; the module contract is that it vanishes identically.
template <class R>
Cochain<R> cup_i_defect(const SimplicialComplex& K, int i, const Cochain<R>& f, const Cochain<R>& g);

}  // namespace dchar
