#pragma once

#include <vector>

#include "dchar/sparse.hpp"

namespace dchar {

// Exact Smith decomposition U*A*V = D with U, V unimodular and the diagonal
// invariant factors forming a divisibility chain d_1 | d_2 | ...
//
// Inverses are tracked alongside so that generator extraction and integral
// solves need no separate inversion step.
struct SmithDecomposition {
    DenseIntMat U, Uinv;  // rows x rows
    DenseIntMat V, Vinv;  // cols x cols
    DenseIntMat D;        // rows x cols, diagonal
    std::vector<Int> invariant_factors;

    index_t rank() const { return static_cast<index_t>(invariant_factors.size()); }
};

// Deterministic SNF: pivot choice is smallest |entry|, ties broken by lowest
// (row, col). The identity U*A*V = D and U*Uinv = I, V*Vinv = I are re-checked
// before returning; a failure throws InternalError.
//
// The elimination densifies its working copy. Matrices arising from full-size
// complexes are expected to be shrunk through chain_reduction first; direct
// calls here are meant for matrices up to a few hundred rows/columns.
SmithDecomposition smith_normal_form(const SparseIntMatrix& A);
SmithDecomposition smith_normal_form(const DenseIntMat& A);

}  // namespace dchar
