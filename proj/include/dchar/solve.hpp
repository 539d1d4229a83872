#pragma once

#include <optional>
#include <vector>

#include "dchar/smith.hpp"
#include "dchar/sparse.hpp"

namespace dchar {

// One exact solution of A*x = b plus a basis of ker A over the respective
// ring. `particular` is empty iff the system has no solution over that ring.
template <class R>
struct LinearSolution {
    std::optional<std::vector<R>> particular;
    std::vector<std::vector<R>> kernel;
};

// Field elimination (R = Rat or F2). Deterministic: pivots scan rows in order.
template <class R>
LinearSolution<R> solve_field(const DenseMat<R>& A, const std::vector<R>& b);

template <class R>
std::vector<std::vector<R>> kernel_field(const DenseMat<R>& A);

template <class R>
index_t rank_field(const DenseMat<R>& A);

// Integral solve through the Smith decomposition; kernel columns form a basis
// of the kernel lattice (saturated, since V is unimodular).
LinearSolution<Int> solve_integer(const SparseIntMatrix& A, const std::vector<Int>& b);
LinearSolution<Int> solve_integer(const SmithDecomposition& snf, const std::vector<Int>& b);

// Convenience wrapper over an integer matrix interpreted in the given ring.
// Verifies A*x = b by substitution before returning (InternalError if not).
LinearSolution<Int> solve_linear_int(const SparseIntMatrix& A, const std::vector<Int>& b);
LinearSolution<F2> solve_linear_mod2(const SparseIntMatrix& A, const std::vector<F2>& b);
LinearSolution<Rat> solve_linear_rat(const SparseIntMatrix& A, const std::vector<Rat>& b);

DenseMat<F2> densify_mod2(const SparseIntMatrix& m);
DenseMat<Rat> densify_rat(const SparseIntMatrix& m);

}  // namespace dchar
