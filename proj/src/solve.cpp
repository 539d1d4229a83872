#include "dchar/solve.hpp"

namespace dchar {

namespace {

template <class R>
R inv_of(const R& v);

template <>
Rat inv_of<Rat>(const Rat& v) {
    return Rat(1) / v;
}

template <>
F2 inv_of<F2>(const F2& v) {
    return v;  // the only unit is 1
}

}  // namespace

template <class R>
LinearSolution<R> solve_field(const DenseMat<R>& A, const std::vector<R>& b) {
    if (static_cast<index_t>(b.size()) != A.rows) throw DimensionError("solve_field: rhs length mismatch");
    DenseMat<R> m(A.rows, A.cols + 1);
    for (index_t i = 0; i < A.rows; ++i) {
        for (index_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols) = b[static_cast<std::size_t>(i)];
    }

    std::vector<index_t> pivot_col;
    index_t row = 0;
    for (index_t col = 0; col < A.cols && row < A.rows; ++col) {
        index_t pr = -1;
        for (index_t i = row; i < A.rows; ++i)
            if (!RingTraits<R>::is_zero(m.at(i, col))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (index_t j = col; j <= A.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
        R inv = inv_of<R>(m.at(row, col));
        for (index_t j = col; j <= A.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (index_t i = 0; i < A.rows; ++i) {
            if (i == row) continue;
            R f = m.at(i, col);
            if (RingTraits<R>::is_zero(f)) continue;
            for (index_t j = col; j <= A.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution<R> out;

    bool consistent = true;
    for (index_t i = row; i < A.rows; ++i)
        if (!RingTraits<R>::is_zero(m.at(i, A.cols))) consistent = false;

    std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols), false);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) is_pivot[static_cast<std::size_t>(pivot_col[k])] = true;

    if (consistent) {
        std::vector<R> x(static_cast<std::size_t>(A.cols), RingTraits<R>::zero());
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            x[static_cast<std::size_t>(pivot_col[k])] = m.at(static_cast<index_t>(k), A.cols);
        out.particular = std::move(x);
    }

    for (index_t j = 0; j < A.cols; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        std::vector<R> v(static_cast<std::size_t>(A.cols), RingTraits<R>::zero());
        v[static_cast<std::size_t>(j)] = RingTraits<R>::one();
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[static_cast<std::size_t>(pivot_col[k])] = -m.at(static_cast<index_t>(k), j);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class R>
std::vector<std::vector<R>> kernel_field(const DenseMat<R>& A) {
    std::vector<R> zero(static_cast<std::size_t>(A.rows), RingTraits<R>::zero());
    return solve_field(A, zero).kernel;
}

template <class R>
index_t rank_field(const DenseMat<R>& A) {
    return A.cols - static_cast<index_t>(kernel_field(A).size());
}

template LinearSolution<Rat> solve_field<Rat>(const DenseMat<Rat>&, const std::vector<Rat>&);
template LinearSolution<F2> solve_field<F2>(const DenseMat<F2>&, const std::vector<F2>&);
template std::vector<std::vector<Rat>> kernel_field<Rat>(const DenseMat<Rat>&);
template std::vector<std::vector<F2>> kernel_field<F2>(const DenseMat<F2>&);
template index_t rank_field<Rat>(const DenseMat<Rat>&);
template index_t rank_field<F2>(const DenseMat<F2>&);

LinearSolution<Int> solve_integer(const SmithDecomposition& snf, const std::vector<Int>& b) {
    const index_t rows = snf.U.rows;
    const index_t cols = snf.V.rows;
    if (static_cast<index_t>(b.size()) != rows) throw DimensionError("solve_integer: rhs length mismatch");

    std::vector<Int> ub = snf.U.apply(b);
    const index_t r = snf.rank();

    LinearSolution<Int> out;
    bool solvable = true;
    std::vector<Int> y(static_cast<std::size_t>(cols), Int(0));
    for (index_t i = 0; i < rows; ++i) {
        if (i < r) {
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), ub[static_cast<std::size_t>(i)].get_mpz_t(),
                        snf.invariant_factors[static_cast<std::size_t>(i)].get_mpz_t());
            if (sgn(rem) != 0) {
                solvable = false;
                break;
            }
            y[static_cast<std::size_t>(i)] = q;
        } else if (sgn(ub[static_cast<std::size_t>(i)]) != 0) {
            solvable = false;
            break;
        }
    }
    if (solvable) out.particular = snf.V.apply(y);

    for (index_t j = r; j < cols; ++j) {
        std::vector<Int> v(static_cast<std::size_t>(cols));
        for (index_t i = 0; i < cols; ++i) v[static_cast<std::size_t>(i)] = snf.V.at(i, j);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

LinearSolution<Int> solve_integer(const SparseIntMatrix& A, const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(A), b);
}

namespace {

template <class R>
void verify_solution(const SparseIntMatrix& A, const std::vector<R>& b, const LinearSolution<R>& s) {
    auto mul = [&](const std::vector<R>& x) {
        std::vector<R> y(static_cast<std::size_t>(A.rows), RingTraits<R>::zero());
        for (index_t j = 0; j < A.cols; ++j) {
            const R& xj = x[static_cast<std::size_t>(j)];
            if (RingTraits<R>::is_zero(xj)) continue;
            for (const auto& [i, v] : A.columns[static_cast<std::size_t>(j)].entries)
                y[static_cast<std::size_t>(i)] += xj * R(v);
        }
        return y;
    };
    if (s.particular) {
        std::vector<R> y = mul(*s.particular);
        for (index_t i = 0; i < A.rows; ++i)
            if (!(y[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]))
                throw InternalError("solve_linear: residual nonzero after substitution");
    }
    for (const auto& k : s.kernel) {
        std::vector<R> y = mul(k);
        for (const R& v : y)
            if (!RingTraits<R>::is_zero(v)) throw InternalError("solve_linear: kernel vector does not annihilate A");
    }
}

}  // namespace

DenseMat<F2> densify_mod2(const SparseIntMatrix& m) {
    DenseMat<F2> d(m.rows, m.cols);
    for (index_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[static_cast<std::size_t>(j)].entries) d.at(i, j) = F2(v);
    return d;
}

DenseMat<Rat> densify_rat(const SparseIntMatrix& m) {
    DenseMat<Rat> d(m.rows, m.cols);
    for (index_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[static_cast<std::size_t>(j)].entries) d.at(i, j) = Rat(v);
    return d;
}

LinearSolution<Int> solve_linear_int(const SparseIntMatrix& A, const std::vector<Int>& b) {
    auto s = solve_integer(A, b);
    verify_solution(A, b, s);
    return s;
}

LinearSolution<F2> solve_linear_mod2(const SparseIntMatrix& A, const std::vector<F2>& b) {
    auto s = solve_field(densify_mod2(A), b);
    verify_solution(A, b, s);
    return s;
}

LinearSolution<Rat> solve_linear_rat(const SparseIntMatrix& A, const std::vector<Rat>& b) {
    auto s = solve_field(densify_rat(A), b);
    verify_solution(A, b, s);
    return s;
}

}  // namespace dchar
