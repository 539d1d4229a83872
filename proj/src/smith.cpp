#include "dchar/smith.hpp"

#include <algorithm>

namespace dchar {

namespace {

// Working state: A is reduced in place while U/V (and inverses) absorb the
// elementary operations. Row op on A multiplies U on the left; the mirrored
// column op on Uinv keeps U*Uinv = I. Same story for columns and V.
struct Work {
    DenseIntMat A, U, Uinv, V, Vinv;

    void row_swap(index_t i, index_t j) {
        if (i == j) return;
        for (index_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (index_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (index_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void col_swap(index_t i, index_t j) {
        if (i == j) return;
        for (index_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (index_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (index_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    void row_negate(index_t i) {
        for (index_t c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
        for (index_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
        for (index_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
    // row_i += q * row_t
    void row_add(index_t i, index_t t, const Int& q) {
        if (sgn(q) == 0) return;
        for (index_t c = 0; c < A.cols; ++c) A.at(i, c) += q * A.at(t, c);
        for (index_t c = 0; c < U.cols; ++c) U.at(i, c) += q * U.at(t, c);
        for (index_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, t) -= q * Uinv.at(r, i);
    }
    // col_j += q * col_t
    void col_add(index_t j, index_t t, const Int& q) {
        if (sgn(q) == 0) return;
        for (index_t r = 0; r < A.rows; ++r) A.at(r, j) += q * A.at(r, t);
        for (index_t r = 0; r < V.rows; ++r) V.at(r, j) += q * V.at(r, t);
        for (index_t c = 0; c < Vinv.cols; ++c) Vinv.at(t, c) -= q * Vinv.at(j, c);
    }
};

bool find_pivot(const Work& w, index_t t, index_t& pi, index_t& pj) {
    bool found = false;
    Int best;
    for (index_t i = t; i < w.A.rows; ++i)
        for (index_t j = t; j < w.A.cols; ++j) {
            const Int& v = w.A.at(i, j);
            if (sgn(v) == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

// Clear row t and column t against the pivot at (t, t) by gcd steps.
void clear_cross(Work& w, index_t t) {
    for (;;) {
        bool swapped = false;
        for (index_t i = t + 1; i < w.A.rows; ++i) {
            if (sgn(w.A.at(i, t)) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.A.at(i, t).get_mpz_t(), w.A.at(t, t).get_mpz_t());
            w.row_add(i, t, -q);
            if (sgn(w.A.at(i, t)) != 0) {
                // remainder is strictly smaller than the pivot; promote it
                w.row_swap(t, i);
                swapped = true;
            }
        }
        for (index_t j = t + 1; j < w.A.cols; ++j) {
            if (sgn(w.A.at(t, j)) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.A.at(t, j).get_mpz_t(), w.A.at(t, t).get_mpz_t());
            w.col_add(j, t, -q);
            if (sgn(w.A.at(t, j)) != 0) {
                w.col_swap(t, j);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const DenseIntMat& A0) {
    Work w;
    w.A = A0;
    w.U = DenseIntMat::identity(A0.rows);
    w.Uinv = DenseIntMat::identity(A0.rows);
    w.V = DenseIntMat::identity(A0.cols);
    w.Vinv = DenseIntMat::identity(A0.cols);

    index_t t = 0;
    const index_t n = std::min(A0.rows, A0.cols);
    while (t < n) {
        index_t pi, pj;
        if (!find_pivot(w, t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        if (sgn(w.A.at(t, t)) < 0) w.row_negate(t);
        clear_cross(w, t);
        ++t;
    }
    const index_t r = t;

    // Enforce the divisibility chain d_s | d_{s+1}.
    bool changed = true;
    while (changed) {
        changed = false;
        for (index_t s = 0; s + 1 < r; ++s) {
            Int rem = w.A.at(s + 1, s + 1) % w.A.at(s, s);
            if (sgn(rem) != 0) {
                changed = true;
                // fold d_{s+1} into the (s, s) slot and re-reduce the pair
                w.col_add(s, s + 1, Int(1));
                index_t pi, pj;
                // local pivot search restricted to the 2x2 block
                pi = abs(w.A.at(s + 1, s)) < abs(w.A.at(s, s)) ? s + 1 : s;
                pj = s;
                w.row_swap(s, pi);
                (void)pj;
                if (sgn(w.A.at(s, s)) < 0) w.row_negate(s);
                clear_cross(w, s);
                if (sgn(w.A.at(s + 1, s + 1)) < 0) w.row_negate(s + 1);
                clear_cross(w, s + 1);
            }
        }
    }

    SmithDecomposition out;
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    out.D = std::move(w.A);
    for (index_t s = 0; s < r; ++s) out.invariant_factors.push_back(out.D.at(s, s));

    // Verification pass: U*A*V = D exactly, U*Uinv = I, V*Vinv = I.
    DenseIntMat uav = out.U.mul(A0).mul(out.V);
    if (!(uav == out.D)) throw InternalError("smith_normal_form: U*A*V != D");
    if (!(out.U.mul(out.Uinv) == DenseIntMat::identity(A0.rows)))
        throw InternalError("smith_normal_form: U not unimodular");
    if (!(out.V.mul(out.Vinv) == DenseIntMat::identity(A0.cols)))
        throw InternalError("smith_normal_form: V not unimodular");
    for (std::size_t s = 0; s + 1 < out.invariant_factors.size(); ++s)
        if (sgn(out.invariant_factors[s + 1] % out.invariant_factors[s]) != 0)
            throw InternalError("smith_normal_form: divisibility chain violated");
    for (index_t i = 0; i < out.D.rows; ++i)
        for (index_t j = 0; j < out.D.cols; ++j)
            if (i != j && sgn(out.D.at(i, j)) != 0) throw InternalError("smith_normal_form: D not diagonal");

    return out;
}

SmithDecomposition smith_normal_form(const SparseIntMatrix& A) { return smith_normal_form(densify(A)); }

}  // namespace dchar
