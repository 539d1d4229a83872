#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dchar/errors.hpp"
#include "dchar/rings.hpp"

namespace dchar {

using index_t = int32_t;

// Sparse vector with canonical form: zero entries are never stored, so
// operator== is exact equality.
template <class R>
struct SparseVec {
    std::map<index_t, R> entries;

    bool is_zero() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }

    R get(index_t i) const {
        auto it = entries.find(i);
        return it == entries.end() ? RingTraits<R>::zero() : it->second;
    }

    void set(index_t i, const R& v) {
        if (RingTraits<R>::is_zero(v))
            entries.erase(i);
        else
            entries[i] = v;
    }

    void add(index_t i, const R& v) {
        if (RingTraits<R>::is_zero(v)) return;
        auto [it, inserted] = entries.emplace(i, v);
        if (!inserted) {
            it->second += v;
            if (RingTraits<R>::is_zero(it->second)) entries.erase(it);
        }
    }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [i, v] : o.entries) add(i, v);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [i, v] : o.entries) add(i, -v);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

    SparseVec operator-() const {
        SparseVec r;
        for (const auto& [i, v] : entries) r.entries.emplace(i, -v);
        return r;
    }

    SparseVec scaled(const R& c) const {
        SparseVec r;
        if (RingTraits<R>::is_zero(c)) return r;
        for (const auto& [i, v] : entries) {
            R w = v * c;
            if (!RingTraits<R>::is_zero(w)) r.entries.emplace(i, w);
        }
        return r;
    }

    void add_scaled(const SparseVec& o, const R& c) {
        if (RingTraits<R>::is_zero(c)) return;
        for (const auto& [i, v] : o.entries) add(i, v * c);
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries == b.entries; }
};

// Sparse integer matrix in column-major form; the workhorse carrier for
// boundary/coboundary operators.
struct SparseIntMatrix {
    index_t rows = 0;
    index_t cols = 0;
    std::vector<SparseVec<Int>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(index_t r, index_t c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    Int get(index_t i, index_t j) const { return columns[static_cast<std::size_t>(j)].get(i); }
    void set(index_t i, index_t j, const Int& v) { columns[static_cast<std::size_t>(j)].set(i, v); }
    void add(index_t i, index_t j, const Int& v) { columns[static_cast<std::size_t>(j)].add(i, v); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }

    SparseIntMatrix transposed() const {
        SparseIntMatrix t(cols, rows);
        for (index_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[static_cast<std::size_t>(j)].entries) t.set(j, i, v);
        return t;
    }

    SparseVec<Int> apply(const SparseVec<Int>& x) const {
        SparseVec<Int> y;
        for (const auto& [j, v] : x.entries) y.add_scaled(columns[static_cast<std::size_t>(j)], v);
        return y;
    }

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
    }
};

// Small dense matrix over an exact ring; used for the elimination cores where
// everything has already been shrunk to modest size.
template <class R>
struct DenseMat {
    index_t rows = 0;
    index_t cols = 0;
    std::vector<R> a;  // row major

    DenseMat() = default;
    DenseMat(index_t r, index_t c)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), RingTraits<R>::zero()) {}

    R& at(index_t i, index_t j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const R& at(index_t i, index_t j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static DenseMat identity(index_t n) {
        DenseMat m(n, n);
        for (index_t i = 0; i < n; ++i) m.at(i, i) = RingTraits<R>::one();
        return m;
    }

    std::vector<R> apply(const std::vector<R>& x) const {
        if (static_cast<index_t>(x.size()) != cols) throw DimensionError("matrix/vector shape mismatch");
        std::vector<R> y(static_cast<std::size_t>(rows), RingTraits<R>::zero());
        for (index_t i = 0; i < rows; ++i)
            for (index_t j = 0; j < cols; ++j)
                if (!RingTraits<R>::is_zero(at(i, j))) y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
        return y;
    }

    DenseMat mul(const DenseMat& o) const {
        if (cols != o.rows) throw DimensionError("matrix product shape mismatch");
        DenseMat r(rows, o.cols);
        for (index_t i = 0; i < rows; ++i)
            for (index_t k = 0; k < cols; ++k) {
                const R& v = at(i, k);
                if (RingTraits<R>::is_zero(v)) continue;
                for (index_t j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    friend bool operator==(const DenseMat& x, const DenseMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

using DenseIntMat = DenseMat<Int>;

inline DenseIntMat densify(const SparseIntMatrix& m) {
    DenseIntMat d(m.rows, m.cols);
    for (index_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[static_cast<std::size_t>(j)].entries) d.at(i, j) = v;
    return d;
}

inline SparseIntMatrix sparsify(const DenseIntMat& d) {
    SparseIntMatrix m(d.rows, d.cols);
    for (index_t i = 0; i < d.rows; ++i)
        for (index_t j = 0; j < d.cols; ++j)
            if (sgn(d.at(i, j)) != 0) m.set(i, j, d.at(i, j));
    return m;
}

}  // namespace dchar
