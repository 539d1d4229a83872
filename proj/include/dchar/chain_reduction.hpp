#pragma once

#include <vector>

#include "dchar/simplicial_complex.hpp"
#include "dchar/sparse.hpp"

namespace dchar {

// Integral chain complex on an explicit graded cell basis.
struct ChainComplexZ {
    std::vector<index_t> counts;                   // cells per degree
    std::vector<std::vector<SparseVec<Int>>> bnd;  // [p][cell] -> sparse over (p-1)-cells

    int top_degree() const { return static_cast<int>(counts.size()) - 1; }
};

ChainComplexZ chain_complex_of(const SimplicialComplex& K);

// One cancelled pair (a, b) with <del b, a> = u = ±1, together with the state
// needed to replay the induced chain equivalence: col is del(b) without the
// a-term and row is the a-coefficient of del(x) over the surviving cells x,
// both captured at elimination time.
struct ReductionOp {
    int degree = 0;  // degree of b; a has degree-1
    index_t a = 0, b = 0;
    int u = 1;
    std::vector<std::pair<index_t, Int>> col;
    std::vector<std::pair<index_t, Int>> row;
};

// Reduces a chain complex by iterated elementary cancellations of unit
// incidences (Markowitz-style pivoting, zero-fill single-entry cancellations
// first). The surviving "critical" cells carry a much smaller complex with
// the same homotopy type; the op log realizes the chain equivalences in both
// directions, so cocycles, cycles and coordinates transport exactly over any
// coefficient ring.
class ChainReduction {
public:
    explicit ChainReduction(const ChainComplexZ& complex);

    const std::vector<std::vector<index_t>>& critical_cells() const { return critical_; }
    index_t critical_count(int p) const {
        return (p < 0 || p >= static_cast<int>(critical_.size()))
                   ? 0
                   : static_cast<index_t>(critical_[static_cast<std::size_t>(p)].size());
    }

    // Core boundary matrix del_p: rows over critical (p-1)-cells, columns over
    // critical p-cells, in critical_cells() order.
    SparseIntMatrix core_boundary(int p) const;

    // Cochain transports. extend = F^T (core -> full complex), restrict = G^T
    // (full -> core); F and G are the projection/inclusion chain maps with
    // F G = id on the core.
    template <class R>
    SparseVec<R> extend_cochain(int p, const std::vector<R>& core_values) const;
    template <class R>
    std::vector<R> restrict_cochain(int p, const SparseVec<R>& full) const;

    // Chain transports: extend = G (core -> full), project = F (full -> core).
    template <class R>
    SparseVec<R> extend_chain(int p, const std::vector<R>& core_values) const;
    template <class R>
    std::vector<R> project_chain(int p, const SparseVec<R>& full) const;

    index_t cell_count(int p) const {
        return (p < 0 || p >= static_cast<int>(counts_.size())) ? 0 : counts_[static_cast<std::size_t>(p)];
    }

private:
    std::vector<index_t> counts_;
    std::vector<std::vector<index_t>> critical_;
    std::vector<std::vector<SparseVec<Int>>> core_bnd_;  // boundaries of critical cells
    std::vector<ReductionOp> ops_;
};

}  // namespace dchar
