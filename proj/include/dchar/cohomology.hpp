#pragma once

#include <memory>
#include <vector>

#include "dchar/chain_reduction.hpp"
#include "dchar/simplicial_complex.hpp"
#include "dchar/smith.hpp"

namespace dchar {

// Coordinates of a class in a free + torsion presentation. Torsion entries are
// reduced modulo the corresponding order.
struct IntCoords {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;

    bool is_zero() const {
        for (const auto& v : free_part)
            if (sgn(v) != 0) return false;
        for (const auto& v : torsion_part)
            if (sgn(v) != 0) return false;
        return true;
    }
    friend bool operator==(const IntCoords& a, const IntCoords& b) {
        return a.free_part == b.free_part && a.torsion_part == b.torsion_part;
    }
};

namespace detail {
struct QuotientZ;
template <class R>
struct QuotientF;
struct SpaceData;
}  // namespace detail

// H^p(X; Z) with explicit cocycle generators (free generators first, then one
// per torsion order) and a total coordinate map on cocycles that vanishes
// exactly on coboundaries.
class CohomologyPresentation {
public:
    int degree() const { return degree_; }
    index_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion_orders() const { return torsion_orders_; }
    // Generator cocycles are transported out of the reduced core on first
    // access; rank and torsion queries never pay for that.
    const std::vector<Cochain<Int>>& generators() const;

    IntCoords coordinates(const Cochain<Int>& cocycle) const;
    bool is_zero_class(const Cochain<Int>& cocycle) const { return coordinates(cocycle).is_zero(); }

private:
    friend struct detail::SpaceData;
    friend class Space;
    int degree_ = 0;
    index_t free_rank_ = 0;
    std::vector<Int> torsion_orders_;
    mutable bool generators_built_ = false;
    mutable std::vector<Cochain<Int>> generators_;
    std::shared_ptr<const detail::SpaceData> space_;
    std::shared_ptr<const detail::QuotientZ> core_;
};

// H^p(X; R) for a field R (F2 or Rat).
template <class R>
class FieldCohomology {
public:
    int degree() const { return degree_; }
    index_t rank() const { return rank_; }
    const std::vector<Cochain<R>>& generators() const;

    std::vector<R> coordinates(const Cochain<R>& cocycle) const;
    bool is_zero_class(const Cochain<R>& cocycle) const {
        for (const R& v : coordinates(cocycle))
            if (!RingTraits<R>::is_zero(v)) return false;
        return true;
    }

private:
    friend struct detail::SpaceData;
    friend class Space;
    int degree_ = 0;
    index_t rank_ = 0;
    mutable bool generators_built_ = false;
    mutable std::vector<Cochain<R>> generators_;
    std::shared_ptr<const detail::SpaceData> space_;
    std::shared_ptr<const detail::QuotientF<R>> core_;
};

// H_p(X; Z) with explicit cycle generators, same layout as cohomology.
//
// In the top degree of a connected closed pseudomanifold the classical
// structure theorem is used directly: H_n = Z on the coherently oriented
// fundamental cycle when orientable, 0 otherwise. Everything else goes
// through the reduced core.
class HomologyPresentation {
public:
    int degree() const { return degree_; }
    index_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion_orders() const { return torsion_orders_; }
    const std::vector<Chain<Int>>& generators() const;

    // order of generator i: 0 for free generators, else the torsion order
    Int generator_order(std::size_t i) const {
        return i < static_cast<std::size_t>(free_rank_) ? Int(0)
                                                        : torsion_orders_[i - static_cast<std::size_t>(free_rank_)];
    }

    IntCoords coordinates(const Chain<Int>& cycle) const;

private:
    friend struct detail::SpaceData;
    friend class Space;
    int degree_ = 0;
    index_t free_rank_ = 0;
    std::vector<Int> torsion_orders_;
    mutable bool generators_built_ = false;
    mutable std::vector<Chain<Int>> generators_;
    std::shared_ptr<const detail::SpaceData> space_;
    std::shared_ptr<const detail::QuotientZ> core_;
    bool top_mode_ = false;  // fundamental-cycle presentation
};

// Element of Hom(H_p(X; Z), Z_2): one value per integral homology generator.
// Values on odd-order torsion generators are forced to zero.
struct HomToZ2 {
    int degree = 0;
    std::vector<Int> gen_orders;  // aligned with HomologyPresentation generators
    std::vector<F2> values;

    bool is_zero() const {
        for (F2 v : values)
            if (v.v) return false;
        return true;
    }
    friend bool operator==(const HomToZ2& a, const HomToZ2& b) {
        return a.degree == b.degree && a.gen_orders == b.gen_orders && a.values == b.values;
    }
};

// A simplicial complex together with lazily computed chain reduction,
// (co)homology presentations and fundamental cycles. Everything is exact and
// deterministic; presentations are cached per degree and ring.
class Space {
public:
    explicit Space(ComplexPtr K);

    const SimplicialComplex& complex() const;
    ComplexPtr complex_ptr() const;
    const ChainReduction& reduction() const;

    const CohomologyPresentation& cohomology_int(int p) const;
    const FieldCohomology<F2>& cohomology_mod2(int p) const;
    const FieldCohomology<Rat>& cohomology_rat(int p) const;
    const HomologyPresentation& homology_int(int p) const;

    const Chain<Int>& oriented_fundamental_cycle() const;
    const Chain<F2>& mod2_fundamental_cycle() const;

    // Is the coefficient cochain a cocycle / chain a cycle?
    bool is_cocycle(const Cochain<Int>& c) const;
    bool is_cocycle(const Cochain<F2>& c) const;
    bool is_cocycle(const Cochain<Rat>& c) const;
    bool is_cycle(const Chain<Int>& c) const;

private:
    std::shared_ptr<detail::SpaceData> data_;
};

// Mod-2 reduction of an integral cocycle (the universal-coefficients map
// iota); the class of the output depends only on [c] mod 2.
Cochain<F2> uct_iota(const Space& X, const Cochain<Int>& c);

// Evaluation of a mod-2 cocycle against integral homology (the map pi).
HomToZ2 uct_pi(const Space& X, const Cochain<F2>& z);

// Summary of one cohomology group for reports.
struct GroupSummary {
    int degree;
    Ring ring;
    index_t free_rank;
    std::vector<Int> torsion;
};

GroupSummary cohomology_summary(const Space& X, int p, Ring ring);

}  // namespace dchar
