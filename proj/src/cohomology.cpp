#include "dchar/cohomology.hpp"

#include <map>

#include "dchar/solve.hpp"
#include "dchar/spaces.hpp"

namespace dchar {

namespace detail {

// Presentation of coker(A) restricted to ker(B) over Z, in an ambient core
// basis of size n: B is the cocycle condition (n columns), A the image map
// (n rows). Kernel lattice basis K comes from the SNF of B; columns of A are
// rewritten in that basis (matrix M) and the SNF of M presents the quotient.
struct QuotientZ {
    index_t n = 0;
    index_t free_rank = 0;
    std::vector<Int> torsion_orders;
    std::vector<std::vector<Int>> generators;  // length-n core vectors

    DenseIntMat K;            // n x z kernel lattice basis
    SmithDecomposition Ksnf;  // for solving K x = w
    DenseIntMat UM;           // from SNF of M
    std::vector<Int> dM;      // diagonal of SNF(M), padded with zeros to z
    std::vector<index_t> free_idx, torsion_idx;

    IntCoords coords(const std::vector<Int>& w) const {
        auto sol = solve_integer(Ksnf, w);
        if (!sol.particular) throw InternalError("core vector is not in the cocycle lattice");
        std::vector<Int> y = UM.apply(*sol.particular);
        IntCoords out;
        for (index_t i : free_idx) out.free_part.push_back(y[static_cast<std::size_t>(i)]);
        for (index_t i : torsion_idx) {
            Int m;
            mpz_fdiv_r(m.get_mpz_t(), y[static_cast<std::size_t>(i)].get_mpz_t(),
                       dM[static_cast<std::size_t>(i)].get_mpz_t());
            out.torsion_part.push_back(m);
        }
        return out;
    }
};

QuotientZ quotient_presentation_z(const SparseIntMatrix& B, const SparseIntMatrix& A) {
    if (B.cols != A.rows) throw DimensionError("quotient presentation: shape mismatch");
    QuotientZ q;
    q.n = B.cols;

    SmithDecomposition bs = smith_normal_form(B);
    const index_t z = B.cols - bs.rank();
    q.K = DenseIntMat(q.n, z);
    for (index_t j = 0; j < z; ++j)
        for (index_t i = 0; i < q.n; ++i) q.K.at(i, j) = bs.V.at(i, bs.rank() + j);
    q.Ksnf = smith_normal_form(sparsify(q.K));

    // rewrite the image columns in the kernel basis
    DenseIntMat M(z, A.cols);
    for (index_t j = 0; j < A.cols; ++j) {
        std::vector<Int> b(static_cast<std::size_t>(q.n), Int(0));
        for (const auto& [i, v] : A.columns[static_cast<std::size_t>(j)].entries) b[static_cast<std::size_t>(i)] = v;
        auto sol = solve_integer(q.Ksnf, b);
        if (!sol.particular) throw InternalError("image column is not a cocycle");
        for (index_t i = 0; i < z; ++i) M.at(i, j) = (*sol.particular)[static_cast<std::size_t>(i)];
    }

    SmithDecomposition ms = smith_normal_form(M);
    q.UM = ms.U;
    q.dM.assign(static_cast<std::size_t>(z), Int(0));
    for (index_t i = 0; i < ms.rank(); ++i) q.dM[static_cast<std::size_t>(i)] = ms.invariant_factors[static_cast<std::size_t>(i)];

    for (index_t i = ms.rank(); i < z; ++i) q.free_idx.push_back(i);
    for (index_t i = 0; i < ms.rank(); ++i)
        if (q.dM[static_cast<std::size_t>(i)] > 1) q.torsion_idx.push_back(i);

    q.free_rank = static_cast<index_t>(q.free_idx.size());
    for (index_t i : q.torsion_idx) q.torsion_orders.push_back(q.dM[static_cast<std::size_t>(i)]);

    auto gen_of = [&](index_t i) {
        std::vector<Int> uinv_col(static_cast<std::size_t>(z));
        for (index_t r = 0; r < z; ++r) uinv_col[static_cast<std::size_t>(r)] = ms.Uinv.at(r, i);
        return q.K.apply(uinv_col);
    };
    for (index_t i : q.free_idx) q.generators.push_back(gen_of(i));
    for (index_t i : q.torsion_idx) q.generators.push_back(gen_of(i));
    return q;
}

// Field coefficient version: explicit echelon of [image | kernel] with
// coefficient tracking relative to the chosen generators.
template <class R>
struct QuotientF {
    index_t n = 0;
    index_t rank = 0;
    std::vector<std::vector<R>> generators;

    struct Echelon {
        index_t pivot;
        std::vector<R> vec;  // pivot entry normalized to 1
        std::vector<R> row;  // expression in generators (empty-padded)
    };
    std::vector<Echelon> echelon;

    // Reduce w through the echelon; returns generator coordinates. Nonzero
    // residue means w is not a cocycle of this degree.
    std::vector<R> coords(const std::vector<R>& w) const {
        std::vector<R> r = w;
        std::vector<R> acc(static_cast<std::size_t>(rank), RingTraits<R>::zero());
        for (const auto& e : echelon) {
            R lam = r[static_cast<std::size_t>(e.pivot)];
            if (RingTraits<R>::is_zero(lam)) continue;
            for (std::size_t i = 0; i < e.vec.size(); ++i) r[i] -= lam * e.vec[i];
            for (std::size_t i = 0; i < e.row.size(); ++i) acc[i] += lam * e.row[i];
        }
        for (const R& v : r)
            if (!RingTraits<R>::is_zero(v)) throw InternalError("core vector fails the cocycle reduction");
        return acc;
    }
};

template <class R>
QuotientF<R> quotient_presentation_f(const DenseMat<R>& B, const DenseMat<R>& A) {
    QuotientF<R> q;
    q.n = B.cols;

    auto insert = [&](const std::vector<R>& v, bool is_generator) {
        std::vector<R> r = v;
        std::vector<R> row(q.generators.size() + 1, RingTraits<R>::zero());
        for (const auto& e : q.echelon) {
            R lam = r[static_cast<std::size_t>(e.pivot)];
            if (RingTraits<R>::is_zero(lam)) continue;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lam * e.vec[i];
            for (std::size_t i = 0; i < e.row.size(); ++i) row[i] -= lam * e.row[i];
        }
        index_t pivot = -1;
        for (index_t i = 0; i < q.n; ++i)
            if (!RingTraits<R>::is_zero(r[static_cast<std::size_t>(i)])) {
                pivot = i;
                break;
            }
        if (pivot < 0) return false;
        R inv = RingTraits<R>::one();
        if constexpr (RingTraits<R>::id == Ring::Rat)
            inv = Rat(1) / r[static_cast<std::size_t>(pivot)];
        if (is_generator) row[q.generators.size()] = RingTraits<R>::one();
        for (auto& x : r) x = x * inv;
        for (auto& x : row) x = x * inv;
        q.echelon.push_back({pivot, std::move(r), std::move(row)});
        return true;
    };

    // image columns first (zero generator coordinates)
    for (index_t j = 0; j < A.cols; ++j) {
        std::vector<R> col(static_cast<std::size_t>(q.n));
        for (index_t i = 0; i < q.n; ++i) col[static_cast<std::size_t>(i)] = A.at(i, j);
        insert(col, false);
    }
    // then a kernel basis of B
    for (auto& k : kernel_field(B)) {
        if (insert(k, true)) q.generators.push_back(std::move(k));
    }
    q.rank = static_cast<index_t>(q.generators.size());
    for (auto& e : q.echelon) e.row.resize(static_cast<std::size_t>(q.rank), RingTraits<R>::zero());
    return q;
}

template struct QuotientF<F2>;
template struct QuotientF<Rat>;

struct SpaceData : std::enable_shared_from_this<SpaceData> {
    ComplexPtr K;
    mutable std::unique_ptr<ChainReduction> reduction;
    mutable std::map<int, CohomologyPresentation> coh_int;
    mutable std::map<int, FieldCohomology<F2>> coh_mod2;
    mutable std::map<int, FieldCohomology<Rat>> coh_rat;
    mutable std::map<int, HomologyPresentation> hom_int;
    mutable std::unique_ptr<Chain<Int>> fcycle_int;
    mutable std::unique_ptr<Chain<F2>> fcycle_mod2;

    const ChainReduction& red() const {
        if (!reduction) reduction = std::make_unique<ChainReduction>(chain_complex_of(*K));
        return *reduction;
    }

    // coboundary matrix on the core: maps critical p-cells to critical
    // (p+1)-cells
    SparseIntMatrix core_delta(int p) const {
        const auto& r = red();
        if (p < 0 || p >= K->dimension()) return SparseIntMatrix(0, r.critical_count(p));
        return r.core_boundary(p + 1).transposed();
    }
    SparseIntMatrix core_delta_into(int p) const {  // image of delta_{p-1}: matrix with n_p rows
        const auto& r = red();
        if (p <= 0 || p > K->dimension()) return SparseIntMatrix(r.critical_count(p), 0);
        return r.core_boundary(p).transposed();
    }

    void check_degree(int p) const {
        if (p < 0) throw DegreeError("negative cohomological degree");
    }
};

}  // namespace detail

using detail::SpaceData;

Space::Space(ComplexPtr K) : data_(std::make_shared<SpaceData>()) {
    if (!K) throw DescriptorError("null complex");
    data_->K = std::move(K);
}

const SimplicialComplex& Space::complex() const { return *data_->K; }
ComplexPtr Space::complex_ptr() const { return data_->K; }
const ChainReduction& Space::reduction() const { return data_->red(); }

bool Space::is_cocycle(const Cochain<Int>& c) const { return coboundary(*data_->K, c).is_zero(); }
bool Space::is_cocycle(const Cochain<F2>& c) const { return coboundary(*data_->K, c).is_zero(); }
bool Space::is_cocycle(const Cochain<Rat>& c) const { return coboundary(*data_->K, c).is_zero(); }
bool Space::is_cycle(const Chain<Int>& c) const { return boundary(*data_->K, c).is_zero(); }

const CohomologyPresentation& Space::cohomology_int(int p) const {
    auto& cache = data_->coh_int;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    data_->check_degree(p);

    CohomologyPresentation pres;
    pres.degree_ = p;
    pres.space_ = data_;
    if (p > data_->K->dimension()) {
        cache.emplace(p, std::move(pres));
        return cache.at(p);
    }
    auto core = std::make_shared<detail::QuotientZ>(
        detail::quotient_presentation_z(data_->core_delta(p), data_->core_delta_into(p)));
    pres.free_rank_ = core->free_rank;
    pres.torsion_orders_ = core->torsion_orders;
    pres.core_ = std::move(core);
    cache.emplace(p, std::move(pres));
    return cache.at(p);
}

const std::vector<Cochain<Int>>& CohomologyPresentation::generators() const {
    if (!generators_built_) {
        generators_built_ = true;
        if (core_)
            for (const auto& g : core_->generators) {
                Cochain<Int> c;
                c.degree = degree_;
                c.coeffs = space_->red().extend_cochain<Int>(degree_, g);
                generators_.push_back(std::move(c));
            }
    }
    return generators_;
}

IntCoords CohomologyPresentation::coordinates(const Cochain<Int>& z) const {
    if (z.degree != degree_) throw DegreeError("coordinates: cochain degree mismatch");
    if (!space_) throw InternalError("presentation not attached to a space");
    if (!coboundary(*space_->K, z).is_zero()) throw CocycleError("coordinates: input is not a cocycle");
    if (!core_) return IntCoords{};  // degree above dimension: trivial group
    return core_->coords(space_->red().restrict_cochain<Int>(degree_, z.coeffs));
}

template <class R>
std::vector<R> FieldCohomology<R>::coordinates(const Cochain<R>& z) const {
    if (z.degree != degree_) throw DegreeError("coordinates: cochain degree mismatch");
    if (!space_) throw InternalError("presentation not attached to a space");
    if (!coboundary(*space_->K, z).is_zero()) throw CocycleError("coordinates: input is not a cocycle");
    if (!core_) return std::vector<R>{};
    return core_->coords(space_->red().restrict_cochain<R>(degree_, z.coeffs));
}

template <class R>
const std::vector<Cochain<R>>& FieldCohomology<R>::generators() const {
    if (!generators_built_) {
        generators_built_ = true;
        if (core_)
            for (const auto& g : core_->generators) {
                Cochain<R> c;
                c.degree = degree_;
                std::vector<R> gv(g.begin(), g.end());
                c.coeffs = space_->red().extend_cochain<R>(degree_, gv);
                generators_.push_back(std::move(c));
            }
    }
    return generators_;
}

template class FieldCohomology<F2>;
template class FieldCohomology<Rat>;

namespace {

DenseMat<F2> core_densify_mod2(const SparseIntMatrix& m) { return densify_mod2(m); }
DenseMat<Rat> core_densify_rat(const SparseIntMatrix& m) { return densify_rat(m); }

}  // namespace

const FieldCohomology<F2>& Space::cohomology_mod2(int p) const {
    auto& cache = data_->coh_mod2;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    data_->check_degree(p);

    FieldCohomology<F2> pres;
    pres.degree_ = p;
    pres.space_ = data_;
    if (p <= data_->K->dimension()) {
        auto core = std::make_shared<detail::QuotientF<F2>>(detail::quotient_presentation_f<F2>(
            core_densify_mod2(data_->core_delta(p)), core_densify_mod2(data_->core_delta_into(p))));
        pres.rank_ = core->rank;
        pres.core_ = std::move(core);
    }
    cache.emplace(p, std::move(pres));
    return cache.at(p);
}

const FieldCohomology<Rat>& Space::cohomology_rat(int p) const {
    auto& cache = data_->coh_rat;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    data_->check_degree(p);

    FieldCohomology<Rat> pres;
    pres.degree_ = p;
    pres.space_ = data_;
    if (p <= data_->K->dimension()) {
        auto core = std::make_shared<detail::QuotientF<Rat>>(detail::quotient_presentation_f<Rat>(
            core_densify_rat(data_->core_delta(p)), core_densify_rat(data_->core_delta_into(p))));
        pres.rank_ = core->rank;
        for (const auto& g : core->generators) {
            Cochain<Rat> c;
            c.degree = p;
            c.coeffs = data_->red().extend_cochain<Rat>(p, g);
            pres.generators_.push_back(std::move(c));
        }
        pres.core_ = std::move(core);
    }
    cache.emplace(p, std::move(pres));
    return cache.at(p);
}

const HomologyPresentation& Space::homology_int(int p) const {
    auto& cache = data_->hom_int;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    data_->check_degree(p);

    HomologyPresentation pres;
    pres.degree_ = p;
    pres.space_ = data_;
    if (p <= data_->K->dimension()) {
        const auto& r = data_->red();
        // cycles: kernel of core boundary del_p; image: del_{p+1}
        SparseIntMatrix B = (p >= 1) ? r.core_boundary(p) : SparseIntMatrix(0, r.critical_count(0));
        SparseIntMatrix A = (p + 1 <= data_->K->dimension()) ? r.core_boundary(p + 1)
                                                             : SparseIntMatrix(r.critical_count(p), 0);
        auto core = std::make_shared<detail::QuotientZ>(detail::quotient_presentation_z(B, A));
        pres.free_rank_ = core->free_rank;
        pres.torsion_orders_ = core->torsion_orders;
        for (const auto& g : core->generators) {
            Chain<Int> c;
            c.degree = p;
            c.coeffs = r.extend_chain<Int>(p, g);
            pres.generators_.push_back(std::move(c));
        }
        pres.core_ = std::move(core);
    }
    cache.emplace(p, std::move(pres));
    return cache.at(p);
}

IntCoords HomologyPresentation::coordinates(const Chain<Int>& z) const {
    if (z.degree != degree_) throw DegreeError("coordinates: chain degree mismatch");
    if (!space_) throw InternalError("presentation not attached to a space");
    if (!boundary(*space_->K, z).is_zero()) throw CycleError("coordinates: input is not a cycle");
    if (!core_) return IntCoords{};
    return core_->coords(space_->red().project_chain<Int>(degree_, z.coeffs));
}

const Chain<Int>& Space::oriented_fundamental_cycle() const {
    if (!data_->fcycle_int) data_->fcycle_int = std::make_unique<Chain<Int>>(fundamental_cycle_int(*data_->K));
    return *data_->fcycle_int;
}

const Chain<F2>& Space::mod2_fundamental_cycle() const {
    if (!data_->fcycle_mod2) data_->fcycle_mod2 = std::make_unique<Chain<F2>>(fundamental_cycle_mod2(*data_->K));
    return *data_->fcycle_mod2;
}

Cochain<F2> uct_iota(const Space& X, const Cochain<Int>& c) {
    if (!X.is_cocycle(c)) throw CocycleError("uct_iota: input is not an integral cocycle");
    return reduce_mod2(c);
}

HomToZ2 uct_pi(const Space& X, const Cochain<F2>& z) {
    if (!X.is_cocycle(z)) throw CocycleError("uct_pi: input is not a mod-2 cocycle");
    const auto& H = X.homology_int(z.degree);
    HomToZ2 out;
    out.degree = z.degree;
    for (std::size_t i = 0; i < H.generators().size(); ++i) {
        Int order = H.generator_order(i);
        F2 value = pair(z, reduce_mod2(H.generators()[i]));
        if (sgn(order) != 0 && mpz_odd_p(order.get_mpz_t()) && value.v)
            throw InternalError("uct_pi: nonzero value on odd torsion generator");
        out.gen_orders.push_back(order);
        out.values.push_back(value);
    }
    return out;
}

GroupSummary cohomology_summary(const Space& X, int p, Ring ring) {
    GroupSummary g;
    g.degree = p;
    g.ring = ring;
    switch (ring) {
        case Ring::Int: {
            const auto& h = X.cohomology_int(p);
            g.free_rank = h.free_rank();
            g.torsion = h.torsion_orders();
            break;
        }
        case Ring::Mod2:
            g.free_rank = X.cohomology_mod2(p).rank();
            break;
        case Ring::Rat:
            g.free_rank = X.cohomology_rat(p).rank();
            break;
    }
    return g;
}

}  // namespace dchar
