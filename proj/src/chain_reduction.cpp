#include "dchar/chain_reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace dchar {

ChainComplexZ chain_complex_of(const SimplicialComplex& K) {
    ChainComplexZ C;
    int d = K.dimension();
    C.counts.resize(static_cast<std::size_t>(d + 1));
    C.bnd.resize(static_cast<std::size_t>(d + 1));
    for (int p = 0; p <= d; ++p) {
        C.counts[static_cast<std::size_t>(p)] = K.face_count(p);
        auto& bp = C.bnd[static_cast<std::size_t>(p)];
        bp.resize(static_cast<std::size_t>(K.face_count(p)));
        if (p == 0) continue;
        const auto& fs = K.faces(p);
        for (index_t j = 0; j < static_cast<index_t>(fs.size()); ++j) {
            const Simplex& s = fs[static_cast<std::size_t>(j)];
            for (int k = 0; k < s.n; ++k)
                bp[static_cast<std::size_t>(j)].set(K.index_of(s.face_opposite(k)), Int(k % 2 ? -1 : 1));
        }
    }
    return C;
}

namespace {

// Global cell id = (degree, index) flattened for compact bookkeeping.
struct Grading {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    explicit Grading(const std::vector<index_t>& counts) {
        offset.resize(counts.size());
        for (std::size_t p = 0; p < counts.size(); ++p) {
            offset[p] = total;
            total += static_cast<std::size_t>(counts[p]);
        }
    }
    std::size_t id(int p, index_t i) const { return offset[static_cast<std::size_t>(p)] + static_cast<std::size_t>(i); }
};

using HeapItem = std::tuple<long, int, index_t, index_t>;  // cost, degree of b, b, a

}  // namespace

ChainReduction::ChainReduction(const ChainComplexZ& complex) {
    counts_ = complex.counts;
    const int top = complex.top_degree();
    Grading g(counts_);

    // Mutable boundary/coboundary structure over alive cells.
    std::vector<std::vector<std::map<index_t, Int>>> bnd(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<std::set<index_t>>> cob(static_cast<std::size_t>(top + 1));
    std::vector<char> alive(g.total, 1);

    for (int p = 0; p <= top; ++p) {
        bnd[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(counts_[static_cast<std::size_t>(p)]));
        cob[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(counts_[static_cast<std::size_t>(p)]));
    }
    for (int p = 1; p <= top; ++p)
        for (index_t j = 0; j < counts_[static_cast<std::size_t>(p)]; ++j)
            for (const auto& [i, v] : complex.bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)].entries) {
                bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)].emplace(i, v);
                cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(i)].insert(j);
            }

    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    auto unit = [](const Int& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; };
    auto cost_of = [&](int p, index_t b, index_t a) -> long {
        long r = static_cast<long>(cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a)].size()) - 1;
        long c = static_cast<long>(bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)].size()) - 1;
        return r * c;
    };

    for (int p = 1; p <= top; ++p)
        for (index_t b = 0; b < counts_[static_cast<std::size_t>(p)]; ++b)
            for (const auto& [a, v] : bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)])
                if (unit(v)) heap.emplace(cost_of(p, b, a), p, b, a);

    while (!heap.empty()) {
        auto [key, p, b, a] = heap.top();
        heap.pop();
        if (!alive[g.id(p, b)] || !alive[g.id(p - 1, a)]) continue;
        auto& db = bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)];
        auto it = db.find(a);
        if (it == db.end() || !unit(it->second)) continue;
        long cur = cost_of(p, b, a);
        if (cur > key) {
            heap.emplace(cur, p, b, a);
            continue;
        }
        const int u = sgn(it->second) > 0 ? 1 : -1;

        ReductionOp op;
        op.degree = p;
        op.a = a;
        op.b = b;
        op.u = u;
        for (const auto& [c, v] : db)
            if (c != a) op.col.emplace_back(c, v);
        for (index_t x : cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a)])
            if (x != b) op.row.emplace_back(x, bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)].at(a));

        // del'(x) = del(x) - <del x, a> u^{-1} del(b) for the other cofaces of a.
        for (const auto& [x, coef] : op.row) {
            Int factor = -coef * u;
            auto& dx = bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)];
            for (const auto& [c, v] : db) {
                Int add = factor * v;
                auto jt = dx.find(c);
                if (jt == dx.end()) {
                    if (sgn(add) != 0) {
                        dx.emplace(c, add);
                        cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(c)].insert(x);
                        if (unit(add)) heap.emplace(cost_of(p, x, c), p, x, c);
                    }
                } else {
                    jt->second += add;
                    if (sgn(jt->second) == 0) {
                        dx.erase(jt);
                        cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(c)].erase(x);
                    } else if (unit(jt->second)) {
                        heap.emplace(cost_of(p, x, c), p, x, c);
                    }
                }
            }
            // the a-entry cancelled exactly
            if (dx.size() == 1 && unit(dx.begin()->second))
                heap.emplace(0, p, x, dx.begin()->first);
        }

        // Detach b from the boundaries of (p+1)-cells.
        if (p + 1 <= top)
            for (index_t y : cob[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)]) {
                auto& dy = bnd[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(y)];
                dy.erase(b);
                if (dy.size() == 1 && unit(dy.begin()->second))
                    heap.emplace(0, p + 1, y, dy.begin()->first);
            }
        // Detach a and b from the coboundary index of their boundaries.
        for (const auto& [c, v] : db) cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(c)].erase(b);
        if (p - 1 >= 1)
            for (const auto& [c, v] : bnd[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a)])
                cob[static_cast<std::size_t>(p - 2)][static_cast<std::size_t>(c)].erase(a);

        bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)].clear();
        bnd[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a)].clear();
        cob[static_cast<std::size_t>(p)][static_cast<std::size_t>(b)].clear();
        cob[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a)].clear();
        alive[g.id(p, b)] = 0;
        alive[g.id(p - 1, a)] = 0;
        ops_.push_back(std::move(op));
    }

    critical_.resize(static_cast<std::size_t>(top + 1));
    core_bnd_.resize(static_cast<std::size_t>(top + 1));
    for (int p = 0; p <= top; ++p)
        for (index_t i = 0; i < counts_[static_cast<std::size_t>(p)]; ++i)
            if (alive[g.id(p, i)]) {
                critical_[static_cast<std::size_t>(p)].push_back(i);
                SparseVec<Int> v;
                for (const auto& [c, val] : bnd[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)])
                    v.set(c, val);
                core_bnd_[static_cast<std::size_t>(p)].push_back(std::move(v));
            }
}

SparseIntMatrix ChainReduction::core_boundary(int p) const {
    const auto& lower = critical_[static_cast<std::size_t>(p - 1)];
    const auto& upper = critical_[static_cast<std::size_t>(p)];
    std::map<index_t, index_t> pos;
    for (index_t i = 0; i < static_cast<index_t>(lower.size()); ++i) pos[lower[static_cast<std::size_t>(i)]] = i;
    SparseIntMatrix m(static_cast<index_t>(lower.size()), static_cast<index_t>(upper.size()));
    for (index_t j = 0; j < static_cast<index_t>(upper.size()); ++j)
        for (const auto& [c, v] : core_bnd_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)].entries)
            m.set(pos.at(c), j, v);
    return m;
}

template <class R>
SparseVec<R> ChainReduction::extend_cochain(int p, const std::vector<R>& core_values) const {
    std::vector<R> w(static_cast<std::size_t>(cell_count(p)), RingTraits<R>::zero());
    const auto& crit = critical_[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < crit.size(); ++i) w[static_cast<std::size_t>(crit[i])] = core_values[i];
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        if (it->degree - 1 != p) continue;
        R acc = RingTraits<R>::zero();
        for (const auto& [c, v] : it->col) acc += R(v) * w[static_cast<std::size_t>(c)];
        w[static_cast<std::size_t>(it->a)] = -R(Int(it->u)) * acc;
    }
    SparseVec<R> out;
    for (index_t i = 0; i < cell_count(p); ++i)
        if (!RingTraits<R>::is_zero(w[static_cast<std::size_t>(i)])) out.entries.emplace(i, w[static_cast<std::size_t>(i)]);
    return out;
}

template <class R>
std::vector<R> ChainReduction::restrict_cochain(int p, const SparseVec<R>& full) const {
    std::vector<R> w(static_cast<std::size_t>(cell_count(p)), RingTraits<R>::zero());
    for (const auto& [i, v] : full.entries) w[static_cast<std::size_t>(i)] = v;
    for (const auto& op : ops_) {
        if (op.degree != p) continue;
        const R& wb = w[static_cast<std::size_t>(op.b)];
        if (!RingTraits<R>::is_zero(wb)) {
            R f = R(Int(op.u)) * wb;
            for (const auto& [x, coef] : op.row) w[static_cast<std::size_t>(x)] -= f * R(coef);
        }
    }
    const auto& crit = critical_[static_cast<std::size_t>(p)];
    std::vector<R> out(crit.size());
    for (std::size_t i = 0; i < crit.size(); ++i) out[i] = w[static_cast<std::size_t>(crit[i])];
    return out;
}

template <class R>
SparseVec<R> ChainReduction::extend_chain(int p, const std::vector<R>& core_values) const {
    std::vector<R> z(static_cast<std::size_t>(cell_count(p)), RingTraits<R>::zero());
    const auto& crit = critical_[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < crit.size(); ++i) z[static_cast<std::size_t>(crit[i])] = core_values[i];
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        if (it->degree != p) continue;
        R acc = RingTraits<R>::zero();
        for (const auto& [c, v] : it->row) acc += z[static_cast<std::size_t>(c)] * R(v);
        z[static_cast<std::size_t>(it->b)] = -R(Int(it->u)) * acc;
    }
    SparseVec<R> out;
    for (index_t i = 0; i < cell_count(p); ++i)
        if (!RingTraits<R>::is_zero(z[static_cast<std::size_t>(i)])) out.entries.emplace(i, z[static_cast<std::size_t>(i)]);
    return out;
}

template <class R>
std::vector<R> ChainReduction::project_chain(int p, const SparseVec<R>& full) const {
    std::vector<R> z(static_cast<std::size_t>(cell_count(p)), RingTraits<R>::zero());
    for (const auto& [i, v] : full.entries) z[static_cast<std::size_t>(i)] = v;
    for (const auto& op : ops_) {
        if (op.degree - 1 != p) continue;
        const R za = z[static_cast<std::size_t>(op.a)];
        if (!RingTraits<R>::is_zero(za)) {
            R f = R(Int(op.u)) * za;
            for (const auto& [c, v] : op.col) z[static_cast<std::size_t>(c)] -= f * R(v);
            z[static_cast<std::size_t>(op.a)] = RingTraits<R>::zero();
        }
    }
    const auto& crit = critical_[static_cast<std::size_t>(p)];
    std::vector<R> out(crit.size());
    for (std::size_t i = 0; i < crit.size(); ++i) out[i] = z[static_cast<std::size_t>(crit[i])];
    return out;
}

template SparseVec<Int> ChainReduction::extend_cochain<Int>(int, const std::vector<Int>&) const;
template SparseVec<Rat> ChainReduction::extend_cochain<Rat>(int, const std::vector<Rat>&) const;
template SparseVec<F2> ChainReduction::extend_cochain<F2>(int, const std::vector<F2>&) const;
template std::vector<Int> ChainReduction::restrict_cochain<Int>(int, const SparseVec<Int>&) const;
template std::vector<Rat> ChainReduction::restrict_cochain<Rat>(int, const SparseVec<Rat>&) const;
template std::vector<F2> ChainReduction::restrict_cochain<F2>(int, const SparseVec<F2>&) const;
template SparseVec<Int> ChainReduction::extend_chain<Int>(int, const std::vector<Int>&) const;
template SparseVec<Rat> ChainReduction::extend_chain<Rat>(int, const std::vector<Rat>&) const;
template SparseVec<F2> ChainReduction::extend_chain<F2>(int, const std::vector<F2>&) const;
template std::vector<Int> ChainReduction::project_chain<Int>(int, const SparseVec<Int>&) const;
template std::vector<Rat> ChainReduction::project_chain<Rat>(int, const SparseVec<Rat>&) const;
template std::vector<F2> ChainReduction::project_chain<F2>(int, const SparseVec<F2>&) const;

}  // namespace dchar
