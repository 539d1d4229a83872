#include "dchar/cup_products.hpp"

#include <map>

namespace dchar {

namespace {

using Term = CupTables::Term;
using PairKey = std::pair<uint8_t, uint8_t>;
using TensorElt = std::map<PairKey, Int>;  // sparse element of C(simplex) (x) C(simplex)

void add_term(TensorElt& t, uint8_t m0, uint8_t m1, const Int& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t.emplace(PairKey{m0, m1}, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t.erase(it);
    }
}

int bits(uint8_t m) { return __builtin_popcount(static_cast<unsigned>(m)); }

// boundary of a single subset-simplex: signed removal of each vertex
void add_boundary_of_mask(TensorElt& out, uint8_t mask, bool left, uint8_t other, const Int& c, int parity_shift) {
    int pos = 0;
    for (int b = 0; b < 8; ++b) {
        if (!(mask & (1u << b))) continue;
        uint8_t sub = static_cast<uint8_t>(mask & ~(1u << b));
        if (sub != 0) {
            Int v = ((pos + parity_shift) % 2) ? Int(-c) : c;
            if (left)
                add_term(out, sub, other, v);
            else
                add_term(out, other, sub, v);
        }
        ++pos;
    }
}

TensorElt tensor_boundary(const TensorElt& t) {
    TensorElt out;
    for (const auto& [key, c] : t) {
        auto [m0, m1] = key;
        add_boundary_of_mask(out, m0, true, m1, c, 0);
        add_boundary_of_mask(out, m1, false, m0, c, bits(m0) - 1);  // sign (-1)^{|a|}
    }
    return out;
}

TensorElt tensor_T(const TensorElt& t) {
    TensorElt out;
    for (const auto& [key, c] : t) {
        auto [m0, m1] = key;
        int sign = ((bits(m0) - 1) * (bits(m1) - 1)) % 2;
        add_term(out, m1, m0, sign ? Int(-c) : c);
    }
    return out;
}

// Push a tensor element on the (m-1)-simplex through the j-th face inclusion
// into the m-simplex.
TensorElt face_push(const TensorElt& t, int j) {
    auto remap = [&](uint8_t mask) {
        uint8_t out = 0;
        for (int b = 0; b < 8; ++b)
            if (mask & (1u << b)) out |= static_cast<uint8_t>(1u << (b < j ? b : b + 1));
        return out;
    };
    TensorElt out;
    for (const auto& [key, c] : t) add_term(out, remap(key.first), remap(key.second), c);
    return out;
}

// Contraction of C(simplex) (x) C(simplex) built from the cone contraction
// h[v0..vk] = [0, v0..vk] (zero when v0 = 0): H = h (x) id + (eta eps) (x) h.
TensorElt contraction(const TensorElt& t) {
    TensorElt out;
    for (const auto& [key, c] : t) {
        auto [m0, m1] = key;
        if (!(m0 & 1u)) {
            add_term(out, static_cast<uint8_t>(m0 | 1u), m1, c);
        } else if (bits(m0) == 1) {
            // m0 = {0}: eta eps(a) = [0], apply h to the right factor
            if (!(m1 & 1u)) add_term(out, 1u, static_cast<uint8_t>(m1 | 1u), c);
        }
    }
    return out;
}

TensorElt to_elt(const std::vector<Term>& terms) {
    TensorElt t;
    for (const auto& tm : terms) add_term(t, tm.mask0, tm.mask1, tm.coef);
    return t;
}

std::vector<Term> to_terms(const TensorElt& t) {
    std::vector<Term> out;
    for (const auto& [key, c] : t) out.push_back(Term{key.first, key.second, c});
    return out;
}

}  // namespace

CupTables& CupTables::instance() {
    static CupTables tables;
    return tables;
}

void CupTables::build(int i, int m) {
    if (i < 0 || m < 0 || m > 7) throw DegreeError("cup tables: simplex dimension out of range");
    if (static_cast<int>(tables_.size()) <= i) {
        tables_.resize(static_cast<std::size_t>(i + 1));
        built_.resize(static_cast<std::size_t>(i + 1));
        slices_.resize(static_cast<std::size_t>(i + 1));
    }
    if (static_cast<int>(tables_[static_cast<std::size_t>(i)].size()) <= m) {
        tables_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m + 1));
        built_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m + 1), 0);
        slices_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m + 1));
    }
    if (built_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]) return;

    TensorElt result;
    if (i == 0) {
        // Alexander-Whitney: sum of front faces tensor back faces
        for (int j = 0; j <= m; ++j) {
            uint8_t front = static_cast<uint8_t>((1u << (j + 1)) - 1);
            uint8_t back = static_cast<uint8_t>(((1u << (m + 1)) - 1) & ~((1u << j) - 1));
            add_term(result, front, back, Int(1));
        }
    } else {
        build(i - 1, m);
        if (m > 0) build(i, m - 1);

        TensorElt rhs = to_elt(coproduct(i - 1, m));
        TensorElt trhs = tensor_T(rhs);
        const int sg = (i % 2) ? -1 : 1;
        for (const auto& [key, c] : trhs) add_term(rhs, key.first, key.second, sg > 0 ? c : Int(-c));
        if (m > 0) {
            TensorElt lower = to_elt(coproduct(i, m - 1));
            for (int j = 0; j <= m; ++j) {
                TensorElt pushed = face_push(lower, j);
                int s = ((j % 2) ? -1 : 1) * sg;
                for (const auto& [key, c] : pushed) add_term(rhs, key.first, key.second, s > 0 ? c : Int(-c));
            }
        }

        // rhs must be a cycle; the contraction then supplies a preimage
        if (!tensor_boundary(rhs).empty())
            throw InternalError("cup tables: recurrence right-hand side is not a cycle");
        result = contraction(rhs);
        TensorElt check = tensor_boundary(result);
        for (const auto& [key, c] : rhs) add_term(check, key.first, key.second, Int(-c));
        if (!check.empty()) throw InternalError("cup tables: contraction failed to solve the recurrence");
    }

    tables_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = to_terms(result);
    built_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = 1;

    auto& sl = slices_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    sl.assign(static_cast<std::size_t>(m + i + 1), {});
    for (const auto& t : tables_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]) {
        int p = bits(t.mask0) - 1;
        if (p >= 0 && p < static_cast<int>(sl.size())) sl[static_cast<std::size_t>(p)].push_back(t);
    }
    if (i > max_built_i_) max_built_i_ = i;
}

const std::vector<Term>& CupTables::coproduct(int i, int m) {
    build(i, m);
    return tables_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
}

const std::vector<Term>& CupTables::slice(int i, int m, int p) {
    build(i, m);
    static const std::vector<Term> empty;
    const auto& sl = slices_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    if (p < 0 || p >= static_cast<int>(sl.size())) return empty;
    return sl[static_cast<std::size_t>(p)];
}

template <class R>
Cochain<R> cup_i(const SimplicialComplex& K, int i, const Cochain<R>& f, const Cochain<R>& g) {
    if (i < 0) throw DegreeError("cup_i: negative i");
    const int p = f.degree, q = g.degree;
    Cochain<R> out;
    out.degree = p + q - i;
    if (out.degree < 0 || out.degree > K.dimension() || f.is_zero() || g.is_zero()) return out;

    const int m = out.degree;
    // every term in the slice has |S1| = q+1 since |S0| + |S1| = m + i + 2
    const auto& terms = CupTables::instance().slice(i, m, p);
    const auto& simplices = K.faces(m);
    for (index_t s = 0; s < static_cast<index_t>(simplices.size()); ++s) {
        const Simplex& sx = simplices[static_cast<std::size_t>(s)];
        R acc = RingTraits<R>::zero();
        for (const auto& t : terms) {
            R fv = f.coeffs.get(K.index_of(sx.subset(t.mask0)));
            if (RingTraits<R>::is_zero(fv)) continue;
            R gv = g.coeffs.get(K.index_of(sx.subset(t.mask1)));
            if (RingTraits<R>::is_zero(gv)) continue;
            acc += R(t.coef) * fv * gv;
        }
        out.coeffs.set(s, acc);
    }
    return out;
}

template <class R>
Cochain<R> cup(const SimplicialComplex& K, const Cochain<R>& f, const Cochain<R>& g) {
    return cup_i(K, 0, f, g);
}

template <class R>
Cochain<R> cup_i_defect(const SimplicialComplex& K, int i, const Cochain<R>& f, const Cochain<R>& g) {
    if (i < 1) throw DegreeError("cup_i_defect: needs i >= 1");
    const int p = f.degree, q = g.degree;
    const R one = RingTraits<R>::one();
    const R minus = -one;
    const R sg = (i % 2) ? minus : one;

    Cochain<R> df = coboundary(K, f);
    Cochain<R> dg = coboundary(K, g);

    // D^i delta(f (x) g) = D^i(df (x) g) + (-1)^p D^i(f (x) dg)
    Cochain<R> defect = cup_i(K, i, df, g);
    defect = cochain_add(defect, cochain_scaled(cup_i(K, i, f, dg), (p % 2) ? minus : one));
    // - (-1)^i delta D^i(f (x) g)
    defect = cochain_add(defect, cochain_scaled(coboundary(K, cup_i(K, i, f, g)), R(-sg)));
    // - D^{i-1}(f (x) g)
    defect = cochain_sub(defect, cup_i(K, i - 1, f, g));
    // - (-1)^i D^{i-1} T(f (x) g),  T(f (x) g) = (-1)^{pq} g (x) f
    R tsign = ((p * q) % 2) ? minus : one;
    defect = cochain_add(defect, cochain_scaled(cup_i(K, i - 1, g, f), R(-sg * tsign)));
    return defect;
}

template Cochain<Int> cup<Int>(const SimplicialComplex&, const Cochain<Int>&, const Cochain<Int>&);
template Cochain<Rat> cup<Rat>(const SimplicialComplex&, const Cochain<Rat>&, const Cochain<Rat>&);
template Cochain<F2> cup<F2>(const SimplicialComplex&, const Cochain<F2>&, const Cochain<F2>&);
template Cochain<Int> cup_i<Int>(const SimplicialComplex&, int, const Cochain<Int>&, const Cochain<Int>&);
template Cochain<Rat> cup_i<Rat>(const SimplicialComplex&, int, const Cochain<Rat>&, const Cochain<Rat>&);
template Cochain<F2> cup_i<F2>(const SimplicialComplex&, int, const Cochain<F2>&, const Cochain<F2>&);
template Cochain<Int> cup_i_defect<Int>(const SimplicialComplex&, int, const Cochain<Int>&, const Cochain<Int>&);
template Cochain<Rat> cup_i_defect<Rat>(const SimplicialComplex&, int, const Cochain<Rat>&, const Cochain<Rat>&);
template Cochain<F2> cup_i_defect<F2>(const SimplicialComplex&, int, const Cochain<F2>&, const Cochain<F2>&);

}  // namespace dchar
