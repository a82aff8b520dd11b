#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "exact_ring.hpp"
#include "kgrass.hpp"
#include "schur.hpp"
#include "young.hpp"

namespace vgc {

// FiberCorrected divides every coset term by the Euler class of the flag fibre,
// Π_{a<b} Π_{s∈a, t∈b} (1 − L^∨_s L_t); AsPrinted omits it.
enum class MuVariant { FiberCorrected, AsPrinted };

inline const char* variant_name(MuVariant v) { return v == MuVariant::AsPrinted ? "as-printed" : "fiber-corrected"; }

template <class F>
F ipow(const F& x, int e, const F& one) {
    F r = one;
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

template <class F>
struct VertexValue {
    F num;  // blocks (i), (ii), level numerator, Schur insertion
    F den;  // Π(1 − L^∨q^b)^N, and the fibre factor when corrected
    std::vector<std::pair<F, int>> den_factors;  // den as a product, for common-denominator sums
};

// One (degree vector, coset) term. roots[k] = L^∨ of the k-th root at the fixed point.
template <class F>
VertexValue<F> mu_vertex(const DegreeVector& v, const std::vector<int>& w, const std::vector<F>& roots, const F& q, int N,
                         int l, const Partition& lam, MuVariant variant) {
    const int n = static_cast<int>(roots.size());
    F one = constant_like(q, 1);
    std::vector<F> x;
    for (int i = 0; i < n; ++i) x.push_back(roots.at(w[i]));
    std::vector<int> deg(n);
    for (const auto& b : v.blocks)
        for (int s = b.begin; s < b.end; ++s) deg[s] = b.degree;

    F num = one, den = one;
    std::vector<std::pair<F, int>> fac;
    for (std::size_t a = 0; a < v.blocks.size(); ++a)
        for (std::size_t b = a + 1; b < v.blocks.size(); ++b) {
            const auto& A = v.blocks[a];
            const auto& B = v.blocks[b];
            int dba = v.gap(b, a);
            bool neg = (static_cast<long>(A.size()) * B.size() * (dba - 1)) % 2 != 0;
            for (int s = A.begin; s < A.end; ++s)
                for (int t = B.begin; t < B.end; ++t) {
                    F ratio = x[t] / x[s];  // L^∨_t L_s
                    F f = one - ratio * ipow(q, dba, one);
                    num = num * (neg ? -f : f);
                    for (int c = 1; c < dba; ++c) num = num * ratio * ipow(q, c, one);
                    if (variant == MuVariant::FiberCorrected) {
                        F e = one - x[s] / x[t];
                        den = den * e;
                        fac.emplace_back(e, 1);
                    }
                }
        }
    for (int s = 0; s < n; ++s) {
        for (int b = 0; b <= deg[s]; ++b) num = num * ipow(x[s] * ipow(q, b, one), l, one);
        for (int b = 1; b <= deg[s]; ++b) {
            F e = one - x[s] * ipow(q, b, one);
            den = den * ipow(e, N, one);
            fac.emplace_back(e, N);
        }
    }
    if (length(lam) > 0) {
        std::vector<F> k0;
        for (int s = 0; s < n; ++s) k0.push_back(x[s] * ipow(q, deg[s], one));
        num = num * schur_poly(lam, k0, one);
    }
    return {num, den, fac};
}

// μ at one fixed point: sum over degree vectors and coset representatives.
template <class F>
F mu_at_point(int N, int l, int dprime, const Partition& lam, const std::vector<F>& roots, const F& q, MuVariant variant) {
    const int n = static_cast<int>(roots.size());
    F total = constant_like(q, 0);
    for (const auto& v : degree_vectors(dprime, n))
        for (const auto& w : coset_reps(n, v.block_sizes())) {
            auto t = mu_vertex(v, w, roots, q, N, l, lam, variant);
            total = total + t.num / t.den;
        }
    return total;
}

// Same sum for rational functions, over one common denominator: pairwise addition would
// run a polynomial gcd per term.
inline RationalFunction mu_at_point(int N, int l, int dprime, const Partition& lam, const std::vector<RationalFunction>& roots,
                                    const RationalFunction& q, MuVariant variant) {
    const int n = static_cast<int>(roots.size());
    using Key = std::pair<LaurentPoly, LaurentPoly>;
    std::vector<std::pair<RationalFunction, std::map<Key, int>>> terms;
    std::map<Key, std::pair<RationalFunction, int>> lcm;
    for (const auto& v : degree_vectors(dprime, n))
        for (const auto& w : coset_reps(n, v.block_sizes())) {
            auto t = mu_vertex(v, w, roots, q, N, l, lam, variant);
            std::map<Key, int> mult;
            for (const auto& [f, m] : t.den_factors) mult[{f.num(), f.den()}] += m;
            for (const auto& [f, m] : t.den_factors) {
                auto& slot = lcm.try_emplace({f.num(), f.den()}, f, 0).first->second;
                slot.second = std::max(slot.second, mult[{f.num(), f.den()}]);
            }
            terms.emplace_back(t.num, std::move(mult));
        }
    RationalFunction one = constant_like(q, 1), total = constant_like(q, 0), den = one;
    for (const auto& [k, fm] : lcm) den = den * ipow(fm.first, fm.second, one);
    for (auto& [num, mult] : terms) {
        RationalFunction x = num;
        for (const auto& [k, fm] : lcm) x = x * ipow(fm.first, fm.second - (mult.count(k) ? mult.at(k) : 0), one);
        total = total + x;
    }
    return total / den;
}

struct MuOptions {
    MuVariant variant = MuVariant::FiberCorrected;
    bool symbolic = false;  // keep t_i as variables; otherwise exact random rationals
    std::uint64_t seed = 1;
};

struct MuFunction {
    int n = 0, N = 0, l = 0, dprime = 0;
    Partition lambda;
    MuVariant variant = MuVariant::FiberCorrected;
    bool symbolic = false;
    VarRegistry registry;
    std::vector<Rational> t_values;  // empty when symbolic
    FixedPointClass<RationalFunction> entries;
};

// distinct nonzero rationals ≠ ±1 for t_1..t_N
inline std::vector<Rational> generic_rationals(std::uint64_t seed, int N) {
    SeededRng rng(mix_seed(seed, 0x51));
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < N) {
        long p = rng.uniform(1, 60), q = rng.uniform(1, 60);
        Rational r = rat(p, q);
        if (rng.uniform(0, 1)) r = -r;
        if (abs(r) == 1 || std::find(out.begin(), out.end(), r) != out.end()) continue;
        out.push_back(r);
    }
    return out;
}

inline void check_mu_inputs(int n, int N, int l, int dprime, const Partition& lam) {
    if (n < 1 || n > N) throw DomainError("needs 1 ≤ n ≤ N");
    if (l < 0) throw DomainError("level must be nonnegative");
    if (dprime < 0) throw DomainError("degree must be nonnegative");
    require_partition(lam);
    if (length(lam) > n) throw DomainError("λ has more than n parts");
    if (!in_Pl(lam, l)) throw DomainError("λ must lie in P_l");
}

// Per-fixed-point roots L^∨ and q inside the registry t1..tN, q.
inline std::pair<std::vector<RationalFunction>, RationalFunction> mu_symbols(int N, const std::vector<int>& S,
                                                                            const std::vector<Rational>& tv) {
    std::size_t nv = N + 1, qi = N;
    std::vector<RationalFunction> roots;
    for (int i : S)
        roots.push_back(tv.empty() ? RationalFunction::from(LaurentPoly::var(nv, i), qi)
                                   : RationalFunction::constant(nv, qi, tv[i]));
    return {roots, RationalFunction::from(LaurentPoly::var(nv, qi), qi)};
}

inline MuFunction mu_any_degree(int n, int N, int l, int dprime, const Partition& lam_in, const MuOptions& opt) {
    Partition lam = padded(lam_in, n);
    check_mu_inputs(n, N, l, dprime, lam);
    MuFunction m;
    m.n = n;
    m.N = N;
    m.l = l;
    m.dprime = dprime;
    m.lambda = lam;
    m.variant = opt.variant;
    m.symbolic = opt.symbolic;
    m.registry = VarRegistry::torus_and_q(N);
    if (!opt.symbolic) m.t_values = generic_rationals(opt.seed, N);
    m.entries = FixedPointClass<RationalFunction>::build(n, N, [&](const std::vector<int>& S) {
        auto [roots, q] = mu_symbols(N, S, m.t_values);
        return mu_at_point(N, l, dprime, lam, roots, q, opt.variant);
    });
    return m;
}

inline MuFunction mu(int n, int N, int l, int dprime, const Partition& lam, const MuOptions& opt = {}) {
    if (dprime < 1) throw DomainError("μ is defined for d′ ≥ 1");
    return mu_any_degree(n, N, l, dprime, lam, opt);
}

// Coefficients of Q^0..Q^dmax; Q^0 is the unit class.
inline std::vector<MuFunction> i_function(int n, int N, int l, int dmax, const MuOptions& opt = {}) {
    if (dmax < 0) throw DomainError("d_max must be nonnegative");
    std::vector<MuFunction> out;
    for (int d = 0; d <= dmax; ++d) {
        if (d > 0) {
            out.push_back(mu_any_degree(n, N, l, d, Partition(n, 0), opt));
            continue;
        }
        // the leading 1 of the I-function, not the d = 0 vertex sum
        MuFunction u = mu_any_degree(n, N, l, 1, Partition(n, 0), opt);
        u.dprime = 0;
        for (auto& v : u.entries.values) v = RationalFunction::constant(v.nvars(), v.qvar(), 1);
        out.push_back(std::move(u));
    }
    return out;
}

struct VertexTerm {
    DegreeVector v;
    std::vector<int> w;
    RationalFunction num, den;
};

inline std::vector<VertexTerm> vertex_terms(int n, int N, int l, int dprime, const Partition& lam_in,
                                            const std::vector<int>& S, const MuOptions& opt = {}) {
    Partition lam = padded(lam_in, n);
    check_mu_inputs(n, N, l, dprime, lam);
    std::vector<Rational> tv = opt.symbolic ? std::vector<Rational>{} : generic_rationals(opt.seed, N);
    auto [roots, q] = mu_symbols(N, S, tv);
    std::vector<VertexTerm> out;
    for (const auto& v : degree_vectors(dprime, n))
        for (const auto& w : coset_reps(n, v.block_sizes())) {
            auto t = mu_vertex(v, w, roots, q, N, l, lam, opt.variant);
            out.push_back({v, w, t.num, t.den});
        }
    return out;
}

struct DegreeBounds {
    long numerator;
    long denominator;
};

inline DegreeBounds degree_bounds(const DegreeVector& v, int n, int l, int N, bool with_insertion = true) {
    if (v.entries.size() != static_cast<std::size_t>(n)) throw DomainError("degree vector length differs from n");
    long num = 0, den = 0;
    for (std::size_t a = 0; a < v.blocks.size(); ++a) {
        long ra = v.blocks[a].size(), da = v.blocks[a].degree;
        for (std::size_t b = a + 1; b < v.blocks.size(); ++b) {
            long dba = v.gap(b, a);
            num += ra * v.blocks[b].size() * (dba + 1) * dba / 2;
        }
        num += ra * (da + 1) * da * l / 2;
        den += ra * (da + 1) * da * N / 2;
    }
    if (with_insertion) num += static_cast<long>(l) * v.total();
    return {num, den};
}

struct LaurentReport {
    bool regular_at_zero = true;
    bool vanishes_at_infinity = true;
    bool lemma_applies = false;  // N − n ≥ 2l
};

inline LaurentReport laurent_property_check(const MuFunction& m) {
    LaurentReport r;
    r.lemma_applies = m.N - m.n >= 2 * m.l;
    for (const auto& f : m.entries.values) {
        r.regular_at_zero = r.regular_at_zero && regular_at_zero(f);
        r.vanishes_at_infinity = r.vanishes_at_infinity && vanishes_at_infinity(f);
    }
    return r;
}

// χ(Gr, μ|_{q=q0} ⊗ φ) along one weight draw.
inline Rational mu_pair_with(int n, int N, int l, int dprime, const Partition& lam, MuVariant variant, const KClass& phi,
                             const Rational& q0, const std::vector<long>& w) {
    int D = n * (N - n), P = n * (n - 1) / 2;
    int prec = D + P + 2;
    LaurentSeries q = LaurentSeries::constant(q0, prec);
    LaurentSeries total;
    for (std::size_t k = 0; k < phi.points.size(); ++k) {
        const auto& S = phi.points[k];
        std::vector<LaurentSeries> roots;
        for (int i : S) roots.push_back(LaurentSeries::binomial(w[i], prec));
        LaurentSeries m = mu_at_point(N, l, dprime, lam, roots, q, variant);
        total += m * to_series(phi.values[k], w, prec) / grassmannian_euler(N, S, w, prec);
    }
    if (total.abs_precision() < 1) throw ConsistencyError("series-precision", "insufficient precision in μ pairing");
    for (int k = total.valuation(); k < 0; ++k)
        if (total.coeff(k) != 0) throw ConsistencyError("polar-cancellation", "μ pairing has a pole at the identity");
    return total.coeff(0);
}

inline Rational mu_pair(int n, int N, int l, int dprime, const Partition& lam_in, MuVariant variant, const KClass& phi,
                        const Rational& q0, std::uint64_t seed = 1) {
    Partition lam = padded(lam_in, n);
    check_mu_inputs(n, N, l, dprime, lam);
    if (q0 == 0 || abs(q0) == 1) throw DomainError("q0 must avoid 0 and ±1");
    Rational a = mu_pair_with(n, N, l, dprime, lam, variant, phi, q0, generic_draw(seed, N, 0).t);
    Rational b = mu_pair_with(n, N, l, dprime, lam, variant, phi, q0, generic_draw(seed, N, 1).t);
    if (a != b) throw ConsistencyError("parameter-independence", "μ pairing depends on generic parameters");
    return a;
}

// Twisted Mukai pairings (μ, 𝕊_ν(S)) = χ(μ ⊗ 𝕊_ν(S) ⊗ (det E)^{−l}), ν ∈ P_l, at q = q0.
inline std::vector<std::pair<Partition, Rational>> mu_paired(int n, int N, int l, int dprime, const Partition& lam,
                                                             MuVariant variant, const Rational& q0, std::uint64_t seed) {
    std::vector<std::pair<Partition, Rational>> out;
    KClass twist = det_power(n, N, -l);
    for (const auto& nu : partitions_in_box(n, l))
        out.emplace_back(nu, mu_pair(n, N, l, dprime, lam, variant, schur_class(nu, n, N, false) * twist, q0, seed));
    return out;
}

}  // namespace vgc
