#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "fusion.hpp"
#include "kgrass.hpp"
#include "schur.hpp"
#include "young.hpp"

namespace vgc {

// Genus-0 Quot scheme of P¹ parametrizing rank-n subsheaves K ⊂ O^N of degree −d.
// Torus: t_1..t_N on O^N and s on P¹ (0 and ∞ fixed).

enum class Pos { Zero, Infinity };

inline const char* pos_name(Pos p) { return p == Pos::Zero ? "0" : "inf"; }

struct Insertion {
    Pos pos = Pos::Zero;
    Partition lambda;
};

struct InsertionSpec {
    int l = 0;
    Rational e = 0;
    Pos x0 = Pos::Zero;
    std::vector<Insertion> insertions;
    bool dualize = false;  // 𝕊_λ(E_p) by default; 𝕊_λ(E_p^∨) when set
};

struct QuotFixedComponent {
    std::vector<int> S;        // coordinate subset, 0-based
    std::vector<int> degrees;  // d_i ≥ 0 over S, Σ = d
};

inline void compositions(int d, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= d; ++a) {
        cur.push_back(a);
        compositions(d - a, n, cur, out);
        cur.pop_back();
    }
}

inline std::vector<QuotFixedComponent> fixed_components(int n, int N, int d) {
    if (n < 0 || n > N || d < 0) throw DomainError("fixed_components needs 0 ≤ n ≤ N and d ≥ 0");
    std::vector<QuotFixedComponent> out;
    std::vector<std::vector<int>> comps;
    if (n == 0) {
        if (d == 0) out.push_back({{}, {}});
        return out;
    }
    std::vector<int> cur;
    compositions(d, n, cur, comps);
    for (const auto& S : subsets(N, n))
        for (const auto& c : comps) out.push_back({S, c});
    return out;
}

// s-character of χ(P¹, O(α·[0] + β·[∞])): s^{−α} + … + s^{β}, signed when negative.
inline std::map<int, int> chi_line(int alpha, int beta) {
    std::map<int, int> r;
    int lo = -alpha, hi = beta;
    if (hi >= lo)
        for (int k = lo; k <= hi; ++k) r[k] += 1;
    else
        for (int k = hi + 1; k < lo; ++k) r[k] -= 1;
    return r;
}

// One localization run for a fixed weight draw. nullopt signals a weight collision.
inline std::optional<Rational> glsm_localize(int n, int N, int d, const InsertionSpec& spec, const WeightDraw& w) {
    if (!is_integer(spec.e)) return Rational(0);
    long e = spec.e.get_num().get_si();
    const int D = N * d + n * (N - n);
    const int prec = D + 2;
    LaurentSeries total;
    for (const auto& comp : fixed_components(n, N, d)) {
        const auto& S = comp.S;
        // secondary localization: split d_i = a_i + b_i between 0 and ∞
        std::vector<int> a(n, 0);
        while (true) {
            std::vector<int> b(n);
            for (int x = 0; x < n; ++x) b[x] = comp.degrees[x] - a[x];
            // tangent = Hom(K, O^N / K) as (k, i, s-power) multiplicities
            std::map<std::tuple<int, int, int>, int> T;
            for (int x = 0; x < n; ++x) {
                for (const auto& [sk, c] : chi_line(a[x], b[x]))
                    for (int k = 0; k < N; ++k) T[{k, S[x], sk}] += c;
                for (int y = 0; y < n; ++y)
                    for (const auto& [sk, c] : chi_line(a[x] - a[y], b[x] - b[y])) T[{S[y], S[x], sk}] -= c;
            }
            LaurentSeries den = LaurentSeries::constant(1, prec);
            int dim = 0;
            for (const auto& [key, c] : T) {
                if (c == 0) continue;
                if (c < 0) throw ConsistencyError("smoothness", "negative tangent multiplicity at a fixed point");
                auto [k, i, sk] = key;
                long m = w.t[k] - w.t[i] + w.s * sk;
                if (m == 0) return std::nullopt;
                for (int r = 0; r < c; ++r) den *= LaurentSeries::one_minus_binomial(-m, prec);
                dim += c;
            }
            if (dim != D)
                throw ConsistencyError("dimension", "tangent space of dimension " + std::to_string(dim) + ", expected " +
                                                        std::to_string(D));
            // E = K^∨: summand x is O(a·0 + b·∞) with character t_i^{-1}
            long detR = 0;
            for (int x = 0; x < n; ++x)
                for (const auto& [sk, c] : chi_line(a[x], b[x])) detR += c * (w.s * sk - w.t[S[x]]);
            auto fibre = [&](Pos p) {
                std::vector<long> f(n);
                for (int x = 0; x < n; ++x) f[x] = (p == Pos::Zero ? -a[x] * w.s : b[x] * w.s) - w.t[S[x]];
                return f;
            };
            long base = -spec.l * detR;
            for (long v : fibre(spec.x0)) base += e * v;
            LaurentPoly num = LaurentPoly::monomial({static_cast<int>(base)});
            for (const auto& ins : spec.insertions) {
                std::vector<LaurentPoly> xs;
                for (long v : fibre(ins.pos)) xs.push_back(LaurentPoly::monomial({static_cast<int>(spec.dualize ? -v : v)}));
                num = num * schur_poly(ins.lambda, xs, LaurentPoly::constant(1, 1));
            }
            total += to_series(num, {1}, prec) / den;

            int x = 0;
            while (x < n && a[x] == comp.degrees[x]) a[x++] = 0;
            if (x == n) break;
            ++a[x];
        }
    }
    for (int k = total.valuation(); k < 0; ++k)
        if (total.coeff(k) != 0) throw ConsistencyError("polar-cancellation", "Quot localization sum has a pole");
    return total.coeff(0);
}

struct GlsmRun {
    Integer value;
    std::vector<Rational> draws;  // the individual localization results that were compared
};

// Integer invariant; compares two independent draws and a second auxiliary weight.
inline GlsmRun glsm_invariant_checked(int n, int N, int d, const InsertionSpec& spec, std::uint64_t seed = 1) {
    if (n < 1 || n > N) throw DomainError("Quot scheme needs 1 ≤ n ≤ N");
    if (d < 0) throw DomainError("degree must be nonnegative");
    for (const auto& ins : spec.insertions) {
        if (static_cast<int>(ins.lambda.size()) > n && length(ins.lambda) > n)
            throw DomainError("insertion " + to_string(ins.lambda) + " has more than n parts");
        if (!in_Pl(ins.lambda, spec.l)) throw DomainError("insertion " + to_string(ins.lambda) + " is not in P_l");
    }
    GlsmRun run;
    if (!is_integer(spec.e)) {
        run.value = 0;
        return run;
    }
    auto evaluate = [&](std::uint64_t stream, bool flip_s) {
        for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
            WeightDraw w = draw_weights(seed, N, stream * 64 + attempt);
            if (flip_s) w.s = -w.s + (w.s > 0 ? -1 : 1);
            if (!distinct_torus_weights(w)) continue;
            if (auto v = glsm_localize(n, N, d, spec, w)) return *v;
        }
        throw ConsistencyError("generic-parameters", "could not draw collision-free weights");
    };
    run.draws = {evaluate(0, false), evaluate(1, false), evaluate(0, true)};
    for (const auto& v : run.draws)
        if (v != run.draws[0])
            throw ConsistencyError("parameter-independence", "GLSM localization depends on generic parameters: " +
                                                                 str(run.draws[0]) + " vs " + str(v));
    if (!is_integer(run.draws[0]))
        throw ConsistencyError("integrality", "GLSM localization is not an integer: " + str(run.draws[0]));
    run.value = run.draws[0].get_num();
    return run;
}

inline Integer glsm_invariant(int n, int N, int d, const InsertionSpec& spec, std::uint64_t seed = 1) {
    return glsm_invariant_checked(n, N, d, spec, seed).value;
}

struct CorrespondenceRecord {
    int n = 0, l = 0, N = 0, d = 0;
    std::vector<Partition> partitions;
    ThetaExponent e{0, true};
    Integer verlinde;
    Integer glsm;
    bool equal = false;
};

inline void require(bool ok, const char* hyp, const std::string& what) {
    if (!ok) throw PreconditionError(hyp, what);
}

inline CorrespondenceRecord correspondence_check(int n, int l, int N, const std::vector<Partition>& parts_in, int d,
                                                 std::uint64_t seed = 1, Pos where = Pos::Zero) {
    int k = static_cast<int>(parts_in.size());
    require(n >= 1 && n <= 2, "rank<=2", "the correspondence is checked for n ≤ 2 only");
    require(l >= 1, "level>=1", "insertions from P_l′ need l ≥ 1");
    require(N >= n + 2 * l, "N>=n+2l", "needs N ≥ n + 2l");
    require(k * 1L > static_cast<long>(l) * (n - 1), "nonempty-moduli",
            "genus-0 moduli are empty unless (n−1)(g−1) + k/l > 0, i.e. k > l(n−1)");
    require(d >= 0, "d>=0", "degree must be nonnegative");
    CorrespondenceRecord rec;
    rec.n = n;
    rec.l = l;
    rec.N = N;
    rec.d = d;
    for (const auto& p : parts_in) {
        Partition q = padded(p, n);
        require(is_partition(q) && in_Pl_prime(q, l), "insertions-in-Pl'", "insertion " + to_string(p) + " is not in P_l′");
        rec.partitions.push_back(q);
    }
    rec.e = theta_exponent(n, l, 0, d, rec.partitions);
    rec.verlinde = gl_verlinde(rec.partitions, n, l, d);
    InsertionSpec spec;
    spec.l = l;
    spec.e = rec.e.value;
    spec.x0 = where;
    for (const auto& p : rec.partitions) spec.insertions.push_back({where, p});
    rec.glsm = glsm_invariant(n, N, d, spec, seed);
    rec.equal = rec.verlinde == rec.glsm;
    return rec;
}

}  // namespace vgc
