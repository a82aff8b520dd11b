#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "exact_ring.hpp"
#include "schur.hpp"
#include "young.hpp"

namespace vgc {

// ---------------------------------------------------------------------------
// Generic parameters. Every torus character becomes u^w with integer weight w
// on a one-parameter subgroup; u = 1 + ε and the non-equivariant value is read
// off the ε⁰ coefficient.

struct WeightDraw {
    std::vector<long> t;  // weights of t_1..t_N
    long s = 0;           // weight of the auxiliary C* on the projective line
};

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : g_(seed) {}
    // uniform on [lo, hi]; modulo reduction keeps the stream portable
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(g_() % span);
    }

private:
    std::mt19937_64 g_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline WeightDraw draw_weights(std::uint64_t seed, int N, std::uint64_t stream) {
    SeededRng rng(mix_seed(seed, stream));
    WeightDraw w;
    for (int i = 0; i < N; ++i) w.t.push_back(rng.uniform(-1000, 1000));
    w.s = rng.uniform(1, 1000) * (rng.uniform(0, 1) ? 1 : -1);
    return w;
}

inline bool distinct_torus_weights(const WeightDraw& w) {
    auto t = w.t;
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
}

// lexicographic n-subsets of {0..N−1}
inline std::vector<std::vector<int>> subsets(int N, int n) {
    std::vector<std::vector<int>> out;
    if (n < 0 || n > N) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < N; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::string subset_label(const std::vector<int>& S) {
    std::string s = "{";
    for (std::size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i] + 1);
    return s + "}";
}

template <class V>
struct FixedPointClass {
    int n = 0, N = 0;
    std::vector<std::vector<int>> points;  // n-subsets
    std::vector<V> values;

    const V& at(const std::vector<int>& S) const {
        auto it = std::find(points.begin(), points.end(), S);
        if (it == points.end()) throw DomainError("not a fixed point");
        return values[static_cast<std::size_t>(it - points.begin())];
    }
    template <class F>
    static FixedPointClass build(int n, int N, F&& f) {
        FixedPointClass c;
        c.n = n;
        c.N = N;
        c.points = subsets(N, n);
        for (const auto& S : c.points) c.values.push_back(f(S));
        return c;
    }
    friend FixedPointClass operator*(const FixedPointClass& a, const FixedPointClass& b) {
        FixedPointClass c = a;
        for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.values[i] * b.values[i];
        return c;
    }
    friend FixedPointClass operator+(const FixedPointClass& a, const FixedPointClass& b) {
        FixedPointClass c = a;
        for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.values[i] + b.values[i];
        return c;
    }
};

using KClass = FixedPointClass<LaurentPoly>;

enum class Taut { Sub, SubDual, DetE };

inline KClass tautological_class(int n, int N, Taut kind) {
    if (n < 1 || n > N) throw DomainError("tautological classes need 1 ≤ n ≤ N");
    return KClass::build(n, N, [&](const std::vector<int>& S) {
        LaurentPoly v(N);
        if (kind == Taut::DetE) {
            LaurentPoly::Exp e(N, 0);
            for (int i : S) e[i] = -1;
            return LaurentPoly::monomial(e);
        }
        for (int i : S) v += LaurentPoly::var(N, i, kind == Taut::Sub ? 1 : -1);
        return v;
    });
}

inline KClass structure_sheaf(int n, int N) {
    return KClass::build(n, N, [&](const std::vector<int>&) { return LaurentPoly::constant(N, 1); });
}

// characters of Sub (or its dual) at S
inline std::vector<LaurentPoly> sub_characters(int N, const std::vector<int>& S, bool dual) {
    std::vector<LaurentPoly> xs;
    for (int i : S) xs.push_back(LaurentPoly::var(N, i, dual ? -1 : 1));
    return xs;
}

inline KClass schur_class(const Partition& lam, int n, int N, bool dualize) {
    if (length(lam) > n) throw DomainError("Schur class needs at most n parts");
    return KClass::build(n, N, [&](const std::vector<int>& S) { return schur_eval(lam, sub_characters(N, S, dualize)); });
}

inline KClass det_power(int n, int N, int k) {
    // (det E)^k, E = Sub^∨
    return KClass::build(n, N, [&](const std::vector<int>& S) {
        LaurentPoly::Exp e(N, 0);
        for (int i : S) e[i] = -k;
        return LaurentPoly::monomial(e);
    });
}

// Σ c · u^{α·w} as a series in ε; every variable must carry a weight
inline LaurentSeries to_series(const LaurentPoly& p, const std::vector<long>& w, int prec) {
    LaurentSeries s;
    for (const auto& [e, c] : p.terms()) {
        long a = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (i >= w.size()) throw UnsupportedInput("variable without a weight in the non-equivariant limit");
            a += e[i] * w[i];
        }
        s += LaurentSeries::binomial(a, prec, c);
    }
    if (s.is_zero()) return LaurentSeries::constant(0, prec);
    return s;
}

inline LaurentSeries to_series(const RationalFunction& f, const std::vector<long>& w, int prec) {
    return to_series(f.num(), w, prec) / to_series(f.den(), w, prec);
}

// tangent Euler factor Π_{i∈S, j∉S} (1 − t_i/t_j) along the subgroup
inline LaurentSeries grassmannian_euler(int N, const std::vector<int>& S, const std::vector<long>& w, int prec) {
    LaurentSeries den = LaurentSeries::constant(1, prec);
    for (int i : S)
        for (int j = 0; j < N; ++j)
            if (std::find(S.begin(), S.end(), j) == S.end()) den *= LaurentSeries::one_minus_binomial(w[i] - w[j], prec);
    return den;
}

// Non-equivariant χ for one weight draw; the ε^{<0} part must cancel.
template <class V>
Rational chi_with(const FixedPointClass<V>& c, const std::vector<long>& w, int extra_prec = 0) {
    int D = c.n * (c.N - c.n);
    int prec = D + 2 + extra_prec;
    LaurentSeries total;
    for (std::size_t k = 0; k < c.points.size(); ++k)
        total += to_series(c.values[k], w, prec) / grassmannian_euler(c.N, c.points[k], w, prec);
    if (total.abs_precision() < 1) throw ConsistencyError("series-precision", "insufficient precision in localization");
    for (int k = total.valuation(); k < 0; ++k)
        if (total.coeff(k) != 0) throw ConsistencyError("polar-cancellation", "fixed-point sum has a pole at the identity");
    return total.coeff(0);
}

inline WeightDraw generic_draw(std::uint64_t seed, int N, std::uint64_t stream) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        WeightDraw w = draw_weights(seed, N, stream * 64 + attempt);
        if (distinct_torus_weights(w)) return w;
    }
    throw ConsistencyError("generic-parameters", "could not draw generic torus weights");
}

// χ with two independent draws; disagreement is an internal-consistency failure.
template <class V>
Rational chi(const FixedPointClass<V>& c, std::uint64_t seed = 1) {
    Rational a = chi_with(c, generic_draw(seed, c.N, 0).t);
    Rational b = chi_with(c, generic_draw(seed, c.N, 1).t);
    if (a != b)
        throw ConsistencyError("parameter-independence",
                               "chi depends on the generic parameters: " + str(a) + " vs " + str(b));
    return a;
}

// Equivariant pushforward as an exact Laurent polynomial in t.
inline LaurentPoly chi_equivariant(const KClass& c) {
    int N = c.N;
    RationalFunction total = RationalFunction::constant(N, 0, 0);
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        const auto& S = c.points[k];
        LaurentPoly den = LaurentPoly::constant(N, 1);
        for (int i : S)
            for (int j = 0; j < N; ++j)
                if (std::find(S.begin(), S.end(), j) == S.end()) {
                    LaurentPoly::Exp e(N, 0);
                    e[i] = 1;
                    e[j] = -1;
                    den *= LaurentPoly::constant(N, 1) - LaurentPoly::monomial(e);
                }
        total += RationalFunction(c.values[k], den, 0);
    }
    auto q = LaurentPoly::divide_exact(total.num(), total.den());
    if (!q) throw ConsistencyError("integrality", "equivariant Euler characteristic is not a Laurent polynomial");
    return *q;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q for the pairing.

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational determinant(RationalMatrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline RationalMatrix inverse(RationalMatrix m) {
    std::size_t n = m.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw DomainError("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational f = 1 / m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] *= f;
            inv[c][k] *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational g = m[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= g * m[c][k];
                inv[r][k] -= g * inv[c][k];
            }
        }
    }
    return inv;
}

struct PairingMatrix {
    std::vector<Partition> basis;
    RationalMatrix entries;
};

// (φ_a, φ_b) = χ(φ_a ⊗ φ_b ⊗ (det E)^{−l}) on the basis 𝕊_λ, λ ∈ P_l
inline PairingMatrix mukai_pairing_matrix(int n, int N, int l, bool dualize = true, std::uint64_t seed = 1) {
    if (N < n + l) throw DomainError("pairing needs N ≥ n + l");
    PairingMatrix pm;
    pm.basis = partitions_in_box(n, l);
    std::sort(pm.basis.begin(), pm.basis.end());  // ∅ first
    std::vector<KClass> cls;
    for (const auto& lam : pm.basis) cls.push_back(schur_class(lam, n, N, dualize));
    KClass twist = det_power(n, N, -l);
    std::size_t m = pm.basis.size();
    pm.entries.assign(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            Rational v = chi(cls[a] * cls[b] * twist, seed);
            pm.entries[a][b] = pm.entries[b][a] = v;
        }
    if (determinant(pm.entries) == 0)
        throw DomainError("twisted pairing is singular for (n,N,l) = (" + std::to_string(n) + "," + std::to_string(N) +
                          "," + std::to_string(l) + ")");
    return pm;
}

// Pushforward of L_λ along the partial flag of type given by the equal parts of λ,
// localized at the coset fixed points with formal characters x_1..x_n.
inline LaurentPoly flag_pushforward_bwb(const Partition& lam_in, int n) {
    require_partition(lam_in);
    Partition lam = padded(lam_in, n);
    std::vector<int> blocks;
    std::vector<int> block_of(n);
    for (int i = 0; i < n; ++i) {
        if (i == 0 || lam[i] != lam[i - 1]) blocks.push_back(0);
        ++blocks.back();
        block_of[i] = static_cast<int>(blocks.size()) - 1;
    }
    RationalFunction total = RationalFunction::constant(n, 0, 0);
    for (const auto& w : coset_reps(n, blocks)) {
        LaurentPoly::Exp e(n, 0);
        for (int i = 0; i < n; ++i) e[w[i]] += lam[i];
        LaurentPoly num = LaurentPoly::monomial(e);
        LaurentPoly den = LaurentPoly::constant(n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (block_of[i] == block_of[j]) continue;
                LaurentPoly::Exp f(n, 0);
                f[w[j]] += 1;
                f[w[i]] -= 1;
                den *= LaurentPoly::constant(n, 1) - LaurentPoly::monomial(f);
            }
        total += RationalFunction(num, den, 0);
    }
    auto q = LaurentPoly::divide_exact(total.num(), total.den());
    if (!q) throw ConsistencyError("bwb-polynomiality", "flag pushforward is not a Laurent polynomial");
    return *q;
}

}  // namespace vgc
