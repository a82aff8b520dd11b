#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_ring.hpp"
#include "young.hpp"

namespace vgc {

// Rank-2 δ-wall numerology. A marked point carries two weights in [0, l); at a wall
// E = L ⊕ M, L takes one weight (a′_p), M the other (a″_p).

using WeightPair = std::pair<int, int>;

struct WallData {
    Rational delta;
    int d1 = 0, d2 = 0;         // d′ = deg L, d″ = deg M
    std::vector<int> a1, a2;    // a′_p, a″_p
    int a1_sum = 0, a2_sum = 0;
    int m = 0;                  // #{p : a′_p > a″_p}
};

inline int weight_total(const std::vector<WeightPair>& w) {
    int s = 0;
    for (auto [x, y] : w) s += x + y;
    return s;
}

// Weights of the parabolic structure attached to an insertion λ = (λ1, λ2) ∈ P_l′.
inline WeightPair weights_from_partition(const Partition& lam_in, int l) {
    Partition lam = padded(lam_in, 2);
    require_partition(lam);
    if (length(lam) > 2 || !in_Pl_prime(lam, l)) throw DomainError("insertion " + to_string(lam_in) + " is not in P_l′");
    return {l - 1 - lam[1], l - 1 - lam[0]};
}

inline void check_weights(const std::vector<WeightPair>& w, int l) {
    for (auto [x, y] : w)
        if (x < 0 || y < 0 || x >= l || y >= l) throw DomainError("parabolic weights must lie in [0, l)");
}

// Both wall equations, with d′ + d″ = d.
inline bool wall_equations_hold(const WallData& w, int d, int l, int a_total) {
    if (w.d1 + w.d2 != d || w.a1_sum + w.a2_sum != a_total) return false;
    Rational rhs = (Rational(d) + w.delta) / 2 + rat(a_total, 2 * l);
    return Rational(w.d1) + w.delta + rat(w.a1_sum, l) == rhs && Rational(w.d2) + rat(w.a2_sum, l) == rhs;
}

inline std::vector<WallData> walls_rank2(int d, int l, const std::vector<WeightPair>& weights = {}) {
    if (l < 1) throw DomainError("level must be positive");
    check_weights(weights, l);
    const int k = static_cast<int>(weights.size());
    const int atot = weight_total(weights);
    std::vector<WallData> out;
    // every selection of one weight per point for L; equal weights give one choice
    std::vector<std::vector<int>> choices(1);
    for (auto [x, y] : weights) {
        std::vector<std::vector<int>> nxt;
        for (const auto& c : choices) {
            auto c0 = c;
            c0.push_back(0);
            nxt.push_back(c0);
            if (x != y) {
                auto c1 = c;
                c1.push_back(1);
                nxt.push_back(c1);
            }
        }
        choices = std::move(nxt);
    }
    for (const auto& c : choices) {
        WallData base;
        for (int p = 0; p < k; ++p) {
            auto [x, y] = weights[p];
            int a = c[p] ? y : x, b = c[p] ? x : y;
            base.a1.push_back(a);
            base.a2.push_back(b);
            base.a1_sum += a;
            base.a2_sum += b;
            if (a > b) ++base.m;
        }
        // δ = d − 2d′ + (|a| − 2|a′|)/l decreases in d′
        for (int d1 = 1;; ++d1) {
            Rational delta = Rational(d - 2 * d1) + rat(atot - 2 * base.a1_sum, l);
            delta.canonicalize();
            if (delta <= 0) break;
            WallData w = base;
            w.delta = delta;
            w.d1 = d1;
            w.d2 = d - d1;
            if (!wall_equations_hold(w, d, l, atot)) throw ConsistencyError("wall-equations", "enumerated wall fails its equations");
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(), [](const WallData& x, const WallData& y) {
        if (x.delta != y.delta) return x.delta < y.delta;
        if (x.d1 != y.d1) return x.d1 < y.d1;
        return x.a1 < y.a1;
    });
    return out;
}

inline std::vector<Rational> critical_values(const std::vector<WallData>& walls) {
    std::vector<Rational> v;
    for (const auto& w : walls)
        if (v.empty() || v.back() != w.delta) v.push_back(w.delta);
    return v;
}

// Open chambers (lo, hi) of generic δ > 0; hi = nullopt means unbounded.
inline std::vector<std::pair<Rational, std::optional<Rational>>> chambers(const std::vector<WallData>& walls) {
    std::vector<std::pair<Rational, std::optional<Rational>>> out;
    Rational lo = 0;
    for (const auto& c : critical_values(walls)) {
        out.emplace_back(lo, c);
        lo = c;
    }
    out.emplace_back(lo, std::nullopt);
    return out;
}

struct FlipRank {
    long n_plus = 0;
    Rational bound;  // l·i, resp. lδ_c/2
    bool inequality_holds = false;
};

// Non-parabolic wall δ_c = 2i: rank of V⁺ is N(d/2 + i + 1 − g) − 2i − 1 + g.
inline FlipRank flip_rank(const Rational& i, int d, int g, int N, int l) {
    Rational twice = 2 * i;
    if (!is_integer(twice) || i <= 0) throw DomainError("i must be a positive half-integer");
    Rational r = N * (rat(d, 2) + i + 1 - g) - twice - 1 + g;
    if (!is_integer(r)) throw DomainError("d/2 + i must be an integer");
    FlipRank f;
    f.n_plus = r.get_num().get_si();
    f.bound = l * i;
    f.inequality_holds = Rational(f.n_plus) > f.bound;
    return f;
}

// Parabolic wall: N(d″ + 1 − g) − (d″ − d′ + 1 − g) + m_{a′,a″}.
inline FlipRank flip_rank(const WallData& w, int g, int N, int l) {
    FlipRank f;
    f.n_plus = static_cast<long>(N) * (w.d2 + 1 - g) - (w.d2 - w.d1 + 1 - g) + w.m;
    f.bound = l * w.delta / 2;
    f.bound.canonicalize();
    f.inequality_holds = Rational(f.n_plus) > f.bound;
    return f;
}

enum class Side { Minus, Plus };

inline const char* side_name(Side s) { return s == Side::Minus ? "minus" : "plus"; }

struct RestrictionWeight {
    Rational value;
    bool integral = true;
};

// Non-parabolic: −e + lχ(M) with e = dl/2 + l(1 − g), χ(M) = d/2 + i + 1 − g; must equal il.
inline RestrictionWeight restriction_weight(const Rational& i, int d, int l, int g, Side side) {
    Rational L = rat(d, 2) - i;
    if (i <= 0 || !is_integer(L) || L <= 0) throw DomainError("(d − δ_c)/2 must be a positive integer");
    Rational e = rat(d * l, 2) + l * (1 - g);
    Rational chiM = rat(d, 2) + i + 1 - g;
    Rational v = -e + l * chiM;
    v.canonicalize();
    Rational il = l * i;
    if (v != il) throw ConsistencyError("restriction-chain", "chain gives " + str(v) + ", expected " + str(il));
    if (side == Side::Plus) v = -v;
    return {v, is_integer(v)};
}

// Parabolic: −e + lχ(M) − Σ_p (l − 1 − a″_p), χ(M) = d″ + 1 − g,
// e = (dl − 2(l−1)k + |a|)/2 + l(1 − g); must equal lδ_c/2.
inline RestrictionWeight restriction_weight(const WallData& w, int d, int l, int g, Side side) {
    const int k = static_cast<int>(w.a1.size());
    if (w.a2.size() != w.a1.size()) throw DomainError("a′ and a″ must cover the same marked points");
    int atot = w.a1_sum + w.a2_sum;
    if (!wall_equations_hold(w, d, l, atot)) throw DomainError("wall equations violated");
    Rational e = rat(d * l - 2 * (l - 1) * k + atot, 2) + l * (1 - g);
    Rational v = -e + l * Rational(w.d2 + 1 - g);
    for (int p = 0; p < k; ++p) v -= l - 1 - w.a2[p];
    v.canonicalize();
    Rational target = l * w.delta / 2;
    target.canonicalize();
    if (v != target) throw ConsistencyError("restriction-chain", "chain gives " + str(v) + ", expected " + str(target));
    if (side == Side::Plus) v = -v;
    return {v, is_integer(v)};
}

}  // namespace vgc
