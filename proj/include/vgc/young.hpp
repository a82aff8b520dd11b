#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_ring.hpp"

namespace vgc {

// Weakly decreasing, trailing zeros kept: the length is the rank n.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline void require_partition(const Partition& p) {
    if (!is_partition(p)) throw DomainError("not a partition (parts must be weakly decreasing and nonnegative)");
}

inline int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int length(const Partition& p) {
    return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x > 0; }));
}

inline Partition padded(Partition p, int n) {
    if (length(p) > n) throw DomainError("partition has more than n nonzero parts");
    p.resize(n, 0);
    return p;
}

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

enum class Level { InPl, InPlPrime, Outside };

inline Level level_membership(const Partition& lam, int l) {
    int top = lam.empty() ? 0 : lam.front();
    if (top < l) return Level::InPlPrime;
    if (top <= l) return Level::InPl;
    return Level::Outside;
}

inline bool in_Pl(const Partition& lam, int l) { return level_membership(lam, l) != Level::Outside; }
inline bool in_Pl_prime(const Partition& lam, int l) { return level_membership(lam, l) == Level::InPlPrime; }

inline Partition complement(const Partition& lam, int l) {
    require_partition(lam);
    if (!in_Pl(lam, l)) throw DomainError("complement needs λ in P_l");
    Partition r(lam.rbegin(), lam.rend());
    for (int& x : r) x = l - x;
    return r;
}

// all partitions in the n × l box (P_l), decreasing lexicographic order
inline std::vector<Partition> partitions_in_box(int n, int l) {
    std::vector<Partition> out;
    Partition cur(n);
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int v = mx; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    if (l >= 0) rec(rec, 0, l);
    return out;
}

// P_l′ = {λ : λ₁ < l}
inline std::vector<Partition> partitions_in_open_box(int n, int l) {
    if (l <= 0) return {};
    return partitions_in_box(n, l - 1);
}

struct ParabolicType {
    std::vector<int> a;  // weights, strictly increasing, < l
    std::vector<int> m;  // multiplicities
    std::vector<int> r;  // jump ranks
    std::vector<int> d;  // steps, d_last = l − 1 − a_last
    int l = 0;

    int n() const { return r.empty() ? 0 : r.back(); }
    // |a| counted with multiplicity
    int weight_sum() const {
        int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * m[i];
        return s;
    }
};

inline ParabolicType parabolic_type_of(const Partition& lam, int l) {
    require_partition(lam);
    if (!in_Pl_prime(lam, l))
        throw DomainError("parabolic type needs λ₁ < l: a weight equal to l is outside the range where the quotient construction works");
    int n = static_cast<int>(lam.size());
    ParabolicType t;
    t.l = l;
    for (int i = 0; i < n; ++i)
        if (i + 1 == n || lam[i] != lam[i + 1]) {
            t.r.push_back(i + 1);
            t.a.push_back(l - 1 - lam[i]);
        }
    for (std::size_t j = 0; j < t.r.size(); ++j) t.m.push_back(t.r[j] - (j ? t.r[j - 1] : 0));
    for (std::size_t j = 0; j < t.a.size(); ++j) t.d.push_back((j + 1 < t.a.size() ? t.a[j + 1] : l - 1) - t.a[j]);
    return t;
}

struct ThetaExponent {
    Rational value;
    bool integral;
};

inline ThetaExponent theta_exponent(int n, int l, int g, int d, const std::vector<Partition>& parts) {
    if (n <= 0) throw DomainError("rank must be positive");
    int total = 0;
    for (const auto& p : parts) {
        if (!in_Pl(p, l)) throw DomainError("insertion " + to_string(p) + " is not in P_l");
        total += size(p);
    }
    Rational e = rat(l * d - total, n) + l * (1 - g);
    e.canonicalize();
    return {e, is_integer(e)};
}

struct ParabolicSlope {
    Rational degree;
    Rational slope;
};

inline ParabolicSlope parabolic_degree_slope(int d, int n, const std::vector<int>& weight_sums, int l, bool has_section,
                                             const Rational& delta) {
    if (l <= 0) throw DomainError("parabolic degree needs l > 0");
    if (n <= 0) throw DomainError("rank must be positive");
    Rational dp = d;
    for (int a : weight_sums) dp += rat(a, l);
    dp.canonicalize();
    Rational mu = dp / n + (has_section ? delta / n : Rational(0));
    return {dp, mu};
}

// Σ m_i m′_j over pairs with a_i > a′_j (strict) or a_i ≥ a′_j
inline int skyscraper_chi(const std::vector<int>& a, const std::vector<int>& m, const std::vector<int>& ap,
                          const std::vector<int>& mp, bool strict) {
    if (a.size() != m.size() || ap.size() != mp.size()) throw DomainError("weights and multiplicities differ in length");
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < ap.size(); ++j)
            if (strict ? a[i] > ap[j] : a[i] >= ap[j]) s += m[i] * mp[j];
    return s;
}

struct DegreeVector {
    std::vector<int> entries;  // d_1 ≤ … ≤ d_n
    struct Block {
        int begin, end, degree;  // positions [begin, end) share degree
        int size() const { return end - begin; }
    };
    std::vector<Block> blocks;

    int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    std::vector<int> jumping_indices() const {
        std::vector<int> j;
        for (const auto& b : blocks) j.push_back(b.end);
        return j;
    }
    std::vector<int> block_sizes() const {
        std::vector<int> r;
        for (const auto& b : blocks) r.push_back(b.size());
        return r;
    }
    int gap(std::size_t b, std::size_t a) const { return blocks.at(b).degree - blocks.at(a).degree; }
};

inline DegreeVector make_degree_vector(std::vector<int> v) {
    DegreeVector dv;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1] || v[i] < 0) throw DomainError("degree vector must be weakly increasing and nonnegative");
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        dv.blocks.push_back({static_cast<int>(i), static_cast<int>(j), v[i]});
        i = j;
    }
    dv.entries = std::move(v);
    return dv;
}

inline std::vector<DegreeVector> degree_vectors(int dp, int n) {
    if (dp < 0 || n < 1) throw DomainError("degree_vectors needs d′ ≥ 0 and n ≥ 1");
    std::vector<DegreeVector> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int lo, int rem) -> void {
        if (i == n) {
            if (rem == 0) out.push_back(make_degree_vector(cur));
            return;
        }
        for (int v = lo; v * (n - i) <= rem; ++v) {
            cur.push_back(v);
            self(self, i + 1, v, rem - v);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, dp);
    return out;
}

// number of partitions of d into at most n parts
inline long partition_count(int d, int n) {
    if (d == 0) return 1;
    if (d < 0 || n == 0) return 0;
    return partition_count(d, n - 1) + partition_count(d - n, n);
}

// One-line notation w[i] = image of position i; increasing on every block.
inline std::vector<std::vector<int>> coset_reps(int n, const std::vector<int>& blocks) {
    if (std::accumulate(blocks.begin(), blocks.end(), 0) != n) throw DomainError("block sizes must sum to n");
    std::vector<std::vector<int>> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        bool ok = true;
        int pos = 0;
        for (int b : blocks) {
            for (int k = pos; k + 1 < pos + b; ++k)
                if (w[k] > w[k + 1]) ok = false;
            pos += b;
        }
        if (ok) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace vgc
