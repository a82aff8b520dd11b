#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exact_ring.hpp"
#include "young.hpp"

namespace vgc {

inline int permutation_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// h_0..h_kmax of xs, by the division-free recurrence h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
template <class R>
std::vector<R> complete_homogeneous(int kmax, const std::vector<R>& xs, const R& one) {
    R zero = one * Rational(0);
    std::vector<R> h(kmax + 1, zero);
    h[0] = one;
    for (const R& x : xs)
        for (int k = 1; k <= kmax; ++k) h[k] = h[k] + x * h[k - 1];
    return h;
}

// s_λ(xs) by the Jacobi–Trudi determinant det(h_{λ_i − i + j}).
template <class R>
R schur_poly(const Partition& lam, const std::vector<R>& xs, const R& one) {
    require_partition(lam);
    int len = length(lam);
    R zero = one * Rational(0);
    if (len > static_cast<int>(xs.size())) return zero;
    if (len == 0) return one;
    int kmax = lam[0] + len;
    auto h = complete_homogeneous(kmax, xs, one);
    auto H = [&](int k) -> const R& { return (k < 0 || k > kmax) ? zero : h[k]; };
    std::vector<int> p(len);
    std::iota(p.begin(), p.end(), 0);
    R total = zero;
    do {
        R term = one;
        bool vanish = false;
        for (int i = 0; i < len && !vanish; ++i) {
            int k = lam[i] - i + p[i];
            if (k < 0) vanish = true;
            else if (k > 0) term = term * H(k);
        }
        if (vanish) continue;
        total = permutation_sign(p) > 0 ? total + term : total - term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Schur polynomial at a multiset of unit monomials.
inline LaurentPoly schur_eval(const Partition& lam, const std::vector<LaurentPoly>& X) {
    std::size_t nv = 0;
    for (const auto& x : X) {
        if (!x.is_unit_monomial()) throw DomainError("schur_eval expects unit monomials");
        nv = std::max(nv, x.nvars());
    }
    return schur_poly(lam, X, LaurentPoly::constant(nv, 1));
}

inline Integer hook_content_dimension(const Partition& lam, int n) {
    Rational r = 1;
    for (int i = 0; i < static_cast<int>(lam.size()); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int arm = lam[i] - j - 1, leg = 0;
            for (int k = i + 1; k < static_cast<int>(lam.size()) && lam[k] > j; ++k) ++leg;
            r *= rat(n + j - i, arm + leg + 1);
        }
    r.canonicalize();
    return r.get_num();
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson through iterated Pieri.

// Partitions obtained by adding a horizontal strip of size k, at most max_rows rows.
inline std::vector<Partition> pieri(const Partition& lam, int k, int max_rows) {
    std::vector<Partition> out;
    Partition base = lam;
    while (!base.empty() && base.back() == 0) base.pop_back();
    int rows = std::min<int>(max_rows, static_cast<int>(base.size()) + 1);
    base.resize(rows, 0);
    if (length(lam) > max_rows) return out;
    Partition cur = base;
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == rows) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int cap = i == 0 ? rem : std::min(rem, base[i - 1] - base[i]);
        for (int a = cap; a >= 0; --a) {
            cur[i] = base[i] + a;
            self(self, i + 1, rem - a);
        }
        cur[i] = base[i];
    };
    rec(rec, 0, k);
    return out;
}

inline Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Per-computation memo for Pieri steps.
class LrContext {
public:
    explicit LrContext(int max_rows) : rows_(max_rows) {}

    // s_λ · s_μ in the ring of symmetric polynomials in `max_rows` variables
    std::map<Partition, Integer> product(const Partition& lam, const Partition& mu) {
        Partition m = trimmed(mu);
        std::map<Partition, Integer> out;
        if (length(lam) > rows_) return out;
        int len = static_cast<int>(m.size());
        std::vector<int> p(len);
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> hs;
            bool vanish = false;
            for (int i = 0; i < len; ++i) {
                int k = m[i] - i + p[i];
                if (k < 0) vanish = true;
                hs.push_back(k);
            }
            if (vanish) continue;
            int sg = permutation_sign(p);
            std::map<Partition, Integer> cur{{trimmed(lam), Integer(1)}};
            for (int k : hs) {
                if (k == 0) continue;
                std::map<Partition, Integer> nxt;
                for (const auto& [nu, c] : cur)
                    for (const auto& r : step(nu, k)) nxt[r] += c;
                cur = std::move(nxt);
            }
            for (const auto& [nu, c] : cur) out[nu] += sg * c;
        } while (std::next_permutation(p.begin(), p.end()));
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    int rows_;
    std::map<std::pair<Partition, int>, std::vector<Partition>> memo_;

    const std::vector<Partition>& step(const Partition& nu, int k) {
        auto key = std::make_pair(nu, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<Partition> r;
        for (auto& p : pieri(nu, k, rows_)) r.push_back(trimmed(p));
        return memo_.emplace(key, std::move(r)).first->second;
    }
};

inline Integer lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (size(nu) != size(lam) + size(mu)) return 0;
    int rows = length(nu);
    if (length(lam) > rows || length(mu) > rows) return 0;
    LrContext ctx(rows);
    auto prod = ctx.product(lam, mu);
    auto it = prod.find(trimmed(nu));
    return it == prod.end() ? Integer(0) : it->second;
}

struct GradedCoefficient {
    Partition nu;
    int degree;
    int value;  // ±1
};

// Rim-hook reduction into the n × l box via beta-numbers (abacus with n + l runners).
inline std::optional<GradedCoefficient> rim_hook_reduce(const Partition& nu_in, int n, int l) {
    require_partition(nu_in);
    if (length(nu_in) > n) throw DomainError("rim_hook_reduce needs at most n parts");
    Partition nu = padded(nu_in, n);
    int N = n + l;
    std::vector<int> beads(n);
    for (int i = 0; i < n; ++i) beads[i] = nu[i] + n - 1 - i;
    int degree = 0, sign = 1;
    while (true) {
        std::sort(beads.rbegin(), beads.rend());
        if (beads[0] < N) break;
        int b = beads[0], nb = b - N;
        if (std::find(beads.begin(), beads.end(), nb) != beads.end()) return std::nullopt;
        int jumped = 0;
        for (int x : beads)
            if (x > nb && x < b) ++jumped;
        if (jumped % 2) sign = -sign;
        ++degree;
        beads[0] = nb;
    }
    Partition out(n);
    for (int i = 0; i < n; ++i) out[i] = beads[i] - (n - 1 - i);
    return GradedCoefficient{out, degree, sign};
}

}  // namespace vgc
