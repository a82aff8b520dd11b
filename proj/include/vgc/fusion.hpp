#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "schur.hpp"
#include "young.hpp"

namespace vgc {

// Degree-graded vector over {V_λ : λ ∈ P_l}.
struct FusionElement {
    int n = 0, l = 0;
    std::map<std::pair<int, Partition>, Integer> coeffs;  // (degree, ν) → coefficient

    Integer coefficient(int degree, const Partition& nu) const {
        auto it = coeffs.find({degree, padded(nu, n)});
        return it == coeffs.end() ? Integer(0) : it->second;
    }
    bool operator==(const FusionElement& o) const { return n == o.n && l == o.l && coeffs == o.coeffs; }
};

inline FusionElement basis_element(const Partition& lam, int n, int l, int degree = 0) {
    Partition p = padded(lam, n);
    require_partition(p);
    if (!in_Pl(p, l)) throw DomainError("basis index " + to_string(p) + " is not in P_l");
    FusionElement e{n, l, {}};
    e.coeffs[{degree, p}] = 1;
    return e;
}

inline Partition top_class(int n, int l) { return Partition(n, l); }

// The rim-hook ring; memoizes products of basis vectors.
class FusionRing {
public:
    FusionRing(int n, int l) : n_(n), l_(l), lr_(std::make_shared<LrContext>(n)) {
        if (n < 1 || l < 0) throw DomainError("fusion ring needs n ≥ 1 and l ≥ 0");
    }
    int n() const { return n_; }
    int l() const { return l_; }

    // V_λ · V_μ = Σ (coefficient, ν, degree)
    const std::vector<std::tuple<Integer, Partition, int>>& basis_product(const Partition& lam, const Partition& mu) {
        auto key = lam < mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::map<std::pair<int, Partition>, Integer> acc;
        for (const auto& [nu, c] : lr_->product(key.first, key.second)) {
            auto r = rim_hook_reduce(padded(nu, n_), n_, l_);
            if (!r) continue;
            acc[{r->degree, r->nu}] += c * r->value;
        }
        std::vector<std::tuple<Integer, Partition, int>> out;
        for (const auto& [k, c] : acc)
            if (c != 0) out.emplace_back(c, k.second, k.first);
        return memo_.emplace(key, std::move(out)).first->second;
    }

    FusionElement multiply(const FusionElement& a, const FusionElement& b) {
        check(a);
        check(b);
        FusionElement r{n_, l_, {}};
        for (const auto& [ka, ca] : a.coeffs)
            for (const auto& [kb, cb] : b.coeffs)
                for (const auto& [c, nu, deg] : basis_product(ka.second, kb.second))
                    r.coeffs[{ka.first + kb.first + deg, nu}] += ca * cb * c;
        for (auto it = r.coeffs.begin(); it != r.coeffs.end();) it = it->second == 0 ? r.coeffs.erase(it) : std::next(it);
        return r;
    }

    FusionElement product_all(const std::vector<Partition>& parts) {
        FusionElement x = basis_element(Partition(n_, 0), n_, l_);
        for (const auto& p : parts) x = multiply(x, basis_element(p, n_, l_));
        return x;
    }

private:
    int n_, l_;
    std::shared_ptr<LrContext> lr_;
    std::map<std::pair<Partition, Partition>, std::vector<std::tuple<Integer, Partition, int>>> memo_;

    void check(const FusionElement& a) const {
        if (a.n != n_ || a.l != l_) throw DomainError("fusion element from a different ring");
    }
};

inline FusionElement fusion_product(const FusionElement& a, const FusionElement& b, int n, int l) {
    FusionRing ring(n, l);
    return ring.multiply(a, b);
}

// Coefficient of the top class V_{(l^n)} in degree d of the product of all inputs.
inline Integer genus0_verlinde(const std::vector<Partition>& parts, int n, int l, int d) {
    if (parts.size() < 2) throw PreconditionError("k>=2", "genus-0 correlator needs at least two insertions");
    std::vector<Partition> ps;
    for (const auto& p : parts) {
        ps.push_back(padded(p, n));
        if (!in_Pl(ps.back(), l)) throw DomainError("insertion " + to_string(p) + " is not in P_l");
    }
    FusionRing ring(n, l);
    return ring.product_all(ps).coefficient(d, top_class(n, l));
}

// GL Verlinde number in bundle degree d, read off the same ring: the determinant
// insertion V_{(1^n)}^{e+d} carries the degree, and V_{(1^n)}^{n+l} = q^n shifts
// negative powers into range.
inline Integer gl_verlinde(const std::vector<Partition>& parts, int n, int l, int d, int g = 0) {
    if (g != 0) throw PreconditionError("genus-0", "only genus 0 is computed");
    std::vector<Partition> ps;
    for (const auto& p : parts) {
        ps.push_back(padded(p, n));
        if (!in_Pl(ps.back(), l)) throw DomainError("insertion " + to_string(p) + " is not in P_l");
    }
    ThetaExponent th = theta_exponent(n, l, g, d, ps);
    if (!th.integral) return 0;
    long c = th.value.get_num().get_si() + d;
    long M = 0;
    while (c + M * (n + l) < 0) ++M;
    FusionRing ring(n, l);
    FusionElement x = ring.product_all(ps);
    FusionElement det{n, l, {}};
    auto r = rim_hook_reduce(Partition(n, 1), n, l);
    det.coeffs[{r->degree, r->nu}] = r->value;
    for (long i = 0; i < c + M * (n + l); ++i) x = ring.multiply(x, det);
    Integer v = x.coefficient(static_cast<int>(d + M * n), top_class(n, l));
    if (((n - 1) * d) % 2) v = -v;
    return v;
}

}  // namespace vgc
