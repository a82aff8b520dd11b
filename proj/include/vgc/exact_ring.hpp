#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace vgc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline std::string str(const Rational& r) { return r.get_str(); }
inline std::string str(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rpow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw DomainError("zero to a negative power");
        return rpow(1 / Rational(x), -e);
    }
    Rational r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Names of the formal variables of one computation.
struct VarRegistry {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    std::size_t index(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw DomainError("unknown variable " + name);
        return static_cast<std::size_t>(it - names.begin());
    }
    // t1..tN followed by q
    static VarRegistry torus_and_q(int N) {
        VarRegistry r;
        for (int i = 1; i <= N; ++i) r.names.push_back("t" + std::to_string(i));
        r.names.push_back("q");
        return r;
    }
    static VarRegistry torus(int N) {
        VarRegistry r;
        for (int i = 1; i <= N; ++i) r.names.push_back("t" + std::to_string(i));
        return r;
    }
};

class LaurentPoly {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nv, const Rational& c) {
        LaurentPoly p(nv);
        if (c != 0) p.terms_[Exp(nv, 0)] = c;
        return p;
    }
    static LaurentPoly var(std::size_t nv, std::size_t i, int power = 1) {
        Exp e(nv, 0);
        e.at(i) = power;
        return monomial(std::move(e));
    }
    static LaurentPoly monomial(Exp e, const Rational& c = 1) {
        LaurentPoly p(e.size());
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_.begin()->first));
    }
    Rational constant_term() const {
        auto it = terms_.find(Exp(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    // single term with coefficient ±1
    bool is_unit_monomial() const {
        return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        align(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        align(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        std::size_t nv = std::max(a.nvars_, b.nvars_);
        LaurentPoly r(nv);
        if (a.is_zero() || b.is_zero()) return r;
        const LaurentPoly& x = a.nvars_ == nv ? a : a.promoted(nv);
        const LaurentPoly& y = b.nvars_ == nv ? b : b.promoted(nv);
        Exp e(nv);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        return (a - b).is_zero();
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r = constant(nvars_, 1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    LaurentPoly inverse_monomial() const {
        if (!is_monomial()) throw DomainError("only monomials are invertible in a Laurent ring");
        Exp e = terms_.begin()->first;
        for (int& x : e) x = -x;
        return monomial(std::move(e), 1 / terms_.begin()->second);
    }
    LaurentPoly shifted(std::size_t i, int k) const {
        LaurentPoly r(nvars_);
        for (const auto& [e0, c] : terms_) {
            Exp e = e0;
            e.at(i) += k;
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    }

    int max_degree(std::size_t i) const {
        int d = INT_MIN;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(i));
        return d;
    }
    int min_degree(std::size_t i) const {
        int d = INT_MAX;
        for (const auto& [e, c] : terms_) d = std::min(d, e.at(i));
        return d;
    }
    // coefficient of x_i^k, as a polynomial not involving x_i
    LaurentPoly coefficient(std::size_t i, int k) const {
        LaurentPoly r(nvars_);
        for (const auto& [e0, c] : terms_)
            if (Exp e = e0; e.at(i) == k) {
                e[i] = 0;
                r.terms_.emplace(std::move(e), c);
            }
        return r;
    }
    bool involves(std::size_t i) const {
        for (const auto& [e, c] : terms_)
            if (e.at(i) != 0) return true;
        return false;
    }
    bool only_involves(std::size_t i) const {
        for (const auto& [e, c] : terms_)
            for (std::size_t j = 0; j < nvars_; ++j)
                if (j != i && e[j] != 0) return false;
        return true;
    }
    LaurentPoly substitute(std::size_t i, const Rational& v) const {
        LaurentPoly r(nvars_);
        for (const auto& [e0, c] : terms_) {
            Exp e = e0;
            Rational f = rpow(v, e.at(i));
            e[i] = 0;
            r.add_term(e, c * f);
        }
        return r;
    }
    Rational evaluate(const std::vector<Rational>& v) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i]) m *= rpow(v.at(i), e[i]);
            s += m;
        }
        return s;
    }
    // largest monomial dividing every term (componentwise minimum exponent)
    Exp min_exponents() const {
        Exp m(nvars_, INT_MAX);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        if (terms_.empty()) std::fill(m.begin(), m.end(), 0);
        return m;
    }
    LaurentPoly times_monomial(const Exp& m) const {
        LaurentPoly r(nvars_);
        for (const auto& [e0, c] : terms_) {
            Exp e = e0;
            for (std::size_t i = 0; i < nvars_; ++i) e[i] += m.at(i);
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    }
    // leading term in lexicographic order on exponents
    const std::pair<const Exp, Rational>& leading() const { return *terms_.rbegin(); }

    // Exact quotient a/b when b divides a in the Laurent ring; nullopt otherwise.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw DomainError("division by zero polynomial");
        std::size_t nv = std::max(a.nvars_, b.nvars_);
        LaurentPoly rem = a.nvars_ == nv ? a : a.promoted(nv);
        LaurentPoly den = b.nvars_ == nv ? b : b.promoted(nv);
        LaurentPoly q(nv);
        // Laurent units never obstruct: divide by the lex-leading term repeatedly;
        // termination is guaranteed once exponents are confined to a box.
        Exp lo = rem.min_exponents(), dlo = den.min_exponents();
        std::size_t guard = 0, limit = 1;
        for (const auto& [e, c] : rem.terms_) {
            std::size_t span = 1;
            for (std::size_t i = 0; i < nv; ++i) span *= static_cast<std::size_t>(std::max(1, e[i] - lo[i] + 1));
            limit += span;
        }
        limit = std::max<std::size_t>(limit * 4, 1024);
        const auto& [le, lc] = den.leading();
        while (!rem.is_zero()) {
            const auto& [re, rc] = rem.leading();
            Exp m(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                m[i] = re[i] - le[i];
                if (re[i] - le[i] + dlo[i] < lo[i]) return std::nullopt;
            }
            LaurentPoly t = monomial(m, rc / lc);
            q += t;
            rem -= t * den;
            if (++guard > limit) return std::nullopt;
        }
        return q;
    }

    std::string to_string(const VarRegistry& reg) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = abs(c);
            bool neg = c < 0;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += i < reg.size() ? reg.names[i] : "x" + std::to_string(i);
                if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            }
            if (mono.empty())
                os << a.get_str();
            else if (a == 1)
                os << mono;
            else
                os << a.get_str() << "*" << mono;
        }
        return os.str();
    }

private:
    std::size_t nvars_ = 0;
    Terms terms_;

    static bool is_zero_exp(const Exp& e) {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    void add_term(const Exp& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    LaurentPoly promoted(std::size_t nv) const {
        if (nvars_ != 0 && nvars_ != nv) throw DomainError("mixing Laurent rings of different arity");
        LaurentPoly r(nv);
        for (const auto& [e, c] : terms_) r.terms_[Exp(nv, 0)] += c;
        return r;
    }
    void align(const LaurentPoly& o) {
        if (o.nvars_ > nvars_) *this = promoted(o.nvars_);
        else if (o.nvars_ < nvars_ && o.nvars_ != 0) throw DomainError("mixing Laurent rings of different arity");
    }
    friend class RationalFunction;
};

// Dense univariate polynomial over Q; only used for gcd normalization.
namespace detail {

using UPoly = std::vector<Rational>;  // c[k] = coefficient of x^k

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_rem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline UPoly upoly_div(UPoly a, const UPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    UPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t sh = a.size() - b.size();
        q[sh] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly primitive_part(ZPoly p) {
    trim(p);
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g == 0) return p;
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

inline ZPoly to_primitive(const UPoly& a) {
    Integer den = 1;
    for (const auto& c : a) den = lcm(den, c.get_den());
    ZPoly z;
    for (const auto& c : a) z.push_back(c.get_num() * (den / c.get_den()));
    return primitive_part(z);
}

// degree of gcd(a, b) mod the prime 2^61 − 1; an upper bound for the degree over ℚ
// whenever the prime divides neither leading coefficient
inline std::optional<std::size_t> gcd_degree_mod_p(const ZPoly& za, const ZPoly& zb) {
    using u64 = std::uint64_t;
    constexpr u64 P = (u64(1) << 61) - 1;
    auto mul = [](u64 x, u64 y) { return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % P); };
    auto inv = [&](u64 x) {
        u64 r = 1, e = P - 2;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    auto reduce = [](const ZPoly& z) {
        std::vector<u64> v;
        for (const auto& c : z) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), P);
            v.push_back(r.get_ui());
        }
        return v;
    };
    auto a = reduce(za), b = reduce(zb);
    if (a.empty() || b.empty() || a.back() == 0 || b.back() == 0) return std::nullopt;
    auto tr = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (!b.empty()) {
        u64 ib = inv(b.back());
        while (a.size() >= b.size()) {
            u64 f = mul(a.back(), ib);
            std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = (a[sh + i] + P - mul(f, b[i])) % P;
            tr(a);
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

// Primitive PRS over ℤ: Euclid over ℚ blows up the coefficients.
inline UPoly upoly_gcd(const UPoly& a_in, const UPoly& b_in) {
    ZPoly a = to_primitive(a_in), b = to_primitive(b_in);
    if (a.size() < b.size()) std::swap(a, b);
    if (!b.empty() && gcd_degree_mod_p(a, b) == std::size_t(0)) return {Rational(1)};
    while (!b.empty()) {
        if (b.size() == 1) {
            a = {1};
            break;
        }
        ZPoly r = a;
        Integer lb = b.back();
        while (r.size() >= b.size()) {
            Integer lr = r.back();
            std::size_t sh = r.size() - b.size();
            for (auto& c : r) c *= lb;
            for (std::size_t i = 0; i < b.size(); ++i) r[sh + i] -= lr * b[i];
            trim(r);
            r = primitive_part(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    UPoly out;
    for (const auto& c : a) out.push_back(Rational(c));
    if (!out.empty()) {
        Rational lc = out.back();
        for (auto& c : out) c /= lc;
    }
    return out;
}

}  // namespace detail

// Ratio of Laurent polynomials, regarded as a function of the distinguished variable q.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(LaurentPoly::constant(0, 1)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den, std::size_t q)
        : num_(std::move(num)), den_(std::move(den)), q_(q) {
        normalize();
    }
    static RationalFunction constant(std::size_t nv, std::size_t q, const Rational& c) {
        return RationalFunction(LaurentPoly::constant(nv, c), LaurentPoly::constant(nv, 1), q);
    }
    static RationalFunction from(LaurentPoly p, std::size_t q) {
        std::size_t nv = p.nvars();
        return RationalFunction(std::move(p), LaurentPoly::constant(nv, 1), q);
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::size_t qvar() const { return q_; }
    std::size_t nvars() const { return std::max(num_.nvars(), den_.nvars()); }
    bool is_zero() const { return num_.is_zero(); }

    bool is_univariate() const { return num_.only_involves(q_) && den_.only_involves(q_); }

    int num_degree() const { return num_.is_zero() ? INT_MIN : num_.max_degree(q_); }
    int den_degree() const { return den_.max_degree(q_); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, q_, raw_tag{}); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, a.q_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.q_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, a.q_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_, a.q_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
        return RationalFunction(a.num_ * c, a.den_, a.q_);
    }

    // equality by cross-multiplication
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Substitute exact values for some non-q variables.
    RationalFunction specialize(const std::map<std::size_t, Rational>& values) const {
        LaurentPoly n = num_, d = den_;
        for (const auto& [i, v] : values) {
            if (i == q_) throw DomainError("q cannot be specialized here");
            n = n.substitute(i, v);
            d = d.substitute(i, v);
        }
        if (d.is_zero()) throw DomainError("specialization hits a pole");
        return RationalFunction(n, d, q_);
    }
    RationalFunction specialize_all_but_q(const std::vector<Rational>& values) const {
        std::map<std::size_t, Rational> m;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (i != q_) m[i] = values[i];
        return specialize(m);
    }
    Rational evaluate(const std::vector<Rational>& v) const {
        Rational d = den_.evaluate(v);
        if (d == 0) throw DomainError("evaluation at a pole");
        return num_.evaluate(v) / d;
    }

    std::string to_string(const VarRegistry& reg) const {
        if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(reg);
        return "(" + num_.to_string(reg) + ")/(" + den_.to_string(reg) + ")";
    }

    // Idempotent: cancel the common monomial content; for q-only functions also the
    // polynomial gcd, with a monic denominator.
    void normalize() {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        std::size_t nv = std::max(num_.nvars(), den_.nvars());
        if (num_.nvars() != nv) num_ = num_ + LaurentPoly(nv);
        if (den_.nvars() != nv) den_ = den_ + LaurentPoly(nv);
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(nv, 1);
            return;
        }
        LaurentPoly::Exp m = den_.min_exponents(), mn = num_.min_exponents();
        for (std::size_t i = 0; i < nv; ++i) m[i] = -std::min(m[i], mn[i]);
        num_ = num_.times_monomial(m);
        den_ = den_.times_monomial(m);
        if (nv > 0 && is_univariate()) {
            auto a = to_upoly(num_), b = to_upoly(den_);
            auto g = detail::upoly_gcd(a, b);
            if (g.size() > 1) {
                a = detail::upoly_div(a, g);
                b = detail::upoly_div(b, g);
            }
            Rational lc = b.back();
            for (auto& c : a) c /= lc;
            for (auto& c : b) c /= lc;
            num_ = from_upoly(a, nv);
            den_ = from_upoly(b, nv);
            // re-cancel q powers produced by the division
            LaurentPoly::Exp m2 = den_.min_exponents(), mn2 = num_.min_exponents();
            int sh = -std::min(m2[q_], mn2[q_]);
            if (sh) {
                num_ = num_.shifted(q_, sh);
                den_ = den_.shifted(q_, sh);
            }
        } else {
            Rational lc = den_.leading().second;
            num_ *= 1 / lc;
            den_ *= 1 / lc;
        }
    }

    // coefficient list in q (exponents ≥ 0 after normalization) for q-only functions
    detail::UPoly num_upoly() const { return to_upoly(num_); }
    detail::UPoly den_upoly() const { return to_upoly(den_); }

private:
    struct raw_tag {};
    RationalFunction(LaurentPoly n, LaurentPoly d, std::size_t q, raw_tag)
        : num_(std::move(n)), den_(std::move(d)), q_(q) {}

    LaurentPoly num_, den_;
    std::size_t q_ = 0;

    detail::UPoly to_upoly(const LaurentPoly& p) const {
        detail::UPoly u;
        for (const auto& [e, c] : p.terms()) {
            int k = e.at(q_);
            if (k < 0) throw DomainError("negative q power in polynomial view");
            if (u.size() <= static_cast<std::size_t>(k)) u.resize(k + 1);
            u[k] = c;
        }
        return u;
    }
    LaurentPoly from_upoly(const detail::UPoly& u, std::size_t nv) const {
        LaurentPoly p(nv);
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] != 0) p += LaurentPoly::var(nv, q_, static_cast<int>(k)) * u[k];
        return p;
    }
};

inline RationalFunction constant_like(const RationalFunction& f, const Rational& c) {
    return RationalFunction::constant(f.nvars(), f.qvar(), c);
}

// ---------------------------------------------------------------------------
// Power series in one variable with explicit valuation and finite precision.
// Used for non-equivariant limits: u = 1 + ε along a one-parameter subgroup.
class LaurentSeries {
public:
    static constexpr int kExact = INT_MAX / 4;

    LaurentSeries() : val_(kExact) {}

    static LaurentSeries constant(const Rational& c, int prec) {
        LaurentSeries s;
        if (c == 0) return s;
        s.val_ = 0;
        s.c_.assign(prec, Rational(0));
        s.c_[0] = c;
        return s;
    }
    // c·(1+ε)^a to relative precision prec
    static LaurentSeries binomial(long a, int prec, const Rational& c = 1) {
        LaurentSeries s;
        if (c == 0) return s;
        s.val_ = 0;
        s.c_.resize(prec);
        Rational b = c;
        for (int k = 0; k < prec; ++k) {
            s.c_[k] = b;
            b *= Rational(a - k);
            b /= k + 1;
        }
        return s;
    }
    // 1 − (1+ε)^a, valuation 1 for a ≠ 0, relative precision prec
    static LaurentSeries one_minus_binomial(long a, int prec) {
        if (a == 0) throw DomainError("zero weight in an Euler factor");
        LaurentSeries s;
        s.val_ = 1;
        s.c_.resize(prec);
        Rational b = a;  // C(a,1)
        for (int k = 0; k < prec; ++k) {
            s.c_[k] = -b;
            b *= Rational(a - k - 1);
            b /= k + 2;
        }
        return s;
    }

    bool is_zero() const { return c_.empty(); }
    int valuation() const { return val_; }
    int abs_precision() const { return c_.empty() ? val_ : val_ + static_cast<int>(c_.size()); }
    int rel_precision() const { return static_cast<int>(c_.size()); }

    Rational coeff(int k) const {
        if (k >= abs_precision()) throw ConsistencyError("series-precision", "series coefficient beyond precision");
        if (k < val_) return 0;
        return c_[k - val_];
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_zero() && a.val_ == kExact) return b;
        if (b.is_zero() && b.val_ == kExact) return a;
        int ap = std::min(a.abs_precision(), b.abs_precision());
        int v = std::min(a.is_zero() ? ap : a.val_, b.is_zero() ? ap : b.val_);
        LaurentSeries r;
        r.val_ = v;
        if (ap <= v) {
            r.val_ = ap;
            return r;
        }
        r.c_.assign(ap - v, Rational(0));
        for (std::size_t i = 0; i < a.c_.size() && a.val_ + static_cast<int>(i) < ap; ++i) r.c_[a.val_ + i - v] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size() && b.val_ + static_cast<int>(i) < ap; ++i) r.c_[b.val_ + i - v] += b.c_[i];
        r.strip();
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        if (a.is_zero() || b.is_zero()) {
            long pa = a.is_zero() ? static_cast<long>(a.val_) + (b.is_zero() ? b.val_ : b.val_) : kExact;
            long pb = b.is_zero() ? static_cast<long>(b.val_) + (a.is_zero() ? a.val_ : a.val_) : kExact;
            r.val_ = static_cast<int>(std::min<long>({pa, pb, kExact}));
            return r;
        }
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        r.val_ = a.val_ + b.val_;
        r.c_.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.strip();
        return r;
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const Rational& c) {
        if (c == 0) return LaurentSeries();
        LaurentSeries r = a;
        for (auto& x : r.c_) x *= c;
        return r;
    }
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        if (b.is_zero()) throw DomainError("division by a series that vanishes to working precision");
        LaurentSeries r;
        if (a.is_zero()) {
            r.val_ = a.val_ == kExact ? kExact : a.val_ - b.val_;
            return r;
        }
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rational> inv(n);
        inv[0] = 1 / b.c_[0];
        for (std::size_t k = 1; k < n; ++k) {
            Rational s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += b.c_[j] * inv[k - j];
            inv[k] = -s * inv[0];
        }
        r.val_ = a.val_ - b.val_;
        r.c_.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * inv[j];
        }
        r.strip();
        return r;
    }
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

private:
    int val_;
    std::vector<Rational> c_;

    void strip() {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        if (k == c_.size()) {
            val_ += static_cast<int>(k);
            c_.clear();
            return;
        }
        if (k) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
            val_ += static_cast<int>(k);
        }
    }
};

inline LaurentSeries constant_like(const LaurentSeries& s, const Rational& c) {
    int p = s.rel_precision();
    if (p == 0) p = 1;
    return LaurentSeries::constant(c, p);
}

inline Rational constant_like(const Rational&, const Rational& c) { return c; }

// ---------------------------------------------------------------------------
// Residue calculus for q-only rational functions.

namespace detail {

// first `count` Taylor coefficients of a/b at 0 (b(0) ≠ 0)
inline std::vector<Rational> series_quotient(const UPoly& a, const UPoly& b, std::size_t count) {
    std::vector<Rational> r(count);
    Rational inv0 = 1 / b.at(0);
    for (std::size_t k = 0; k < count; ++k) {
        Rational s = k < a.size() ? a[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) s -= b[j] * r[k - j];
        r[k] = s * inv0;
    }
    return r;
}

// write p = q^v · p0 with p0(0) ≠ 0
inline int split_valuation(UPoly& p) {
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    p.erase(p.begin(), p.begin() + static_cast<long>(v));
    return static_cast<int>(v);
}

}  // namespace detail

// [Res_{q=0} + Res_{q=∞}] f dq/q
inline Rational residue_pair(const RationalFunction& f) {
    if (!f.is_univariate())
        throw UnsupportedInput("residue_pair needs a function of q alone; specialize the other variables first");
    if (f.is_zero()) return 0;
    auto a = f.num_upoly(), b = f.den_upoly();
    int va = detail::split_valuation(a), vb = detail::split_valuation(b);
    int s = va - vb;  // f = q^s a0/b0
    Rational r0 = 0;
    if (s <= 0) r0 = detail::series_quotient(a, b, static_cast<std::size_t>(-s) + 1).at(-s);
    // at ∞: f(1/w) = w^{-s + deg b0 - deg a0} · rev(a0)/rev(b0)
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    int t = -s - da + db;
    Rational rinf = 0;
    if (t <= 0) {
        detail::UPoly ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
        rinf = detail::series_quotient(ra, rb, static_cast<std::size_t>(-t) + 1).at(-t);
    }
    return r0 - rinf;
}

inline bool minimal_annihilator_check(const Rational& L, int n0) {
    if (L == 0) throw DomainError("minimal_annihilator_check needs L ≠ 0");
    if (n0 < 0) throw DomainError("n0 must be nonnegative");
    return n0 >= 1 && L == 1;
}

// Taylor coefficients at q = 0; coefficients stay in the Laurent ring of the other
// variables, so the lowest q-coefficient of the denominator must be a monomial.
inline std::vector<LaurentPoly> expand_at_zero(const RationalFunction& f, int order) {
    if (order < 0) throw DomainError("order must be nonnegative");
    std::size_t q = f.qvar(), nv = f.nvars();
    if (f.is_zero()) return std::vector<LaurentPoly>(order + 1, LaurentPoly(nv));
    int vn = f.num().min_degree(q), vd = f.den().min_degree(q);
    if (vn < vd) throw PoleError(vd - vn, "pole of order " + std::to_string(vd - vn) + " at q=0");
    LaurentPoly b0 = f.den().coefficient(q, vd);
    if (!b0.is_monomial())
        throw UnsupportedInput("lowest q-coefficient of the denominator is not a unit of the coefficient ring");
    LaurentPoly inv0 = b0.inverse_monomial();
    std::vector<LaurentPoly> r(order + 1, LaurentPoly(nv));
    int shift = vn - vd;
    int dmax = f.den().max_degree(q);
    for (int k = 0; k + shift <= order; ++k) {
        LaurentPoly s = f.num().coefficient(q, vn + k);
        for (int j = 1; j <= k && vd + j <= dmax; ++j) s -= f.den().coefficient(q, vd + j) * r[k - j + shift];
        r[k + shift] = s * inv0;
    }
    return r;
}

inline bool vanishes_at_infinity(const RationalFunction& f) {
    if (f.is_zero()) return true;
    return f.num_degree() < f.den_degree();
}

inline bool regular_at_zero(const RationalFunction& f) {
    if (f.is_zero()) return true;
    std::size_t q = f.qvar();
    int vn = f.num().min_degree(q), vd = f.den().min_degree(q);
    if (vn >= vd) return true;
    // a q-power in the denominator might still cancel against the other variables'
    // content only if it is removable; after normalization it is not.
    return false;
}

}  // namespace vgc
