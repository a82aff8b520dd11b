#include <gtest/gtest.h>

#include <random>

#include "vgc/exact_ring.hpp"

using namespace vgc;

namespace {

LaurentPoly Q(int k = 1) { return LaurentPoly::var(1, 0, k); }
LaurentPoly C(const Rational& c) { return LaurentPoly::constant(1, c); }
RationalFunction rf(const LaurentPoly& n, const LaurentPoly& d) { return RationalFunction(n, d, 0); }

// Σ over finite nonzero simple poles of f dq/q, negated: the total-residue oracle.
Rational partial_fraction_oracle(const std::vector<Rational>& num_coeffs, const std::vector<Rational>& roots) {
    Rational s = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Rational r = roots[i], p = 0, pw = 1;
        for (const auto& c : num_coeffs) {
            p += c * pw;
            pw *= r;
        }
        Rational den = r;
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != i) den *= r - roots[j];
        s += p / den;
    }
    return -s;
}

}  // namespace

TEST(Rational, ReducedForm) {
    Rational r = rat(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(rpow(rat(2, 3), -2), rat(9, 4));
}

TEST(LaurentPoly, RingAxiomsOnRandomTriples) {
    std::mt19937_64 g(7);
    auto rnd = [&] {
        LaurentPoly p(3);
        for (int k = 0; k < 4; ++k) {
            LaurentPoly::Exp e{int(g() % 5) - 2, int(g() % 5) - 2, int(g() % 5) - 2};
            p += LaurentPoly::monomial(e, rat(long(g() % 11) - 5, long(g() % 4) + 1));
        }
        return p;
    };
    for (int t = 0; t < 50; ++t) {
        auto a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(LaurentPoly, ExactDivision) {
    LaurentPoly x = LaurentPoly::var(2, 0), y = LaurentPoly::var(2, 1), one = LaurentPoly::constant(2, 1);
    auto a = (x - y) * (x + y * y) * (one - x * y.inverse_monomial());
    auto q = LaurentPoly::divide_exact(a, x - y);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q * (x - y), a);
    EXPECT_FALSE(LaurentPoly::divide_exact(x * x + one, x - y));
}

TEST(Residue, SimplePoleScalarIdentity) {
    std::vector<Rational> vals{1, -1, 2, -2, 3, -3, rat(1, 2)};
    for (const auto& E : vals)
        for (const auto& L : vals) EXPECT_EQ(residue_pair(rf(C(E), Q() - C(L))), -E / L);
}

TEST(Residue, Examples) {
    EXPECT_EQ(residue_pair(rf(C(3), Q() - C(2))), rat(-3, 2));
    EXPECT_EQ(residue_pair(rf(C(5) + Q() * C(2) + C(7) * Q(-1), C(1))), 0);
    EXPECT_EQ(residue_pair(rf(Q(), (C(1) + Q()) * (Q() - C(3)))), 0);
}

TEST(Residue, LaurentPolynomialsVanish) {
    std::mt19937_64 g(11);
    for (int t = 0; t < 200; ++t) {
        LaurentPoly p(1);
        for (int k = -3; k <= 3; ++k) p += C(rat(long(g() % 21) - 10, long(g() % 5) + 1)) * Q(k);
        EXPECT_EQ(residue_pair(rf(p, C(1))), 0);
    }
}

TEST(Residue, PartialFractionOracle) {
    std::mt19937_64 g(3);
    for (int t = 0; t < 100; ++t) {
        int k = 1 + int(g() % 4);
        std::vector<Rational> roots;
        while ((int)roots.size() < k) {
            Rational r = rat(long(g() % 13) - 6, long(g() % 3) + 1);
            if (r != 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        std::vector<Rational> nc;
        LaurentPoly num(1), den = C(1);
        for (int j = 0; j < k; ++j) {
            nc.push_back(rat(long(g() % 9) - 4));
            num += C(nc.back()) * Q(j);
        }
        for (const auto& r : roots) den = den * (Q() - C(r));
        EXPECT_EQ(residue_pair(rf(num, den)), partial_fraction_oracle(nc, roots));
    }
}

TEST(Residue, RegularTimesGeometricFactorVanishes) {
    // f regular at 0, vanishing at ∞: f/(1 − L/q) = q f/(q − L)
    for (int L : {-3, -1, 2, 5}) {
        auto f = rf(C(1) + Q(), (Q() - C(4)) * (Q() + C(7)) * (Q() - C(rat(1, 2))));
        auto g = f * rf(Q(), Q() - C(L));
        EXPECT_EQ(residue_pair(g), 0);
    }
}

TEST(Residue, MultivariateIsUnsupported) {
    LaurentPoly t = LaurentPoly::var(2, 0), q = LaurentPoly::var(2, 1);
    EXPECT_THROW(residue_pair(RationalFunction(LaurentPoly::constant(2, 1), q - t, 1)), UnsupportedInput);
}

TEST(MinimalAnnihilator, Examples) {
    EXPECT_TRUE(minimal_annihilator_check(1, 1));
    EXPECT_FALSE(minimal_annihilator_check(2, 5));
    EXPECT_FALSE(minimal_annihilator_check(1, 0));
    EXPECT_THROW(minimal_annihilator_check(0, 1), DomainError);
}

TEST(ExpandAtZero, Examples) {
    auto a = expand_at_zero(rf(C(1), C(1) - Q()), 2);
    ASSERT_EQ(a.size(), 3u);
    for (auto& c : a) EXPECT_EQ(c, C(1));
    auto b = expand_at_zero(rf(Q(), Q() - C(3)), 1);
    EXPECT_EQ(b[0], LaurentPoly(1));
    EXPECT_EQ(b[1], C(rat(-1, 3)));
    try {
        expand_at_zero(rf(C(1), Q()), 3);
        FAIL();
    } catch (const PoleError& e) {
        EXPECT_EQ(e.order, 1);
    }
}

TEST(ExpandAtZero, GeometricSeriesOracle) {
    // 1/(1 − c q)^2 = Σ (k+1) c^k q^k
    Rational c = rat(-2, 5);
    auto s = expand_at_zero(rf(C(1), (C(1) - C(c) * Q()) * (C(1) - C(c) * Q())), 6);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(s[k], C((k + 1) * rpow(c, k)));
}

TEST(Infinity, Examples) {
    EXPECT_TRUE(vanishes_at_infinity(rf(Q(), Q(2) + C(1))));
    EXPECT_FALSE(vanishes_at_infinity(rf(Q(2) + C(1), Q(2))));
    EXPECT_FALSE(vanishes_at_infinity(rf(Q(), Q() - C(3))));
    EXPECT_TRUE(regular_at_zero(rf(Q(), Q() - C(3))));
    EXPECT_FALSE(regular_at_zero(rf(C(1), Q(2) - Q())));
}

TEST(RationalFunction, NormalizationIsIdempotentAndCancels) {
    auto f = rf((Q() - C(1)) * (Q() + C(2)), (Q() - C(1)) * (Q(2) + C(3)) * C(4));
    RationalFunction g(f.num(), f.den(), 0);
    EXPECT_EQ(g.num(), f.num());
    EXPECT_EQ(g.den(), f.den());
    EXPECT_EQ(f.den_degree(), 2);
    EXPECT_EQ(f, rf(Q() + C(2), (Q(2) + C(3)) * C(4)));
}

TEST(LaurentSeries, BinomialArithmetic) {
    int p = 6;
    auto a = LaurentSeries::binomial(3, p), b = LaurentSeries::binomial(-3, p);
    auto one = a * b;
    EXPECT_EQ(one.coeff(0), 1);
    for (int k = 1; k < p; ++k) EXPECT_EQ(one.coeff(k), 0);
    // (1 − (1+ε)^2)/(1 − (1+ε)) = 2 + ε
    auto r = LaurentSeries::one_minus_binomial(2, p) / LaurentSeries::one_minus_binomial(1, p);
    EXPECT_EQ(r.valuation(), 0);
    EXPECT_EQ(r.coeff(0), 2);
    EXPECT_EQ(r.coeff(1), 1);
    EXPECT_EQ(r.coeff(2), 0);
}

TEST(UPolyGcd, MatchesTextbookEuclidOverQ) {
    using detail::UPoly;
    auto euclid = [](UPoly a, UPoly b) {
        detail::trim(a);
        detail::trim(b);
        while (!b.empty()) {
            UPoly r = detail::upoly_rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
        return a;
    };
    auto mul = [](const UPoly& a, const UPoly& b) {
        UPoly r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::mt19937_64 g(71);
    auto rnd = [&](int deg) {
        UPoly p;
        for (int i = 0; i <= deg; ++i) p.push_back(rat(long(g() % 15) - 7, long(g() % 4) + 1));
        if (p.back() == 0) p.back() = 1;
        return p;
    };
    for (int t = 0; t < 150; ++t) {
        UPoly f = rnd(g() % 4), a = mul(f, rnd(g() % 5)), b = mul(f, rnd(g() % 5));
        if (t % 3 == 0) b = mul(b, f);
        EXPECT_EQ(detail::upoly_gcd(a, b), euclid(a, b)) << t;
    }
}
