#include "diffchar/errors.hpp"
#include "diffchar/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace diffchar;

namespace {

// Ids chosen so that storage order agrees with y > z > x > t.
const VarId T = 0, X = 1, Z = 2, Y = 3;
const Poly t = Poly::var(T), x = Poly::var(X), z = Poly::var(Z), y = Poly::var(Y);

Poly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms), e(0, max_exp), c(-5, 5);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Monomial::Entry> es;
        for (VarId v : {T, X, Z, Y})
            es.emplace_back(v, e(rng));
        ts.push_back(Term{Monomial(es), Rational(c(rng))});
    }
    return Poly::from_terms(ts);
}

} // namespace

TEST(Rational, LowestTerms) {
    Rational r(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational::parse("-6/4"), r);
    EXPECT_TRUE(Rational::parse("0/7").is_zero());
    EXPECT_EQ(Rational::parse("0/7").denominator(), 1);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Poly, ArithmeticExamples) {
    EXPECT_EQ((x * x - t) + t, x * x);
    EXPECT_EQ((z * x + 1) * (z * x - 1), z * z * x * x - 1);
    EXPECT_TRUE(((x * x - t) * Poly(0)).is_zero());
}

TEST(Poly, StorageOrderIsLexInIds) {
    Poly f = t * t * t + x + y;
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f.terms()[0].mono, Monomial::var(Y));
    EXPECT_EQ(f.terms()[2].mono, Monomial::var(T, 3));
}

TEST(Poly, PseudoDivideExamples) {
    auto a = pseudo_divide(x * x, x * x - t, X);
    EXPECT_EQ(a.quotient, Poly(1));
    EXPECT_EQ(a.remainder, t);

    Poly g = (z * x + 1) * y + 1;
    auto b = pseudo_divide(y, g, Y);
    EXPECT_EQ(b.quotient, Poly(1));
    EXPECT_EQ(b.remainder, Poly(-1));
    EXPECT_EQ(b.exponent, 1u);
    EXPECT_EQ((z * x + 1) * y, b.quotient * g + b.remainder);

    auto c = pseudo_divide(Poly(1), x * x - t, X);
    EXPECT_TRUE(c.quotient.is_zero());
    EXPECT_EQ(c.remainder, Poly(1));
    EXPECT_EQ(c.exponent, 0u);

    EXPECT_THROW(pseudo_divide(x, t + 1, X), NotADivisor);
}

TEST(Poly, GcdExamples) {
    EXPECT_EQ(gcd(x * x - t, x * x - t), x * x - t);
    EXPECT_EQ(gcd(z * z * t - 1, z), Poly(1));
    EXPECT_EQ(gcd(Poly(0), 3 * x - 6), x - 2);
    EXPECT_EQ(gcd((x + 1) * (y - z), (x + 1) * (y + z)), x + 1);
    EXPECT_EQ(gcd(z * x * y, x * x * t), x);
}

TEST(Poly, ContentPrimitiveExamples) {
    Poly f = (z * z * t - 1) * y + z * x - 1;
    auto a = content_primitive(f, {Y, X});
    EXPECT_EQ(a.content, Poly(1));
    EXPECT_EQ(a.primitive, f);

    auto b = content_primitive(z * (y + 1), {Y});
    EXPECT_EQ(b.content, z);
    EXPECT_EQ(b.primitive, y + 1);

    auto c = content_primitive(2 * y, {Y});
    EXPECT_EQ(c.content, Poly(2));
    EXPECT_EQ(c.primitive, y);
}

TEST(Poly, ClearsRationalCoefficients) {
    Poly f = y / Rational(2) + Rational(mpz_class(1), mpz_class(3)) * t;
    auto s = content_primitive(f, {Y});
    EXPECT_EQ(s.primitive, 3 * y + 2 * t);
    EXPECT_EQ(s.content * s.primitive, f);
}

TEST(Poly, DerivativeAndSubstitute) {
    EXPECT_EQ((x * x * y + 3 * x).derivative(X), 2 * x * y + 3);
    EXPECT_EQ((x * x - t).substitute(X, z + 1), z * z + 2 * z + 1 - t);
    EXPECT_EQ((x + 1).pow(3), x * x * x + 3 * x * x + 3 * x + 1);
}

TEST(PolyProperty, RingAxioms) {
    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(PolyProperty, PseudoDivisionIdentity) {
    std::mt19937 rng(99);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Poly f = random_poly(rng), g = random_poly(rng, 3);
        for (VarId v : {T, X, Z, Y}) {
            if (g.degree(v) == 0)
                continue;
            auto pd = pseudo_divide(f, g, v);
            Poly lc = g.leading_coefficient(v);
            Poly lhs = lc.is_constant() ? f : lc.pow(pd.exponent) * f;
            EXPECT_EQ(lhs, pd.quotient * g + pd.remainder);
            if (!pd.remainder.is_zero())
                EXPECT_LT(pd.remainder.degree(v), g.degree(v));
            if (!lc.is_constant() && f.degree(v) >= g.degree(v))
                EXPECT_LE(pd.exponent, f.degree(v) - g.degree(v) + 1);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(PolyProperty, ContentPrimitiveFactorization) {
    std::mt19937 rng(7);
    for (int i = 0; i < 150; ++i) {
        Poly k = random_poly(rng, 2, 1).substitute(Y, Poly(2)).substitute(X, Poly(1));
        Poly f = random_poly(rng, 3) * (k.is_zero() ? Poly(1) : k);
        if (f.is_zero())
            continue;
        auto s = content_primitive(f, {Y, X});
        EXPECT_EQ(s.content * s.primitive, f);
        EXPECT_FALSE(s.content.contains(Y) || s.content.contains(X));
        auto again = content_primitive(s.primitive, {Y, X});
        EXPECT_EQ(again.primitive, s.primitive);
        EXPECT_EQ(again.content, Poly(1));
    }
}

TEST(PolyProperty, GcdDividesBoth) {
    std::mt19937 rng(31);
    for (int i = 0; i < 120; ++i) {
        Poly common = random_poly(rng, 2, 1);
        Poly a = random_poly(rng, 3) * common, b = random_poly(rng, 3) * common;
        Poly g = gcd(a, b);
        if (a.is_zero() && b.is_zero())
            continue;
        for (VarId v : g.variables()) {
            EXPECT_TRUE(pseudo_divide(a, g, v).remainder.is_zero());
            EXPECT_TRUE(pseudo_divide(b, g, v).remainder.is_zero());
        }
        EXPECT_TRUE(divide_exact(a, g).has_value());
        EXPECT_TRUE(divide_exact(b, g).has_value());
        if (!common.is_zero() && !a.is_zero() && !b.is_zero())
            EXPECT_TRUE(divide_exact(g, monic(common)).has_value())
                << g.debug_string() << " vs " << common.debug_string();
    }
}
