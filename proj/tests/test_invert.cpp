#include "diffchar/invert.hpp"
#include "diffchar/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace diffchar;

namespace {

RankedRing sqrt_t_ring() {
    return parse_ring("ring { derivations: [d]; indeterminates: [y, z, x, t]; }"
                      "ranking { elimination: [y],[z],[x],[t]; }");
}

TriangularSet set_of(const RankedRing& R, std::initializer_list<const char*> polys) {
    std::vector<Poly> v;
    for (const char* s : polys)
        v.push_back(parse_poly(R, s));
    return TriangularSet(R, v);
}

void expect_certified(const InvertResult& r, const Poly& f, const TriangularSet& A) {
    ASSERT_TRUE(r.invertible);
    EXPECT_FALSE(r.h.is_zero());
    for (VarId v : A.leaders())
        EXPECT_FALSE(r.h.contains(v));
    EXPECT_TRUE(full_remainder(f * r.g - r.h, A, false).remainder.is_zero());
}

} // namespace

TEST(Invert, SqrtTExample) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t"});
    Poly f = parse_poly(P, "z*x + 1");
    auto r = invert(f, A);
    ASSERT_TRUE(r.invertible);
    EXPECT_EQ(r.g, parse_poly(P, "z*x - 1"));
    EXPECT_EQ(r.h, parse_poly(P, "z^2*t - 1"));
    Poly w = Poly::var(r.w);
    EXPECT_EQ(r.P, w * w - 2 * w - parse_poly(P, "z^2*t - 1"));
    EXPECT_EQ(r.P.substitute(r.w, Poly(0)), parse_poly(P, "1 - z^2*t"));
    std::vector<Poly> gb = {r.P, parse_poly(P, "z*x + 1") - w, parse_poly(P, "x") * w - parse_poly(P, "x + z*t"),
                            parse_poly(P, "x^2 - t")};
    EXPECT_EQ(r.gb, gb);
    expect_certified(r, f, A);
}

TEST(Invert, TrivialAndSquareRoot) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t"});
    auto one = invert(Poly(1), A);
    EXPECT_TRUE(one.invertible);
    EXPECT_EQ(one.g, Poly(1));
    EXPECT_EQ(one.h, Poly(1));

    auto r = invert(parse_poly(P, "x"), A);
    ASSERT_TRUE(r.invertible);
    EXPECT_EQ(r.g, parse_poly(P, "x"));
    EXPECT_EQ(r.h, parse_poly(P, "t"));
}

TEST(Invert, NonInvertible) {
    auto P = sqrt_t_ring();
    auto r = invert(parse_poly(P, "x"), set_of(P, {"x^2"}));
    EXPECT_FALSE(r.invertible);
    EXPECT_TRUE(r.P.substitute(r.w, Poly(0)).is_zero());
    auto s = invert(parse_poly(P, "x"), set_of(P, {"x^2 - t*x"}));
    EXPECT_FALSE(s.invertible);
    // x * (x - t) ≡ 0: the witness g is a zero divisor.
    EXPECT_TRUE(full_remainder(parse_poly(P, "x") * s.g, set_of(P, {"x^2 - t*x"})).remainder.is_zero());
    auto z = invert(parse_poly(P, "z*x - z*t"), set_of(P, {"x^2 - t*x", "(z + 1)*y - x"}));
    EXPECT_FALSE(z.invertible);
}

TEST(Invert, WithNonConstantInitials) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t", "(z*x + 1)*y + 1"});
    Poly f = parse_poly(P, "y + x");
    auto r = invert(f, A);
    expect_certified(r, f, A);
}

TEST(InvertProperty, IdentityOnRandomInputs) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t", "(z*x + 1)*y + 1"});
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> c(-2, 2), e(0, 1);
    const char* names[] = {"y", "x", "z", "t"};
    int inv = 0;
    for (int i = 0; i < 30; ++i) {
        Poly f;
        for (int k = 0; k < 3; ++k) {
            Poly term(c(rng));
            for (const char* n : names)
                if (e(rng))
                    term *= parse_poly(P, n);
            f += term;
        }
        f = full_remainder(f, A, false).remainder;
        if (f.is_zero())
            continue;
        auto r = invert(f, A);
        if (r.invertible) {
            expect_certified(r, f, A);
            ++inv;
        } else {
            EXPECT_TRUE(r.P.substitute(r.w, Poly(0)).is_zero());
        }
    }
    EXPECT_GT(inv, 10);
}

TEST(InvertProperty, Multiplicative) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t*x"});
    std::vector<Poly> fs = {parse_poly(P, "x"), parse_poly(P, "x - t"), parse_poly(P, "x + 1"),
                            parse_poly(P, "z*x + t"), parse_poly(P, "z")};
    for (const auto& f : fs)
        for (const auto& g : fs) {
            Poly fg = full_remainder(f * g, A, false).remainder;
            bool both = invert(f, A).invertible && invert(g, A).invertible;
            EXPECT_EQ(fg.is_zero() ? false : invert(fg, A).invertible, both);
        }
}

TEST(InvertProperty, IndependentOfFreshVariable) {
    auto P = sqrt_t_ring();
    auto A = set_of(P, {"x^2 - t"});
    Poly f = parse_poly(P, "z*x + 1");
    auto a = invert(f, A);
    VarId other = P.ring().auxiliary("w_other");
    auto b = invert(f, A, other);
    EXPECT_EQ(a.g, b.g);
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.P.substitute(a.w, Poly::var(other)), b.P);
}

TEST(Invert, LowerElementWithContent) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [y, x, a, b]; }"
                        "ranking { elimination: [y],[x],[a],[b]; }");
    auto A = set_of(R, {"12*b*(a - 1)*(x^2 + 3*x - a*b)"});
    Poly f = parse_poly(R, "x*a*b + 3/2*x*b^2 + 2*a^2*b^2 + 3*a*b^3");
    auto r = invert(f, A);
    expect_certified(r, f, A);
    // Minimal polynomial of f over Q(a, b)[x]/(x^2 + 3x - ab), from the
    // resultant in x.
    Poly w = Poly::var(r.w);
    Poly expected = w * w + parse_poly(R, "-4*a^2*b^2 - 6*a*b^3 + 3*a*b + 9/2*b^2") * w +
                    parse_poly(R, "4*a^4*b^4 + 12*a^3*b^5 - 7*a^3*b^3 + 9*a^2*b^6 - 21*a^2*b^4 - 63/4*a*b^5");
    EXPECT_EQ(r.P, expected);
}

TEST(Invert, FreshVariableNamedLikeIndeterminate) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [u, v, w]; } ranking { orderly; }");
    auto A = set_of(R, {"v^2 - w"});
    auto r = invert(parse_poly(R, "v + 1"), A);
    ASSERT_TRUE(r.invertible);
    EXPECT_NE(R.ring().name(r.w), "w");
    EXPECT_NE(r.w, R.ring().indeterminate(2));
}
