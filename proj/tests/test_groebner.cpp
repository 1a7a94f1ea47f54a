#include "diffchar/groebner.hpp"
#include "diffchar/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace diffchar;

namespace {

struct SqrtT {
    RankedRing R = parse_ring("ring { derivations: [d]; indeterminates: [y, z, x, t]; }"
                              "ranking { elimination: [y],[z],[x],[t]; }");
    VarId y = R.ring().indeterminate(0), z = R.ring().indeterminate(1), x = R.ring().indeterminate(2),
          t = R.ring().indeterminate(3), w = R.ring().auxiliary("w");
    Poly P(const char* s) const { return parse_poly(R, s); }
    Poly W() const { return Poly::var(w); }
};

// Lex order y > z > x > t on the y, z, x, t ring.
MonomialOrder sqrt_t_order(const SqrtT& p) { return MonomialOrder({p.y, p.z, p.x, p.t}); }

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& ord) {
    auto ga = groebner_basis(a, ord), gb = groebner_basis(b, ord);
    return ga == gb;
}

} // namespace

TEST(Groebner, SinglePolynomialIsNormalized) {
    SqrtT p;
    auto g = groebner_basis({p.P("3*x^2 - 3*t")}, sqrt_t_order(p));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0], p.P("x^2 - t"));
}

TEST(Groebner, UnitAndZeroIdeal) {
    SqrtT p;
    auto g = groebner_basis({p.P("x"), p.P("x + 1")}, sqrt_t_order(p));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0], Poly(1));
    EXPECT_TRUE(groebner_basis({Poly(0)}, sqrt_t_order(p)).empty());
}

TEST(Groebner, InvertTraceBasis) {
    SqrtT p;
    MonomialOrder ord({p.x, p.w, p.z, p.t});
    auto g = groebner_basis({p.P("x^2 - t"), p.W() - p.P("z*x + 1")}, ord);
    std::vector<Poly> expected = {p.W() * p.W() - 2 * p.W() - p.P("z^2*t - 1"), p.P("z*x + 1") - p.W(),
                                  p.P("x") * p.W() - p.P("x + z*t"), p.P("x^2 - t")};
    EXPECT_EQ(g, expected);
    EXPECT_TRUE(audit(g, ord));
    auto e = eliminate(g, ord, {p.w, p.z, p.t});
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], expected[0]);
    EXPECT_THROW(eliminate(g, ord, {p.x, p.z, p.t}), std::invalid_argument);
}

TEST(Groebner, ReduceBasis) {
    SqrtT p;
    auto ord = sqrt_t_order(p);
    auto r = reduce_basis({p.P("x^2 - t"), p.P("2*x^2 - 2*t")}, ord);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0], p.P("x^2 - t"));
}

TEST(Groebner, FractionCoefficientBasisIsAlreadyReduced) {
    SqrtT p;
    MonomialOrder L({p.y, p.x});
    // y + (zx - 1)/(z^2 t - 1) over k(z,t)
    FracCoefPoly a = to_frac(p.P("y"), L);
    FracCoefPoly a_tail = to_frac(p.P("z*x - 1"), L);
    for (auto& term : a_tail.terms)
        term.coef = term.coef / RationalFunction(p.P("z^2*t - 1"));
    a.terms.insert(a.terms.end(), a_tail.terms.begin(), a_tail.terms.end());
    FracCoefPoly b = to_frac(p.P("x^2 - t"), L);
    auto g = groebner_basis(std::vector<FracCoefPoly>{a, b}, L);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], b);
    EXPECT_EQ(g[1], a);
    EXPECT_TRUE(audit(g, L));
}

TEST(Groebner, EliminationExamples) {
    SqrtT p;
    MonomialOrder ord({p.y, p.x});
    EXPECT_TRUE(eliminate(groebner_basis({p.P("y")}, ord), ord, {p.x}).empty());
    MonomialOrder zxy({p.z, p.x, p.y});
    auto g = groebner_basis({p.P("x - z"), p.P("y - z")}, zxy);
    auto e = eliminate(g, zxy, {p.x, p.y});
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], p.P("x - y"));
}

TEST(Groebner, SaturationMembership) {
    SqrtT p;
    std::vector<Poly> G = {p.P("z*x + t"), p.P("z*y + t")};
    EXPECT_TRUE(saturation_membership(p.P("x - y"), G, {p.P("z")}));
    EXPECT_FALSE(saturation_membership(p.P("z"), G, {p.P("z")}));
    EXPECT_FALSE(saturation_membership(p.P("x - y"), G, {}));
    Poly f = p.P("x^2*z - t*y + 1");
    EXPECT_TRUE(saturation_membership(f, {f}, {p.P("x*t + 2")}));
}

TEST(Groebner, IdealIntersection) {
    SqrtT p;
    MonomialOrder X({p.x});
    auto j = ideal_intersection({to_frac(p.P("x"), X)}, {to_frac(p.P("x + 1"), X)}, X);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0].to_poly(), p.P("x^2 + x"));

    MonomialOrder L({p.x, p.y});
    auto J = groebner_basis_frac({p.P("y^2 + z"), p.P("x + y")}, L);
    EXPECT_EQ(ideal_intersection(J, J, L), J);

    auto J2 = groebner_basis_frac({p.P("y^2 + z"), p.P("x^2 + y")}, L);
    auto I = ideal_intersection(J, J2, L);
    EXPECT_TRUE(audit(I, L));
    auto expected = groebner_basis_frac({p.P("y^2 + z"), p.P("x^3 + x^2*y + x*y - z")}, L);
    EXPECT_EQ(I, expected);
}

TEST(RationalFunction, StaysInLowestTerms) {
    SqrtT p;
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<Poly> pool = {p.P("z"), p.P("t + 1"), p.P("z*t - 1"), p.P("z^2 + t"), Poly(2), p.P("t")};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 150; ++i) {
        RationalFunction a(pool[pick(rng)] * c(rng) + pool[pick(rng)], pool[pick(rng)] * pool[pick(rng)]);
        RationalFunction b(pool[pick(rng)] + c(rng), pool[pick(rng)]);
        for (const auto& r : {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
            EXPECT_EQ(gcd(r.num(), r.den()), Poly(1));
            EXPECT_TRUE(r.den().leading_term().coef.is_one());
        }
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero())
            EXPECT_EQ((a / b) * b, a);
    }
}

TEST(GroebnerProperty, PermutationIndependenceAndIdempotence) {
    SqrtT p;
    auto ord = sqrt_t_order(p);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-2, 2), e(0, 2), n(2, 3);
    const VarId vars[] = {p.y, p.x, p.t};
    for (int i = 0; i < 25; ++i) {
        std::vector<Poly> gens;
        int m = n(rng);
        for (int k = 0; k < m; ++k) {
            Poly f;
            for (int s = 0; s < 3; ++s) {
                Poly term(c(rng));
                for (VarId v : vars)
                    term *= Poly::var(v, e(rng));
                f += term;
            }
            gens.push_back(f);
        }
        auto g = groebner_basis(gens, ord);
        EXPECT_TRUE(audit(g, ord));
        EXPECT_EQ(reduce_basis(g, ord), g);
        EXPECT_EQ(groebner_basis(g, ord), g);
        std::reverse(gens.begin(), gens.end());
        EXPECT_EQ(groebner_basis(gens, ord), g);
        for (const auto& f : gens)
            EXPECT_TRUE(normal_form(f, g, ord).is_zero());
        EXPECT_TRUE(same_ideal(g, gens, ord));
    }
}
