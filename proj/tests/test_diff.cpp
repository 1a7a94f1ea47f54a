#include "diffchar/diff.hpp"
#include "diffchar/errors.hpp"
#include "diffchar/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace diffchar;

namespace {

RankedRing ordinary_orderly() {
    return parse_ring("ring { derivations: [d]; indeterminates: [y, x]; } ranking { orderly; }");
}

RankedRing sqrt_t_algebraic() {
    return parse_ring("ring { derivations: [d]; indeterminates: [y, z, x, t]; }"
                      "ranking { elimination: [y],[z],[x],[t]; }");
}

RankedRing partial_ring(const char* ranking) {
    return parse_ring(std::string("ring { derivations: [d1, d2]; indeterminates: [u, v, w]; } ranking { ") +
                      ranking + " }");
}

Derivative random_derivative(std::mt19937& rng, std::size_t n, std::size_t l) {
    std::uniform_int_distribution<std::uint32_t> k(0, 2);
    std::uniform_int_distribution<std::size_t> y(0, l - 1);
    Derivative d;
    for (std::size_t i = 0; i < n; ++i)
        d.theta.push_back(k(rng));
    d.indet = y(rng);
    return d;
}

} // namespace

TEST(Ranking, CompareExamples) {
    auto R = ordinary_orderly();
    auto& ring = R.ring();
    VarId y = ring.indeterminate(0), x = ring.indeterminate(1);
    VarId y2 = ring.derive(ring.derive(y, 0), 0), x1 = ring.derive(x, 0);
    EXPECT_TRUE(R.compare(y2, x1) > 0);
    EXPECT_TRUE(R.compare(y, y) == 0);

    auto E = parse_ring("ring { derivations: [d]; indeterminates: [y, x]; } ranking { elimination: [y],[x]; }");
    VarId ey = E.ring().indeterminate(0);
    VarId ex4 = E.ring().id(Derivative{{4}, 1});
    EXPECT_TRUE(E.compare(ex4, ey) < 0);
}

TEST(Ranking, RejectsNonPartition) {
    EXPECT_THROW(Ranking::elimination({{0}, {0}}), std::invalid_argument);
    EXPECT_THROW(Ranking::elimination({{0}, {}}), std::invalid_argument);
}

TEST(Ranking, AxiomsOnRandomTriples) {
    std::mt19937 rng(5);
    std::vector<Ranking> rankings = {Ranking::orderly(3), Ranking::orderly({2, 0, 1}),
                                     Ranking::elimination({{0}, {1}, {2}}), Ranking::elimination({{1, 2}, {0}})};
    for (const auto& r : rankings) {
        for (int i = 0; i < 500; ++i) {
            Derivative u = random_derivative(rng, 2, 3), v = random_derivative(rng, 2, 3),
                       w = random_derivative(rng, 2, 3);
            Derivative th = random_derivative(rng, 2, 3);
            auto apply = [&](Derivative d) {
                for (std::size_t k = 0; k < 2; ++k)
                    d.theta[k] += th.theta[k];
                return d;
            };
            EXPECT_TRUE(r.compare(apply(u), u) >= 0);
            if (r.compare(u, v) >= 0)
                EXPECT_TRUE(r.compare(apply(u), apply(v)) >= 0);
            EXPECT_TRUE(r.compare(u, v) == (0 <=> r.compare(v, u)));
            EXPECT_EQ(r.compare(u, v) == 0, u == v);
            if (r.compare(u, v) > 0 && r.compare(v, w) > 0)
                EXPECT_TRUE(r.compare(u, w) > 0);
            if (r.kind() == Ranking::Kind::orderly && u.order() > v.order())
                EXPECT_TRUE(r.compare(u, v) > 0);
        }
    }
}

TEST(Ranking, EliminationBlockDominance) {
    Ranking r = Ranking::elimination({{1}, {0, 2}});
    std::mt19937 rng(8);
    for (int i = 0; i < 300; ++i) {
        Derivative a = random_derivative(rng, 2, 3), b = random_derivative(rng, 2, 3);
        if (a.indet == 1 && b.indet != 1)
            EXPECT_TRUE(r.compare(a, b) > 0);
    }
}

TEST(Differentiate, Examples) {
    auto R = ordinary_orderly();
    Poly f = parse_poly(R, "y'^2 + y");
    EXPECT_EQ(R.differentiate(f, 0), parse_poly(R, "2*y'*y'' + y'"));
    EXPECT_TRUE(R.differentiate(Poly(7), 0).is_zero());
    auto P = sqrt_t_algebraic();
    EXPECT_EQ(P.differentiate(parse_poly(P, "x^2 - t"), 0), parse_poly(P, "2*x*x' - t'"));
}

TEST(Differentiate, PartialDerivationsCommute) {
    auto R = partial_ring("orderly;");
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
    for (int i = 0; i < 40; ++i) {
        Poly f;
        for (int k = 0; k < 3; ++k) {
            Poly term(c(rng));
            for (int m = 0; m < 2; ++m)
                term *= R.derivative_var(random_derivative(rng, 2, 3)).pow(e(rng));
            f += term;
        }
        EXPECT_EQ(R.differentiate(R.differentiate(f, 0), 1), R.differentiate(R.differentiate(f, 1), 0));
        EXPECT_EQ(R.apply(f, {1, 1}), R.differentiate(R.differentiate(f, 1), 0));
    }
}

TEST(Anatomy, Examples) {
    auto P = sqrt_t_algebraic();
    auto a = P.anatomy(parse_poly(P, "(z*x + 1)*y + 1"));
    EXPECT_EQ(P.ring().name(a.leader), "y");
    EXPECT_EQ(a.degree, 1u);
    EXPECT_EQ(a.initial, parse_poly(P, "z*x + 1"));
    EXPECT_EQ(a.separant, parse_poly(P, "z*x + 1"));

    auto R = ordinary_orderly();
    auto b = R.anatomy(parse_poly(R, "y'^2 + y"));
    EXPECT_EQ(R.ring().name(b.leader), "y'");
    EXPECT_EQ(b.degree, 2u);
    EXPECT_EQ(b.initial, Poly(1));
    EXPECT_EQ(b.separant, parse_poly(R, "2*y'"));

    auto c = P.anatomy(parse_poly(P, "x^2 - t"));
    EXPECT_EQ(P.ring().name(c.leader), "x");
    EXPECT_EQ(c.degree, 2u);
    EXPECT_EQ(c.initial, Poly(1));
    EXPECT_EQ(c.separant, parse_poly(P, "2*x"));

    EXPECT_THROW(P.anatomy(Poly(3)), NoLeader);
}

TEST(Anatomy, InitialOfDerivativeIsSeparant) {
    auto R = partial_ring("elimination: [u],[v, w];");
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> c(-3, 3), e(1, 3);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        Poly f;
        for (int k = 0; k < 3; ++k)
            f += Poly(c(rng)) * R.derivative_var(random_derivative(rng, 2, 3)).pow(e(rng)) *
                 R.derivative_var(random_derivative(rng, 2, 3));
        if (f.is_constant())
            continue;
        auto a = R.anatomy(f);
        for (std::vector<std::uint32_t> th : {std::vector<std::uint32_t>{1, 0}, {0, 2}, {1, 1}}) {
            Poly g = R.apply(f, th);
            auto b = R.anatomy(g);
            EXPECT_EQ(b.initial, a.separant);
            EXPECT_EQ(b.degree, 1u);
            ++checked;
        }
        auto s = R.anatomy(f * Rational(-3));
        EXPECT_EQ(s.leader, a.leader);
        EXPECT_EQ(s.degree, a.degree);
        EXPECT_EQ(s.initial, a.initial * Rational(-3));
        EXPECT_EQ(s.separant, a.separant * Rational(-3));
    }
    EXPECT_GT(checked, 100);
}

TEST(Order, Examples) {
    auto R = ordinary_orderly();
    EXPECT_EQ(R.order_in(parse_poly(R, "y'^2 + y"), 0), 1);
    EXPECT_EQ(R.order_in(parse_poly(R, "x^2 - x'"), 0), -1);
    EXPECT_EQ(R.order_in(parse_poly(R, "2*y'*y'' + y'"), 0), 2);
    EXPECT_EQ(R.order(Poly()), kOrderOfZero);
    EXPECT_EQ(R.order(parse_poly(R, "x'''*y")), 3);
}

TEST(Names, PartialNesting) {
    auto R = partial_ring("orderly;");
    VarId v = R.ring().id(Derivative{{2, 1}, 0});
    EXPECT_EQ(R.ring().name(v), "d1(d1(d2(u)))");
    EXPECT_EQ(parse_poly(R, "d1(d1(d2(u)))"), Poly::var(v));
}

TEST(Registry, ConcurrentGetOrInsert) {
    auto R = partial_ring("orderly;");
    std::vector<std::thread> ts;
    std::vector<std::vector<VarId>> seen(4);
    for (int k = 0; k < 4; ++k)
        ts.emplace_back([&, k] {
            for (std::uint32_t a = 0; a < 6; ++a)
                for (std::uint32_t b = 0; b < 6; ++b)
                    seen[k].push_back(R.ring().id(Derivative{{a, b}, 2}));
        });
    for (auto& t : ts)
        t.join();
    for (int k = 1; k < 4; ++k)
        EXPECT_EQ(seen[k], seen[0]);
}
