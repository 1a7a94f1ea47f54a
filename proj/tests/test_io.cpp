#include "diffchar/errors.hpp"
#include "diffchar/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace diffchar;

namespace {

// Random polynomial with rational coefficients over the first few
// derivatives of every indeterminate.
Poly random_poly(std::mt19937& rng, RankedRing& R, std::size_t n_deriv) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), k(0, 2), e(0, 2), terms(1, 4);
    std::size_t l = R.ring().spec().indeterminates.size();
    Poly f;
    for (int t = terms(rng); t > 0; --t) {
        Poly m(Rational(num(rng), den(rng)));
        for (std::size_t y = 0; y < l; ++y) {
            Derivative d;
            for (std::size_t i = 0; i < n_deriv; ++i)
                d.theta.push_back(static_cast<std::uint32_t>(k(rng)));
            d.indet = y;
            m *= Poly::var(R.ring().id(d)).pow(static_cast<unsigned>(e(rng)));
        }
        f += m;
    }
    return f;
}

void expect_error_at(std::string_view text, std::size_t line, std::size_t column) {
    try {
        parse_problem(text);
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

} // namespace

TEST(Format, RoundTripOrdinary) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [u, v, w]; } ranking { orderly; }");
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(rng, R, 1);
        EXPECT_EQ(parse_poly(R, format_poly(R, f)), f) << format_poly(R, f);
        if (!f.is_constant())
            EXPECT_EQ(parse_poly(R, format_element(R, f)), f) << format_element(R, f);
    }
}

TEST(Format, RoundTripPartial) {
    auto R = parse_ring("ring { derivations: [d1, d2]; indeterminates: [u, v]; } ranking { orderly; }");
    std::mt19937 rng(6);
    for (int i = 0; i < 50; ++i) {
        Poly f = random_poly(rng, R, 2);
        EXPECT_EQ(parse_poly(R, format_poly(R, f)), f) << format_poly(R, f);
        if (!f.is_constant())
            EXPECT_EQ(parse_poly(R, format_element(R, f)), f) << format_element(R, f);
    }
}

TEST(Format, Examples) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [y, z, x, t]; }"
                        "ranking { elimination: [y],[z],[x],[t]; }");
    Poly f = parse_poly(R, "(z^2*t - 1)*y + z*x - 1");
    EXPECT_EQ(format_element(R, f), "(z^2*t - 1)*y + z*x - 1");
    EXPECT_EQ(format_poly(R, parse_poly(R, "x^2 - 1/2*t")), "x^2 - 1/2*t");
    EXPECT_EQ(format_poly(R, Poly()), "0");
}

TEST(Format, JsonKeepsExactRationals) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [y]; } ranking { orderly; }");
    Poly f = parse_poly(R, "123456789012345678901234567891/7*y'^2 - 1/3");
    auto j = to_json(R, f);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0][0], "123456789012345678901234567891");
    EXPECT_EQ(j[0][1], "7");
    EXPECT_EQ(j[0][2][0][0], "y'");
    EXPECT_EQ(j[0][2][0][1], 2);
    EXPECT_EQ(j[1][0], "-1");
    EXPECT_EQ(j[1][1], "3");
}

TEST(Parse, ProblemBlocks) {
    auto p = parse_problem("ring { derivations: [d]; indeterminates: [y, x]; }\n"
                           "ranking { elimination: [y], [x]; }\n"
                           "system { y'^2 + x; y; }\n"
                           "probe { y + 1; }\n");
    EXPECT_EQ(p.system.size(), 2u);
    ASSERT_TRUE(p.probe.has_value());
    EXPECT_EQ(*p.probe, parse_poly(p.ctx, "y + 1"));
    EXPECT_TRUE(p.ctx.compare(p.ctx.ring().indeterminate(0), p.ctx.ring().id(Derivative{{5}, 1})) > 0);
}

TEST(Parse, ErrorPositions) {
    expect_error_at("ring { derivations: [d]; indeterminates: [y]; }\n"
                    "system {\n"
                    "  y^2 + q;\n"
                    "}\n",
                    3, 9);
    expect_error_at("ring { derivations: [d]; indeterminates: [y]; }\n"
                    "system { y^2 + ; }\n",
                    2, 16);
    expect_error_at("system { y; }\n", 1, 1);
}

TEST(Parse, RejectsBadExponent) {
    auto R = parse_ring("ring { derivations: [d]; indeterminates: [y]; } ranking { orderly; }");
    EXPECT_THROW(parse_poly(R, "y^-1"), ParseError);
    EXPECT_THROW(parse_poly(R, "y / 0"), ParseError);
}
