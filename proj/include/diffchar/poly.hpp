#pragma once

#include "diffchar/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diffchar {

using VarId = std::uint32_t;

// Power product over variable ids. Entries are kept sorted by id with
// no zero exponents, so the default equality is structural equality.
class Monomial {
public:
    using Entry = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    static Monomial var(VarId v, std::uint32_t exp = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    std::uint32_t degree(VarId v) const;
    std::uint64_t total_degree() const;
    bool contains(VarId v) const { return degree(v) != 0; }

    bool divides(const Monomial& other) const;
    // Precondition: divides(m).
    Monomial quotient(const Monomial& divisor) const;
    Monomial without(VarId v) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Lexicographic with the larger variable id more significant. This is
    // the canonical storage order of Poly; it is multiplicative.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Entry> e_;
};

struct Term {
    Monomial mono;
    Rational coef;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial with rational coefficients. Terms are
// stored in strictly decreasing Monomial order with nonzero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(const Rational& c);

    static Poly var(VarId v, std::uint32_t exp = 1);
    static Poly monomial(Monomial m, Rational c);
    // Sorts, merges like terms and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const;  // precondition: is_constant()
    Rational constant_term() const;
    const Term& leading_term() const { return terms_.front(); }

    std::uint32_t degree(VarId x) const;
    std::uint64_t total_degree() const;
    bool contains(VarId x) const;
    std::vector<VarId> variables() const;

    // Coefficients of f viewed as univariate in x; index is the power of x.
    std::vector<Poly> coefficients(VarId x) const;
    Poly coefficient(VarId x, std::uint32_t d) const;
    Poly leading_coefficient(VarId x) const { return coefficient(x, degree(x)); }

    Poly derivative(VarId x) const;
    Poly substitute(VarId x, const Poly& value) const;
    Poly pow(unsigned n) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
    friend Poly operator*(long c, Poly a) { return a *= Rational(c); }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    // Debug rendering with x<id> names in storage order.
    std::string debug_string() const;

private:
    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.debug_string(); }

struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    unsigned exponent = 0;
};

// lc_x(g)^e * f = q*g + r with deg_x r < deg_x g. When the leading
// coefficient is a rational constant it is divided out and e = 0.
PseudoDivision pseudo_divide(const Poly& f, const Poly& g, VarId x);

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Leading coefficient (storage order) scaled to 1; zero stays zero.
Poly monic(const Poly& f);

// Greatest common divisor via primitive remainder sequences, recursing on
// variables. Normalized with monic().
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

// gcd of the coefficients of f viewed as univariate in x.
Poly content_in(const Poly& f, VarId x);

// Positive rational c such that f/c has coprime integer coefficients.
Rational numeric_content(const Poly& f);

struct ContentSplit {
    Poly content;
    Poly primitive;
};

// Splits f = content * primitive where content is free of main_vars and
// primitive has no nonconstant factor free of main_vars. The numeric
// content is moved into `content`, so primitive has coprime integer
// coefficients.
ContentSplit content_primitive(const Poly& f, const std::vector<VarId>& main_vars);

} // namespace diffchar
