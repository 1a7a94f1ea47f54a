#include "diffchar/poly.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>

namespace diffchar {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [v, e] : entries) {
        if (e == 0)
            continue;
        if (!e_.empty() && e_.back().first == v)
            e_.back().second += e;
        else
            e_.emplace_back(v, e);
    }
}

Monomial Monomial::var(VarId v, std::uint32_t exp) {
    Monomial m;
    if (exp)
        m.e_.emplace_back(v, exp);
    return m;
}

std::uint32_t Monomial::degree(VarId v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), Entry{v, 0});
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : e_)
        d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    auto j = other.e_.begin();
    for (const auto& [v, e] : e_) {
        while (j != other.e_.end() && j->first < v)
            ++j;
        if (j == other.e_.end() || j->first != v || j->second < e)
            return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial r;
    auto j = divisor.e_.begin();
    for (const auto& [v, e] : e_) {
        while (j != divisor.e_.end() && j->first < v)
            ++j;
        std::uint32_t d = (j != divisor.e_.end() && j->first == v) ? j->second : 0;
        if (e > d)
            r.e_.emplace_back(v, e - d);
    }
    return r;
}

Monomial Monomial::without(VarId v) const {
    Monomial r;
    for (const auto& entry : e_)
        if (entry.first != v)
            r.e_.push_back(entry);
    return r;
}

namespace {

template <class Pick>
Monomial merge_entries(const Monomial& a, const Monomial& b, Pick pick, bool keep_singletons) {
    std::vector<Monomial::Entry> out;
    auto i = a.entries().begin(), ie = a.entries().end();
    auto j = b.entries().begin(), je = b.entries().end();
    while (i != ie || j != je) {
        if (j == je || (i != ie && i->first < j->first)) {
            if (keep_singletons)
                out.push_back(*i);
            ++i;
        } else if (i == ie || j->first < i->first) {
            if (keep_singletons)
                out.push_back(*j);
            ++j;
        } else {
            out.emplace_back(i->first, pick(i->second, j->second));
            ++i;
            ++j;
        }
    }
    return Monomial(std::move(out));
}

} // namespace

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    return merge_entries(a, b, [](auto x, auto y) { return std::max(x, y); }, true);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    return merge_entries(a, b, [](auto x, auto y) { return std::min(x, y); }, false);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    return merge_entries(a, b, [](auto x, auto y) { return x + y; }, true);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto i = a.e_.rbegin(), j = b.e_.rbegin();
    for (; i != a.e_.rend() && j != b.e_.rend(); ++i, ++j) {
        if (i->first != j->first)
            return i->first <=> j->first;
        if (i->second != j->second)
            return i->second <=> j->second;
    }
    if (i != a.e_.rend())
        return std::strong_ordering::greater;
    if (j != b.e_.rend())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

namespace {

bool term_before(const Term& a, const Term& b) { return (a.mono <=> b.mono) > 0; }

std::vector<Term> merge_sum(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        std::strong_ordering c = std::strong_ordering::equal;
        if (i == a.end())
            c = std::strong_ordering::less;
        else if (j == b.end())
            c = std::strong_ordering::greater;
        else
            c = i->mono <=> j->mono;
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            out.push_back(negate_b ? Term{j->mono, -j->coef} : *j);
            ++j;
        } else {
            Rational s = negate_b ? i->coef - j->coef : i->coef + j->coef;
            if (!s.is_zero())
                out.push_back(Term{i->mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly::Poly(const Rational& c) {
    if (!c.is_zero())
        terms_.push_back(Term{Monomial(), c});
}

Poly Poly::var(VarId v, std::uint32_t exp) { return monomial(Monomial::var(v, exp), Rational(1)); }

Poly Poly::monomial(Monomial m, Rational c) {
    Poly p;
    if (!c.is_zero())
        p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coef.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

Rational Poly::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coef; }

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coef;
    return Rational(0);
}

std::uint32_t Poly::degree(VarId x) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree(x));
    return d;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.total_degree());
    return d;
}

bool Poly::contains(VarId x) const {
    return std::any_of(terms_.begin(), terms_.end(), [x](const Term& t) { return t.mono.contains(x); });
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vs;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.entries())
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<Poly> Poly::coefficients(VarId x) const {
    std::vector<std::vector<Term>> buckets(degree(x) + 1);
    for (const auto& t : terms_)
        buckets[t.mono.degree(x)].push_back(Term{t.mono.without(x), t.coef});
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(from_terms(std::move(b)));
    return out;
}

Poly Poly::coefficient(VarId x, std::uint32_t d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.degree(x) == d)
            out.push_back(Term{t.mono.without(x), t.coef});
    return from_terms(std::move(out));
}

Poly Poly::derivative(VarId x) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t d = t.mono.degree(x);
        if (d == 0)
            continue;
        std::vector<Monomial::Entry> es = t.mono.entries();
        for (auto& e : es)
            if (e.first == x)
                --e.second;
        out.push_back(Term{Monomial(std::move(es)), t.coef * Rational(static_cast<long>(d))});
    }
    return from_terms(std::move(out));
}

Poly Poly::substitute(VarId x, const Poly& value) const {
    auto cs = coefficients(x);
    Poly r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        r = r * value + *it;
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly result(1), base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n)
            base = base * base;
    }
    return result;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_)
        t.coef = -t.coef;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    terms_ = merge_sum(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    terms_ = merge_sum(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& c_in) {
    // c_in may be a coefficient of *this.
    const Rational c = c_in;
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coef *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c_in) {
    const Rational c = c_in;
    for (auto& t : terms_)
        t.coef /= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    if (a.is_constant())
        return b * a.terms_[0].coef;
    if (b.is_constant())
        return a * b.terms_[0].coef;
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
    return Poly::from_terms(std::move(prod));
}

std::string Poly::debug_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << t.coef;
        for (const auto& [v, e] : t.mono.entries()) {
            os << "*x" << v;
            if (e > 1)
                os << "^" << e;
        }
    }
    return os.str();
}

// ------------------------------------------------------ division and gcd

PseudoDivision pseudo_divide(const Poly& f, const Poly& g, VarId x) {
    const std::uint32_t dg = g.degree(x);
    if (dg == 0)
        throw NotADivisor("not a divisor in x");
    const Poly lc = g.coefficient(x, dg);
    PseudoDivision out;
    out.remainder = f;
    if (lc.is_constant()) {
        const Rational inv = Rational(1) / lc.constant_value();
        std::uint32_t dr;
        while (!out.remainder.is_zero() && (dr = out.remainder.degree(x)) >= dg) {
            Poly t = out.remainder.coefficient(x, dr) * Poly::var(x, dr - dg) * inv;
            out.quotient += t;
            out.remainder -= t * g;
        }
        return out;
    }
    std::uint32_t dr;
    while (!out.remainder.is_zero() && (dr = out.remainder.degree(x)) >= dg) {
        Poly t = out.remainder.coefficient(x, dr) * Poly::var(x, dr - dg);
        out.quotient = lc * out.quotient + t;
        out.remainder = lc * out.remainder - t * g;
        ++out.exponent;
    }
    return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (b.is_constant())
        return a / b.constant_value();
    const Term& lb = b.leading_term();
    Poly q, r = a;
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!lb.mono.divides(lr.mono))
            return std::nullopt;
        Poly t = Poly::monomial(lr.mono.quotient(lb.mono), lr.coef / lb.coef);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly monic(const Poly& f) {
    if (f.is_zero())
        return f;
    return f / f.leading_term().coef;
}

namespace {

// Image of f under v -> point[v] for every v != x, as coefficients by
// power of x.
std::vector<mpq_class> image_in(const Poly& f, VarId x, const std::map<VarId, mpq_class>& point) {
    std::vector<mpq_class> out(f.degree(x) + 1);
    for (const auto& t : f.terms()) {
        mpq_class c = t.coef.value();
        std::uint32_t d = 0;
        for (const auto& [v, e] : t.mono.entries()) {
            if (v == x) {
                d = e;
                continue;
            }
            const mpq_class& p = point.at(v);
            for (std::uint32_t k = 0; k < e; ++k)
                c *= p;
        }
        out[d] += c;
    }
    return out;
}

std::size_t univariate_gcd_degree(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && sgn(p.back()) == 0)
            p.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            mpq_class q = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] -= q * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// deg_x gcd(a, b) is at most the degree of the gcd of the images at a
// point where neither leading coefficient in x vanishes.
std::optional<std::size_t> gcd_degree_bound(const Poly& a, const Poly& b, VarId x, const std::vector<VarId>& vars,
                                            std::minstd_rand& rng) {
    std::uniform_int_distribution<long> pick(-1000, 1000);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<VarId, mpq_class> point;
        for (VarId v : vars)
            if (v != x)
                point[v] = pick(rng);
        auto ia = image_in(a, x, point), ib = image_in(b, x, point);
        if (sgn(ia.back()) == 0 || sgn(ib.back()) == 0)
            continue;
        return univariate_gcd_degree(std::move(ia), std::move(ib));
    }
    return std::nullopt;
}

Poly monomial_gcd_with(const Monomial& m, const Poly& f) {
    Monomial g = m;
    for (const auto& t : f.terms()) {
        g = Monomial::gcd(g, t.mono);
        if (g.is_one())
            break;
    }
    return Poly::monomial(g, Rational(1));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q)
        throw std::logic_error("gcd: inexact division " + a.debug_string() + " / " + b.debug_string());
    return *q;
}

Poly primitive_part_in(const Poly& f, VarId x) {
    if (f.is_zero())
        return f;
    return exact_quotient(f, content_in(f, x));
}

} // namespace

Poly content_in(const Poly& f, VarId x) {
    Poly g;
    for (const auto& c : f.coefficients(x)) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero())
        return monic(b);
    if (b.is_zero())
        return monic(a);
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    if (a == b)
        return monic(a);
    if (a.is_monomial())
        return monomial_gcd_with(a.leading_term().mono, b);
    if (b.is_monomial())
        return monomial_gcd_with(b.leading_term().mono, a);

    // A variable present in only one argument is absent from the gcd.
    const std::vector<VarId> va = a.variables(), vb = b.variables();
    for (VarId v : va)
        if (!std::binary_search(vb.begin(), vb.end(), v))
            return gcd(content_in(a, v), b);
    for (VarId v : vb)
        if (!std::binary_search(va.begin(), va.end(), v))
            return gcd(a, content_in(b, v));

    // Degree bounds from evaluation. A zero bound in x puts the gcd in
    // the contents; otherwise the remainder sequence runs in the variable
    // with the smallest bound.
    std::minstd_rand rng(0x5eed);
    VarId x = va.back();
    std::size_t best = SIZE_MAX;
    for (VarId v : va) {
        auto bound = gcd_degree_bound(a, b, v, va, rng);
        if (!bound)
            continue;
        if (*bound == 0)
            return gcd(content_in(a, v), content_in(b, v));
        if (*bound < best) {
            best = *bound;
            x = v;
        }
    }

    const Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
    const Poly c = gcd(ca, cb);
    if (pa.degree(x) < pb.degree(x))
        std::swap(pa, pb);
    while (!pb.is_zero()) {
        if (pb.degree(x) == 0) {
            pa = Poly(1);
            break;
        }
        Poly r = pseudo_divide(pa, pb, x).remainder;
        pa = std::move(pb);
        pb = primitive_part_in(r, x);
        if (!pb.is_zero())
            pb /= numeric_content(pb);
    }
    return monic(primitive_part_in(pa, x) * c);
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    return monic(exact_quotient(a * b, gcd(a, b)));
}

Rational numeric_content(const Poly& f) {
    if (f.is_zero())
        return Rational(1);
    mpz_class num = 0, den = 1;
    for (const auto& t : f.terms()) {
        mpz_class n = abs(t.coef.numerator());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coef.denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(num, den);
}

ContentSplit content_primitive(const Poly& f, const std::vector<VarId>& main_vars) {
    if (f.is_zero())
        return {Poly(), Poly()};
    // Group terms by their main-variable part; the groups are the
    // coefficients of f over the ring of the remaining variables.
    std::map<Monomial, std::vector<Term>> groups;
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Entry> main_part, rest;
        for (const auto& e : t.mono.entries()) {
            bool is_main = std::find(main_vars.begin(), main_vars.end(), e.first) != main_vars.end();
            (is_main ? main_part : rest).push_back(e);
        }
        groups[Monomial(std::move(main_part))].push_back(Term{Monomial(std::move(rest)), t.coef});
    }
    Poly g;
    for (auto& [m, ts] : groups) {
        g = gcd(g, Poly::from_terms(std::move(ts)));
        if (g.is_constant())
            break;
    }
    Poly prim = g.is_constant() ? f : exact_quotient(f, g);
    Rational nc = numeric_content(prim);
    return {g * nc, prim / nc};
}

} // namespace diffchar
