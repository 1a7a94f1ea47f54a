#include "diffchar/rational.hpp"
#include "diffchar/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace diffchar {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s), mpz_class(1));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::optional<std::size_t> max_steps_from_env() {
    const char* raw = std::getenv("DIFFCHAR_MAX_STEPS");
    if (!raw || !*raw)
        return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        return std::nullopt;
    return static_cast<std::size_t>(v);
}

} // namespace diffchar
