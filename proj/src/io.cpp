#include "diffchar/io.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace diffchar {

namespace {

struct Token {
    enum Kind { ident, number, punct, end } kind;
    std::string text;
    std::size_t line, col;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n')
                advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::ident, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::number, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::string_view("{}[]();:,+-*/^'").find(c) != std::string_view::npos) {
            out.push_back({Token::punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool at_end() const { return peek().kind == Token::end; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }
    [[noreturn]] void fail(const std::string& msg) const { fail(peek(), msg); }

    bool accept(const char* p) {
        if (peek().kind == Token::punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const char* p) {
        if (!accept(p))
            fail(std::string("expected '") + p + "'" + (at_end() ? " before end of input" : " near '" + peek().text + "'"));
    }
    std::string expect_ident() {
        if (peek().kind != Token::ident)
            fail("expected identifier");
        return next().text;
    }
    std::vector<std::string> name_list() {
        std::vector<std::string> names;
        expect("[");
        if (!accept("]")) {
            do
                names.push_back(expect_ident());
            while (accept(","));
            expect("]");
        }
        return names;
    }

    // ------------------------------------------------------- expressions

    Poly expression(DiffRing& ring) {
        Poly acc = term(ring);
        for (;;) {
            if (accept("+"))
                acc += term(ring);
            else if (accept("-"))
                acc -= term(ring);
            else
                return acc;
        }
    }

private:
    Poly term(DiffRing& ring) {
        Poly acc = unary(ring);
        for (;;) {
            if (accept("*")) {
                acc *= unary(ring);
            } else if (peek().kind == Token::punct && peek().text == "/") {
                Token slash = next();
                Poly d = unary(ring);
                if (!d.is_constant() || d.is_zero())
                    fail(slash, "division is only allowed by a nonzero constant");
                acc /= d.constant_value();
            } else {
                return acc;
            }
        }
    }

    Poly unary(DiffRing& ring) {
        if (accept("-"))
            return -unary(ring);
        if (accept("+"))
            return unary(ring);
        return power(ring);
    }

    Poly power(DiffRing& ring) {
        Poly base = postfix(ring);
        if (accept("^")) {
            if (peek().kind != Token::number)
                fail("expected integer exponent");
            Token e = next();
            if (e.text.size() > 6)
                fail(e, "exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly postfix(DiffRing& ring) {
        Poly p = primary(ring);
        while (peek().kind == Token::punct && peek().text == "'") {
            Token prime = next();
            if (!ring.ordinary())
                fail(prime, "prime shorthand needs exactly one derivation");
            p = differentiate(ring, p, 0);
        }
        return p;
    }

    static Poly differentiate(DiffRing& ring, const Poly& f, std::size_t delta) {
        Poly r;
        for (VarId v : f.variables())
            r += f.derivative(v) * Poly::var(ring.derive(v, delta));
        return r;
    }

    Poly primary(DiffRing& ring) {
        const Token t = peek();
        if (t.kind == Token::number) {
            next();
            return Poly(Rational(mpz_class(t.text), mpz_class(1)));
        }
        if (t.kind == Token::ident) {
            next();
            const auto& spec = ring.spec();
            auto di = std::find(spec.derivations.begin(), spec.derivations.end(), t.text);
            if (di != spec.derivations.end()) {
                if (!accept("("))
                    fail(t, "derivation '" + t.text + "' must be applied as " + t.text + "(...)");
                Poly inner = expression(ring);
                expect(")");
                return differentiate(ring, inner, static_cast<std::size_t>(di - spec.derivations.begin()));
            }
            auto yi = std::find(spec.indeterminates.begin(), spec.indeterminates.end(), t.text);
            if (yi == spec.indeterminates.end())
                fail(t, "undeclared identifier '" + t.text + "'");
            return Poly::var(ring.indeterminate(static_cast<std::size_t>(yi - spec.indeterminates.begin())));
        }
        if (accept("(")) {
            Poly p = expression(ring);
            expect(")");
            return p;
        }
        fail(at_end() ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

struct Header {
    std::shared_ptr<DiffRing> ring;
    std::optional<Ranking> ranking;
};

void parse_ring_block(Parser& p, Header& h, const Token& kw) {
    if (h.ring)
        p.fail(kw, "duplicate ring block");
    RingSpec spec;
    bool have_d = false, have_y = false;
    p.expect("{");
    while (!p.accept("}")) {
        Token key = p.peek();
        std::string k = p.expect_ident();
        p.expect(":");
        auto names = p.name_list();
        p.expect(";");
        if (k == "derivations") {
            spec.derivations = std::move(names);
            have_d = true;
        } else if (k == "indeterminates") {
            spec.indeterminates = std::move(names);
            have_y = true;
        } else {
            p.fail(key, "unknown ring field '" + k + "'");
        }
    }
    if (!have_d || !have_y)
        p.fail(kw, "ring block needs derivations and indeterminates");
    try {
        h.ring = std::make_shared<DiffRing>(std::move(spec));
    } catch (const std::invalid_argument& e) {
        p.fail(kw, e.what());
    }
}

void parse_ranking_block(Parser& p, Header& h, const Token& kw) {
    if (!h.ring)
        p.fail(kw, "ranking block must follow the ring block");
    if (h.ranking)
        p.fail(kw, "duplicate ranking block");
    const auto& names = h.ring->spec().indeterminates;
    auto index_of = [&](const std::string& n, const Token& at) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
            p.fail(at, "undeclared identifier '" + n + "' in ranking");
        return static_cast<std::size_t>(it - names.begin());
    };
    auto block = [&]() {
        Token at = p.peek();
        std::vector<std::size_t> b;
        for (const auto& n : p.name_list())
            b.push_back(index_of(n, at));
        return b;
    };
    p.expect("{");
    Token kind_tok = p.peek();
    std::string kind = p.expect_ident();
    try {
        if (kind == "orderly") {
            if (p.accept(":"))
                h.ranking = Ranking::orderly(block());
            else
                h.ranking = Ranking::orderly(names.size());
        } else if (kind == "elimination") {
            p.expect(":");
            std::vector<std::vector<std::size_t>> blocks;
            do
                blocks.push_back(block());
            while (p.accept(","));
            h.ranking = Ranking::elimination(std::move(blocks));
        } else {
            p.fail(kind_tok, "unknown ranking kind '" + kind + "'");
        }
        std::size_t n = 0;
        for (const auto& b : h.ranking->blocks())
            n += b.size();
        if (n != names.size())
            throw std::invalid_argument("ranking blocks are not a partition of the indeterminates");
    } catch (const std::invalid_argument& e) {
        p.fail(kind_tok, e.what());
    }
    p.expect(";");
    p.expect("}");
}

RankedRing finish(Header& h) {
    if (!h.ranking)
        h.ranking = Ranking::orderly(h.ring->num_indeterminates());
    return RankedRing(h.ring, *h.ranking);
}

std::string monomial_text(const RankedRing& ctx, const Monomial& m) {
    std::vector<VarId> vars;
    for (const auto& [v, e] : m.entries())
        vars.push_back(v);
    std::string s;
    for (VarId v : ctx.sorted_desc(vars)) {
        if (!s.empty())
            s += "*";
        s += ctx.ring().name(v);
        if (auto e = m.degree(v); e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

// Appends one term; `first` controls whether a leading " + " is written.
void append_term(std::string& out, const RankedRing& ctx, const Term& t, bool first) {
    bool neg = t.coef.sign() < 0;
    Rational a = neg ? -t.coef : t.coef;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    std::string mono = monomial_text(ctx, t.mono);
    if (mono.empty())
        out += a.to_string();
    else if (a.is_one())
        out += mono;
    else
        out += a.to_string() + "*" + mono;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    Parser p(text);
    Header h;
    std::vector<Poly> system, system2;
    std::optional<Poly> probe;
    std::optional<int> bound;
    std::map<std::string, bool> seen;
    while (!p.at_end()) {
        Token kw = p.peek();
        std::string k = p.expect_ident();
        if (seen[k])
            p.fail(kw, "duplicate " + k + " block");
        seen[k] = true;
        if (k == "ring") {
            parse_ring_block(p, h, kw);
        } else if (k == "ranking") {
            parse_ranking_block(p, h, kw);
        } else if (k == "system" || k == "system2") {
            if (!h.ring)
                p.fail(kw, k + " block must follow the ring block");
            auto& dst = k == "system" ? system : system2;
            p.expect("{");
            while (!p.accept("}")) {
                dst.push_back(p.expression(*h.ring));
                p.expect(";");
            }
        } else if (k == "probe") {
            if (!h.ring)
                p.fail(kw, "probe block must follow the ring block");
            p.expect("{");
            probe = p.expression(*h.ring);
            p.expect(";");
            p.expect("}");
        } else if (k == "bound") {
            p.expect("{");
            bool neg = p.accept("-");
            if (p.peek().kind != Token::number || p.peek().text.size() > 9)
                p.fail("expected integer bound");
            int b = std::stoi(p.next().text);
            bound = neg ? -b : b;
            p.expect(";");
            p.expect("}");
        } else {
            p.fail(kw, "unknown block '" + k + "'");
        }
    }
    if (!h.ring)
        throw ParseError(1, 1, "missing ring block");
    return ProblemFile{finish(h), std::move(system), std::move(system2), std::move(probe), bound};
}

RankedRing parse_ring(std::string_view text) { return parse_problem(text).ctx; }

Poly parse_poly(const RankedRing& ctx, std::string_view text) {
    Parser p(text);
    Poly f = p.expression(ctx.ring());
    if (!p.at_end())
        p.fail("trailing input '" + p.peek().text + "'");
    return f;
}

std::string format_poly(const RankedRing& ctx, const Poly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : ctx.lex_terms(f)) {
        append_term(out, ctx, t, first);
        first = false;
    }
    return out;
}

std::string format_element(const RankedRing& ctx, const Poly& f) {
    if (f.is_constant())
        return format_poly(ctx, f);
    VarId u = ctx.leader(f);
    auto cs = f.coefficients(u);
    std::string out;
    bool first = true;
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Poly& c = cs[k];
        if (c.is_zero())
            continue;
        if (k == 0 || c.size() == 1) {
            for (const auto& t : ctx.lex_terms(c * Poly::var(u, static_cast<std::uint32_t>(k)))) {
                append_term(out, ctx, t, first);
                first = false;
            }
            continue;
        }
        if (!first)
            out += " + ";
        first = false;
        out += "(" + format_poly(ctx, c) + ")*" + ctx.ring().name(u);
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

nlohmann::json to_json(const RankedRing& ctx, const Poly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : ctx.lex_terms(f)) {
        nlohmann::json mono = nlohmann::json::array();
        std::vector<VarId> vars;
        for (const auto& [v, e] : t.mono.entries())
            vars.push_back(v);
        for (VarId v : ctx.sorted_desc(vars))
            mono.push_back({ctx.ring().name(v), t.mono.degree(v)});
        terms.push_back({t.coef.numerator().get_str(), t.coef.denominator().get_str(), mono});
    }
    return terms;
}

} // namespace diffchar
