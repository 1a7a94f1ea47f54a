#include "diffchar/groebner.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diffchar {

// ------------------------------------------------------------ MonomialOrder

MonomialOrder::MonomialOrder(std::vector<VarId> precedence) : prec_(std::move(precedence)) {
    for (std::size_t i = 0; i < prec_.size(); ++i)
        if (!index_.emplace(prec_[i], i).second)
            throw std::invalid_argument("variable repeated in monomial order");
}

std::size_t MonomialOrder::index(VarId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw std::invalid_argument("variable not in monomial order");
    return it->second;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (VarId v : prec_)
        if (auto c = a.degree(v) <=> b.degree(v); c != 0)
            return c;
    return std::strong_ordering::equal;
}

// --------------------------------------------------------- RationalFunction

namespace {

Poly exq(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q)
        throw std::logic_error("inexact division in rational function arithmetic");
    return *q;
}

} // namespace

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exq(num_, g);
            den_ = exq(den_, g);
        }
    }
    Rational lc = den_.leading_term().coef;
    if (!lc.is_one()) {
        num_ /= lc;
        den_ /= lc;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant())
            return RationalFunction(a.num_ + b.num_);
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    Poly g = gcd(a.den_, b.den_);
    Poly ab = exq(b.den_, g), ba = exq(a.den_, g);
    return RationalFunction(a.num_ * ab + b.num_ * ba, a.den_ * ab);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        return RationalFunction();
    if (a.den_.is_constant() && b.den_.is_constant())
        return RationalFunction(a.num_ * b.num_);
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = exq(a.num_, g1) * exq(b.num_, g2);
    r.den_ = exq(a.den_, g2) * exq(b.den_, g1);
    Rational lc = r.den_.leading_term().coef;
    if (!lc.is_one()) {
        r.num_ /= lc;
        r.den_ /= lc;
    }
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero rational function");
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    Rational lc = inv.den_.leading_term().coef;
    if (!lc.is_one()) {
        inv.num_ /= lc;
        inv.den_ /= lc;
    }
    return a * inv;
}

// ----------------------------------------------------------- engine

namespace {

using Exp = std::vector<std::uint32_t>;

template <class K>
struct GT {
    Exp e;
    K c;
};

template <class K>
using GP = std::vector<GT<K>>;

bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool coprime(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

bool is_const(const Exp& e) {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

bool is_one(const Rational& c) { return c.is_one(); }
bool is_one(const RationalFunction& c) { return c.is_one(); }

// f[from..] - c * x^s * g
template <class K>
GP<K> axpy(const GP<K>& f, std::size_t from, const K& c, const Exp& s, const GP<K>& g) {
    GP<K> out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    Exp shifted;
    auto shifted_exp = [&](std::size_t k) -> const Exp& {
        shifted = g[k].e;
        for (std::size_t v = 0; v < s.size(); ++v)
            shifted[v] += s[v];
        return shifted;
    };
    bool have = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !have) {
            shifted_exp(j);
            have = true;
        }
        if (j >= g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        if (i >= f.size()) {
            out.push_back(GT<K>{shifted, -(c * g[j].c)});
            ++j;
            have = false;
            continue;
        }
        auto cmp = f[i].e <=> shifted;
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back(GT<K>{shifted, -(c * g[j].c)});
            ++j;
            have = false;
        } else {
            K v = f[i].c - c * g[j].c;
            if (!v.is_zero())
                out.push_back(GT<K>{shifted, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return out;
}

template <class K>
GP<K> shift(const GP<K>& g, const Exp& s) {
    GP<K> out = g;
    for (auto& t : out)
        for (std::size_t v = 0; v < s.size(); ++v)
            t.e[v] += s[v];
    return out;
}

template <class K>
void make_monic(GP<K>& p) {
    if (p.empty() || is_one(p[0].c))
        return;
    K inv = K(1) / p[0].c;
    for (auto& t : p)
        t.c = t.c * inv;
}

template <class K>
GP<K> nf(GP<K> p, const std::vector<const GP<K>*>& G) {
    GP<K> r;
    std::size_t pos = 0;
    while (pos < p.size()) {
        const GP<K>* div = nullptr;
        for (const GP<K>* g : G)
            if (!g->empty() && divides((*g)[0].e, p[pos].e)) {
                div = g;
                break;
            }
        if (!div) {
            r.push_back(p[pos++]);
            continue;
        }
        K q = is_one((*div)[0].c) ? p[pos].c : p[pos].c / (*div)[0].c;
        Exp s = exp_sub(p[pos].e, (*div)[0].e);
        p = axpy(p, pos, q, s, *div);
        pos = 0;
    }
    return r;
}

template <class K>
std::vector<const GP<K>*> ptrs(const std::vector<GP<K>>& G) {
    std::vector<const GP<K>*> out;
    for (const auto& g : G)
        out.push_back(&g);
    return out;
}

template <class K>
GP<K> spoly(const GP<K>& a, const GP<K>& b) {
    Exp l = exp_lcm(a[0].e, b[0].e);
    K ca = K(1) / a[0].c, cb = K(1) / b[0].c;
    GP<K> sa = shift(a, exp_sub(l, a[0].e));
    for (auto& t : sa)
        t.c = t.c * ca;
    return axpy(sa, 0, cb, exp_sub(l, b[0].e), b);
}

template <class K>
std::vector<GP<K>> reduce_gp(std::vector<GP<K>> G) {
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j)
            if (i != j && keep[j] && divides(G[j][0].e, G[i][0].e) && (G[j][0].e != G[i][0].e || j < i))
                keep[i] = false;
    std::vector<GP<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i])
            minimal.push_back(std::move(G[i]));
    std::vector<GP<K>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const GP<K>*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(&minimal[j]);
        GP<K> r = nf(minimal[i], others);
        make_monic(r);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const GP<K>& a, const GP<K>& b) { return a[0].e < b[0].e; });
    return out;
}

std::atomic<bool> g_self_audit{false};
std::atomic<std::size_t> g_bases{0}, g_failures{0};

template <class K>
bool audit_gp(const std::vector<GP<K>>& G);

template <class K>
std::vector<GP<K>> buchberger(const std::vector<GP<K>>& input) {
    std::vector<GP<K>> G;
    for (const auto& f : input) {
        if (f.empty())
            continue;
        GP<K> g = f;
        make_monic(g);
        if (is_const(g[0].e))
            return {g};
        G.push_back(std::move(g));
    }
    if (G.empty())
        return {};

    // Sugar strategy: the pair of least sugar degree first, ties broken by
    // the smallest lcm. Lex orders make the plain smallest-lcm choice blow
    // up on elimination problems.
    auto deg = [](const Exp& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); };
    std::vector<std::uint64_t> sugar;
    for (const auto& g : G) {
        std::uint64_t d = 0;
        for (const auto& t : g)
            d = std::max(d, deg(t.e));
        sugar.push_back(d);
    }
    struct Pair {
        std::size_t i, j;
        Exp lcm;
        std::uint64_t sugar;
    };
    std::vector<Pair> B;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Exp l = exp_lcm(G[i][0].e, G[j][0].e);
            std::uint64_t dl = deg(l);
            std::uint64_t s = std::max(sugar[i] + dl - deg(G[i][0].e), sugar[j] + dl - deg(G[j][0].e));
            B.push_back(Pair{i, j, std::move(l), s});
            pending.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j)
        add_pairs(j);

    const auto limit = max_steps_from_env();
    std::size_t steps = 0;
    while (!B.empty()) {
        auto best = std::min_element(B.begin(), B.end(), [](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar)
                return a.sugar < b.sugar;
            if (a.lcm != b.lcm)
                return a.lcm < b.lcm;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair p = *best;
        B.erase(best);
        pending.erase({p.i, p.j});
        if (limit && ++steps > *limit)
            throw StepLimitExceeded("Groebner basis: pair limit " + std::to_string(*limit) + " exceeded");
        if (coprime(G[p.i][0].e, G[p.j][0].e))
            continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == p.i || k == p.j || !divides(G[k][0].e, p.lcm))
                continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
        }
        if (chain)
            continue;
        GP<K> r = nf(spoly(G[p.i], G[p.j]), ptrs(G));
        if (r.empty())
            continue;
        make_monic(r);
        if (is_const(r[0].e))
            return {r};
        G.push_back(std::move(r));
        sugar.push_back(p.sugar);
        add_pairs(G.size() - 1);
    }
    return reduce_gp(std::move(G));
}

// Self-audit hook, applied to every basis handed out by the public API.
// Bases with a tag variable are audited after the tag is eliminated.
template <class K>
std::vector<GP<K>> audited(std::vector<GP<K>> G) {
    if (g_self_audit.load()) {
        ++g_bases;
        if (!audit_gp(G))
            ++g_failures;
    }
    return G;
}

template <class K>
bool audit_gp(const std::vector<GP<K>>& G) {
    auto P = ptrs(G);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].empty() || !is_one(G[i][0].c))
            return false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& t : G[i])
                if (divides(G[j][0].e, t.e))
                    return false;
            if (j > i && !nf(spoly(G[i], G[j]), P).empty())
                return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ conversions

// `offset` leading slots are reserved for auxiliary variables above the order.
GP<Rational> to_gp_q(const Poly& f, const MonomialOrder& ord, std::size_t offset) {
    GP<Rational> out;
    for (const auto& t : f.terms()) {
        Exp e(offset + ord.size(), 0);
        for (const auto& [v, k] : t.mono.entries())
            e[offset + ord.index(v)] = k;
        out.push_back(GT<Rational>{std::move(e), t.coef});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.e > b.e; });
    return out;
}

Poly from_gp_q(const GP<Rational>& f, const MonomialOrder& ord, std::size_t offset) {
    std::vector<Term> ts;
    for (const auto& t : f) {
        std::vector<Monomial::Entry> es;
        for (std::size_t i = 0; i < ord.size(); ++i)
            if (t.e[offset + i])
                es.emplace_back(ord.precedence()[i], t.e[offset + i]);
        ts.push_back(Term{Monomial(std::move(es)), t.c});
    }
    return Poly::from_terms(std::move(ts));
}

GP<RationalFunction> to_gp_rf(const Poly& f, const MonomialOrder& ord, std::size_t offset) {
    std::map<Exp, std::vector<Term>, std::greater<>> groups;
    for (const auto& t : f.terms()) {
        Exp e(offset + ord.size(), 0);
        std::vector<Monomial::Entry> rest;
        for (const auto& [v, k] : t.mono.entries()) {
            if (ord.contains(v))
                e[offset + ord.index(v)] = k;
            else
                rest.emplace_back(v, k);
        }
        groups[std::move(e)].push_back(Term{Monomial(std::move(rest)), t.coef});
    }
    GP<RationalFunction> out;
    for (auto& [e, ts] : groups)
        out.push_back(GT<RationalFunction>{e, RationalFunction(Poly::from_terms(std::move(ts)))});
    return out;
}

GP<RationalFunction> to_gp_rf(const FracCoefPoly& f, const MonomialOrder& ord, std::size_t offset) {
    GP<RationalFunction> out;
    for (const auto& t : f.terms) {
        Exp e(offset + ord.size(), 0);
        for (const auto& [v, k] : t.mono.entries())
            e[offset + ord.index(v)] = k;
        out.push_back(GT<RationalFunction>{std::move(e), t.coef});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.e > b.e; });
    return out;
}

FracCoefPoly from_gp_rf(const GP<RationalFunction>& f, const MonomialOrder& ord, std::size_t offset) {
    FracCoefPoly out;
    for (const auto& t : f) {
        std::vector<Monomial::Entry> es;
        for (std::size_t i = 0; i < ord.size(); ++i)
            if (t.e[offset + i])
                es.emplace_back(ord.precedence()[i], t.e[offset + i]);
        out.terms.push_back(FracTerm{Monomial(std::move(es)), t.c});
    }
    return out;
}

template <class K>
GP<K> with_aux(GP<K> f, std::uint32_t power) {
    for (auto& t : f)
        t.e[0] += power;
    return f;
}

template <class K>
GP<K> aux_minus_one(const GP<K>& h) {
    // h * aux - 1
    GP<K> out = with_aux(h, 1);
    Exp one(h.empty() ? 0 : h[0].e.size(), 0);
    out.push_back(GT<K>{one, K(-1)});
    return out;
}

template <class K>
std::vector<GP<K>> aux_free(const std::vector<GP<K>>& G) {
    std::vector<GP<K>> out;
    for (const auto& g : G)
        if (std::all_of(g.begin(), g.end(), [](const GT<K>& t) { return t.e[0] == 0; }))
            out.push_back(g);
    return out;
}

Poly product(const std::vector<Poly>& H) {
    Poly h(1);
    for (const auto& f : H)
        h *= f;
    return h;
}

} // namespace

// ------------------------------------------------------------ public API

Poly FracCoefPoly::to_poly() const {
    Poly out;
    for (const auto& t : terms) {
        if (!(t.coef.den() == Poly(1)))
            throw std::logic_error("coefficient has a nontrivial denominator");
        out += t.coef.num() * Poly::monomial(t.mono, Rational(1));
    }
    return out;
}

std::string FracCoefPoly::debug_string() const {
    std::ostringstream os;
    if (terms.empty())
        return "0";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            os << " + ";
        os << "(" << terms[i].coef.num().debug_string() << ")/(" << terms[i].coef.den().debug_string() << ")*"
           << Poly::monomial(terms[i].mono, Rational(1)).debug_string();
    }
    return os.str();
}

FracCoefPoly to_frac(const Poly& f, const MonomialOrder& ord) { return from_gp_rf(to_gp_rf(f, ord, 0), ord, 0); }

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    std::vector<GP<Rational>> in;
    for (const auto& f : gens)
        in.push_back(to_gp_q(f, ord, 0));
    std::vector<Poly> out;
    for (const auto& g : audited(buchberger(in)))
        out.push_back(from_gp_q(g, ord, 0));
    return out;
}

std::vector<FracCoefPoly> groebner_basis(const std::vector<FracCoefPoly>& gens, const MonomialOrder& ord) {
    std::vector<GP<RationalFunction>> in;
    for (const auto& f : gens)
        in.push_back(to_gp_rf(f, ord, 0));
    std::vector<FracCoefPoly> out;
    for (const auto& g : audited(buchberger(in)))
        out.push_back(from_gp_rf(g, ord, 0));
    return out;
}

std::vector<FracCoefPoly> groebner_basis_frac(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    std::vector<FracCoefPoly> in;
    for (const auto& f : gens)
        in.push_back(to_frac(f, ord));
    return groebner_basis(in, ord);
}

std::vector<Poly> reduce_basis(const std::vector<Poly>& gb, const MonomialOrder& ord) {
    std::vector<GP<Rational>> in;
    for (const auto& f : gb)
        if (!f.is_zero())
            in.push_back(to_gp_q(f, ord, 0));
    std::vector<Poly> out;
    for (const auto& g : reduce_gp(std::move(in)))
        out.push_back(from_gp_q(g, ord, 0));
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb, const MonomialOrder& ord) {
    std::vector<GP<Rational>> G;
    for (const auto& g : gb)
        G.push_back(to_gp_q(g, ord, 0));
    return from_gp_q(nf(to_gp_q(f, ord, 0), ptrs(G)), ord, 0);
}

FracCoefPoly normal_form(const Poly& f, const std::vector<FracCoefPoly>& gb, const MonomialOrder& ord) {
    std::vector<GP<RationalFunction>> G;
    for (const auto& g : gb)
        G.push_back(to_gp_rf(g, ord, 0));
    return from_gp_rf(nf(to_gp_rf(f, ord, 0), ptrs(G)), ord, 0);
}

bool audit(const std::vector<Poly>& gb, const MonomialOrder& ord) {
    std::vector<GP<Rational>> G;
    for (const auto& g : gb)
        G.push_back(to_gp_q(g, ord, 0));
    return audit_gp(G);
}

bool audit(const std::vector<FracCoefPoly>& gb, const MonomialOrder& ord) {
    std::vector<GP<RationalFunction>> G;
    for (const auto& g : gb)
        G.push_back(to_gp_rf(g, ord, 0));
    return audit_gp(G);
}

std::vector<Poly> eliminate(const std::vector<Poly>& gb, const MonomialOrder& ord, const std::vector<VarId>& keep) {
    std::set<VarId> kept(keep.begin(), keep.end());
    std::size_t prefix = 0;
    while (prefix < ord.size() && !kept.count(ord.precedence()[prefix]))
        ++prefix;
    for (std::size_t i = prefix; i < ord.size(); ++i)
        if (!kept.count(ord.precedence()[i]))
            throw std::invalid_argument("monomial order does not eliminate the discarded variables");
    std::vector<Poly> out;
    for (const auto& g : gb) {
        auto vs = g.variables();
        if (std::all_of(vs.begin(), vs.end(), [&](VarId v) { return kept.count(v) != 0; }))
            out.push_back(g);
    }
    return out;
}

std::vector<Poly> saturate(const std::vector<Poly>& G, const std::vector<Poly>& H, const MonomialOrder& ord) {
    Poly h = product(H);
    if (h.is_zero())
        throw std::invalid_argument("saturation by zero");
    if (h.is_constant())
        return groebner_basis(G, ord);
    std::vector<GP<Rational>> in;
    for (const auto& g : G)
        in.push_back(to_gp_q(g, ord, 1));
    in.push_back(aux_minus_one(to_gp_q(h, ord, 1)));
    std::vector<Poly> out;
    for (const auto& g : audited(aux_free(buchberger(in))))
        out.push_back(from_gp_q(g, ord, 1));
    return out;
}

std::vector<FracCoefPoly> saturate_frac(const std::vector<Poly>& G, const std::vector<Poly>& H,
                                        const MonomialOrder& ord) {
    std::vector<GP<RationalFunction>> in;
    for (const auto& g : G)
        in.push_back(to_gp_rf(g, ord, 1));
    Poly h = product(H);
    if (h.is_zero())
        throw std::invalid_argument("saturation by zero");
    auto hv = h.variables();
    bool trivial = std::all_of(hv.begin(), hv.end(), [&](VarId v) { return !ord.contains(v); });
    std::vector<FracCoefPoly> out;
    if (trivial) {
        for (const auto& g : audited(buchberger(in)))
            out.push_back(from_gp_rf(g, ord, 1));
        return out;
    }
    in.push_back(aux_minus_one(to_gp_rf(h, ord, 1)));
    for (const auto& g : audited(aux_free(buchberger(in))))
        out.push_back(from_gp_rf(g, ord, 1));
    return out;
}

bool saturation_membership(const Poly& f, const std::vector<Poly>& G, const std::vector<Poly>& H) {
    std::set<VarId> vars;
    for (VarId v : f.variables())
        vars.insert(v);
    for (const auto* list : {&G, &H})
        for (const auto& g : *list)
            for (VarId v : g.variables())
                vars.insert(v);
    MonomialOrder ord(std::vector<VarId>(vars.rbegin(), vars.rend()));
    return normal_form(f, saturate(G, H, ord), ord).is_zero();
}

std::vector<FracCoefPoly> ideal_intersection(const std::vector<FracCoefPoly>& J1,
                                             const std::vector<FracCoefPoly>& J2, const MonomialOrder& ord) {
    std::vector<GP<RationalFunction>> in;
    for (const auto& f : J1)
        in.push_back(with_aux(to_gp_rf(f, ord, 1), 1));
    for (const auto& g : J2) {
        auto p = to_gp_rf(g, ord, 1);
        // (1 - s) g = g - s g; every term of s*g sorts above every term of g.
        auto sg = with_aux(p, 1);
        for (auto& t : sg)
            t.c = -t.c;
        sg.insert(sg.end(), p.begin(), p.end());
        in.push_back(std::move(sg));
    }
    std::vector<FracCoefPoly> out;
    for (const auto& g : audited(aux_free(buchberger(in))))
        out.push_back(from_gp_rf(g, ord, 1));
    return out;
}

void set_gb_self_audit(bool on) { g_self_audit.store(on); }

AuditCounters gb_audit_counters() { return AuditCounters{g_bases.load(), g_failures.load()}; }

} // namespace diffchar
