#include "diffchar/invert.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <set>

namespace diffchar {

InvertResult invert(const Poly& f, const TriangularSet& A, std::optional<VarId> fresh) {
    const RankedRing& ctx = A.ctx();
    InvertResult res;
    res.w = fresh ? *fresh : ctx.ring().auxiliary("w");
    if (f.is_zero())
        return res;
    if (f.is_constant()) {
        res.invertible = true;
        res.g = Poly(1);
        res.h = f;
        res.P = Poly::var(res.w) - f;
        return res;
    }

    std::vector<VarId> L = ctx.sorted_desc(A.leaders());
    std::set<VarId> rest;
    for (VarId v : f.variables())
        rest.insert(v);
    for (const auto& a : A.elements())
        for (VarId v : a.variables())
            rest.insert(v);
    for (VarId v : L)
        rest.erase(v);
    if (rest.count(res.w))
        throw std::invalid_argument("fresh variable already occurs in the input");
    std::vector<VarId> N = ctx.sorted_desc(std::vector<VarId>(rest.begin(), rest.end()));

    std::vector<VarId> prec = L;
    prec.push_back(res.w);
    prec.insert(prec.end(), N.begin(), N.end());
    res.order = MonomialOrder(prec);

    std::vector<Poly> gens;
    for (const auto& a : A.elements())
        gens.push_back(content_primitive(a, L).primitive);
    gens.push_back(Poly::var(res.w) - f);
    // Invertibility is over k(N)[L], where factors in k[N] are units, so
    // they are dropped from the elements and from the initials.
    std::vector<Poly> initials;
    for (std::size_t i = 0; i < A.size(); ++i) {
        Poly h = monic(content_primitive(A.initial(i), L).primitive);
        if (!h.is_constant() && std::find(initials.begin(), initials.end(), h) == initials.end())
            initials.push_back(h);
    }
    res.gb = saturate(gens, initials, res.order);

    std::vector<VarId> keep = N;
    keep.push_back(res.w);
    auto E = eliminate(res.gb, res.order, keep);
    for (const auto& e : E)
        if (!e.contains(res.w))
            throw NotCharacterizing("invert: the ideal of the prefix meets k[N]; it is trivial over k(N)");
    if (E.empty())
        throw NotCharacterizing("invert: f is not algebraic over k(N) modulo the prefix");

    Poly P = E[0];
    for (std::size_t i = 1; i < E.size(); ++i)
        P = gcd(P, E[i]);
    P = content_primitive(P, {res.w}).primitive;
    // Scale so the coefficient of the lex-leading monomial is 1.
    const Term* lead = &P.terms().front();
    for (const auto& t : P.terms())
        if (res.order.compare(t.mono, lead->mono) > 0)
            lead = &t;
    Rational c = lead->coef;
    P /= c;
    res.P = P;

    Poly p0 = P.substitute(res.w, Poly(0));
    Poly Q = *divide_exact(P - p0, Poly::var(res.w));
    Poly g = Q.substitute(res.w, f);
    if (p0.is_zero()) {
        res.g = g;
        res.h = Poly(0);
        return res;
    }
    res.invertible = true;
    res.h = -p0;
    auto red = full_remainder(g, A, false);
    Poly m = red.multiplier_product();
    bool leader_free = std::none_of(L.begin(), L.end(), [&](VarId v) { return m.contains(v); });
    if (leader_free && !red.remainder.is_zero()) {
        res.g = red.remainder;
        res.h = res.h * m;
    } else {
        res.g = g;
    }
    return res;
}

} // namespace diffchar
