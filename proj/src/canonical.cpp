#include "diffchar/canonical.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffchar {

namespace {

std::string name_of(const TriangularSet& A, std::size_t i) { return A.ctx().ring().name(A.leader(i)); }

bool leader_free(const TriangularSet& A, const Poly& f) {
    auto vars = f.variables();
    return std::none_of(vars.begin(), vars.end(), [&](VarId v) { return A.is_leader(v); });
}

// Both routes end with this, so their outputs are directly comparable.
TriangularSet finish(const RankedRing& ctx, std::vector<Poly> elems) {
    TriangularSet out(ctx, std::move(elems));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!leader_free(out, out.initial(i)))
            throw NotCharacterizing("normalized element " + name_of(out, i) + " has an initial depending on a leader");
    return out;
}

} // namespace

void check_characterizing(const TriangularSet& A) {
    if (!A.is_autoreduced())
        throw NotCharacterizing("input set is not autoreduced");
    auto coh = is_coherent(A);
    if (!coh.coherent)
        throw NotCharacterizing("input set is not coherent");
    // Factors in k[N] do not affect invertibility over k(N)[L].
    const std::vector<VarId> L = A.leaders();
    auto invertible = [&](const Poly& f, std::size_t prefix) {
        Poly p = content_primitive(f, L).primitive;
        return p.is_constant() || invert(p, A.prefix(prefix)).invertible;
    };
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (i > 0 && !invertible(A.initial(i), i))
            throw NotCharacterizing("initial of " + name_of(A, i) + " is a zero divisor modulo the lower elements");
        if (!invertible(A.separant(i), i + 1))
            throw NotCharacterizing("separant of " + name_of(A, i) + " is a zero divisor");
    }
}

Poly clear_denominators(const FracCoefPoly& g, Poly* lcm_out) {
    Poly q(1);
    for (const auto& t : g.terms)
        q = lcm(q, t.coef.den());
    Poly out;
    for (const auto& t : g.terms) {
        auto k = divide_exact(q, t.coef.den());
        out += *k * t.coef.num() * Poly::monomial(t.mono, Rational(1));
    }
    if (lcm_out)
        *lcm_out = q;
    return out;
}

Rational normalize_scale(const RankedRing& ctx, Poly& f) {
    Poly init = ctx.anatomy(f).initial;
    Rational s = ctx.lex_leading_term(init).coef;
    f /= s;
    return s;
}

CanonicalCharSet canonical_from_basis(const RankedRing& ctx, std::vector<FracCoefPoly> gb, const MonomialOrder& ord) {
    if (gb.size() == 1 && gb[0].leading_monomial().is_one())
        throw TrivialIdeal("1 lies in the ideal");
    std::vector<VarId> L = ord.precedence();
    std::vector<VarId> heads;
    for (const auto& g : gb) {
        const auto& e = g.leading_monomial().entries();
        if (e.size() != 1)
            throw NotCharacterizing("basis element with leading monomial not a power of a leader: " + g.debug_string());
        heads.push_back(e[0].first);
    }
    std::sort(heads.begin(), heads.end());
    std::vector<VarId> sortedL = L;
    std::sort(sortedL.begin(), sortedL.end());
    if (heads != sortedL)
        throw NotCharacterizing("reduced basis over k(N) does not have one element per leader");

    CanonicalCharSet res{TriangularSet(ctx, {}), {}, gb, ord, {}};
    std::vector<Poly> elems;
    std::vector<NormalizationStep> steps;
    for (const auto& g : gb) {
        NormalizationStep step;
        Poly c = clear_denominators(g, &step.lcm);
        auto split = content_primitive(c, L);
        step.content = split.content;
        Poly p = split.primitive;
        step.scale = normalize_scale(ctx, p);
        elems.push_back(p);
        steps.push_back(step);
    }
    res.elements = finish(ctx, elems);
    // The basis is sorted by increasing leading monomial, which need not be
    // the rank order.
    res.log.resize(steps.size());
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (std::size_t i = 0; i < res.elements.size(); ++i)
            if (res.elements[i] == elems[k])
                res.log[i] = steps[k];
    return res;
}

CanonicalCharSet canonical_via_gb(const TriangularSet& A, CanonicalOptions opt) {
    if (opt.precheck)
        check_characterizing(A);
    const RankedRing& ctx = A.ctx();
    MonomialOrder ord(ctx.sorted_desc(A.leaders()));

    // A separant invertible modulo (A):I_A^infinity is not a zero divisor
    // there, so saturating by it changes nothing. After the precheck only
    // the initials are needed, and of those only the part involving
    // leaders, since factors in k[N] are units in k(N)[L].
    std::vector<Poly> H;
    auto add = [&](const Poly& f) {
        Poly h = monic(content_primitive(f, A.leaders()).primitive);
        if (!h.is_constant() && std::find(H.begin(), H.end(), h) == H.end())
            H.push_back(h);
    };
    for (std::size_t i = 0; i < A.size(); ++i) {
        add(A.initial(i));
        if (!opt.precheck)
            add(A.separant(i));
    }
    auto gb = H.empty() ? groebner_basis_frac(A.elements(), ord) : saturate_frac(A.elements(), H, ord);
    auto res = canonical_from_basis(ctx, std::move(gb), ord);
    for (std::size_t i = 0; i < A.size(); ++i)
        if (res.elements.degree(i) != A.degree(i) || res.elements.leader(i) != A.leader(i))
            throw NotCharacterizing("rank of the reduced basis differs from the rank of the input");
    return res;
}

CanonicalCharSet canonical_via_invert(const TriangularSet& C, CanonicalOptions opt) {
    if (opt.precheck)
        check_characterizing(C);
    const RankedRing& ctx = C.ctx();
    std::vector<Poly> cur = C.elements();
    CanonicalCharSet res{TriangularSet(ctx, {}), {}, {}, {}, {}};

    for (std::size_t i = 1; i < cur.size(); ++i) {
        TriangularSet lower(ctx, std::vector<Poly>(cur.begin(), cur.begin() + i));
        Poly init = ctx.anatomy(cur[i]).initial;
        auto inv = invert(init, lower);
        if (!inv.invertible)
            throw NotCharacterizing("initial of " + ctx.ring().name(ctx.leader(cur[i])) + " is not invertible");
        Poly next = full_remainder(inv.g * cur[i], lower, false).remainder;
        if (next.is_zero() || ctx.leader(next) != ctx.leader(cur[i]))
            throw NotCharacterizing("element vanished after inverting its initial");
        cur[i] = next;
        res.invert_trace.push_back(std::move(inv));
    }

    for (auto& f : cur) {
        NormalizationStep step;
        VarId u = ctx.leader(f);
        Poly g;
        for (const auto& a : f.coefficients(u))
            if (!a.is_zero())
                g = g.is_zero() ? a : gcd(g, a);
        if (!g.is_constant()) {
            f = *divide_exact(f, g);
            step.content = g;
        }
        step.scale = normalize_scale(ctx, f);
        res.log.push_back(step);
    }
    res.elements = finish(ctx, cur);
    return res;
}

CanonicalReport is_canonical(const TriangularSet& C) {
    CanonicalReport r;
    const RankedRing& ctx = C.ctx();
    auto note = [&](const std::string& s) {
        if (r.detail.empty())
            r.detail = s;
    };
    if (!C.is_autoreduced()) {
        r.autoreduced = false;
        note("not autoreduced");
    }
    std::vector<VarId> L = C.leaders();
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (!leader_free(C, C.initial(i))) {
            r.leader_free_initials = false;
            note("initial of " + name_of(C, i) + " depends on a leader");
        }
        if (!content_primitive(C[i], L).content.is_constant()) {
            r.no_factor_in_nonleaders = false;
            note("element " + name_of(C, i) + " has a factor free of leaders");
        }
        if (!ctx.lex_leading_term(C.initial(i)).coef.is_one()) {
            r.unit_leading_coefficient = false;
            note("initial of " + name_of(C, i) + " does not have leading coefficient 1");
        }
    }
    return r;
}

bool order_bound_check(const TriangularSet& C, int bound) {
    if (!C.ctx().ring().ordinary())
        throw std::invalid_argument("order bound check needs an ordinary ring");
    int m = kOrderOfZero;
    for (const auto& f : C.elements())
        m = std::max(m, C.ctx().order(f));
    return m <= bound;
}

} // namespace diffchar
