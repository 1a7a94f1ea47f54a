#include "diffchar/decompose.hpp"
#include "diffchar/errors.hpp"
#include "diffchar/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffchar {

namespace {

struct Branch {
    std::vector<Poly> eqs;
    std::vector<Poly> ineqs;  // monic
    std::vector<std::string> path;
};

bool contains(const std::vector<Poly>& v, const Poly& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

// Primitive integer coefficients, positive induced-lex leading coefficient.
Poly tidy(const RankedRing& ctx, Poly f) {
    f /= numeric_content(f);
    if (ctx.lex_leading_term(f).coef.sign() < 0)
        f = -f;
    return f;
}

enum class Verdict { done, discard, refine };

struct Closing {
    Verdict verdict = Verdict::done;
    Poly witness;
    std::string why;
};

// Zero-divisor witness for f modulo A, reduced; or the verdict that the
// branch is inconsistent.
Closing split_on(const TriangularSet& A, const InvertResult& inv, const std::string& what) {
    Closing c;
    Poly w = full_remainder(inv.g, A, false).remainder;
    if (w.is_zero())
        throw std::logic_error("zero-divisor witness reduces to zero");
    if (w.is_constant()) {
        c.verdict = Verdict::discard;
        return c;
    }
    c.verdict = Verdict::refine;
    c.witness = w;
    c.why = what + " is a zero divisor";
    return c;
}

// A is coherent and every equation reduces to zero. Checks the initials,
// separants and inequations for invertibility, lowest element first.
Closing close(const TriangularSet& A, const std::vector<Poly>& ineqs) {
    const RankedRing& ctx = A.ctx();
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (k > 0 && !A.initial(k).is_constant()) {
            auto inv = invert(A.initial(k), A.prefix(k));
            if (!inv.invertible)
                return split_on(A, inv, "initial " + format_poly(ctx, tidy(ctx, A.initial(k))));
        }
        if (!A.separant(k).is_constant()) {
            auto inv = invert(A.separant(k), A.prefix(k + 1));
            if (!inv.invertible)
                return split_on(A, inv, "separant " + format_poly(ctx, tidy(ctx, A.separant(k))));
        }
    }
    for (const auto& s : ineqs) {
        Poly r = full_remainder(s, A, false).remainder;
        if (r.is_zero())
            return {Verdict::discard, {}, {}};
        if (r.is_constant())
            continue;
        auto inv = invert(r, A);
        if (!inv.invertible)
            return split_on(A, inv, format_poly(ctx, tidy(ctx, s)));
    }
    return {};
}

// J_sub contained in J_sup, certified: every element of sub reduces to zero
// modulo sup and every factor of H_sub is invertible modulo sup.
bool certified_inclusion(const TriangularSet& sub, const TriangularSet& sup) {
    for (const auto& c : sub.elements())
        if (!member(c, sup))
            return false;
    for (const auto& h : sub.h_factors()) {
        Poly r = full_remainder(h, sup, false).remainder;
        if (r.is_zero())
            return false;
        if (!r.is_constant() && !invert(r, sup).invertible)
            return false;
    }
    return true;
}

} // namespace

Decomposition rosenfeld_groebner(const RankedRing& ctx, const std::vector<Poly>& F, DecomposeOptions opt) {
    Decomposition out;
    auto limit = max_steps_from_env();
    std::vector<Branch> stack{{F, {}, {}}};
    while (!stack.empty()) {
        Branch b = std::move(stack.back());
        stack.pop_back();
        ++out.branches;
        if (limit && out.branches > *limit)
            throw StepLimitExceeded("Rosenfeld-Groebner branch limit reached");

        std::vector<Poly> G;
        bool inconsistent = false;
        for (const auto& g : b.eqs) {
            if (g.is_zero())
                continue;
            if (g.is_constant())
                inconsistent = true;
            if (!contains(G, g))
                G.push_back(g);
        }
        if (inconsistent)
            continue;
        if (G.empty()) {
            out.components.push_back({TriangularSet(ctx, {}), b.path});
            continue;
        }

        TriangularSet A = basic_set(ctx, G);
        std::vector<Poly> S = b.ineqs;
        std::vector<std::string> path = b.path;
        for (const auto& h : A.h_factors()) {
            if (contains(S, h))
                continue;
            Branch zero{G, b.ineqs, b.path};
            zero.eqs.push_back(h);
            zero.path.push_back(format_poly(ctx, tidy(ctx, h)) + " = 0");
            stack.push_back(std::move(zero));
            S.push_back(h);
            path.push_back(format_poly(ctx, tidy(ctx, h)) + " != 0");
        }

        std::vector<Poly> R;
        for (const auto& g : G) {
            if (contains(A.elements(), g))
                continue;
            Poly r = full_remainder(g, A, false).remainder;
            if (!r.is_zero() && !contains(R, r))
                R.push_back(r);
        }
        for (const auto& d : delta_polynomials(A)) {
            Poly r = full_remainder(d.delta, A, false).remainder;
            if (!r.is_zero() && !contains(R, r))
                R.push_back(r);
        }
        if (std::any_of(R.begin(), R.end(), [](const Poly& r) { return r.is_constant(); }))
            continue;
        if (!R.empty()) {
            Branch next{A.elements(), S, path};
            next.eqs.insert(next.eqs.end(), R.begin(), R.end());
            stack.push_back(std::move(next));
            continue;
        }

        Closing c = close(A, S);
        if (c.verdict == Verdict::discard)
            continue;
        if (c.verdict == Verdict::refine) {
            Branch next{A.elements(), S, path};
            next.eqs.push_back(c.witness);
            next.path.push_back(c.why);
            stack.push_back(std::move(next));
            continue;
        }
        std::vector<Poly> elems;
        for (const auto& a : A.elements())
            elems.push_back(tidy(ctx, a));
        out.components.push_back({TriangularSet(ctx, elems), path});
    }

    std::stable_sort(out.components.begin(), out.components.end(), [](const Component& a, const Component& b) {
        auto c = compare_sets(a.charset, b.charset);
        if (c != 0)
            return c > 0;
        const auto& ea = a.charset.elements();
        const auto& eb = b.charset.elements();
        const RankedRing& ctx = a.charset.ctx();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), [&](const Poly& x, const Poly& y) {
            return ctx.compare_polys(x, y) > 0;
        });
    });
    // Identical charsets can come out of different branches.
    out.components.erase(std::unique(out.components.begin(), out.components.end(),
                                     [](const Component& a, const Component& b) { return a.charset == b.charset; }),
                         out.components.end());

    if (opt.prune)
        prune(out);
    return out;
}

void prune(Decomposition& D) {
    std::vector<bool> gone(D.components.size(), false);
    for (std::size_t i = 0; i < D.components.size(); ++i)
        for (std::size_t j = 0; j < D.components.size() && !gone[i]; ++j)
            if (j != i && !gone[j] && certified_inclusion(D.components[j].charset, D.components[i].charset))
                gone[i] = true;
    std::vector<Component> kept;
    for (std::size_t i = 0; i < D.components.size(); ++i)
        if (!gone[i])
            kept.push_back(std::move(D.components[i]));
        else
            ++D.pruned;
    D.components = std::move(kept);
}

bool member(const Poly& f, const TriangularSet& C) {
    if (C.empty())
        return f.is_zero();
    return full_remainder(f, C, false).remainder.is_zero();
}

bool member(const Poly& f, const Decomposition& D) {
    return std::all_of(D.components.begin(), D.components.end(),
                       [&](const Component& c) { return member(f, c.charset); });
}

bool equal_ideals(const TriangularSet& A, const TriangularSet& B) {
    auto within = [](const TriangularSet& X, const TriangularSet& Y) {
        return std::all_of(X.elements().begin(), X.elements().end(), [&](const Poly& f) { return member(f, Y); });
    };
    return within(A, B) && within(B, A);
}

KolchinReport kolchin_equality(const TriangularSet& A, const TriangularSet& B) {
    auto within = [](const TriangularSet& X, const TriangularSet& Y) {
        return std::all_of(X.elements().begin(), X.elements().end(), [&](const Poly& f) { return member(f, Y); });
    };
    auto H = [](const TriangularSet& X) {
        Poly h(1);
        for (std::size_t i = 0; i < X.size(); ++i)
            h *= X.initial(i) * X.separant(i);
        return h;
    };
    KolchinReport r;
    r.a_in_j = within(A, B);
    r.b_in_i = within(B, A);
    r.ha_not_in_j = !member(H(A), B);
    r.hb_not_in_i = !member(H(B), A);
    return r;
}

std::strong_ordering compare_leader_sets(const TriangularSet& A, const TriangularSet& B) {
    const RankedRing& ctx = A.ctx();
    std::size_t n = std::min(A.size(), B.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = ctx.compare(A.leader(i), B.leader(i));
        if (c != 0)
            return c;
    }
    // On a common prefix the longer set is lower.
    return B.size() <=> A.size();
}

FromGenerators canonical_from_decomposition(const RankedRing& ctx, Decomposition D, const std::vector<Poly>* F) {
    if (D.components.empty())
        throw TrivialIdeal("the decomposition is empty: 1 lies in the ideal");
    std::vector<std::size_t> selected;
    std::size_t best = 0;
    for (std::size_t i = 1; i < D.components.size(); ++i)
        if (compare_leader_sets(D.components[i].charset, D.components[best].charset) > 0)
            best = i;
    for (std::size_t i = 0; i < D.components.size(); ++i)
        if (compare_leader_sets(D.components[i].charset, D.components[best].charset) == 0)
            selected.push_back(i);

    const TriangularSet& first = D.components[selected[0]].charset;
    MonomialOrder ord(ctx.sorted_desc(first.leaders()));
    std::vector<FracCoefPoly> I;
    for (std::size_t n = 0; n < selected.size(); ++n) {
        const TriangularSet& C = D.components[selected[n]].charset;
        std::vector<Poly> H;
        for (const auto& h : C.h_factors()) {
            auto vars = h.variables();
            if (std::any_of(vars.begin(), vars.end(), [&](VarId v) { return C.is_leader(v); }))
                H.push_back(h);
        }
        auto J = H.empty() ? groebner_basis_frac(C.elements(), ord) : saturate_frac(C.elements(), H, ord);
        I = n == 0 ? J : ideal_intersection(I, J, ord);
    }
    FromGenerators out{canonical_from_basis(ctx, I, ord), std::move(selected), {}};

    if (F) {
        for (const auto& f : *F)
            if (!member(f, out.canonical.elements))
                throw NotCharacterizing("input may not be characterizable: " + format_poly(ctx, f) +
                                        " does not reduce to zero modulo the computed set");
        for (const auto& comp : D.components)
            for (const auto& c : out.canonical.elements.elements())
                if (!member(c, comp.charset))
                    throw NotCharacterizing("input may not be characterizable: " + format_element(ctx, c) +
                                            " does not lie in every component");
    }
    out.decomposition = std::move(D);
    return out;
}

FromGenerators canonical_from_generators(const RankedRing& ctx, const std::vector<Poly>& F, DecomposeOptions opt) {
    return canonical_from_decomposition(ctx, rosenfeld_groebner(ctx, F, opt), &F);
}

} // namespace diffchar
