#include "diffchar/reduce.hpp"
#include "diffchar/errors.hpp"
#include "diffchar/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace diffchar {

// ------------------------------------------------------------ TriangularSet

TriangularSet::TriangularSet(RankedRing ctx, std::vector<Poly> elements) : ctx_(std::move(ctx)) {
    for (const auto& f : elements)
        if (f.is_constant())
            throw std::invalid_argument("triangular set element is constant");
    std::sort(elements.begin(), elements.end(),
              [this](const Poly& a, const Poly& b) { return ctx_.compare_rank(a, b) < 0; });
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (ctx_.leader(elements[i - 1]) == ctx_.leader(elements[i]))
            throw std::invalid_argument("triangular set has repeated leader " + ctx_.ring().name(ctx_.leader(elements[i])));
    elems_ = std::move(elements);
    for (const auto& f : elems_)
        anat_.push_back(ctx_.anatomy(f));
}

std::vector<VarId> TriangularSet::leaders() const {
    std::vector<VarId> out;
    for (const auto& a : anat_)
        out.push_back(a.leader);
    return out;
}

bool TriangularSet::is_leader(VarId v) const {
    return std::any_of(anat_.begin(), anat_.end(), [v](const Anatomy& a) { return a.leader == v; });
}

std::vector<Poly> TriangularSet::h_factors() const {
    std::vector<Poly> out;
    for (const auto& a : anat_)
        for (const Poly* p : {&a.initial, &a.separant}) {
            if (p->is_constant())
                continue;
            Poly m = monic(*p);
            if (std::find(out.begin(), out.end(), m) == out.end())
                out.push_back(m);
        }
    return out;
}

TriangularSet TriangularSet::prefix(std::size_t k) const {
    return TriangularSet(ctx_, std::vector<Poly>(elems_.begin(), elems_.begin() + std::min(k, elems_.size())));
}

bool TriangularSet::is_autoreduced() const {
    for (std::size_t i = 0; i < size(); ++i) {
        const Poly& f = elems_[i];
        for (std::size_t j = 0; j < size(); ++j) {
            if (i == j)
                continue;
            VarId u = leader(j);
            if (f.degree(u) >= degree(j))
                return false;
            for (VarId v : f.variables())
                if (ctx_.is_proper_derivative(v, u))
                    return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ certificates

Poly RemainderCertificate::multiplier_product() const {
    Poly m(1);
    for (const auto& [p, e] : multiplier)
        m *= p.pow(e);
    return m;
}

bool RemainderCertificate::verify(const Poly& f, const TriangularSet& A) const {
    if (!certified)
        return false;
    Poly rhs = remainder;
    for (const auto& t : combination)
        rhs += t.cofactor * A.ctx().apply(A[t.index], t.theta);
    return multiplier_product() * f == rhs;
}

namespace {

class Reducer {
public:
    Reducer(const TriangularSet& A, bool certify) : A_(A), certify_(certify) { cert_.certified = certify; }

    RemainderCertificate&& finish(Poly r) {
        cert_.remainder = std::move(r);
        return std::move(cert_);
    }

    // Pseudo-divides r by g in v and records g = theta(A[index]) with
    // lc_v(g) contributing `factor` to the multiplier.
    Poly step(const Poly& r, const Poly& g, VarId v, const Poly& factor, std::vector<std::uint32_t> theta,
              std::size_t index) {
        PseudoDivision pd = pseudo_divide(r, g, v);
        if (pd.exponent > 0) {
            auto it = std::find_if(cert_.multiplier.begin(), cert_.multiplier.end(),
                                   [&](const auto& m) { return m.first == factor; });
            if (it == cert_.multiplier.end())
                cert_.multiplier.emplace_back(factor, pd.exponent);
            else
                it->second += pd.exponent;
            if (certify_) {
                Poly scale = factor.pow(pd.exponent);
                for (auto& t : cert_.combination)
                    t.cofactor *= scale;
            }
        }
        if (certify_ && !pd.quotient.is_zero())
            cert_.combination.push_back(ProlongationTerm{std::move(theta), index, std::move(pd.quotient)});
        return std::move(pd.remainder);
    }

    const Poly& prolongation(std::size_t i, const std::vector<std::uint32_t>& theta) {
        auto key = std::make_pair(i, theta);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, A_.ctx().apply(A_[i], theta)).first;
        return it->second;
    }

    const TriangularSet& A_;
    bool certify_;
    RemainderCertificate cert_;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, Poly> cache_;
};

Poly partially_reduce(Reducer& red, Poly r) {
    const TriangularSet& A = red.A_;
    const RankedRing& ctx = A.ctx();
    for (;;) {
        std::optional<VarId> best;
        std::size_t best_i = 0;
        for (VarId v : r.variables()) {
            if (best && ctx.compare(v, *best) <= 0)
                continue;
            for (std::size_t i = 0; i < A.size(); ++i)
                if (ctx.is_proper_derivative(v, A.leader(i))) {
                    best = v;
                    best_i = i;
                    break;
                }
        }
        if (!best)
            return r;
        auto theta = *ctx.derivation_from(A.leader(best_i), *best);
        const Poly& g = red.prolongation(best_i, theta);
        r = red.step(r, g, *best, A.separant(best_i), theta, best_i);
    }
}

} // namespace

RemainderCertificate partial_remainder(const Poly& f, const TriangularSet& A, bool certify) {
    Reducer red(A, certify);
    return red.finish(partially_reduce(red, f));
}

RemainderCertificate full_remainder(const Poly& f, const TriangularSet& A, bool certify) {
    Reducer red(A, certify);
    Poly r = partially_reduce(red, f);
    const std::vector<std::uint32_t> none(A.ctx().ring().num_derivations(), 0);
    for (std::size_t i = A.size(); i-- > 0;)
        if (r.degree(A.leader(i)) >= A.degree(i))
            r = red.step(r, A[i], A.leader(i), A.initial(i), none, i);
    return red.finish(std::move(r));
}

Reducedness is_reduced(const Poly& f, const TriangularSet& A) {
    Reducedness out = Reducedness::fully;
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (VarId v : f.variables())
            if (A.ctx().is_proper_derivative(v, A.leader(i)))
                return Reducedness::no;
        if (f.degree(A.leader(i)) >= A.degree(i))
            out = Reducedness::partially;
    }
    return out;
}

std::strong_ordering compare_sets(const TriangularSet& A, const TriangularSet& B) {
    const RankedRing& ctx = A.ctx();
    for (std::size_t k = 0; k < std::min(A.size(), B.size()); ++k) {
        if (auto c = ctx.compare(A.leader(k), B.leader(k)); c != 0)
            return c;
        if (auto c = A.degree(k) <=> B.degree(k); c != 0)
            return c;
    }
    // With equal ranks on the common prefix the longer set has lower rank.
    return B.size() <=> A.size();
}

TriangularSet basic_set(const RankedRing& ctx, std::vector<Poly> polys) {
    std::vector<Poly> cands;
    for (auto& f : polys) {
        if (f.is_zero())
            continue;
        if (f.is_constant())
            throw TrivialIdeal("nonzero constant among the polynomials");
        cands.push_back(std::move(f));
    }
    std::sort(cands.begin(), cands.end(), [&](const Poly& a, const Poly& b) { return ctx.compare_polys(a, b) < 0; });
    std::vector<Poly> chosen;
    for (const auto& f : cands) {
        if (!chosen.empty() && f == chosen.back())
            continue;
        TriangularSet B(ctx, chosen);
        if (is_reduced(f, B) == Reducedness::fully)
            chosen.push_back(f);
    }
    return TriangularSet(ctx, std::move(chosen));
}

TriangularSet autoreduce(const RankedRing& ctx, std::vector<Poly> polys) {
    for (;;) {
        TriangularSet B = basic_set(ctx, polys);
        std::vector<Poly> next = B.elements();
        bool grew = false;
        for (const auto& f : polys) {
            if (f.is_zero() || std::find(B.elements().begin(), B.elements().end(), f) != B.elements().end())
                continue;
            Poly r = full_remainder(f, B, false).remainder;
            if (r.is_zero())
                continue;
            if (r.is_constant())
                throw TrivialIdeal("the set reduces to a nonzero constant");
            next.push_back(r);
            grew = true;
        }
        if (!grew)
            return B;
        polys = std::move(next);
    }
}

std::vector<DeltaPolynomial> delta_polynomials(const TriangularSet& A) {
    std::vector<DeltaPolynomial> out;
    const RankedRing& ctx = A.ctx();
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = i + 1; j < A.size(); ++j) {
            Derivative ui = ctx.ring().derivative(A.leader(i)), uj = ctx.ring().derivative(A.leader(j));
            if (ui.indet != uj.indet)
                continue;
            Derivative v = ui;
            std::vector<std::uint32_t> psi(ui.theta.size()), phi(ui.theta.size());
            for (std::size_t k = 0; k < ui.theta.size(); ++k) {
                v.theta[k] = std::max(ui.theta[k], uj.theta[k]);
                psi[k] = v.theta[k] - ui.theta[k];
                phi[k] = v.theta[k] - uj.theta[k];
            }
            Poly delta = A.separant(j) * ctx.apply(A[i], psi) - A.separant(i) * ctx.apply(A[j], phi);
            out.push_back({i, j, ctx.ring().id(v), std::move(delta)});
        }
    }
    return out;
}

CoherenceReport is_coherent(const TriangularSet& A, const MembershipOracle& oracle) {
    CoherenceReport rep;
    const RankedRing& ctx = A.ctx();
    if (ctx.ring().ordinary())
        return rep;
    MembershipOracle member = oracle ? oracle : MembershipOracle(saturation_membership);
    const std::vector<Poly> H = A.h_factors();
    for (const auto& d : delta_polynomials(A)) {
        auto cert = partial_remainder(d.delta, A);
        std::vector<Poly> G;
        for (std::size_t k = 0; k < A.size(); ++k)
            if (ctx.compare(A.leader(k), d.lcm) < 0)
                G.push_back(A[k]);
        for (const auto& t : cert.combination)
            G.push_back(ctx.apply(A[t.index], t.theta));
        if (!cert.remainder.is_zero() && !member(cert.remainder, G, H)) {
            rep.coherent = false;
            rep.witness = {d.i, d.j};
            rep.delta = d.delta;
            rep.remainder = cert.remainder;
            return rep;
        }
    }
    return rep;
}

} // namespace diffchar
