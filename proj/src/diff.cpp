#include "diffchar/diff.hpp"
#include "diffchar/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace diffchar {

std::uint32_t Derivative::order() const { return std::accumulate(theta.begin(), theta.end(), 0u); }

// ----------------------------------------------------------------- DiffRing

DiffRing::DiffRing(RingSpec spec) : spec_(std::move(spec)) {
    if (spec_.derivations.empty() || spec_.indeterminates.empty())
        throw std::invalid_argument("ring needs at least one derivation and one indeterminate");
    std::set<std::string> seen;
    for (const auto* names : {&spec_.derivations, &spec_.indeterminates})
        for (const auto& n : *names)
            if (!seen.insert(n).second)
                throw std::invalid_argument("duplicate name '" + n + "' in ring");
    for (std::size_t i = 0; i < spec_.indeterminates.size(); ++i)
        indeterminate(i);
}

VarId DiffRing::id(const Derivative& d) {
    if (d.indet >= num_indeterminates() || d.theta.size() != num_derivations())
        throw std::invalid_argument("derivative does not belong to this ring");
    std::lock_guard lock(mu_);
    auto [it, inserted] = ids_.try_emplace(d, static_cast<VarId>(derivs_.size()));
    if (inserted) {
        if (derivs_.size() >= kAuxBase)
            throw std::length_error("derivative registry exhausted");
        derivs_.push_back(d);
    }
    return it->second;
}

VarId DiffRing::indeterminate(std::size_t i) {
    return id(Derivative{std::vector<std::uint32_t>(num_derivations(), 0), i});
}

Derivative DiffRing::derivative(VarId v) const {
    std::lock_guard lock(mu_);
    if (is_aux(v) || v >= derivs_.size())
        throw std::out_of_range("variable id is not a registered derivative");
    return derivs_[v];
}

VarId DiffRing::derive(VarId v, std::size_t delta) {
    Derivative d = derivative(v);
    ++d.theta.at(delta);
    return id(d);
}

VarId DiffRing::auxiliary(const std::string& name) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = aux_ids_.try_emplace(name, kAuxBase + static_cast<VarId>(aux_names_.size()));
    if (inserted) {
        // Printed name must not read as one of the indeterminates.
        const auto& ind = spec_.indeterminates;
        std::string shown = name;
        while (std::find(ind.begin(), ind.end(), shown) != ind.end())
            shown += "_aux";
        aux_names_.push_back(shown);
    }
    return it->second;
}

std::string DiffRing::name(VarId v) const {
    if (is_aux(v)) {
        std::lock_guard lock(mu_);
        std::size_t k = v - kAuxBase;
        return k < aux_names_.size() ? aux_names_[k] : "_aux" + std::to_string(k);
    }
    Derivative d = derivative(v);
    std::string s = spec_.indeterminates[d.indet];
    if (ordinary())
        return s + std::string(d.theta[0], '\'');
    // delta_1 outermost
    for (std::size_t i = d.theta.size(); i-- > 0;)
        for (std::uint32_t k = 0; k < d.theta[i]; ++k)
            s = spec_.derivations[i] + "(" + s + ")";
    return s;
}

// ------------------------------------------------------------------ Ranking

Ranking Ranking::orderly(std::size_t num_indeterminates) {
    std::vector<std::size_t> order(num_indeterminates);
    std::iota(order.begin(), order.end(), 0);
    return orderly(std::move(order));
}

Ranking Ranking::orderly(std::vector<std::size_t> order) {
    Ranking r = elimination({std::move(order)});
    r.kind_ = Kind::orderly;
    return r;
}

Ranking Ranking::elimination(std::vector<std::vector<std::size_t>> blocks) {
    Ranking r;
    r.kind_ = Kind::elimination;
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.size();
    r.where_.assign(n, {SIZE_MAX, SIZE_MAX});
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].empty())
            throw std::invalid_argument("ranking block is empty");
        for (std::size_t p = 0; p < blocks[bi].size(); ++p) {
            std::size_t y = blocks[bi][p];
            if (y >= n || r.where_[y].first != SIZE_MAX)
                throw std::invalid_argument("ranking blocks are not a partition of the indeterminates");
            r.where_[y] = {bi, p};
        }
    }
    r.blocks_ = std::move(blocks);
    return r;
}

std::strong_ordering Ranking::compare(const Derivative& a, const Derivative& b) const {
    const auto [ba, pa] = where_.at(a.indet);
    const auto [bb, pb] = where_.at(b.indet);
    if (ba != bb)
        return bb <=> ba;
    if (auto c = a.order() <=> b.order(); c != 0)
        return c;
    if (auto c = a.theta <=> b.theta; c != 0)
        return c;
    return pb <=> pa;
}

// --------------------------------------------------------------- RankedRing

RankedRing::RankedRing(std::shared_ptr<DiffRing> ring, Ranking ranking)
    : ring_(std::move(ring)), ranking_(std::move(ranking)) {
    std::size_t n = 0;
    for (const auto& b : ranking_.blocks())
        n += b.size();
    if (n != ring_->num_indeterminates())
        throw std::invalid_argument("ranking blocks are not a partition of the indeterminates");
}

std::strong_ordering RankedRing::compare(VarId a, VarId b) const {
    if (a == b)
        return std::strong_ordering::equal;
    if (is_aux(a) || is_aux(b)) {
        if (is_aux(a) && is_aux(b))
            return b <=> a;
        return is_aux(a) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return ranking_.compare(ring_->derivative(a), ring_->derivative(b));
}

VarId RankedRing::leader(const Poly& f) const {
    if (f.is_constant())
        throw NoLeader();
    auto vars = f.variables();
    return *std::max_element(vars.begin(), vars.end(), [this](VarId a, VarId b) { return compare(a, b) < 0; });
}

Anatomy RankedRing::anatomy(const Poly& f) const {
    VarId u = leader(f);
    std::uint32_t d = f.degree(u);
    return Anatomy{u, d, f.coefficient(u, d), f.derivative(u)};
}

std::strong_ordering RankedRing::compare_rank(const Poly& f, const Poly& g) const {
    bool cf = f.is_constant(), cg = g.is_constant();
    if (cf || cg)
        return cg <=> cf;
    VarId uf = leader(f), ug = leader(g);
    if (auto c = compare(uf, ug); c != 0)
        return c;
    return f.degree(uf) <=> g.degree(ug);
}

Poly RankedRing::differentiate(const Poly& f, std::size_t delta) const {
    if (delta >= ring_->num_derivations())
        throw std::out_of_range("derivation index out of range");
    Poly r;
    for (VarId v : f.variables()) {
        if (is_aux(v))
            throw std::invalid_argument("cannot differentiate an auxiliary variable");
        r += f.derivative(v) * Poly::var(ring_->derive(v, delta));
    }
    return r;
}

Poly RankedRing::apply(const Poly& f, const std::vector<std::uint32_t>& theta) const {
    Poly r = f;
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::uint32_t k = 0; k < theta[i]; ++k)
            r = differentiate(r, i);
    return r;
}

std::optional<std::vector<std::uint32_t>> RankedRing::derivation_from(VarId u, VarId v) const {
    if (is_aux(u) || is_aux(v))
        return std::nullopt;
    Derivative du = ring_->derivative(u), dv = ring_->derivative(v);
    if (du.indet != dv.indet)
        return std::nullopt;
    std::vector<std::uint32_t> theta(du.theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (dv.theta[i] < du.theta[i])
            return std::nullopt;
        theta[i] = dv.theta[i] - du.theta[i];
    }
    return theta;
}

bool RankedRing::is_proper_derivative(VarId v, VarId u) const { return v != u && derivation_from(u, v).has_value(); }

int RankedRing::order(const Poly& f) const {
    if (f.is_zero())
        return kOrderOfZero;
    int o = 0;
    for (VarId v : f.variables())
        if (!is_aux(v))
            o = std::max(o, static_cast<int>(ring_->derivative(v).order()));
    return o;
}

int RankedRing::order_in(const Poly& f, std::size_t indet) const {
    int o = -1;
    for (VarId v : f.variables()) {
        if (is_aux(v))
            continue;
        Derivative d = ring_->derivative(v);
        if (d.indet == indet)
            o = std::max(o, static_cast<int>(d.order()));
    }
    return o;
}

std::vector<VarId> RankedRing::sorted_desc(std::vector<VarId> vars) const {
    std::sort(vars.begin(), vars.end(), [this](VarId a, VarId b) { return compare(a, b) > 0; });
    return vars;
}

std::strong_ordering RankedRing::compare_monomials(const Monomial& a, const Monomial& b) const {
    std::vector<VarId> vars;
    for (const auto* m : {&a, &b})
        for (const auto& [v, e] : m->entries())
            vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (VarId v : sorted_desc(std::move(vars)))
        if (auto c = a.degree(v) <=> b.degree(v); c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::vector<Term> RankedRing::lex_terms(const Poly& f) const {
    std::vector<Term> ts = f.terms();
    std::sort(ts.begin(), ts.end(), [this](const Term& a, const Term& b) { return compare_monomials(a.mono, b.mono) > 0; });
    return ts;
}

Term RankedRing::lex_leading_term(const Poly& f) const {
    if (f.is_zero())
        throw std::invalid_argument("zero polynomial has no leading term");
    const auto& ts = f.terms();
    return *std::max_element(ts.begin(), ts.end(),
                             [this](const Term& a, const Term& b) { return compare_monomials(a.mono, b.mono) < 0; });
}

std::strong_ordering RankedRing::compare_polys(const Poly& f, const Poly& g) const {
    if (auto c = compare_rank(f, g); c != 0)
        return c;
    auto tf = lex_terms(f), tg = lex_terms(g);
    for (std::size_t i = 0; i < std::min(tf.size(), tg.size()); ++i) {
        if (auto c = compare_monomials(tf[i].mono, tg[i].mono); c != 0)
            return c;
        if (auto c = tf[i].coef <=> tg[i].coef; c != 0)
            return c;
    }
    return tf.size() <=> tg.size();
}

} // namespace diffchar
