#pragma once

#include "diffchar/poly.hpp"

#include <compare>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace diffchar {

struct RingSpec {
    std::vector<std::string> derivations;
    std::vector<std::string> indeterminates;
};

// theta = (k_1, ..., k_n) applied to indeterminate number `indet`.
struct Derivative {
    std::vector<std::uint32_t> theta;
    std::size_t indet = 0;

    std::uint32_t order() const;
    friend auto operator<=>(const Derivative&, const Derivative&) = default;
};

// Ids at or above this value are auxiliary algebraic variables (w, tau,
// tag variables). They are not derivatives and rank below all of them.
inline constexpr VarId kAuxBase = VarId{1} << 30;
inline bool is_aux(VarId v) { return v >= kAuxBase; }

// Derivation names, indeterminates and the registry mapping derivatives
// to variable ids. Ids are handed out on first use; the registry is the
// only mutable state and is guarded by a mutex.
class DiffRing {
public:
    explicit DiffRing(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    std::size_t num_derivations() const { return spec_.derivations.size(); }
    std::size_t num_indeterminates() const { return spec_.indeterminates.size(); }
    bool ordinary() const { return num_derivations() == 1; }

    VarId id(const Derivative& d);
    VarId indeterminate(std::size_t i);
    Derivative derivative(VarId v) const;
    VarId derive(VarId v, std::size_t delta);

    // Named auxiliary variable, created on first request.
    VarId auxiliary(const std::string& name);
    std::string name(VarId v) const;

private:
    RingSpec spec_;
    mutable std::mutex mu_;
    std::map<Derivative, VarId> ids_;
    std::deque<Derivative> derivs_;
    std::map<std::string, VarId> aux_ids_;
    std::deque<std::string> aux_names_;
};

// Blocks of indeterminate indices; earlier blocks rank higher. Inside a
// block: order, then theta lexicographically (delta_1 heaviest), then the
// position in the block (earlier is higher).
class Ranking {
public:
    enum class Kind { orderly, elimination };

    static Ranking orderly(std::size_t num_indeterminates);
    static Ranking orderly(std::vector<std::size_t> order);
    static Ranking elimination(std::vector<std::vector<std::size_t>> blocks);

    Kind kind() const { return kind_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::strong_ordering compare(const Derivative& a, const Derivative& b) const;

private:
    Kind kind_ = Kind::orderly;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::pair<std::size_t, std::size_t>> where_;  // indet -> (block, position)
};

// Leader, degree in it, initial and separant of a nonconstant polynomial.
struct Anatomy {
    VarId leader;
    std::uint32_t degree;
    Poly initial;
    Poly separant;
};

inline constexpr int kOrderOfZero = -(1 << 30);

// A differential polynomial ring together with a ranking. Cheap to copy;
// copies share the registry.
class RankedRing {
public:
    RankedRing(std::shared_ptr<DiffRing> ring, Ranking ranking);

    DiffRing& ring() const { return *ring_; }
    const std::shared_ptr<DiffRing>& ring_ptr() const { return ring_; }
    const Ranking& ranking() const { return ranking_; }

    Poly indeterminate(std::size_t i) const { return Poly::var(ring_->indeterminate(i)); }
    Poly derivative_var(const Derivative& d) const { return Poly::var(ring_->id(d)); }

    std::strong_ordering compare(VarId a, VarId b) const;
    bool greater(VarId a, VarId b) const { return compare(a, b) > 0; }

    // Throws NoLeader for constants.
    VarId leader(const Poly& f) const;
    Anatomy anatomy(const Poly& f) const;
    // (leader, degree) comparison; constants rank below everything.
    std::strong_ordering compare_rank(const Poly& f, const Poly& g) const;

    Poly differentiate(const Poly& f, std::size_t delta) const;
    Poly apply(const Poly& f, const std::vector<std::uint32_t>& theta) const;

    // theta with v = theta(u), if v is a derivative of u (possibly u itself).
    std::optional<std::vector<std::uint32_t>> derivation_from(VarId u, VarId v) const;
    bool is_proper_derivative(VarId v, VarId u) const;

    int order(const Poly& f) const;
    int order_in(const Poly& f, std::size_t indet) const;

    // Variables sorted by decreasing rank.
    std::vector<VarId> sorted_desc(std::vector<VarId> vars) const;
    // Lexicographic comparison of power products induced by the ranking.
    std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const;
    // Terms of f in decreasing induced lex order.
    std::vector<Term> lex_terms(const Poly& f) const;
    Term lex_leading_term(const Poly& f) const;
    // Total order on polynomials: rank, then induced lex on term lists.
    std::strong_ordering compare_polys(const Poly& f, const Poly& g) const;

private:
    std::shared_ptr<DiffRing> ring_;
    Ranking ranking_;
};

} // namespace diffchar
