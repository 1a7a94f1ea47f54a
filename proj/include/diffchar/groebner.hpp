#pragma once

#include "diffchar/poly.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace diffchar {

// Pure lex on a finite list of variables, highest first. Every prefix of
// the list is eliminated by it.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<VarId> precedence);

    const std::vector<VarId>& precedence() const { return prec_; }
    std::size_t size() const { return prec_.size(); }
    bool contains(VarId v) const { return index_.count(v) != 0; }
    std::size_t index(VarId v) const;

    // Restricted to variables of the order; others are ignored.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

private:
    std::vector<VarId> prec_;
    std::unordered_map<VarId, std::size_t> index_;
};

// num/den over the variables outside the current monomial order. Kept
// in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(1) && num_ == Poly(1); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Poly num_, den_;
};

struct FracTerm {
    Monomial mono;  // over the order's variables only
    RationalFunction coef;

    friend bool operator==(const FracTerm&, const FracTerm&) = default;
};

// Element of k(N)[L]: L are the variables of a MonomialOrder, N all the
// rest. Terms are in decreasing order.
struct FracCoefPoly {
    std::vector<FracTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& leading_monomial() const { return terms.front().mono; }
    const RationalFunction& leading_coefficient() const { return terms.front().coef; }
    // Back to k[N][L] when every denominator is 1; throws otherwise.
    Poly to_poly() const;
    std::string debug_string() const;

    friend bool operator==(const FracCoefPoly&, const FracCoefPoly&) = default;
};

FracCoefPoly to_frac(const Poly& f, const MonomialOrder& ord);

// Reduced, monic Groebner basis over Q. Every variable of the input must
// be in `ord`. Output sorted by increasing leading monomial; {1} for the
// unit ideal and {} for the zero ideal.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& ord);

// Same over k(N)[L] with L = the variables of `ord`.
std::vector<FracCoefPoly> groebner_basis(const std::vector<FracCoefPoly>& gens, const MonomialOrder& ord);
std::vector<FracCoefPoly> groebner_basis_frac(const std::vector<Poly>& gens, const MonomialOrder& ord);

// Interreduces and normalizes a Groebner basis.
std::vector<Poly> reduce_basis(const std::vector<Poly>& gb, const MonomialOrder& ord);

Poly normal_form(const Poly& f, const std::vector<Poly>& gb, const MonomialOrder& ord);
FracCoefPoly normal_form(const Poly& f, const std::vector<FracCoefPoly>& gb, const MonomialOrder& ord);

// Every S-polynomial reduces to zero and the basis is reduced and monic.
bool audit(const std::vector<Poly>& gb, const MonomialOrder& ord);
bool audit(const std::vector<FracCoefPoly>& gb, const MonomialOrder& ord);

// Elements of gb free of the variables outside `keep`. Throws
// std::invalid_argument if those variables are not a prefix of the order.
std::vector<Poly> eliminate(const std::vector<Poly>& gb, const MonomialOrder& ord, const std::vector<VarId>& keep);

// Reduced basis of (G):h^infinity, h the product of H, via an extra
// variable placed above the order. G, H over Q or over k(N)[L].
std::vector<Poly> saturate(const std::vector<Poly>& G, const std::vector<Poly>& H, const MonomialOrder& ord);
std::vector<FracCoefPoly> saturate_frac(const std::vector<Poly>& G, const std::vector<Poly>& H,
                                        const MonomialOrder& ord);

// f in (G):H^infinity over Q. The order is chosen internally.
bool saturation_membership(const Poly& f, const std::vector<Poly>& G, const std::vector<Poly>& H);

// Reduced basis of J1 ∩ J2 in k(N)[L] via s*J1 + (1-s)*J2 and eliminating s.
std::vector<FracCoefPoly> ideal_intersection(const std::vector<FracCoefPoly>& J1,
                                             const std::vector<FracCoefPoly>& J2, const MonomialOrder& ord);

// Instrumentation: when enabled every basis computed by this module is
// re-checked with audit(); the counters are process-wide.
struct AuditCounters {
    std::size_t bases = 0;
    std::size_t failures = 0;
};
void set_gb_self_audit(bool on);
AuditCounters gb_audit_counters();

} // namespace diffchar
