#pragma once

#include "diffchar/groebner.hpp"
#include "diffchar/invert.hpp"
#include "diffchar/reduce.hpp"

#include <string>
#include <vector>

namespace diffchar {

// What was removed from one element on the way to its canonical form:
// element = (lcm * g) / (content * scale).
struct NormalizationStep {
    Poly lcm = Poly(1);
    Poly content = Poly(1);
    Rational scale = Rational(1);
};

struct CanonicalCharSet {
    TriangularSet elements;
    std::vector<NormalizationStep> log;
    // Only filled by canonical_via_gb.
    std::vector<FracCoefPoly> gb;
    MonomialOrder order;
    // Only filled by canonical_via_invert; entry i-1 belongs to element i.
    std::vector<InvertResult> invert_trace;
};

struct CanonicalOptions {
    bool precheck = true;
};

// Throws NotCharacterizing unless A is autoreduced, coherent and every
// initial and separant is invertible modulo the preceding elements.
void check_characterizing(const TriangularSet& A);

// Reduced basis of (A):H_A^infinity in k(N)[L], then clearing of
// denominators and normalization.
CanonicalCharSet canonical_via_gb(const TriangularSet& A, CanonicalOptions opt = {});

// Clearing of denominators and normalization of a reduced basis in
// k(N)[L], L the variables of `ord`. Requires one element per leader
// with a pure power of it as leading monomial.
CanonicalCharSet canonical_from_basis(const RankedRing& ctx, std::vector<FracCoefPoly> gb, const MonomialOrder& ord);

// Inversion of initials followed by content removal. Shares no code with
// canonical_via_gb beyond the final scaling convention.
CanonicalCharSet canonical_via_invert(const TriangularSet& C, CanonicalOptions opt = {});

// q*g with q the lcm of the denominators of g.
Poly clear_denominators(const FracCoefPoly& g, Poly* lcm_out = nullptr);

// Divides f by the rational coefficient of the induced-lex leading term of
// its initial. Returns that coefficient.
Rational normalize_scale(const RankedRing& ctx, Poly& f);

struct CanonicalReport {
    bool autoreduced = true;
    bool leader_free_initials = true;   // condition 1
    bool no_factor_in_nonleaders = true; // condition 2, first part
    bool unit_leading_coefficient = true; // condition 2, second part
    std::string detail;

    bool ok() const { return autoreduced && leader_free_initials && no_factor_in_nonleaders && unit_leading_coefficient; }
};

// Syntactic conditions only; says nothing about characterizability.
CanonicalReport is_canonical(const TriangularSet& C);

// max order of the elements <= bound. Ordinary rings only; throws
// std::invalid_argument otherwise.
bool order_bound_check(const TriangularSet& C, int bound);

} // namespace diffchar
