#pragma once

#include "diffchar/canonical.hpp"

#include <string>
#include <vector>

namespace diffchar {

// The characterizable ideal [charset]:H^infinity. `path` lists the
// splitting decisions that produced it, e.g. "y' != 0".
struct Component {
    TriangularSet charset;
    std::vector<std::string> path;
};

struct Decomposition {
    std::vector<Component> components;  // decreasing rank
    std::size_t branches = 0;
    std::size_t pruned = 0;
};

struct DecomposeOptions {
    // Drop components containing another component. Conservative: an
    // inclusion is only used when it is certified.
    bool prune = false;
};

// Radical of the differential ideal generated by F as an intersection of
// characterizable components. Empty iff 1 lies in it.
Decomposition rosenfeld_groebner(const RankedRing& ctx, const std::vector<Poly>& F, DecomposeOptions opt = {});

// The pruning pass on its own. A component is dropped when another kept
// component is contained in it: the elements of the smaller one reduce to
// zero and its initials and separants are invertible modulo the larger.
void prune(Decomposition& D);

// f in [C]:H_C^infinity for a characterizing set C.
bool member(const Poly& f, const TriangularSet& C);
// f in the intersection of all components.
bool member(const Poly& f, const Decomposition& D);

// [A]:H_A^infinity = [B]:H_B^infinity by mutual membership of the sets.
bool equal_ideals(const TriangularSet& A, const TriangularSet& B);

struct KolchinReport {
    bool a_in_j = false;
    bool b_in_i = false;
    bool ha_not_in_j = false;
    bool hb_not_in_i = false;

    bool equal() const { return a_in_j && b_in_i && ha_not_in_j && hb_not_in_i; }
};
KolchinReport kolchin_equality(const TriangularSet& A, const TriangularSet& B);

// Orders sets of leaders as autoreduced sets of degree one.
std::strong_ordering compare_leader_sets(const TriangularSet& A, const TriangularSet& B);

struct FromGenerators {
    CanonicalCharSet canonical;
    std::vector<std::size_t> selected;  // indices into decomposition.components
    Decomposition decomposition;
};

// Intersects every component whose leader set has the highest rank and
// normalizes the reduced basis of the result. When F is given the result
// is checked: every element of F must reduce to zero modulo it, and it
// must lie in every component. Failure throws NotCharacterizing.
FromGenerators canonical_from_decomposition(const RankedRing& ctx, Decomposition D, const std::vector<Poly>* F = nullptr);

FromGenerators canonical_from_generators(const RankedRing& ctx, const std::vector<Poly>& F, DecomposeOptions opt = {});

} // namespace diffchar
