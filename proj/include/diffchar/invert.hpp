#pragma once

#include "diffchar/groebner.hpp"
#include "diffchar/reduce.hpp"

#include <optional>
#include <vector>

namespace diffchar {

// f*g ≡ h mod (A):I_A^infinity with h free of leaders. When not
// invertible, h = 0 and g = Q(f) is the zero-divisor witness.
struct InvertResult {
    bool invertible = false;
    Poly g;
    Poly h;
    // Generator of the elimination ideal in k[N][w], lex-leading
    // coefficient 1; P(0) decides invertibility.
    Poly P;
    VarId w = 0;
    MonomialOrder order;
    std::vector<Poly> gb;
};

// Lex order L > w > N where L are the leaders of A in decreasing rank and N
// the remaining variables of f and A, also in decreasing rank.
// `fresh` overrides the auxiliary variable used for w.
InvertResult invert(const Poly& f, const TriangularSet& A, std::optional<VarId> fresh = std::nullopt);

} // namespace diffchar
