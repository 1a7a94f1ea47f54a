#pragma once

#include "diffchar/diff.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace diffchar {

// Differential polynomials sorted by increasing rank with pairwise
// distinct leaders.
class TriangularSet {
public:
    TriangularSet(RankedRing ctx, std::vector<Poly> elements);

    const RankedRing& ctx() const { return ctx_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Poly& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Poly>& elements() const { return elems_; }

    VarId leader(std::size_t i) const { return anat_[i].leader; }
    std::uint32_t degree(std::size_t i) const { return anat_[i].degree; }
    const Poly& initial(std::size_t i) const { return anat_[i].initial; }
    const Poly& separant(std::size_t i) const { return anat_[i].separant; }
    std::vector<VarId> leaders() const;
    bool is_leader(VarId v) const;

    // Distinct nonconstant initials and separants, i.e. the factors of H_A.
    std::vector<Poly> h_factors() const;
    TriangularSet prefix(std::size_t k) const;
    bool is_autoreduced() const;

    friend bool operator==(const TriangularSet& a, const TriangularSet& b) { return a.elems_ == b.elems_; }

private:
    RankedRing ctx_;
    std::vector<Poly> elems_;
    std::vector<Anatomy> anat_;
};

inline std::ostream& operator<<(std::ostream& os, const TriangularSet& A) {
    os << "{";
    for (std::size_t i = 0; i < A.size(); ++i)
        os << (i ? ", " : "") << A[i];
    return os << "}";
}

// theta(A[index]) * cofactor
struct ProlongationTerm {
    std::vector<std::uint32_t> theta;
    std::size_t index;
    Poly cofactor;
};

// product(multiplier) * f = remainder + sum of the combination terms.
struct RemainderCertificate {
    Poly remainder;
    std::vector<std::pair<Poly, unsigned>> multiplier;
    std::vector<ProlongationTerm> combination;
    bool certified = true;

    Poly multiplier_product() const;
    bool verify(const Poly& f, const TriangularSet& A) const;
};

// Eliminates proper derivatives of leaders, highest first. With
// certify = false the combination is not recorded.
RemainderCertificate partial_remainder(const Poly& f, const TriangularSet& A, bool certify = true);
RemainderCertificate full_remainder(const Poly& f, const TriangularSet& A, bool certify = true);

enum class Reducedness { fully, partially, no };
Reducedness is_reduced(const Poly& f, const TriangularSet& A);

// less means A has lower rank than B.
std::strong_ordering compare_sets(const TriangularSet& A, const TriangularSet& B);

// Lowest-rank autoreduced subset, built greedily from the lowest element.
// Zeros are ignored; a nonzero constant throws TrivialIdeal.
TriangularSet basic_set(const RankedRing& ctx, std::vector<Poly> polys);

// Repeats basic set + full remainders to a fixpoint.
TriangularSet autoreduce(const RankedRing& ctx, std::vector<Poly> polys);

// Decides f in (G):H^infinity.
using MembershipOracle = std::function<bool(const Poly&, const std::vector<Poly>&, const std::vector<Poly>&)>;

struct CoherenceReport {
    bool coherent = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    Poly delta;
    Poly remainder;
};

// S_j*psi(A_i) - S_i*phi(A_j) for leaders psi(u_i) = phi(u_j) = lcm, one
// per pair of elements whose leaders derive the same indeterminate.
struct DeltaPolynomial {
    std::size_t i, j;
    VarId lcm;
    Poly delta;
};
std::vector<DeltaPolynomial> delta_polynomials(const TriangularSet& A);

// Checks every Delta-polynomial. The ordinary case is coherent without
// any computation.
CoherenceReport is_coherent(const TriangularSet& A, const MembershipOracle& oracle = {});

} // namespace diffchar
