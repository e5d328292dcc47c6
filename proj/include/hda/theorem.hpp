#pragma once

#include "hda/builder.hpp"
#include "hda/homology.hpp"
#include "hda/permutation.hpp"
#include "hda/relation.hpp"
#include "hda/symmetric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hda {

/// The permutation theta_b sorting the starting-edge labels of b under the
/// acyclic relation: lambda(e_{theta(i)} b) ltimes lambda(e_{theta(j)} b) for
/// i < j. Identity in dimensions <= 1. Throws HypothesisError if ltimes is
/// not acyclic or two starting-edge labels are unrelated.
Permutation theta_of_cube(const Hda& B, const LabelRelation& ltimes, std::size_t dim, CubeIndex b);

// Index-preserving identification of the 1-skeleta of B and Q, both built
// over the same transition system. Throws std::invalid_argument on a size
// mismatch in dimension 0 or 1.
GradedMap skeleton_identity(const Hda& B, const Hda& Q);

/// phi: B -> Q as a map of graded sets, extending `low` (dimensions 0 and 1)
/// by phi(b) = the unique cube of Q with faces y^k_i = phi(d^k_{theta_b(i)} b).
/// Throws FamilyLookupError when no such unique cube exists.
GradedMap phi_map(const Hda& B, const Hda& Q, const LabelRelation& ltimes, const GradedMap& low);
GradedMap phi_map(const Hda& B, const Hda& Q, const LabelRelation& ltimes);

// b -> (theta_b, phi(b)) as indices into the free symmetric HDA over Q.
GradedMap iso_to_free_symmetric(const Hda& A, const Hda& Q, const LabelRelation& ltimes,
                                const SymmetricLayout& layout);

// theta_{(theta, x)} == theta on every cube of SQ.
Report check_theta_on_free(const FreeSymmetricHda& SQ, const LabelRelation& ltimes);

// theta_{d^k_i b} == d_i theta_b on every cube of B.
Report check_theta_morphism(const Hda& B, const LabelRelation& ltimes);

// d^k_i phi(b) == phi(d^k_{theta_b(i)} b) on every cube of B.
Report check_phi_compatibility(const Hda& B, const Hda& Q, const LabelRelation& ltimes, const GradedMap& phi);

// l(SQ, (theta, x)) == sign(theta) l(Q, x) on every cube of SQ.
Report check_sign_identity(const FreeSymmetricHda& SQ, const Hda& Q);

struct TheoremReport {
    std::vector<std::size_t> sizes_q;
    std::vector<std::size_t> sizes_a;
    std::vector<std::size_t> sizes_sq;
    Report sq_model;  // SQ against ST and I
    bool iso_ok = false;
    Report iso_violations;
    Report auxiliary; // theta on SQ, theta morphism, phi compatibility, sign identity
    GradedLattice hl_q;
    GradedLattice hl_a;
    GradedLattice hl_sq;
    bool hl_equal = false;    // HL(A) == HL(Q)
    bool hl_sq_equal = false; // HL(SQ) == HL(Q)
    std::string witness;      // first failure, empty when everything holds

    [[nodiscard]] bool holds() const
    {
        return sq_model.ok() && iso_ok && auxiliary.ok() && hl_equal && hl_sq_equal;
    }
    [[nodiscard]] std::string to_string() const;
};

/// Builds Q (w.r.t. ltimes), A (w.r.t. I) and SQ, then checks that SQ is an
/// HDA model of ST w.r.t. I, that b -> (theta_b, phi(b)) is an isomorphism
/// A -> SQ and that HL(A) = HL(SQ) = HL(Q).
/// Throws HypothesisError unless I is an independence relation, ltimes is
/// acyclic and its symmetric closure is I; std::invalid_argument for an
/// invalid transition system.
TheoremReport check_main_theorem(const TransitionSystem& T, const LabelRelation& I, const LabelRelation& ltimes,
                                 Coefficients coeff = Coefficients::integers, const BuildOptions& options = {});

} // namespace hda
