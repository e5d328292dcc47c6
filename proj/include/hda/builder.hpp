#pragma once

#include "hda/precubical.hpp"
#include "hda/relation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hda {

class DimensionCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every family of 2n cubes x^k_i in P_{n-1} (n >= 2) satisfying
/// d^k_i x^l_j = d^l_{j-1} x^k_i for i < j. Families come out in
/// lexicographic order of their entries taken k-major:
/// (x^0_1, ..., x^0_n, x^1_1, ..., x^1_n).
std::vector<BoundaryFamily> enumerate_compatible_families(const PrecubicalSet& P, std::size_t n);

/// Compatible families that may be filled in an HDA model with respect to R.
/// For n = 2 the entries are edges and the families must also satisfy
/// lambda(x^0_i) = lambda(x^1_i) and lambda(x^0_2) R lambda(x^0_1).
std::vector<BoundaryFamily> enumerate_fillable_families(const Hda& Q, std::size_t n, const LabelRelation& R);

struct BuildOptions {
    // Highest dimension the builder may fill; defaults to |alphabet| + 1.
    std::optional<std::size_t> max_dim;
};

/// The HDA model of T with respect to R: starting from T, fill one fresh
/// n-cube (id "q{n}:{j}") per fillable family, dimension by dimension, until
/// a dimension adds nothing. R is used verbatim.
/// Throws std::invalid_argument for an invalid transition system and
/// DimensionCapExceeded if cubes would appear above the cap.
Hda build_hda_model(const TransitionSystem& T, const LabelRelation& R, const BuildOptions& options = {});

// Lookup from boundary family to the cubes realizing it.
class FamilyIndex {
public:
    explicit FamilyIndex(const PrecubicalSet& P);

    [[nodiscard]] const std::vector<CubeIndex>& matches(const BoundaryFamily& family) const;

private:
    std::map<BoundaryFamily, std::vector<CubeIndex>> index_;
};

class FamilyLookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The unique cube with the given faces. Throws FamilyLookupError when there
// is none or more than one.
CubeIndex unique_cube_for_family(const Hda& Q, const BoundaryFamily& family);
CubeIndex unique_cube_for_family(const FamilyIndex& index, const PrecubicalSet& P, const BoundaryFamily& family);

// HM1 (Q_{<=1} = T), HM2 on squares, HM3 (no two cubes share all faces),
// HM4 (every fillable family up to max_dim + 1 is realized) and
// lambda(e_i x) R lambda(e_j x) for i < j on every cube.
Report verify_hda_model(const Hda& Q, const TransitionSystem& T, const LabelRelation& R);

std::string describe_family(const PrecubicalSet& P, const BoundaryFamily& family);

} // namespace hda
