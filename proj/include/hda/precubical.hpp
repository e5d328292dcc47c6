#pragma once

#include "hda/alphabet.hpp"
#include "hda/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hda {

// Dense index of a cube within its dimension.
using CubeIndex = std::int32_t;
inline constexpr CubeIndex kNoCube = -1;

// The 2n faces (k, i) of an n-cube, or of a prospective one. Entries are
// stored k-major: entries[k * n + (i - 1)].
struct BoundaryFamily {
    std::size_t dim = 0;
    std::vector<CubeIndex> entries;

    [[nodiscard]] CubeIndex at(int k, int i) const { return entries[static_cast<std::size_t>(k) * dim + static_cast<std::size_t>(i - 1)]; }
    auto operator<=>(const BoundaryFamily&) const = default;
};

/// A finite precubical set: cubes graded by dimension, each carrying its
/// face maps d^k_i into the dimension below.
///
/// Cubes have a dense index per dimension (insertion order) and a stable
/// string id unique within the dimension. Face indices are stored unchecked;
/// validate_precubical() reports dangling ones and any broken cubical
/// identity.
class PrecubicalSet {
public:
    // Appends an n-cube. For n >= 1, lower[i-1] = d^0_i and upper[i-1] = d^1_i.
    // Throws std::invalid_argument on a duplicate id or a face count != n.
    CubeIndex add_cube(std::size_t dim, std::string id, std::span<const CubeIndex> lower = {},
                       std::span<const CubeIndex> upper = {});

    // Highest dimension holding a cube, -1 when empty.
    [[nodiscard]] int max_dim() const;
    [[nodiscard]] std::size_t size(std::size_t dim) const { return dim < ids_.size() ? ids_[dim].size() : 0; }
    // Sizes for dimensions 0..max_dim.
    [[nodiscard]] std::vector<std::size_t> sizes() const;
    [[nodiscard]] std::size_t total_size() const;

    [[nodiscard]] const std::string& id(std::size_t dim, CubeIndex x) const;
    [[nodiscard]] std::optional<CubeIndex> find(std::size_t dim, std::string_view id) const;
    // Throws std::out_of_range for an unknown id.
    [[nodiscard]] CubeIndex index_of(std::size_t dim, std::string_view id) const;

    // d^k_i x. Throws std::out_of_range unless x exists, dim >= 1 and 1 <= i <= dim.
    [[nodiscard]] CubeIndex face(std::size_t dim, CubeIndex x, int k, int i) const;
    // Unchecked accessors for inner loops.
    [[nodiscard]] CubeIndex face_unchecked(std::size_t dim, CubeIndex x, int k, int i) const
    {
        return faces_[dim][static_cast<std::size_t>(x) * 2 * dim + static_cast<std::size_t>(k) * dim
                           + static_cast<std::size_t>(i - 1)];
    }
    [[nodiscard]] std::span<const CubeIndex> faces(std::size_t dim, CubeIndex x) const;

    // Human-readable "id" with dimension, for reports.
    [[nodiscard]] std::string describe(std::size_t dim, CubeIndex x) const;

private:
    std::vector<std::vector<std::string>> ids_;
    std::vector<std::vector<CubeIndex>> faces_; // per dim, 2n entries per cube
    std::vector<std::unordered_map<std::string, CubeIndex>> index_;
};

// e_i x = d^0_1 ... d^0_{i-1} d^0_{i+1} ... d^0_n x, an edge.
CubeIndex starting_edge(const PrecubicalSet& P, std::size_t dim, CubeIndex x, int i);

// Cubes of dimension <= n with their faces.
PrecubicalSet skeleton(const PrecubicalSet& P, std::size_t n);

BoundaryFamily boundary_family(const PrecubicalSet& P, std::size_t dim, CubeIndex x);

// Dangling faces and violations of d^k_i d^l_j = d^l_{j-1} d^k_i (i < j).
Report validate_precubical(const PrecubicalSet& P);

/// Checks the permuted form of the cubical identities,
///   d^k_{d_{theta(j)}theta(i)} d^l_{theta(j)} x = d^l_{d_{theta(i)}theta(j-1)} d^k_{theta(i)} x,
/// for every x of dimension 2..max_dim, theta in S_n, i < j and k, l.
/// Assumes P already validates.
Report validate_permuted_identities(const PrecubicalSet& P, std::size_t max_dim = 4);

/// A higher-dimensional automaton: a precubical set with an initial vertex,
/// final vertices and a labeling of edges by the alphabet.
struct Hda {
    Alphabet alphabet;
    PrecubicalSet cells;
    CubeIndex initial = kNoCube;
    std::vector<CubeIndex> finals;  // sorted, unique
    std::vector<LabelIndex> labels; // one per edge

    [[nodiscard]] LabelIndex label(CubeIndex edge) const { return labels[static_cast<std::size_t>(edge)]; }
};

// A transition system is an Hda with no cubes above dimension 1 and no two
// edges sharing (source, label, target); see validate_transition_system().
using TransitionSystem = Hda;

// Precubical validity, label condition on squares, initial/final vertices
// exist, every edge carries a label of the alphabet.
Report validate_hda(const Hda& H);

// lambda(e_j d^0_i x) == lambda(e_j d^1_i x) for every x of dimension >= 2.
Report validate_parallel_edge_labels(const Hda& H);

Hda skeleton(const Hda& H, std::size_t n);

// A dimension-wise map between cube indices.
struct GradedMap {
    std::vector<std::vector<CubeIndex>> images;

    [[nodiscard]] CubeIndex operator()(std::size_t dim, CubeIndex x) const
    {
        return images[dim][static_cast<std::size_t>(x)];
    }
};

struct MorphismReport {
    Report violations;
    std::vector<bool> bijective; // per dimension of the domain
    bool finals_onto = false;    // f(F) == F'

    [[nodiscard]] bool is_morphism() const { return violations.ok(); }
    [[nodiscard]] bool is_isomorphism() const;
};

// Checks that f: A -> B is an HDA morphism: defined everywhere, commutes with
// every face map, preserves initial state, finals and labels. Bijectivity is
// reported per dimension.
MorphismReport check_hda_morphism(const GradedMap& f, const Hda& A, const Hda& B);

GradedMap identity_map(const PrecubicalSet& P);

} // namespace hda
