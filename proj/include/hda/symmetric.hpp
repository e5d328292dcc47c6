#pragma once

#include "hda/permutation.hpp"
#include "hda/precubical.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hda {

// An element (theta, x) of SP_n = S_n x P_n.
struct SymCube {
    Permutation perm;
    CubeIndex base = kNoCube;

    bool operator==(const SymCube&) const = default;
};

// sigma . (theta, x) = (sigma o theta, x).
SymCube act(const Permutation& sigma, const SymCube& c);

// Canonical id "(theta|baseid)", e.g. "([2,1]|x)"; degree 0 renders as "([]|v)".
std::string sym_cube_id(const Permutation& theta, const std::string& base_id);

/// Index layout of a free symmetric precubical set: the n-cube (theta, x)
/// sits at x * n! + lex_rank(theta).
class SymmetricLayout {
public:
    SymmetricLayout() = default;
    explicit SymmetricLayout(std::vector<std::size_t> base_sizes) : base_sizes_(std::move(base_sizes)) {}

    [[nodiscard]] CubeIndex index_of(const SymCube& c) const;
    [[nodiscard]] SymCube cube(std::size_t dim, CubeIndex index) const;
    [[nodiscard]] std::size_t size(std::size_t dim) const;

private:
    std::vector<std::size_t> base_sizes_;
};

struct FreeSymmetricSet {
    PrecubicalSet cells;
    SymmetricLayout layout;
};

// SP with faces d^k_i(theta, x) = (d_i theta, d^k_{theta^{-1}(i)} x).
// Throws std::invalid_argument if P does not validate.
FreeSymmetricSet free_symmetric(const PrecubicalSet& P);

struct FreeSymmetricHda {
    Hda hda;
    SymmetricLayout layout;
};

// SQ = (SP, (id, i), S_0 x F, mu) with mu(id, x) = lambda(x).
FreeSymmetricHda free_symmetric_hda(const Hda& H);

/// A precubical set with an explicit crossed action of S. The action table
/// holds, per dimension n, the cube sigma . x at x * n! + lex_rank(sigma).
struct SymmetricPrecubicalSet {
    PrecubicalSet cells;
    std::vector<std::vector<CubeIndex>> action;

    [[nodiscard]] CubeIndex act(const Permutation& sigma, CubeIndex x) const;
};

// Tabulates the action of a free symmetric set.
SymmetricPrecubicalSet materialize_action(const FreeSymmetricSet& S);

// Exhaustive check of id . x = x, (sigma theta) . x = sigma . (theta . x) and
// d^k_i(theta . x) = d_i theta . d^k_{theta^{-1}(i)} x.
Report validate_crossed_action(const SymmetricPrecubicalSet& S);

} // namespace hda
