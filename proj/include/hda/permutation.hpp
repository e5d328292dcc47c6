#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hda {

using Rational = boost::multiprecision::cpp_rational;

// An element of the symmetric group S_n in one-line notation. Values are
// 1-based (theta(j) for j = 1..n), storage is 0-based. Degree 0 is the empty
// permutation.
class Permutation {
public:
    Permutation() = default;

    // Throws std::invalid_argument unless images is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t degree() const { return images_.size(); }

    // theta(j), 1 <= j <= n.
    [[nodiscard]] int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }

    // theta^{-1}(i), 1 <= i <= n.
    [[nodiscard]] int preimage(int i) const;

    [[nodiscard]] std::span<const int> images() const { return images_; }
    [[nodiscard]] bool is_identity() const;

    // "[2,3,1]"; the empty permutation renders as "[]".
    [[nodiscard]] std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// (sigma o theta)(j) = sigma(theta(j)). Throws on degree mismatch.
Permutation compose(const Permutation& sigma, const Permutation& theta);
Permutation invert(const Permutation& theta);

// +1 or -1 from the parity of the inversion count.
int sign(const Permutation& theta);

/// The face map d_i: S_n -> S_{n-1}. It does not depend on k, so there is a
/// single face per index. Throws std::out_of_range unless 1 <= i <= n.
Permutation perm_face(const Permutation& theta, int i);

// All elements of S_n in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(std::size_t n);

// Position of theta in all_permutations(theta.degree()).
std::size_t lex_rank(const Permutation& theta);
Permutation lex_unrank(std::size_t n, std::size_t rank);

std::size_t factorial(std::size_t n);

/// Exhaustive search for every theta in S_n with perm_face(theta, i) ==
/// faces[i-1] for all i. Intended as a brute-force oracle (n <= 7).
std::vector<Permutation> perms_with_faces(std::size_t n, std::span<const Permutation> faces);

// A point of the standard cube [0,1]^n with exact coordinates.
class CubePoint {
public:
    CubePoint() = default;
    // Throws std::invalid_argument if a coordinate lies outside [0,1].
    explicit CubePoint(std::vector<Rational> coords);

    [[nodiscard]] std::size_t dimension() const { return coords_.size(); }
    [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }

    bool operator==(const CubePoint&) const = default;

private:
    std::vector<Rational> coords_;
};

// delta^k_i: [0,1]^n -> [0,1]^{n+1}, inserting the constant k at slot i.
CubePoint coface_point(int k, int i, const CubePoint& u);

// t_theta(u_1..u_n) = (u_theta(1), ..., u_theta(n)).
CubePoint permute_point(const Permutation& theta, const CubePoint& u);

} // namespace hda
