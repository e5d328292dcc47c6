#include "hda/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hda {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const auto n = images_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": "
                                        + to_string());
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    Permutation id;
    id.images_ = std::move(images);
    return id;
}

int Permutation::preimage(int i) const
{
    auto it = std::find(images_.begin(), images_.end(), i);
    if (it == images_.end()) {
        throw std::out_of_range("value " + std::to_string(i) + " not in " + to_string());
    }
    return static_cast<int>(it - images_.begin()) + 1;
}

bool Permutation::is_identity() const
{
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j] != static_cast<int>(j + 1)) {
            return false;
        }
    }
    return true;
}

std::string Permutation::to_string() const
{
    std::string out = "[";
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (j > 0) {
            out += ',';
        }
        out += std::to_string(images_[j]);
    }
    out += ']';
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& theta)
{
    if (sigma.degree() != theta.degree()) {
        throw std::invalid_argument("compose: degree mismatch " + sigma.to_string() + " vs "
                                    + theta.to_string());
    }
    std::vector<int> images(theta.degree());
    for (std::size_t j = 0; j < images.size(); ++j) {
        images[j] = sigma(theta(static_cast<int>(j + 1)));
    }
    return Permutation(std::move(images));
}

Permutation invert(const Permutation& theta)
{
    std::vector<int> images(theta.degree());
    for (std::size_t j = 0; j < images.size(); ++j) {
        images[static_cast<std::size_t>(theta(static_cast<int>(j + 1)) - 1)] = static_cast<int>(j + 1);
    }
    return Permutation(std::move(images));
}

int sign(const Permutation& theta)
{
    const auto images = theta.images();
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = a + 1; b < images.size(); ++b) {
            if (images[a] > images[b]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation perm_face(const Permutation& theta, int i)
{
    const int n = static_cast<int>(theta.degree());
    if (i < 1 || i > n) {
        throw std::out_of_range("perm_face: index " + std::to_string(i) + " outside 1.."
                                + std::to_string(n));
    }
    const int pivot = theta.preimage(i);
    std::vector<int> images(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        const int value = j < pivot ? theta(j) : theta(j + 1);
        images[static_cast<std::size_t>(j - 1)] = value < i ? value : value - 1;
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 1);
    do {
        out.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

std::size_t factorial(std::size_t n)
{
    std::size_t f = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        f *= m;
    }
    return f;
}

// Lehmer code.
std::size_t lex_rank(const Permutation& theta)
{
    const auto images = theta.images();
    const std::size_t n = images.size();
    std::size_t rank = 0;
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t smaller_after = 0;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (images[b] < images[a]) {
                ++smaller_after;
            }
        }
        rank += smaller_after * factorial(n - 1 - a);
    }
    return rank;
}

Permutation lex_unrank(std::size_t n, std::size_t rank)
{
    if (rank >= factorial(n)) {
        throw std::out_of_range("lex_unrank: rank out of range");
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> images;
    images.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t block = factorial(n - 1 - a);
        const auto pick = static_cast<std::ptrdiff_t>(rank / block);
        rank %= block;
        images.push_back(pool[static_cast<std::size_t>(pick)]);
        pool.erase(pool.begin() + pick);
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> perms_with_faces(std::size_t n, std::span<const Permutation> faces)
{
    if (n < 1 || faces.size() != n) {
        throw std::invalid_argument("perms_with_faces: expected " + std::to_string(n) + " faces");
    }
    for (const auto& f : faces) {
        if (f.degree() != n - 1) {
            throw std::invalid_argument("perms_with_faces: face " + f.to_string()
                                        + " has wrong degree");
        }
    }
    std::vector<Permutation> out;
    for (const auto& theta : all_permutations(n)) {
        bool match = true;
        for (std::size_t i = 1; i <= n && match; ++i) {
            match = perm_face(theta, static_cast<int>(i)) == faces[i - 1];
        }
        if (match) {
            out.push_back(theta);
        }
    }
    return out;
}

CubePoint::CubePoint(std::vector<Rational> coords) : coords_(std::move(coords))
{
    for (const auto& c : coords_) {
        if (c < 0 || c > 1) {
            throw std::invalid_argument("cube point coordinate outside [0,1]: " + c.str());
        }
    }
}

CubePoint coface_point(int k, int i, const CubePoint& u)
{
    const int n = static_cast<int>(u.dimension());
    if (k != 0 && k != 1) {
        throw std::invalid_argument("coface_point: k must be 0 or 1");
    }
    if (i < 1 || i > n + 1) {
        throw std::out_of_range("coface_point: index " + std::to_string(i) + " outside 1.."
                                + std::to_string(n + 1));
    }
    auto coords = u.coords();
    coords.insert(coords.begin() + (i - 1), Rational(k));
    return CubePoint(std::move(coords));
}

CubePoint permute_point(const Permutation& theta, const CubePoint& u)
{
    if (theta.degree() != u.dimension()) {
        throw std::invalid_argument("permute_point: length mismatch");
    }
    std::vector<Rational> coords;
    coords.reserve(u.dimension());
    for (std::size_t j = 1; j <= u.dimension(); ++j) {
        coords.push_back(u.coords()[static_cast<std::size_t>(theta(static_cast<int>(j)) - 1)]);
    }
    return CubePoint(std::move(coords));
}

} // namespace hda
