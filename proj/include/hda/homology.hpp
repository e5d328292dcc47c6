#pragma once

#include "hda/integer_matrix.hpp"
#include "hda/precubical.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hda {

enum class Coefficients { integers, rationals };

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion; // invariant factors > 1, each dividing the next

    // "Z^2 + Z/2", "Z", "0"; over the rationals "Q^2".
    [[nodiscard]] std::string to_string(Coefficients coeff = Coefficients::integers) const;
    bool operator==(const HomologyGroup&) const = default;
};

// Matrix of dx = sum_i (-1)^i (d^0_i x - d^1_i x) from C_n to C_{n-1}, in
// the dense cube order of each dimension.
IntegerMatrix boundary_matrix(const PrecubicalSet& P, std::size_t n);

// H_0 .. H_maxdim. Over the rationals torsion is always empty.
std::vector<HomologyGroup> homology(const PrecubicalSet& P, Coefficients coeff = Coefficients::integers);

// Columns form a basis of ker(d_n), saturated in Z^{P_n}; identity for n = 0.
IntegerMatrix cycle_basis(const PrecubicalSet& P, std::size_t n);

// A basis monomial of the exterior algebra: strictly increasing label indices.
using Monomial = std::vector<LabelIndex>;

// All degree-n monomials over an alphabet of the given size, in lexicographic order.
std::vector<Monomial> exterior_basis(std::size_t alphabet_size, std::size_t degree);

// An element of Lambda^n(Sigma), zero coefficients omitted.
class ExteriorVector {
public:
    explicit ExteriorVector(std::size_t degree = 0) : degree_(degree) {}

    static ExteriorVector one();
    static ExteriorVector generator(LabelIndex a);
    // +-(a_1 ^ ... ^ a_n) for arbitrary (not necessarily sorted) labels; zero on a repeat.
    static ExteriorVector wedge_of(const std::vector<LabelIndex>& labels);

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const std::map<Monomial, Integer>& coords() const { return coords_; }
    [[nodiscard]] Integer coefficient(const Monomial& m) const;
    [[nodiscard]] bool is_zero() const { return coords_.empty(); }

    void add_term(const Monomial& m, const Integer& c);

    ExteriorVector& operator+=(const ExteriorVector& other);
    friend ExteriorVector operator+(ExteriorVector a, const ExteriorVector& b) { return a += b; }
    friend ExteriorVector operator*(const Integer& c, const ExteriorVector& v);
    friend ExteriorVector operator-(const ExteriorVector& v) { return Integer(-1) * v; }

    // "2 a^b - b^c"; "1" for the unit, "0" for zero.
    [[nodiscard]] std::string to_string(const Alphabet& alphabet) const;

    bool operator==(const ExteriorVector&) const = default;

private:
    std::size_t degree_;
    std::map<Monomial, Integer> coords_;
};

ExteriorVector wedge(const ExteriorVector& v, const ExteriorVector& w);

// l(x) = lambda(e_1 x) ^ ... ^ lambda(e_n x); l(vertex) = 1.
ExteriorVector label_chain(const Hda& H, std::size_t dim, CubeIndex x);

// Matrix of l: C_n -> Lambda^n(Sigma), rows indexed by exterior_basis(|Sigma|, n).
IntegerMatrix labeling_matrix(const Hda& H, std::size_t n);

/// One lattice (or, over the rationals, subspace) per degree, held in
/// canonical form so that equality of lattices is equality of matrices.
struct GradedLattice {
    Alphabet alphabet;
    Coefficients coeff = Coefficients::integers;
    std::vector<IntegerMatrix> generators; // degree n: rows = exterior_basis(|Sigma|, n)

    [[nodiscard]] std::size_t rank(std::size_t degree) const
    {
        return degree < generators.size() ? generators[degree].cols() : 0;
    }
    // One line per degree: "HL2: [ a^b ]", "HL1: (0)".
    [[nodiscard]] std::string to_string() const;
};

// Canonical form of the column span of m: Hermite normal form over Z,
// primitive reduced echelon form over Q.
IntegerMatrix canonical_span(const IntegerMatrix& m, Coefficients coeff);

// HL_n = l(Z_n), for 0 <= n <= maxdim.
GradedLattice homology_language(const Hda& H, Coefficients coeff = Coefficients::integers);

// Degreewise equality; missing degrees count as zero. Throws
// std::invalid_argument if the alphabets or coefficient modes differ.
bool lattice_equal(const GradedLattice& a, const GradedLattice& b);

// small is contained in big in every degree.
bool lattice_contains(const GradedLattice& big, const GradedLattice& small);

} // namespace hda
