#include "hda/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hda {

std::string HomologyGroup::to_string(Coefficients coeff) const
{
    const std::string ring = coeff == Coefficients::integers ? "Z" : "Q";
    std::vector<std::string> parts;
    if (betti == 1) {
        parts.push_back(ring);
    } else if (betti > 1) {
        parts.push_back(ring + "^" + std::to_string(betti));
    }
    for (const auto& t : torsion) {
        parts.push_back("Z/" + t.str());
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

IntegerMatrix boundary_matrix(const PrecubicalSet& P, std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("boundary_matrix: degree must be at least 1");
    }
    IntegerMatrix d(P.size(n - 1), P.size(n));
    for (std::size_t x = 0; x < P.size(n); ++x) {
        const auto cube = static_cast<CubeIndex>(x);
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            const int s = i % 2 == 0 ? 1 : -1;
            d(static_cast<std::size_t>(P.face_unchecked(n, cube, 0, i)), x) += s;
            d(static_cast<std::size_t>(P.face_unchecked(n, cube, 1, i)), x) -= s;
        }
    }
    return d;
}

std::vector<HomologyGroup> homology(const PrecubicalSet& P, Coefficients coeff)
{
    const int top = P.max_dim();
    std::vector<HomologyGroup> out(static_cast<std::size_t>(std::max(top + 1, 0)));
    // rank of d_n and invariant factors of d_n, n = 1..top
    std::vector<std::size_t> rank(out.size() + 1, 0);
    std::vector<std::vector<Integer>> factors(out.size() + 1);
    for (std::size_t n = 1; n < out.size(); ++n) {
        const auto snf = smith_normal_form(boundary_matrix(P, n));
        rank[n] = snf.rank;
        factors[n] = snf.invariant_factors();
    }
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n].betti = P.size(n) - rank[n] - rank[n + 1];
        if (coeff == Coefficients::integers) {
            for (const auto& f : factors[n + 1]) {
                if (f > 1) {
                    out[n].torsion.push_back(f);
                }
            }
        }
    }
    return out;
}

IntegerMatrix cycle_basis(const PrecubicalSet& P, std::size_t n)
{
    if (n == 0) {
        return IntegerMatrix::identity(P.size(0));
    }
    const auto snf = smith_normal_form(boundary_matrix(P, n));
    return snf.V.columns_from(snf.rank);
}

std::vector<Monomial> exterior_basis(std::size_t alphabet_size, std::size_t degree)
{
    std::vector<Monomial> out;
    if (degree > alphabet_size) {
        return out;
    }
    Monomial m(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        m[i] = static_cast<LabelIndex>(i);
    }
    const auto n = static_cast<LabelIndex>(alphabet_size);
    const auto k = static_cast<LabelIndex>(degree);
    while (true) {
        out.push_back(m);
        LabelIndex i = k - 1;
        while (i >= 0 && m[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return out;
        }
        ++m[static_cast<std::size_t>(i)];
        for (LabelIndex j = i + 1; j < k; ++j) {
            m[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

ExteriorVector ExteriorVector::one()
{
    ExteriorVector v(0);
    v.coords_[{}] = 1;
    return v;
}

ExteriorVector ExteriorVector::generator(LabelIndex a)
{
    ExteriorVector v(1);
    v.coords_[{a}] = 1;
    return v;
}

ExteriorVector ExteriorVector::wedge_of(const std::vector<LabelIndex>& labels)
{
    ExteriorVector v(labels.size());
    Monomial m = labels;
    int s = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (std::size_t j = i; j > 0 && m[j - 1] >= m[j]; --j) {
            if (m[j - 1] == m[j]) {
                return v;
            }
            std::swap(m[j - 1], m[j]);
            s = -s;
        }
    }
    v.coords_[m] = s;
    return v;
}

Integer ExteriorVector::coefficient(const Monomial& m) const
{
    const auto it = coords_.find(m);
    return it == coords_.end() ? Integer(0) : it->second;
}

void ExteriorVector::add_term(const Monomial& m, const Integer& c)
{
    if (m.size() != degree_) {
        throw std::invalid_argument("exterior vector: monomial of the wrong degree");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = coords_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            coords_.erase(it);
        }
    }
}

ExteriorVector& ExteriorVector::operator+=(const ExteriorVector& other)
{
    if (other.degree_ != degree_) {
        throw std::invalid_argument("exterior vector: degree mismatch in sum");
    }
    for (const auto& [m, c] : other.coords_) {
        add_term(m, c);
    }
    return *this;
}

ExteriorVector operator*(const Integer& c, const ExteriorVector& v)
{
    ExteriorVector out(v.degree_);
    for (const auto& [m, x] : v.coords_) {
        out.add_term(m, c * x);
    }
    return out;
}

std::string ExteriorVector::to_string(const Alphabet& alphabet) const
{
    if (coords_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : coords_) {
        std::string word;
        for (std::size_t i = 0; i < m.size(); ++i) {
            word += (i > 0 ? "^" : "") + alphabet.label(m[i]);
        }
        if (word.empty()) {
            word = "1";
        }
        const Integer mag = abs(c);
        std::string term = mag == 1 ? word : mag.str() + " " + word;
        if (first) {
            out = (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
        first = false;
    }
    return out;
}

ExteriorVector wedge(const ExteriorVector& v, const ExteriorVector& w)
{
    ExteriorVector out(v.degree() + w.degree());
    for (const auto& [m1, c1] : v.coords()) {
        for (const auto& [m2, c2] : w.coords()) {
            Monomial joined = m1;
            joined.insert(joined.end(), m2.begin(), m2.end());
            const auto basis = ExteriorVector::wedge_of(joined);
            for (const auto& [m, s] : basis.coords()) {
                out.add_term(m, s * c1 * c2);
            }
        }
    }
    return out;
}

ExteriorVector label_chain(const Hda& H, std::size_t dim, CubeIndex x)
{
    if (x < 0 || static_cast<std::size_t>(x) >= H.cells.size(dim)) {
        throw std::out_of_range("label_chain: no cube #" + std::to_string(x) + " in dimension " + std::to_string(dim));
    }
    if (dim == 0) {
        return ExteriorVector::one();
    }
    std::vector<LabelIndex> labels;
    for (int i = 1; i <= static_cast<int>(dim); ++i) {
        labels.push_back(H.label(starting_edge(H.cells, dim, x, i)));
    }
    return ExteriorVector::wedge_of(labels);
}

IntegerMatrix labeling_matrix(const Hda& H, std::size_t n)
{
    const auto basis = exterior_basis(H.alphabet.size(), n);
    std::map<Monomial, std::size_t> row;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        row.emplace(basis[r], r);
    }
    IntegerMatrix L(basis.size(), H.cells.size(n));
    for (std::size_t x = 0; x < H.cells.size(n); ++x) {
        const auto l = label_chain(H, n, static_cast<CubeIndex>(x));
        for (const auto& [m, c] : l.coords()) {
            L(row.at(m), x) = c;
        }
    }
    return L;
}

std::string GradedLattice::to_string() const
{
    std::string out;
    for (std::size_t n = 0; n < generators.size(); ++n) {
        const auto& G = generators[n];
        out += "HL" + std::to_string(n) + ": ";
        if (G.cols() == 0) {
            out += "(0)\n";
            continue;
        }
        const auto basis = exterior_basis(alphabet.size(), n);
        out += "[ ";
        for (std::size_t c = 0; c < G.cols(); ++c) {
            ExteriorVector v(n);
            for (std::size_t r = 0; r < G.rows(); ++r) {
                v.add_term(basis[r], G(r, c));
            }
            out += (c > 0 ? ", " : "") + v.to_string(alphabet);
        }
        out += " ]\n";
    }
    return out;
}

IntegerMatrix canonical_span(const IntegerMatrix& m, Coefficients coeff)
{
    return coeff == Coefficients::integers ? hermite_normal_form(m) : rational_span_basis(m);
}

GradedLattice homology_language(const Hda& H, Coefficients coeff)
{
    GradedLattice out{H.alphabet, coeff, {}};
    for (int n = 0; n <= H.cells.max_dim(); ++n) {
        const auto dim = static_cast<std::size_t>(n);
        out.generators.push_back(canonical_span(labeling_matrix(H, dim) * cycle_basis(H.cells, dim), coeff));
    }
    return out;
}

namespace {

void require_comparable(const GradedLattice& a, const GradedLattice& b)
{
    if (!(a.alphabet == b.alphabet)) {
        throw std::invalid_argument("lattices live over different alphabets");
    }
    if (a.coeff != b.coeff) {
        throw std::invalid_argument("lattices use different coefficients");
    }
}

IntegerMatrix degree_or_zero(const GradedLattice& L, std::size_t n)
{
    if (n < L.generators.size()) {
        return L.generators[n];
    }
    return IntegerMatrix(exterior_basis(L.alphabet.size(), n).size(), 0);
}

} // namespace

bool lattice_equal(const GradedLattice& a, const GradedLattice& b)
{
    require_comparable(a, b);
    const std::size_t top = std::max(a.generators.size(), b.generators.size());
    for (std::size_t n = 0; n < top; ++n) {
        if (!(degree_or_zero(a, n) == degree_or_zero(b, n))) {
            return false;
        }
    }
    return true;
}

bool lattice_contains(const GradedLattice& big, const GradedLattice& small)
{
    require_comparable(big, small);
    const std::size_t top = std::max(big.generators.size(), small.generators.size());
    for (std::size_t n = 0; n < top; ++n) {
        const auto B = degree_or_zero(big, n);
        if (!(canonical_span(B.hconcat(degree_or_zero(small, n)), big.coeff) == B)) {
            return false;
        }
    }
    return true;
}

} // namespace hda
