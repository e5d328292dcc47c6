#include "hda/symmetric.hpp"

#include <stdexcept>

namespace hda {

SymCube act(const Permutation& sigma, const SymCube& c)
{
    return SymCube{compose(sigma, c.perm), c.base};
}

std::string sym_cube_id(const Permutation& theta, const std::string& base_id)
{
    return "(" + theta.to_string() + "|" + base_id + ")";
}

CubeIndex SymmetricLayout::index_of(const SymCube& c) const
{
    const std::size_t n = c.perm.degree();
    if (n >= base_sizes_.size() || c.base < 0 || static_cast<std::size_t>(c.base) >= base_sizes_[n]) {
        throw std::out_of_range("symmetric layout: no cube " + c.perm.to_string() + " x #" + std::to_string(c.base));
    }
    return static_cast<CubeIndex>(static_cast<std::size_t>(c.base) * factorial(n) + lex_rank(c.perm));
}

SymCube SymmetricLayout::cube(std::size_t dim, CubeIndex index) const
{
    const std::size_t f = factorial(dim);
    const auto idx = static_cast<std::size_t>(index);
    return SymCube{lex_unrank(dim, idx % f), static_cast<CubeIndex>(idx / f)};
}

std::size_t SymmetricLayout::size(std::size_t dim) const
{
    return dim < base_sizes_.size() ? base_sizes_[dim] * factorial(dim) : 0;
}

FreeSymmetricSet free_symmetric(const PrecubicalSet& P)
{
    if (auto report = validate_precubical(P); !report.ok()) {
        throw std::invalid_argument("free_symmetric: input is not a precubical set\n" + report.to_string());
    }
    FreeSymmetricSet out;
    out.layout = SymmetricLayout(P.sizes());
    std::vector<CubeIndex> lower;
    std::vector<CubeIndex> upper;
    for (int d = 0; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        const auto perms = all_permutations(dim);
        // d_i theta and theta^{-1}(i) do not depend on x.
        std::vector<std::vector<std::size_t>> face_rank(perms.size());
        for (std::size_t r = 0; r < perms.size(); ++r) {
            for (int i = 1; i <= d; ++i) {
                face_rank[r].push_back(lex_rank(perm_face(perms[r], i)));
            }
        }
        const std::size_t lower_fact = dim > 0 ? factorial(dim - 1) : 1;
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto base = static_cast<CubeIndex>(x);
            for (std::size_t r = 0; r < perms.size(); ++r) {
                const auto& theta = perms[r];
                lower.clear();
                upper.clear();
                for (int i = 1; i <= d; ++i) {
                    const int src = theta.preimage(i);
                    const auto rank = face_rank[r][static_cast<std::size_t>(i - 1)];
                    lower.push_back(static_cast<CubeIndex>(
                        static_cast<std::size_t>(P.face_unchecked(dim, base, 0, src)) * lower_fact + rank));
                    upper.push_back(static_cast<CubeIndex>(
                        static_cast<std::size_t>(P.face_unchecked(dim, base, 1, src)) * lower_fact + rank));
                }
                out.cells.add_cube(dim, sym_cube_id(theta, P.id(dim, base)), lower, upper);
            }
        }
    }
    return out;
}

FreeSymmetricHda free_symmetric_hda(const Hda& H)
{
    if (auto report = validate_hda(H); !report.ok()) {
        throw std::invalid_argument("free_symmetric_hda: input is not an HDA\n" + report.to_string());
    }
    auto sp = free_symmetric(H.cells);
    FreeSymmetricHda out;
    out.layout = sp.layout;
    out.hda.alphabet = H.alphabet;
    out.hda.cells = std::move(sp.cells);
    // S_0 and S_1 are trivial, so vertex and edge indices carry over.
    out.hda.initial = H.initial;
    out.hda.finals = H.finals;
    out.hda.labels = H.labels;
    return out;
}

CubeIndex SymmetricPrecubicalSet::act(const Permutation& sigma, CubeIndex x) const
{
    const std::size_t n = sigma.degree();
    return action.at(n).at(static_cast<std::size_t>(x) * factorial(n) + lex_rank(sigma));
}

SymmetricPrecubicalSet materialize_action(const FreeSymmetricSet& S)
{
    SymmetricPrecubicalSet out;
    out.cells = S.cells;
    out.action.resize(static_cast<std::size_t>(S.cells.max_dim() + 1));
    for (std::size_t dim = 0; dim < out.action.size(); ++dim) {
        const auto perms = all_permutations(dim);
        auto& table = out.action[dim];
        table.resize(S.cells.size(dim) * perms.size());
        for (std::size_t x = 0; x < S.cells.size(dim); ++x) {
            const auto c = S.layout.cube(dim, static_cast<CubeIndex>(x));
            for (std::size_t r = 0; r < perms.size(); ++r) {
                table[x * perms.size() + r] = S.layout.index_of(act(perms[r], c));
            }
        }
    }
    return out;
}

Report validate_crossed_action(const SymmetricPrecubicalSet& S)
{
    Report report;
    const auto& P = S.cells;
    for (int d = 0; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        const auto perms = all_permutations(dim);
        if (dim >= S.action.size() || S.action[dim].size() != P.size(dim) * perms.size()) {
            report.add("action-table", "action table incomplete in dimension " + std::to_string(dim));
            continue;
        }
        const auto& table = S.action[dim];
        bool in_range = true;
        for (CubeIndex y : table) {
            in_range = in_range && y >= 0 && static_cast<std::size_t>(y) < P.size(dim);
        }
        if (!in_range) {
            report.add("action-table", "action leaves dimension " + std::to_string(dim));
            continue;
        }
        auto at = [&](std::size_t r, CubeIndex x) { return table[static_cast<std::size_t>(x) * perms.size() + r]; };
        const std::size_t id_rank = 0;
        std::vector<std::size_t> product(perms.size() * perms.size());
        for (std::size_t a = 0; a < perms.size(); ++a) {
            for (std::size_t b = 0; b < perms.size(); ++b) {
                product[a * perms.size() + b] = lex_rank(compose(perms[a], perms[b]));
            }
        }
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto x = static_cast<CubeIndex>(xi);
            if (at(id_rank, x) != x) {
                report.add("action-identity", "id . " + P.describe(dim, x) + " = " + P.describe(dim, at(id_rank, x)));
            }
            for (std::size_t s = 0; s < perms.size(); ++s) {
                for (std::size_t t = 0; t < perms.size(); ++t) {
                    const auto st = product[s * perms.size() + t];
                    if (at(st, x) != at(s, at(t, x))) {
                        report.add("action-associativity", "sigma=" + perms[s].to_string() + " theta="
                                                               + perms[t].to_string() + " x=" + P.describe(dim, x));
                    }
                }
            }
            if (dim == 0) {
                continue;
            }
            for (std::size_t r = 0; r < perms.size(); ++r) {
                const auto& theta = perms[r];
                const CubeIndex moved = at(r, x);
                for (int i = 1; i <= d; ++i) {
                    const auto face_perm = perm_face(theta, i);
                    for (int k = 0; k <= 1; ++k) {
                        const CubeIndex lhs = P.face_unchecked(dim, moved, k, i);
                        const CubeIndex rhs = S.act(face_perm, P.face_unchecked(dim, x, k, theta.preimage(i)));
                        if (lhs != rhs) {
                            report.add("action-faces", "theta=" + theta.to_string() + " x=" + P.describe(dim, x)
                                                           + " (k=" + std::to_string(k) + ",i=" + std::to_string(i)
                                                           + "): " + P.describe(dim - 1, lhs)
                                                           + " != " + P.describe(dim - 1, rhs));
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace hda
