#include "hda/precubical.hpp"

#include "hda/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace hda {

CubeIndex PrecubicalSet::add_cube(std::size_t dim, std::string id, std::span<const CubeIndex> lower,
                                  std::span<const CubeIndex> upper)
{
    if (id.empty()) {
        throw std::invalid_argument("cube id must be nonempty");
    }
    if (lower.size() != dim || upper.size() != dim) {
        throw std::invalid_argument("cube '" + id + "' of dimension " + std::to_string(dim)
                                    + " needs " + std::to_string(dim) + " faces per side");
    }
    if (ids_.size() <= dim) {
        ids_.resize(dim + 1);
        faces_.resize(dim + 1);
        index_.resize(dim + 1);
    }
    const auto x = static_cast<CubeIndex>(ids_[dim].size());
    if (!index_[dim].emplace(id, x).second) {
        throw std::invalid_argument("duplicate cube id '" + id + "' in dimension " + std::to_string(dim));
    }
    ids_[dim].push_back(std::move(id));
    faces_[dim].insert(faces_[dim].end(), lower.begin(), lower.end());
    faces_[dim].insert(faces_[dim].end(), upper.begin(), upper.end());
    return x;
}

int PrecubicalSet::max_dim() const
{
    for (std::size_t d = ids_.size(); d > 0; --d) {
        if (!ids_[d - 1].empty()) {
            return static_cast<int>(d - 1);
        }
    }
    return -1;
}

std::vector<std::size_t> PrecubicalSet::sizes() const
{
    std::vector<std::size_t> out(static_cast<std::size_t>(max_dim() + 1));
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d] = size(d);
    }
    return out;
}

std::size_t PrecubicalSet::total_size() const
{
    std::size_t total = 0;
    for (const auto& level : ids_) {
        total += level.size();
    }
    return total;
}

const std::string& PrecubicalSet::id(std::size_t dim, CubeIndex x) const
{
    if (x < 0 || static_cast<std::size_t>(x) >= size(dim)) {
        throw std::out_of_range("no cube #" + std::to_string(x) + " in dimension " + std::to_string(dim));
    }
    return ids_[dim][static_cast<std::size_t>(x)];
}

std::optional<CubeIndex> PrecubicalSet::find(std::size_t dim, std::string_view id) const
{
    if (dim >= index_.size()) {
        return std::nullopt;
    }
    auto it = index_[dim].find(std::string(id));
    if (it == index_[dim].end()) {
        return std::nullopt;
    }
    return it->second;
}

CubeIndex PrecubicalSet::index_of(std::size_t dim, std::string_view id) const
{
    auto x = find(dim, id);
    if (!x) {
        throw std::out_of_range("unknown cube '" + std::string(id) + "' in dimension " + std::to_string(dim));
    }
    return *x;
}

CubeIndex PrecubicalSet::face(std::size_t dim, CubeIndex x, int k, int i) const
{
    if (dim == 0) {
        throw std::out_of_range("vertices have no faces");
    }
    if (x < 0 || static_cast<std::size_t>(x) >= size(dim)) {
        throw std::out_of_range("unknown cube #" + std::to_string(x) + " in dimension " + std::to_string(dim));
    }
    if ((k != 0 && k != 1) || i < 1 || static_cast<std::size_t>(i) > dim) {
        throw std::out_of_range("face index (k=" + std::to_string(k) + ", i=" + std::to_string(i)
                                + ") out of range for dimension " + std::to_string(dim));
    }
    return face_unchecked(dim, x, k, i);
}

std::span<const CubeIndex> PrecubicalSet::faces(std::size_t dim, CubeIndex x) const
{
    if (dim == 0) {
        return {};
    }
    return std::span<const CubeIndex>(faces_[dim]).subspan(static_cast<std::size_t>(x) * 2 * dim, 2 * dim);
}

std::string PrecubicalSet::describe(std::size_t dim, CubeIndex x) const
{
    if (x >= 0 && static_cast<std::size_t>(x) < size(dim)) {
        return "'" + ids_[dim][static_cast<std::size_t>(x)] + "'";
    }
    return "<#" + std::to_string(x) + " in dim " + std::to_string(dim) + ">";
}

CubeIndex starting_edge(const PrecubicalSet& P, std::size_t dim, CubeIndex x, int i)
{
    if (dim == 0 || i < 1 || static_cast<std::size_t>(i) > dim) {
        throw std::out_of_range("starting_edge: index " + std::to_string(i) + " out of range for dimension "
                                + std::to_string(dim));
    }
    CubeIndex cur = x;
    std::size_t d = dim;
    for (int r = static_cast<int>(dim); r > i; --r, --d) {
        cur = P.face(d, cur, 0, r);
    }
    for (int r = i - 1; r >= 1; --r, --d) {
        cur = P.face(d, cur, 0, r);
    }
    return cur;
}

PrecubicalSet skeleton(const PrecubicalSet& P, std::size_t n)
{
    PrecubicalSet out;
    const int top = std::min(P.max_dim(), static_cast<int>(n));
    for (int d = 0; d <= top; ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            auto f = P.faces(dim, static_cast<CubeIndex>(x));
            out.add_cube(dim, P.id(dim, static_cast<CubeIndex>(x)), f.first(dim), f.subspan(dim));
        }
    }
    return out;
}

BoundaryFamily boundary_family(const PrecubicalSet& P, std::size_t dim, CubeIndex x)
{
    auto f = P.faces(dim, x);
    return BoundaryFamily{dim, std::vector<CubeIndex>(f.begin(), f.end())};
}

Report validate_precubical(const PrecubicalSet& P)
{
    Report report;
    const int top = P.max_dim();
    std::vector<bool> dim_ok(static_cast<std::size_t>(std::max(top, 0)) + 1, true);
    for (int d = 1; d <= top; ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            auto faces = P.faces(dim, static_cast<CubeIndex>(x));
            for (std::size_t s = 0; s < faces.size(); ++s) {
                if (faces[s] < 0 || static_cast<std::size_t>(faces[s]) >= P.size(dim - 1)) {
                    report.add("dangling-face", P.describe(dim, static_cast<CubeIndex>(x)) + " face (k="
                                                    + std::to_string(s / dim) + ", i=" + std::to_string(s % dim + 1)
                                                    + ") refers to a missing cube");
                    dim_ok[dim] = false;
                }
            }
        }
    }
    for (int d = 2; d <= top; ++d) {
        const auto dim = static_cast<std::size_t>(d);
        if (!dim_ok[dim] || !dim_ok[dim - 1]) {
            continue;
        }
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto x = static_cast<CubeIndex>(xi);
            for (int i = 1; i < d; ++i) {
                for (int j = i + 1; j <= d; ++j) {
                    for (int k = 0; k <= 1; ++k) {
                        for (int l = 0; l <= 1; ++l) {
                            const CubeIndex lhs = P.face_unchecked(dim - 1, P.face_unchecked(dim, x, l, j), k, i);
                            const CubeIndex rhs = P.face_unchecked(dim - 1, P.face_unchecked(dim, x, k, i), l, j - 1);
                            if (lhs != rhs) {
                                report.add("cubical-identity",
                                           P.describe(dim, x) + " (k=" + std::to_string(k) + ",l=" + std::to_string(l)
                                               + ",i=" + std::to_string(i) + ",j=" + std::to_string(j) + "): "
                                               + P.describe(dim - 2, lhs) + " != " + P.describe(dim - 2, rhs));
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

Report validate_permuted_identities(const PrecubicalSet& P, std::size_t max_dim)
{
    Report report;
    const auto top = std::min(static_cast<std::size_t>(std::max(P.max_dim(), 0)), max_dim);
    for (std::size_t dim = 2; dim <= top; ++dim) {
        const int n = static_cast<int>(dim);
        for (const auto& theta : all_permutations(dim)) {
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    const int lhs_outer = perm_face(theta, theta(j))(i);
                    const int rhs_outer = perm_face(theta, theta(i))(j - 1);
                    for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
                        const auto x = static_cast<CubeIndex>(xi);
                        for (int k = 0; k <= 1; ++k) {
                            for (int l = 0; l <= 1; ++l) {
                                const CubeIndex lhs =
                                    P.face_unchecked(dim - 1, P.face_unchecked(dim, x, l, theta(j)), k, lhs_outer);
                                const CubeIndex rhs =
                                    P.face_unchecked(dim - 1, P.face_unchecked(dim, x, k, theta(i)), l, rhs_outer);
                                if (lhs != rhs) {
                                    report.add("permuted-identity",
                                               P.describe(dim, x) + " theta=" + theta.to_string() + " (k="
                                                   + std::to_string(k) + ",l=" + std::to_string(l) + ",i="
                                                   + std::to_string(i) + ",j=" + std::to_string(j) + ")");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

Report validate_hda(const Hda& H)
{
    Report report = validate_precubical(H.cells);
    const auto& P = H.cells;
    if (H.initial < 0 || static_cast<std::size_t>(H.initial) >= P.size(0)) {
        report.add("initial", "initial state is not a vertex");
    }
    for (CubeIndex f : H.finals) {
        if (f < 0 || static_cast<std::size_t>(f) >= P.size(0)) {
            report.add("finals", "final state " + P.describe(0, f) + " is not a vertex");
        }
    }
    if (H.labels.size() != P.size(1)) {
        report.add("labels", std::to_string(H.labels.size()) + " labels for " + std::to_string(P.size(1)) + " edges");
        return report;
    }
    bool labels_ok = true;
    for (std::size_t e = 0; e < H.labels.size(); ++e) {
        if (H.labels[e] < 0 || static_cast<std::size_t>(H.labels[e]) >= H.alphabet.size()) {
            report.add("labels", "edge " + P.describe(1, static_cast<CubeIndex>(e)) + " has no label in the alphabet");
            labels_ok = false;
        }
    }
    if (!labels_ok || report.has("dangling-face")) {
        return report;
    }
    for (std::size_t xi = 0; xi < P.size(2); ++xi) {
        const auto x = static_cast<CubeIndex>(xi);
        for (int i = 1; i <= 2; ++i) {
            const LabelIndex lower = H.label(P.face_unchecked(2, x, 0, i));
            const LabelIndex upper = H.label(P.face_unchecked(2, x, 1, i));
            if (lower != upper) {
                report.add("label-condition", P.describe(2, x) + " i=" + std::to_string(i) + ": '"
                                                  + H.alphabet.label(lower) + "' vs '" + H.alphabet.label(upper)
                                                  + "'");
            }
        }
    }
    return report;
}

Report validate_parallel_edge_labels(const Hda& H)
{
    Report report;
    const auto& P = H.cells;
    for (int d = 2; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto x = static_cast<CubeIndex>(xi);
            for (int i = 1; i <= d; ++i) {
                const CubeIndex lower = P.face_unchecked(dim, x, 0, i);
                const CubeIndex upper = P.face_unchecked(dim, x, 1, i);
                for (int j = 1; j < d; ++j) {
                    if (H.label(starting_edge(P, dim - 1, lower, j)) != H.label(starting_edge(P, dim - 1, upper, j))) {
                        report.add("parallel-edges", P.describe(dim, x) + " i=" + std::to_string(i) + " j="
                                                         + std::to_string(j));
                    }
                }
            }
        }
    }
    return report;
}

Hda skeleton(const Hda& H, std::size_t n)
{
    Hda out;
    out.alphabet = H.alphabet;
    out.cells = skeleton(H.cells, n);
    out.initial = H.initial;
    out.finals = H.finals;
    out.labels = n >= 1 ? H.labels : std::vector<LabelIndex>{};
    return out;
}

bool MorphismReport::is_isomorphism() const
{
    return is_morphism() && finals_onto
           && std::all_of(bijective.begin(), bijective.end(), [](bool b) { return b; });
}

MorphismReport check_hda_morphism(const GradedMap& f, const Hda& A, const Hda& B)
{
    MorphismReport out;
    auto& report = out.violations;
    const auto& P = A.cells;
    const auto& Q = B.cells;
    const int top = std::max(P.max_dim(), Q.max_dim());
    out.bijective.assign(static_cast<std::size_t>(std::max(top, 0)) + 1, false);

    bool defined = true;
    for (int d = 0; d <= top; ++d) {
        const auto dim = static_cast<std::size_t>(d);
        const std::size_t given = dim < f.images.size() ? f.images[dim].size() : 0;
        if (given != P.size(dim)) {
            report.add("morphism-domain", "map defined on " + std::to_string(given) + " of "
                                              + std::to_string(P.size(dim)) + " cubes in dimension "
                                              + std::to_string(dim));
            defined = false;
            continue;
        }
        std::vector<bool> hit(Q.size(dim), false);
        std::size_t hits = 0;
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const CubeIndex y = f.images[dim][x];
            if (y < 0 || static_cast<std::size_t>(y) >= Q.size(dim)) {
                report.add("morphism-range", P.describe(dim, static_cast<CubeIndex>(x)) + " maps outside the target");
                defined = false;
                continue;
            }
            if (!hit[static_cast<std::size_t>(y)]) {
                hit[static_cast<std::size_t>(y)] = true;
                ++hits;
            }
        }
        out.bijective[dim] = defined && P.size(dim) == Q.size(dim) && hits == Q.size(dim);
    }
    if (!defined) {
        return out;
    }

    for (int d = 1; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto x = static_cast<CubeIndex>(xi);
            const CubeIndex y = f(dim, x);
            for (int k = 0; k <= 1; ++k) {
                for (int i = 1; i <= d; ++i) {
                    if (f(dim - 1, P.face_unchecked(dim, x, k, i)) != Q.face_unchecked(dim, y, k, i)) {
                        report.add("morphism-faces", P.describe(dim, x) + " (k=" + std::to_string(k) + ",i="
                                                         + std::to_string(i) + ")");
                    }
                }
            }
        }
    }
    if (P.size(0) > 0 && (A.initial < 0 || f(0, A.initial) != B.initial)) {
        report.add("morphism-initial", "initial state not preserved");
    }
    std::vector<CubeIndex> image;
    for (CubeIndex v : A.finals) {
        const CubeIndex w = f(0, v);
        if (!std::binary_search(B.finals.begin(), B.finals.end(), w)) {
            report.add("morphism-finals", "final state " + P.describe(0, v) + " maps to a non-final state");
        }
        image.push_back(w);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    out.finals_onto = image == B.finals;
    for (std::size_t e = 0; e < P.size(1); ++e) {
        const auto& la = A.alphabet.label(A.label(static_cast<CubeIndex>(e)));
        const auto& lb = B.alphabet.label(B.label(f(1, static_cast<CubeIndex>(e))));
        if (la != lb) {
            report.add("morphism-labels", P.describe(1, static_cast<CubeIndex>(e)) + " labeled '" + la
                                              + "' maps to an edge labeled '" + lb + "'");
        }
    }
    return out;
}

GradedMap identity_map(const PrecubicalSet& P)
{
    GradedMap f;
    f.images.resize(static_cast<std::size_t>(P.max_dim() + 1));
    for (std::size_t d = 0; d < f.images.size(); ++d) {
        f.images[d].resize(P.size(d));
        for (std::size_t x = 0; x < P.size(d); ++x) {
            f.images[d][x] = static_cast<CubeIndex>(x);
        }
    }
    return f;
}

} // namespace hda
