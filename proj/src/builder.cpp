#include "hda/builder.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hda {

namespace {

// Depth-first search over the 2n slots of a family, in k-major order.
// Candidates for each slot after the first come from an index on the face
// d^0_1, keyed by the value forced by an already assigned slot; every other
// compatibility relation with assigned slots is checked before descending.
template <class SlotFilter>
std::vector<BoundaryFamily> enumerate_families(const PrecubicalSet& P, std::size_t n, SlotFilter&& accept)
{
    std::vector<BoundaryFamily> out;
    if (n < 2 || P.size(n - 1) == 0) {
        return out;
    }
    const std::size_t m = n - 1; // dimension of the entries
    const std::size_t slots = 2 * n;

    std::vector<std::vector<CubeIndex>> by_first_face(P.size(m - 1));
    for (std::size_t y = 0; y < P.size(m); ++y) {
        const CubeIndex f = P.face_unchecked(m, static_cast<CubeIndex>(y), 0, 1);
        by_first_face[static_cast<std::size_t>(f)].push_back(static_cast<CubeIndex>(y));
    }
    std::vector<CubeIndex> all(P.size(m));
    for (std::size_t y = 0; y < all.size(); ++y) {
        all[y] = static_cast<CubeIndex>(y);
    }

    auto slot_k = [n](std::size_t s) { return static_cast<int>(s / n); };
    auto slot_i = [n](std::size_t s) { return static_cast<int>(s % n) + 1; };

    std::vector<CubeIndex> entries(slots, kNoCube);
    auto x = [&](int k, int i) { return entries[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(i - 1)]; };

    auto candidates = [&](std::size_t s) -> const std::vector<CubeIndex>& {
        const int k = slot_k(s);
        const int i = slot_i(s);
        if (s == 0) {
            return all;
        }
        CubeIndex key;
        if (k == 0) {
            key = P.face_unchecked(m, x(0, 1), 0, i - 1);
        } else if (i == 1) {
            key = P.face_unchecked(m, x(0, 2), 1, 1);
        } else {
            key = P.face_unchecked(m, x(0, 1), 1, i - 1);
        }
        return by_first_face[static_cast<std::size_t>(key)];
    };

    auto compatible = [&](std::size_t s, CubeIndex y) {
        const int k = slot_k(s);
        const int i = slot_i(s);
        for (std::size_t t = 0; t < s; ++t) {
            const int l = slot_k(t);
            const int j = slot_i(t);
            const CubeIndex other = entries[t];
            if (i < j) {
                if (P.face_unchecked(m, other, k, i) != P.face_unchecked(m, y, l, j - 1)) {
                    return false;
                }
            } else if (j < i) {
                if (P.face_unchecked(m, y, l, j) != P.face_unchecked(m, other, k, i - 1)) {
                    return false;
                }
            }
        }
        return true;
    };

    std::vector<std::size_t> cursor(slots, 0);
    std::vector<const std::vector<CubeIndex>*> lists(slots, nullptr);
    std::size_t s = 0;
    lists[0] = &candidates(0);
    while (true) {
        if (cursor[s] == lists[s]->size()) {
            if (s == 0) {
                break;
            }
            entries[s] = kNoCube;
            --s;
            continue;
        }
        const CubeIndex y = (*lists[s])[cursor[s]++];
        if (!compatible(s, y)) {
            continue;
        }
        entries[s] = y;
        if (!accept(s, entries)) {
            continue;
        }
        if (s + 1 == slots) {
            out.push_back(BoundaryFamily{m + 1, entries});
            continue;
        }
        ++s;
        lists[s] = &candidates(s);
        cursor[s] = 0;
    }
    return out;
}

void append_faces(std::string& out, const PrecubicalSet& P, std::size_t dim, std::span<const CubeIndex> faces)
{
    out += "[";
    for (std::size_t a = 0; a < faces.size(); ++a) {
        out += (a > 0 ? "," : "") + P.describe(dim, faces[a]);
    }
    out += "]";
}

} // namespace

std::string describe_family(const PrecubicalSet& P, const BoundaryFamily& family)
{
    const std::span<const CubeIndex> e(family.entries);
    std::string out = "d0=";
    append_faces(out, P, family.dim - 1, e.first(family.dim));
    out += " d1=";
    append_faces(out, P, family.dim - 1, e.subspan(family.dim));
    return out;
}

std::vector<BoundaryFamily> enumerate_compatible_families(const PrecubicalSet& P, std::size_t n)
{
    return enumerate_families(P, n, [](std::size_t, const std::vector<CubeIndex>&) { return true; });
}

std::vector<BoundaryFamily> enumerate_fillable_families(const Hda& Q, std::size_t n, const LabelRelation& R)
{
    if (n != 2) {
        return enumerate_compatible_families(Q.cells, n);
    }
    // Slots in order: x^0_1, x^0_2, x^1_1, x^1_2.
    return enumerate_families(Q.cells, 2, [&](std::size_t s, const std::vector<CubeIndex>& e) {
        switch (s) {
        case 1:
            return R.contains(Q.label(e[1]), Q.label(e[0]));
        case 2:
            return Q.label(e[2]) == Q.label(e[0]);
        case 3:
            return Q.label(e[3]) == Q.label(e[1]);
        default:
            return true;
        }
    });
}

Hda build_hda_model(const TransitionSystem& T, const LabelRelation& R, const BuildOptions& options)
{
    Report report = validate_hda(T);
    if (report.ok()) {
        report.append(validate_transition_system(T));
    }
    if (!report.ok()) {
        throw std::invalid_argument("build_hda_model: not a transition system\n" + report.to_string());
    }
    if (R.alphabet_size() != T.alphabet.size()) {
        throw std::invalid_argument("build_hda_model: relation and alphabet sizes differ");
    }
    const std::size_t cap = options.max_dim.value_or(T.alphabet.size() + 1);
    Hda Q = T;
    for (std::size_t n = 2;; ++n) {
        const auto families = enumerate_fillable_families(Q, n, R);
        if (families.empty()) {
            break;
        }
        if (n > cap) {
            throw DimensionCapExceeded("build_hda_model: " + std::to_string(families.size())
                                       + " fillable cube(s) in dimension " + std::to_string(n)
                                       + " exceed the dimension cap " + std::to_string(cap));
        }
        for (std::size_t j = 0; j < families.size(); ++j) {
            const std::span<const CubeIndex> e(families[j].entries);
            Q.cells.add_cube(n, "q" + std::to_string(n) + ":" + std::to_string(j), e.first(n), e.subspan(n));
        }
    }
    return Q;
}

FamilyIndex::FamilyIndex(const PrecubicalSet& P)
{
    for (int d = 1; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            index_[boundary_family(P, dim, static_cast<CubeIndex>(x))].push_back(static_cast<CubeIndex>(x));
        }
    }
}

const std::vector<CubeIndex>& FamilyIndex::matches(const BoundaryFamily& family) const
{
    static const std::vector<CubeIndex> none;
    auto it = index_.find(family);
    return it == index_.end() ? none : it->second;
}

CubeIndex unique_cube_for_family(const FamilyIndex& index, const PrecubicalSet& P, const BoundaryFamily& family)
{
    const auto& found = index.matches(family);
    if (found.empty()) {
        throw FamilyLookupError("no cube of dimension " + std::to_string(family.dim) + " has faces "
                                + describe_family(P, family));
    }
    if (found.size() > 1) {
        throw FamilyLookupError("cubes " + P.describe(family.dim, found[0]) + " and "
                                + P.describe(family.dim, found[1]) + " share faces " + describe_family(P, family));
    }
    return found.front();
}

CubeIndex unique_cube_for_family(const Hda& Q, const BoundaryFamily& family)
{
    return unique_cube_for_family(FamilyIndex(Q.cells), Q.cells, family);
}

namespace {

void check_skeleton_matches(const Hda& Q, const TransitionSystem& T, Report& report)
{
    const auto& P = Q.cells;
    const auto& X = T.cells;
    for (std::size_t dim = 0; dim <= 1; ++dim) {
        if (P.size(dim) != X.size(dim)) {
            report.add("HM1", std::to_string(P.size(dim)) + " cubes of dimension " + std::to_string(dim)
                                  + " in the model, " + std::to_string(X.size(dim)) + " in the transition system");
        }
    }
    std::vector<CubeIndex> vertex(X.size(0), kNoCube);
    for (std::size_t v = 0; v < X.size(0); ++v) {
        const auto& id = X.id(0, static_cast<CubeIndex>(v));
        if (auto w = P.find(0, id)) {
            vertex[v] = *w;
        } else {
            report.add("HM1", "vertex '" + id + "' missing from the model");
        }
    }
    for (std::size_t e = 0; e < X.size(1); ++e) {
        const auto edge = static_cast<CubeIndex>(e);
        const auto& id = X.id(1, edge);
        auto f = P.find(1, id);
        if (!f) {
            report.add("HM1", "edge '" + id + "' missing from the model");
            continue;
        }
        for (int k = 0; k <= 1; ++k) {
            const CubeIndex want = vertex[static_cast<std::size_t>(X.face_unchecked(1, edge, k, 1))];
            if (P.face_unchecked(1, *f, k, 1) != want) {
                report.add("HM1", "edge '" + id + "' has different endpoints in the model");
            }
        }
        if (Q.alphabet.label(Q.label(*f)) != T.alphabet.label(T.label(edge))) {
            report.add("HM1", "edge '" + id + "' has a different label in the model");
        }
    }
    if (T.initial == kNoCube || Q.initial == kNoCube || P.id(0, Q.initial) != X.id(0, T.initial)) {
        report.add("HM1", "initial states differ");
    }
    std::set<std::string> finals_q;
    std::set<std::string> finals_t;
    for (CubeIndex v : Q.finals) {
        finals_q.insert(P.id(0, v));
    }
    for (CubeIndex v : T.finals) {
        finals_t.insert(X.id(0, v));
    }
    if (finals_q != finals_t) {
        report.add("HM1", "final states differ");
    }
}

} // namespace

Report verify_hda_model(const Hda& Q, const TransitionSystem& T, const LabelRelation& R)
{
    Report report = validate_hda(Q);
    if (!report.ok()) {
        return report;
    }
    const auto& P = Q.cells;
    check_skeleton_matches(Q, T, report);

    for (std::size_t xi = 0; xi < P.size(2); ++xi) {
        const auto x = static_cast<CubeIndex>(xi);
        const LabelIndex a = Q.label(P.face_unchecked(2, x, 0, 2));
        const LabelIndex b = Q.label(P.face_unchecked(2, x, 0, 1));
        if (!R.contains(a, b)) {
            report.add("HM2", P.describe(2, x) + ": ('" + Q.alphabet.label(a) + "','" + Q.alphabet.label(b)
                                  + "') not related");
        }
    }

    const FamilyIndex index(P);
    for (int d = 2; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        std::vector<bool> reported(P.size(dim), false);
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto& same = index.matches(boundary_family(P, dim, static_cast<CubeIndex>(xi)));
            if (same.size() > 1 && !reported[xi]) {
                for (CubeIndex y : same) {
                    reported[static_cast<std::size_t>(y)] = true;
                }
                report.add("HM3", P.describe(dim, same[0]) + " and " + P.describe(dim, same[1]) + " share all faces");
            }
        }
    }

    for (std::size_t n = 2; n <= static_cast<std::size_t>(std::max(P.max_dim(), 1)) + 1; ++n) {
        for (const auto& family : enumerate_fillable_families(Q, n, R)) {
            if (index.matches(family).empty()) {
                report.add("HM4", "unfilled family in dimension " + std::to_string(n) + ": "
                                      + describe_family(P, family));
            }
        }
    }

    for (int d = 2; d <= P.max_dim(); ++d) {
        const auto dim = static_cast<std::size_t>(d);
        for (std::size_t xi = 0; xi < P.size(dim); ++xi) {
            const auto x = static_cast<CubeIndex>(xi);
            std::vector<LabelIndex> labels;
            for (int i = 1; i <= d; ++i) {
                labels.push_back(Q.label(starting_edge(P, dim, x, i)));
            }
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j < d; ++j) {
                    if (!R.contains(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)])) {
                        report.add("starting-edges", P.describe(dim, x) + ": e_" + std::to_string(i + 1) + ", e_"
                                                         + std::to_string(j + 1) + " labels not related");
                    }
                }
            }
        }
    }
    return report;
}

} // namespace hda
