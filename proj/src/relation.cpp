#include "hda/relation.hpp"

#include <set>
#include <tuple>

namespace hda {

LabelRelation LabelRelation::from_pairs(const Alphabet& alphabet,
                                        const std::vector<std::pair<std::string, std::string>>& pairs)
{
    LabelRelation R(alphabet.size());
    for (const auto& [a, b] : pairs) {
        R.insert(alphabet.index_of(a), alphabet.index_of(b));
    }
    return R;
}

void LabelRelation::insert(LabelIndex a, LabelIndex b)
{
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size_ || static_cast<std::size_t>(b) >= size_) {
        throw std::invalid_argument("relation pair outside the alphabet");
    }
    bits_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)] = 1;
}

bool LabelRelation::empty() const
{
    for (char bit : bits_) {
        if (bit != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<LabelIndex, LabelIndex>> LabelRelation::pairs() const
{
    std::vector<std::pair<LabelIndex, LabelIndex>> out;
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
            if (bits_[a * size_ + b] != 0) {
                out.emplace_back(static_cast<LabelIndex>(a), static_cast<LabelIndex>(b));
            }
        }
    }
    return out;
}

std::string LabelRelation::to_string(const Alphabet& alphabet) const
{
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : pairs()) {
        out += (first ? "(" : ", (") + alphabet.label(a) + "," + alphabet.label(b) + ")";
        first = false;
    }
    return out + "}";
}

PriorityMap PriorityMap::from_map(const Alphabet& alphabet, const std::map<std::string, long long>& ranks)
{
    PriorityMap f;
    f.rank.resize(alphabet.size());
    for (const auto& [label, rank] : ranks) {
        f.rank[static_cast<std::size_t>(alphabet.index_of(label))] = rank;
    }
    for (const auto& label : alphabet.labels()) {
        if (ranks.find(label) == ranks.end()) {
            throw std::invalid_argument("priority map does not rank label '" + label + "'");
        }
    }
    return f;
}

bool is_independence(const LabelRelation& R)
{
    const auto n = static_cast<LabelIndex>(R.alphabet_size());
    for (LabelIndex a = 0; a < n; ++a) {
        if (R.contains(a, a)) {
            return false;
        }
        for (LabelIndex b = 0; b < n; ++b) {
            if (R.contains(a, b) && !R.contains(b, a)) {
                return false;
            }
        }
    }
    return true;
}

bool is_acyclic(const LabelRelation& R)
{
    enum class Mark { fresh, open, done };
    const std::size_t n = R.alphabet_size();
    std::vector<Mark> mark(n, Mark::fresh);
    // Iterative depth-first search; an edge back into an open node closes a cycle.
    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] != Mark::fresh) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        mark[root] = Mark::open;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next == n) {
                mark[node] = Mark::done;
                stack.pop_back();
                continue;
            }
            const std::size_t succ = next++;
            if (!R.contains(static_cast<LabelIndex>(node), static_cast<LabelIndex>(succ))) {
                continue;
            }
            if (mark[succ] == Mark::open) {
                return false;
            }
            if (mark[succ] == Mark::fresh) {
                mark[succ] = Mark::open;
                stack.emplace_back(succ, 0);
            }
        }
    }
    return true;
}

LabelRelation symmetric_closure(const LabelRelation& R)
{
    LabelRelation out = R;
    for (const auto& [a, b] : R.pairs()) {
        out.insert(b, a);
    }
    return out;
}

LabelRelation acyclic_from_priority(const LabelRelation& I, const PriorityMap& f, const Alphabet& alphabet)
{
    if (!is_independence(I)) {
        throw HypothesisError("relation is not an independence relation: " + I.to_string(alphabet));
    }
    if (f.rank.size() != I.alphabet_size()) {
        throw HypothesisError("priority map does not cover the alphabet");
    }
    std::string ties;
    LabelRelation out(I.alphabet_size());
    for (const auto& [a, b] : I.pairs()) {
        const auto fa = f.rank[static_cast<std::size_t>(a)];
        const auto fb = f.rank[static_cast<std::size_t>(b)];
        if (fa == fb) {
            if (a < b) {
                ties += " (" + alphabet.label(a) + "," + alphabet.label(b) + ")";
            }
            continue;
        }
        if (fa <= fb) {
            out.insert(a, b);
        }
    }
    if (!ties.empty()) {
        throw HypothesisError("priority ties between independent labels:" + ties);
    }
    return out;
}

Report validate_transition_system(const Hda& H)
{
    Report report;
    const auto& P = H.cells;
    for (int d = 2; d <= P.max_dim(); ++d) {
        report.add("truncation", std::to_string(P.size(static_cast<std::size_t>(d))) + " cube(s) of dimension "
                                     + std::to_string(d));
    }
    if (H.labels.size() != P.size(1)) {
        return report;
    }
    std::set<std::tuple<CubeIndex, LabelIndex, CubeIndex>> seen;
    for (std::size_t e = 0; e < P.size(1); ++e) {
        const auto edge = static_cast<CubeIndex>(e);
        const auto key = std::make_tuple(P.face_unchecked(1, edge, 0, 1), H.label(edge), P.face_unchecked(1, edge, 1, 1));
        if (!seen.insert(key).second) {
            report.add("extensionality", "edge " + P.describe(1, edge) + " duplicates (source, label, target) = ("
                                             + P.describe(0, std::get<0>(key)) + ", '"
                                             + (H.label(edge) >= 0 && static_cast<std::size_t>(H.label(edge)) < H.alphabet.size()
                                                    ? H.alphabet.label(H.label(edge))
                                                    : std::string("?"))
                                             + "', " + P.describe(0, std::get<2>(key)) + ")");
        }
    }
    return report;
}

} // namespace hda
