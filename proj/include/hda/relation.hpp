#pragma once

#include "hda/alphabet.hpp"
#include "hda/precubical.hpp"
#include "hda/report.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hda {

// Raised when an input violates the hypotheses of a construction, e.g. a
// priority map that ties two independent labels.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A relation on an alphabet of the given size, stored as an adjacency matrix.
class LabelRelation {
public:
    LabelRelation() = default;
    explicit LabelRelation(std::size_t alphabet_size)
        : size_(alphabet_size), bits_(alphabet_size * alphabet_size, 0)
    {
    }

    // Throws std::invalid_argument for labels outside the alphabet.
    static LabelRelation from_pairs(const Alphabet& alphabet,
                                    const std::vector<std::pair<std::string, std::string>>& pairs);

    void insert(LabelIndex a, LabelIndex b);
    [[nodiscard]] bool contains(LabelIndex a, LabelIndex b) const
    {
        return bits_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)] != 0;
    }
    [[nodiscard]] std::size_t alphabet_size() const { return size_; }
    [[nodiscard]] bool empty() const;
    // Lexicographically sorted.
    [[nodiscard]] std::vector<std::pair<LabelIndex, LabelIndex>> pairs() const;
    [[nodiscard]] std::string to_string(const Alphabet& alphabet) const;

    bool operator==(const LabelRelation&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<char> bits_;
};

// Rank per label; ties are allowed only between dependent labels.
struct PriorityMap {
    std::vector<long long> rank;

    // Throws std::invalid_argument unless every label of the alphabet is ranked.
    static PriorityMap from_map(const Alphabet& alphabet, const std::map<std::string, long long>& ranks);
};

// Irreflexive and symmetric.
bool is_independence(const LabelRelation& R);

// No directed cycle, including self-loops and 2-cycles.
bool is_acyclic(const LabelRelation& R);

LabelRelation symmetric_closure(const LabelRelation& R);

/// a < b iff a I b and f(a) <= f(b). The result is acyclic with symmetric
/// closure I. Throws HypothesisError if I is not an independence relation or
/// if f(a) == f(b) for some independent pair (every offending pair is named).
LabelRelation acyclic_from_priority(const LabelRelation& I, const PriorityMap& f, const Alphabet& alphabet);

// No cubes above dimension 1 and no two edges with equal (source, label, target).
Report validate_transition_system(const Hda& H);

} // namespace hda
