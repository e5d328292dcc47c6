#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hda {

using LabelIndex = int;

// An ordered alphabet of action labels. The declared order fixes the basis
// orientation of the exterior algebra.
class Alphabet {
public:
    Alphabet() = default;
    // Throws std::invalid_argument on empty or duplicate labels.
    explicit Alphabet(std::vector<std::string> labels);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::string& label(LabelIndex a) const { return labels_.at(static_cast<std::size_t>(a)); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::optional<LabelIndex> find(std::string_view label) const;
    // Throws std::invalid_argument for labels outside the alphabet.
    [[nodiscard]] LabelIndex index_of(std::string_view label) const;

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, LabelIndex> index_;
};

} // namespace hda
