#include "hda/alphabet.hpp"

#include <stdexcept>

namespace hda {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        if (labels_[a].empty()) {
            throw std::invalid_argument("alphabet: empty label");
        }
        if (!index_.emplace(labels_[a], static_cast<LabelIndex>(a)).second) {
            throw std::invalid_argument("alphabet: duplicate label '" + labels_[a] + "'");
        }
    }
}

std::optional<LabelIndex> Alphabet::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

LabelIndex Alphabet::index_of(std::string_view label) const
{
    auto a = find(label);
    if (!a) {
        throw std::invalid_argument("label '" + std::string(label) + "' not in alphabet");
    }
    return *a;
}

} // namespace hda
