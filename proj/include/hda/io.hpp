#pragma once

#include "hda/precubical.hpp"
#include "hda/relation.hpp"
#include "hda/report.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace hda {

// Malformed input: not JSON, or a field of the wrong shape. The message
// carries the line or the field path.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedHda {
    Hda hda;
    Report unresolved; // references to ids that do not exist, by name
};

/// HDA document:
///   {"alphabet": [...],
///    "cubes": [[{"id": "v"}, ...], [{"id": "e", "d0": ["v"], "d1": ["w"]}, ...], ...],
///    "labels": {"e": "a", ...}, "initial": "v", "finals": ["w", ...]}
/// Dimension n of "cubes" lists the n-cubes; d0 and d1 hold the ids of
/// d^0_1..d^0_n and d^1_1..d^1_n. Unknown ids are recorded in `unresolved`
/// and stored as missing, so validation reports them as well.
LoadedHda parse_hda(const std::string& text);
LoadedHda read_hda_file(const std::string& path);

// Canonical text: fixed key order, one cube or label per line.
std::string serialize_hda(const Hda& H);
void write_text_file(const std::string& path, const std::string& text);

/// Relation document; every key is optional:
///   {"independence": [["a","b"], ...],  closed symmetrically on load
///    "acyclic": [["a","b"], ...],       used verbatim
///    "relation": [["a","b"], ...],      used verbatim, no conditions
///    "priority": {"a": 1, ...}}
struct RelationSpec {
    std::optional<LabelRelation> independence;
    std::optional<LabelRelation> acyclic;
    std::optional<LabelRelation> relation;
    std::optional<PriorityMap> priority;
};

// Labels are resolved against the alphabet; unknown labels raise FormatError.
RelationSpec parse_relation_spec(const std::string& text, const Alphabet& alphabet);
RelationSpec read_relation_file(const std::string& path, const Alphabet& alphabet);

std::string serialize_relation_spec(const RelationSpec& spec, const Alphabet& alphabet);

std::string read_text_file(const std::string& path);

} // namespace hda
