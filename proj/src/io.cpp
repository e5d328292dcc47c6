#include "hda/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hda {

using Json = nlohmann::ordered_json;

namespace {

// Line and column of a byte offset.
std::string position(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError("not valid JSON at " + position(text, e.byte) + ": " + e.what());
    }
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

std::string as_string(const Json& v, const std::string& where)
{
    if (!v.is_string()) {
        throw FormatError(where + ": expected a string, found " + std::string(v.type_name()));
    }
    return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& where)
{
    if (!v.is_array()) {
        throw FormatError(where + ": expected an array, found " + std::string(v.type_name()));
    }
    return v;
}

std::string quoted(const std::string& s)
{
    return Json(s).dump();
}

} // namespace

LoadedHda parse_hda(const std::string& text)
{
    const Json doc = parse_json(text);
    if (!doc.is_object()) {
        throw FormatError("document: expected an object");
    }
    LoadedHda out;
    Hda& H = out.hda;

    std::vector<std::string> labels;
    const auto& alphabet = as_array(require(doc, "alphabet", "document"), "alphabet");
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        labels.push_back(as_string(alphabet[a], "alphabet[" + std::to_string(a) + "]"));
    }
    try {
        H.alphabet = Alphabet(std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("alphabet: ") + e.what());
    }

    const auto& cubes = as_array(require(doc, "cubes", "document"), "cubes");
    std::vector<CubeIndex> lower;
    std::vector<CubeIndex> upper;
    for (std::size_t dim = 0; dim < cubes.size(); ++dim) {
        const std::string dim_where = "cubes[" + std::to_string(dim) + "]";
        const auto& layer = as_array(cubes[dim], dim_where);
        for (std::size_t c = 0; c < layer.size(); ++c) {
            const std::string where = dim_where + "[" + std::to_string(c) + "]";
            const auto& cube = layer[c];
            const std::string id = as_string(require(cube, "id", where), where + ".id");
            lower.clear();
            upper.clear();
            if (dim > 0) {
                for (const char* key : {"d0", "d1"}) {
                    const auto& faces = as_array(require(cube, key, where), where + "." + key);
                    if (faces.size() != dim) {
                        throw FormatError(where + "." + key + ": expected " + std::to_string(dim) + " face ids, found "
                                          + std::to_string(faces.size()));
                    }
                    auto& target = key[1] == '0' ? lower : upper;
                    for (std::size_t i = 0; i < dim; ++i) {
                        const auto face = as_string(faces[i], where + "." + key + "[" + std::to_string(i) + "]");
                        const auto found = H.cells.find(dim - 1, face);
                        if (!found) {
                            out.unresolved.add("dangling-face", "cube '" + id + "' (dimension " + std::to_string(dim)
                                                                    + ") " + key + "[" + std::to_string(i + 1)
                                                                    + "] = '" + face + "' does not exist");
                        }
                        target.push_back(found.value_or(kNoCube));
                    }
                }
            }
            if (id.empty()) {
                throw FormatError(where + ".id: empty id");
            }
            if (H.cells.find(dim, id)) {
                throw FormatError(where + ".id: duplicate id '" + id + "' in dimension " + std::to_string(dim));
            }
            H.cells.add_cube(dim, id, lower, upper);
        }
    }

    H.labels.assign(H.cells.size(1), -1);
    if (doc.contains("labels")) {
        const auto& labels_obj = doc.at("labels");
        if (!labels_obj.is_object()) {
            throw FormatError("labels: expected an object");
        }
        for (const auto& [edge, label] : labels_obj.items()) {
            const auto name = as_string(label, "labels." + edge);
            const auto e = H.cells.find(1, edge);
            if (!e) {
                out.unresolved.add("labels", "label for unknown edge '" + edge + "'");
                continue;
            }
            const auto a = H.alphabet.find(name);
            if (!a) {
                out.unresolved.add("labels", "edge '" + edge + "' carries '" + name + "', not in the alphabet");
                continue;
            }
            H.labels[static_cast<std::size_t>(*e)] = *a;
        }
    }
    for (std::size_t e = 0; e < H.labels.size(); ++e) {
        if (H.labels[e] < 0 && !out.unresolved.has("labels")) {
            out.unresolved.add("labels", "edge '" + H.cells.id(1, static_cast<CubeIndex>(e)) + "' has no label");
        }
    }

    if (doc.contains("initial")) {
        const auto id = as_string(doc.at("initial"), "initial");
        const auto v = H.cells.find(0, id);
        if (!v) {
            out.unresolved.add("initial", "initial state '" + id + "' does not exist");
        }
        H.initial = v.value_or(kNoCube);
    } else {
        out.unresolved.add("initial", "no initial state");
    }

    if (doc.contains("finals")) {
        const auto& finals = as_array(doc.at("finals"), "finals");
        for (std::size_t f = 0; f < finals.size(); ++f) {
            const auto id = as_string(finals[f], "finals[" + std::to_string(f) + "]");
            const auto v = H.cells.find(0, id);
            if (!v) {
                out.unresolved.add("finals", "final state '" + id + "' does not exist");
                continue;
            }
            H.finals.push_back(*v);
        }
        std::sort(H.finals.begin(), H.finals.end());
        H.finals.erase(std::unique(H.finals.begin(), H.finals.end()), H.finals.end());
    }
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("error writing '" + path + "'");
    }
}

LoadedHda read_hda_file(const std::string& path)
{
    try {
        return parse_hda(read_text_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string serialize_hda(const Hda& H)
{
    const auto& P = H.cells;
    std::string out = "{\n  \"alphabet\": [";
    for (std::size_t a = 0; a < H.alphabet.size(); ++a) {
        out += (a > 0 ? ", " : "") + quoted(H.alphabet.labels()[a]);
    }
    out += "],\n  \"cubes\": [";
    const int top = P.max_dim();
    for (int d = 0; d <= top; ++d) {
        const auto dim = static_cast<std::size_t>(d);
        out += d > 0 ? ",\n    [" : "\n    [";
        for (std::size_t x = 0; x < P.size(dim); ++x) {
            const auto c = static_cast<CubeIndex>(x);
            out += x > 0 ? ",\n      " : "\n      ";
            out += "{\"id\": " + quoted(P.id(dim, c));
            if (dim > 0) {
                for (int k = 0; k <= 1; ++k) {
                    out += k == 0 ? ", \"d0\": [" : ", \"d1\": [";
                    for (int i = 1; i <= d; ++i) {
                        out += (i > 1 ? ", " : "") + quoted(P.id(dim - 1, P.face_unchecked(dim, c, k, i)));
                    }
                    out += "]";
                }
            }
            out += "}";
        }
        out += P.size(dim) > 0 ? "\n    ]" : "]";
    }
    out += top >= 0 ? "\n  ],\n" : "],\n";
    out += "  \"labels\": {";
    for (std::size_t e = 0; e < P.size(1); ++e) {
        out += e > 0 ? ",\n    " : "\n    ";
        out += quoted(P.id(1, static_cast<CubeIndex>(e))) + ": " + quoted(H.alphabet.label(H.labels[e]));
    }
    out += P.size(1) > 0 ? "\n  },\n" : "},\n";
    if (H.initial != kNoCube) {
        out += "  \"initial\": " + quoted(P.id(0, H.initial)) + ",\n";
    }
    out += "  \"finals\": [";
    for (std::size_t f = 0; f < H.finals.size(); ++f) {
        out += (f > 0 ? ", " : "") + quoted(P.id(0, H.finals[f]));
    }
    out += "]\n}\n";
    return out;
}

namespace {

LabelRelation parse_pairs(const Json& v, const Alphabet& alphabet, const std::string& where)
{
    LabelRelation R(alphabet.size());
    as_array(v, where);
    for (std::size_t p = 0; p < v.size(); ++p) {
        const std::string pw = where + "[" + std::to_string(p) + "]";
        const auto& pair = as_array(v[p], pw);
        if (pair.size() != 2) {
            throw FormatError(pw + ": expected a pair of labels");
        }
        LabelIndex ab[2];
        for (std::size_t s = 0; s < 2; ++s) {
            const auto name = as_string(pair[s], pw + "[" + std::to_string(s) + "]");
            const auto a = alphabet.find(name);
            if (!a) {
                throw FormatError(pw + ": label '" + name + "' is not in the alphabet");
            }
            ab[s] = *a;
        }
        R.insert(ab[0], ab[1]);
    }
    return R;
}

} // namespace

RelationSpec parse_relation_spec(const std::string& text, const Alphabet& alphabet)
{
    const Json doc = parse_json(text);
    if (!doc.is_object()) {
        throw FormatError("relation document: expected an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "independence" && key != "acyclic" && key != "relation" && key != "priority") {
            throw FormatError("relation document: unknown field '" + key + "'");
        }
    }
    RelationSpec spec;
    if (doc.contains("independence")) {
        spec.independence = symmetric_closure(parse_pairs(doc.at("independence"), alphabet, "independence"));
    }
    if (doc.contains("acyclic")) {
        spec.acyclic = parse_pairs(doc.at("acyclic"), alphabet, "acyclic");
    }
    if (doc.contains("relation")) {
        spec.relation = parse_pairs(doc.at("relation"), alphabet, "relation");
    }
    if (doc.contains("priority")) {
        const auto& prio = doc.at("priority");
        if (!prio.is_object()) {
            throw FormatError("priority: expected an object");
        }
        std::map<std::string, long long> ranks;
        for (const auto& [label, rank] : prio.items()) {
            if (!rank.is_number_integer()) {
                throw FormatError("priority." + label + ": expected an integer");
            }
            if (!alphabet.find(label)) {
                throw FormatError("priority: label '" + label + "' is not in the alphabet");
            }
            ranks[label] = rank.get<long long>();
        }
        try {
            spec.priority = PriorityMap::from_map(alphabet, ranks);
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("priority: ") + e.what());
        }
    }
    return spec;
}

RelationSpec read_relation_file(const std::string& path, const Alphabet& alphabet)
{
    try {
        return parse_relation_spec(read_text_file(path), alphabet);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string serialize_relation_spec(const RelationSpec& spec, const Alphabet& alphabet)
{
    std::vector<std::string> fields;
    auto pairs = [&](const char* key, const LabelRelation& R) {
        std::string s = "  " + quoted(key) + ": [";
        bool first = true;
        for (const auto& [a, b] : R.pairs()) {
            s += (first ? "[" : ", [") + quoted(alphabet.label(a)) + ", " + quoted(alphabet.label(b)) + "]";
            first = false;
        }
        return s + "]";
    };
    if (spec.independence) {
        fields.push_back(pairs("independence", *spec.independence));
    }
    if (spec.acyclic) {
        fields.push_back(pairs("acyclic", *spec.acyclic));
    }
    if (spec.relation) {
        fields.push_back(pairs("relation", *spec.relation));
    }
    if (spec.priority) {
        std::string s = "  \"priority\": {";
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            s += (a > 0 ? ", " : "") + quoted(alphabet.labels()[a]) + ": " + std::to_string(spec.priority->rank[a]);
        }
        fields.push_back(s + "}");
    }
    std::string out = "{\n";
    for (std::size_t f = 0; f < fields.size(); ++f) {
        out += fields[f] + (f + 1 < fields.size() ? ",\n" : "\n");
    }
    return out + "}\n";
}

} // namespace hda
