#include "doctest.h"

#include "hda/builder.hpp"
#include "hda/io.hpp"
#include "hda/symmetric.hpp"

#include "corpus.hpp"
#include "fixtures.hpp"

#include <filesystem>

using namespace hda;
using namespace hda::testing;

namespace {

std::string message_of(const std::string& text)
{
    try {
        static_cast<void>(parse_hda(text));
    } catch (const FormatError& e) {
        return e.what();
    }
    return {};
}

const char* kTorus = R"({
  "alphabet": ["a", "b"],
  "cubes": [
    [{"id": "v"}],
    [{"id": "e_a", "d0": ["v"], "d1": ["v"]}, {"id": "e_b", "d0": ["v"], "d1": ["v"]}],
    [{"id": "x", "d0": ["e_b", "e_a"], "d1": ["e_b", "e_a"]}]
  ],
  "labels": {"e_a": "a", "e_b": "b"},
  "initial": "v",
  "finals": ["v"]
})";

} // namespace

TEST_CASE("parse_hda reads the torus")
{
    const auto loaded = parse_hda(kTorus);
    REQUIRE(loaded.unresolved.ok());
    const Hda& H = loaded.hda;
    CHECK(H.cells.sizes() == std::vector<std::size_t>{1, 2, 1});
    CHECK(H.alphabet.size() == 2);
    CHECK(H.cells.face(2, 0, 0, 1) == H.cells.index_of(1, "e_b"));
    CHECK(H.finals == std::vector<CubeIndex>{0});
    CHECK(serialize_hda(H) == serialize_hda(torus_fixture()));
}

TEST_CASE("serialize_hda round trips byte for byte")
{
    Rng rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        const auto T = random_transition_system(rng);
        const auto I = random_independence(rng, T.alphabet.size());
        const auto Q = build_hda_model(T, I);
        const auto text = serialize_hda(Q);
        const auto back = parse_hda(text);
        REQUIRE(back.unresolved.ok());
        REQUIRE(serialize_hda(back.hda) == text);
        CHECK(back.hda.cells.sizes() == Q.cells.sizes());
        CHECK(back.hda.labels == Q.labels);
    }
    const auto SQ = free_symmetric_hda(torus_fixture()).hda;
    CHECK(serialize_hda(parse_hda(serialize_hda(SQ)).hda) == serialize_hda(SQ));
}

TEST_CASE("malformed documents")
{
    const auto broken = message_of("{\n  \"alphabet\": [\"a\",\n  ]\n");
    CHECK(broken.find("line") != std::string::npos);
    CHECK(message_of("[]").size() > 0);
    CHECK(message_of(R"({"alphabet": "a", "cubes": [[{"id": "v"}]], "labels": {}, "initial": "v"})")
              .find("alphabet")
          != std::string::npos);
    CHECK(message_of(R"({"alphabet": [], "cubes": [[{"name": "v"}]], "labels": {}, "initial": "v"})").size() > 0);
    CHECK(message_of(R"({"alphabet": [], "cubes": [[{"id": "v"}], [{"id": "e", "d0": ["v"]}]],
                         "labels": {}, "initial": "v"})")
              .size()
          > 0);
}

TEST_CASE("unresolved ids are reported by name")
{
    const auto loaded = parse_hda(R"({
      "alphabet": ["a"],
      "cubes": [[{"id": "v"}], [{"id": "e", "d0": ["v"], "d1": ["ghost"]}]],
      "labels": {"e": "a"},
      "initial": "v",
      "finals": ["nowhere"]
    })");
    CHECK(loaded.unresolved.has("dangling-face"));
    CHECK(loaded.unresolved.has("finals"));
    const auto text = loaded.unresolved.to_string();
    CHECK(text.find("ghost") != std::string::npos);
    CHECK(text.find("nowhere") != std::string::npos);

    const auto bad_label = parse_hda(R"({
      "alphabet": ["a"],
      "cubes": [[{"id": "v"}], [{"id": "e", "d0": ["v"], "d1": ["v"]}]],
      "labels": {"e": "z"},
      "initial": "w"
    })");
    CHECK(bad_label.unresolved.has("labels"));
    CHECK(bad_label.unresolved.has("initial"));
}

TEST_CASE("relation documents")
{
    const auto S = letters(3);
    const auto spec = parse_relation_spec(
        R"({"independence": [["a","b"]], "acyclic": [["a","c"]], "relation": [["b","b"]], "priority": {"a": 1, "b": 2, "c": 3}})",
        S);
    REQUIRE(spec.independence);
    CHECK(*spec.independence == LabelRelation::from_pairs(S, {{"a", "b"}, {"b", "a"}}));
    CHECK(*spec.acyclic == LabelRelation::from_pairs(S, {{"a", "c"}}));
    CHECK(*spec.relation == LabelRelation::from_pairs(S, {{"b", "b"}}));
    CHECK(spec.priority->rank == std::vector<long long>{1, 2, 3});

    const auto empty = parse_relation_spec("{}", S);
    CHECK_FALSE(empty.independence);
    CHECK_FALSE(empty.priority);

    CHECK_THROWS_AS(parse_relation_spec(R"({"acyclic": [["a","z"]]})", S), FormatError);
    CHECK_THROWS_AS(parse_relation_spec(R"({"acyclic": [["a"]]})", S), FormatError);
    CHECK_THROWS_AS(parse_relation_spec(R"({"order": []})", S), FormatError);
    CHECK_THROWS_AS(parse_relation_spec(R"({"priority": {"a": 1}})", S), FormatError);
    CHECK_THROWS_AS(parse_relation_spec("not json", S), FormatError);

    const auto text = serialize_relation_spec(spec, S);
    CHECK(serialize_relation_spec(parse_relation_spec(text, S), S) == text);
}

TEST_CASE("files")
{
    const auto dir = std::filesystem::temp_directory_path() / "hda_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "torus.json").string();
    write_text_file(path, serialize_hda(torus_fixture()));
    CHECK(serialize_hda(read_hda_file(path).hda) == serialize_hda(torus_fixture()));
    CHECK(read_text_file(path) == serialize_hda(torus_fixture()));
    std::filesystem::remove_all(dir);
    CHECK_THROWS(read_text_file(path));
}
