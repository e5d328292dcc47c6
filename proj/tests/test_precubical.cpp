#include "doctest.h"

#include "hda/precubical.hpp"

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hda;
using namespace hda::testing;

namespace {

CubeIndex id(const Hda& H, std::size_t dim, const char* name)
{
    return H.cells.index_of(dim, name);
}

} // namespace

TEST_CASE("validate_precubical")
{
    CHECK(validate_precubical(point().cells).ok());
    CHECK(validate_precubical(torus_fixture().cells).ok());
    CHECK(validate_precubical(filled_square().cells).ok());

    SUBCASE("broken identity is named")
    {
        Hda H = make_ts({"a"}, {"u", "w"}, {{"f", "u", "w", "a"}, {"g", "w", "w", "a"}}, "u", {});
        add_cube(H, 2, "x", {"g", "f"}, {"g", "f"});
        const auto report = validate_precubical(H.cells);
        CHECK(report.has("cubical-identity"));
        CHECK(report.to_string().find("(k=0,l=0,i=1,j=2)") != std::string::npos);
    }
    SUBCASE("dangling face")
    {
        PrecubicalSet P;
        P.add_cube(0, "v");
        P.add_cube(1, "e", std::vector<CubeIndex>{0}, std::vector<CubeIndex>{3});
        CHECK(validate_precubical(P).has("dangling-face"));
    }
}

TEST_CASE("add_cube rejects duplicates and wrong face counts")
{
    PrecubicalSet P;
    P.add_cube(0, "v");
    CHECK_THROWS_AS(P.add_cube(0, "v"), std::invalid_argument);
    CHECK_THROWS_AS(P.add_cube(1, "e", std::vector<CubeIndex>{0, 0}, std::vector<CubeIndex>{0}),
                    std::invalid_argument);
    // ids are unique per dimension only
    CHECK_NOTHROW(P.add_cube(1, "v", std::vector<CubeIndex>{0}, std::vector<CubeIndex>{0}));
}

TEST_CASE("face")
{
    const Hda H = torus_fixture();
    const auto x = id(H, 2, "x");
    CHECK(H.cells.face(2, x, 0, 1) == id(H, 1, "e_b"));
    CHECK(H.cells.face(2, x, 1, 2) == id(H, 1, "e_a"));
    CHECK(H.cells.face(1, id(H, 1, "e_a"), 0, 1) == id(H, 0, "v"));
    CHECK_THROWS_AS(static_cast<void>(H.cells.face(2, x, 0, 3)), std::out_of_range);
    CHECK_THROWS_AS(static_cast<void>(H.cells.face(2, 7, 0, 1)), std::out_of_range);
    CHECK_THROWS_AS(static_cast<void>(H.cells.face(0, 0, 0, 1)), std::out_of_range);
}

TEST_CASE("starting_edge")
{
    const Hda H = torus_fixture();
    const auto x = id(H, 2, "x");
    CHECK(starting_edge(H.cells, 2, x, 1) == id(H, 1, "e_a"));
    CHECK(starting_edge(H.cells, 2, x, 2) == id(H, 1, "e_b"));
    CHECK(starting_edge(H.cells, 1, id(H, 1, "e_b"), 1) == id(H, 1, "e_b"));
    CHECK_THROWS(starting_edge(H.cells, 2, x, 3));

    const Hda S = filled_square();
    CHECK(starting_edge(S.cells, 2, 0, 1) == id(S, 1, "a0"));
    CHECK(starting_edge(S.cells, 2, 0, 2) == id(S, 1, "b0"));
}

TEST_CASE("skeleton")
{
    const Hda H = torus_fixture();
    CHECK(skeleton(H.cells, 1).sizes() == std::vector<std::size_t>{1, 2});
    CHECK(skeleton(H.cells, 2).sizes() == std::vector<std::size_t>{1, 2, 1});
    CHECK(skeleton(H.cells, 0).sizes() == std::vector<std::size_t>{1});
    CHECK(boundary_family(skeleton(H.cells, 2), 2, 0) == boundary_family(H.cells, 2, 0));
}

TEST_CASE("validate_hda")
{
    CHECK(validate_hda(torus_fixture()).ok());
    CHECK(validate_hda(filled_square()).ok());

    SUBCASE("opposite edges with different labels")
    {
        Hda H = make_ts({"a", "b"}, {"v"}, {{"p", "v", "v", "a"}, {"r", "v", "v", "b"}}, "v", {});
        add_cube(H, 2, "x", {"p", "p"}, {"r", "p"});
        const auto report = validate_hda(H);
        CHECK(report.has("label-condition"));
        CHECK(report.to_string().find("i=1") != std::string::npos);
    }
    SUBCASE("final state that is not a vertex")
    {
        Hda H = torus_fixture();
        H.finals.push_back(5);
        CHECK(validate_hda(H).has("finals"));
    }
    SUBCASE("missing initial state")
    {
        Hda H = torus_fixture();
        H.initial = kNoCube;
        CHECK(validate_hda(H).has("initial"));
    }
    SUBCASE("label outside the alphabet")
    {
        Hda H = torus_fixture();
        H.labels[0] = 9;
        CHECK(validate_hda(H).has("labels"));
    }
}

TEST_CASE("boundary_family")
{
    const Hda H = torus_fixture();
    const auto fam = boundary_family(H.cells, 2, 0);
    CHECK(fam.at(0, 1) == id(H, 1, "e_b"));
    CHECK(fam.at(1, 1) == id(H, 1, "e_b"));
    CHECK(fam.at(0, 2) == id(H, 1, "e_a"));
    CHECK(fam.at(1, 2) == id(H, 1, "e_a"));
    const auto edge = boundary_family(H.cells, 1, id(H, 1, "e_a"));
    CHECK(edge.entries == std::vector<CubeIndex>{0, 0});
}

TEST_CASE("check_hda_morphism")
{
    const Hda H = torus_fixture();
    const auto self = check_hda_morphism(identity_map(H.cells), H, H);
    CHECK(self.is_morphism());
    CHECK(self.is_isomorphism());

    GradedMap collapse = identity_map(H.cells);
    collapse.images[1] = {0, 0};
    collapse.images[2] = {0};
    const auto bad = check_hda_morphism(collapse, H, H);
    CHECK(bad.violations.has("morphism-labels"));
    CHECK_FALSE(bad.is_isomorphism());

    const Hda S = filled_square();
    const auto report = check_hda_morphism(identity_map(S.cells), S, S);
    CHECK(report.is_isomorphism());
    GradedMap shifted = identity_map(S.cells);
    shifted.images[0] = {1, 1, 1, 1};
    CHECK_FALSE(check_hda_morphism(shifted, S, S).is_morphism());
}

TEST_CASE("random precubical sets: validity, skeleta and the permuted identities")
{
    Rng rng(20240611);
    for (int trial = 0; trial < 30; ++trial) {
        const auto P = random_precubical(rng);
        REQUIRE(validate_precubical(P).ok());
        for (std::size_t n = 0; n <= 3; ++n) {
            CHECK(validate_precubical(skeleton(P, n)).ok());
        }
        CHECK(validate_permuted_identities(P).ok());
        // the same identity, evaluated with checked accessors and the case formula
        for (std::size_t dim = 2; dim <= static_cast<std::size_t>(std::max(P.max_dim(), 0)); ++dim) {
            const int n = static_cast<int>(dim);
            for (const auto& theta : all_permutations(dim)) {
                for (int i = 1; i < n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        for (std::size_t x = 0; x < P.size(dim); ++x) {
                            for (int k = 0; k <= 1; ++k) {
                                for (int l = 0; l <= 1; ++l) {
                                    const auto c = static_cast<CubeIndex>(x);
                                    const auto lhs = P.face(dim - 1, P.face(dim, c, l, theta(j)), k,
                                                            perm_face_by_cases(theta, theta(j))(i));
                                    const auto rhs = P.face(dim - 1, P.face(dim, c, k, theta(i)), l,
                                                            perm_face_by_cases(theta, theta(i))(j - 1));
                                    REQUIRE(lhs == rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("a corrupted set fails the permuted identities")
{
    Hda H = make_ts({"a"}, {"u", "w"}, {{"f", "u", "w", "a"}, {"g", "w", "w", "a"}}, "u", {});
    add_cube(H, 2, "x", {"g", "f"}, {"g", "f"});
    CHECK_FALSE(validate_permuted_identities(H.cells).ok());
}
