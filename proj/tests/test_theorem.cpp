#include "doctest.h"

#include "hda/io.hpp"
#include "hda/theorem.hpp"

#include "corpus.hpp"
#include "fixtures.hpp"

using namespace hda;
using namespace hda::testing;

namespace {

LabelRelation rel(const Alphabet& alphabet, const std::vector<std::pair<std::string, std::string>>& pairs)
{
    return LabelRelation::from_pairs(alphabet, pairs);
}

// The permutation sorting the starting-edge labels, found by trying them all.
std::vector<Permutation> sorting_permutations(const Hda& B, const LabelRelation& ltimes, std::size_t dim,
                                              CubeIndex b)
{
    std::vector<LabelIndex> labels;
    for (int i = 1; i <= static_cast<int>(dim); ++i) {
        labels.push_back(B.label(starting_edge(B.cells, dim, b, i)));
    }
    std::vector<Permutation> out;
    for (const auto& theta : all_permutations(dim)) {
        bool sorted = true;
        for (int i = 1; i <= static_cast<int>(dim) && sorted; ++i) {
            for (int j = i + 1; j <= static_cast<int>(dim) && sorted; ++j) {
                sorted = ltimes.contains(labels[static_cast<std::size_t>(theta(i) - 1)],
                                         labels[static_cast<std::size_t>(theta(j) - 1)]);
            }
        }
        if (sorted) {
            out.push_back(theta);
        }
    }
    return out;
}

struct Instance {
    TransitionSystem T;
    LabelRelation I;
    LabelRelation ltimes;
};

Instance random_instance(Rng& rng)
{
    Instance inst;
    inst.T = random_transition_system(rng);
    inst.I = random_independence(rng, inst.T.alphabet.size());
    inst.ltimes = acyclic_from_priority(inst.I, random_priority(rng, inst.I), inst.T.alphabet);
    return inst;
}

} // namespace

TEST_CASE("theta_of_cube examples")
{
    const Hda T = torus_ts();
    const auto& S = T.alphabet;
    const auto ltimes = rel(S, {{"a", "b"}});
    const auto A = build_hda_model(T, symmetric_closure(ltimes));
    REQUIRE(A.cells.size(2) == 2);
    CHECK(theta_of_cube(A, ltimes, 1, 0) == Permutation::identity(1));
    CHECK(theta_of_cube(A, ltimes, 0, 0) == Permutation::identity(0));
    for (CubeIndex x = 0; x < 2; ++x) {
        const auto first = A.label(starting_edge(A.cells, 2, x, 1));
        const auto expected = first == S.index_of("a") ? Permutation::identity(2) : Permutation({2, 1});
        CHECK(theta_of_cube(A, ltimes, 2, x) == expected);
    }
}

TEST_CASE("theta_of_cube rejects unrelated labels and cycles")
{
    const Hda T = torus_ts();
    const auto& S = T.alphabet;
    const auto A = build_hda_model(T, rel(S, {{"a", "b"}, {"b", "a"}}));
    CHECK_THROWS_AS(static_cast<void>(theta_of_cube(A, rel(S, {}), 2, 0)), HypothesisError);
    CHECK_THROWS_AS(static_cast<void>(theta_of_cube(A, rel(S, {{"a", "b"}, {"b", "a"}}), 2, 0)), HypothesisError);
}

TEST_CASE("theta_of_cube agrees with exhaustive search")
{
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_instance(rng);
        const auto A = build_hda_model(inst.T, inst.I);
        for (int d = 0; d <= A.cells.max_dim(); ++d) {
            const auto dim = static_cast<std::size_t>(d);
            for (std::size_t b = 0; b < A.cells.size(dim); ++b) {
                const auto found = sorting_permutations(A, inst.ltimes, dim, static_cast<CubeIndex>(b));
                REQUIRE(found.size() == 1);
                CHECK(theta_of_cube(A, inst.ltimes, dim, static_cast<CubeIndex>(b)) == found[0]);
            }
        }
    }
}

TEST_CASE("phi on a free symmetric HDA forgets the permutation")
{
    const Hda L = three_loop_ts();
    const auto ltimes = rel(L.alphabet, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    const auto Q = build_hda_model(L, ltimes);
    const auto SQ = free_symmetric_hda(Q);
    CHECK(check_theta_on_free(SQ, ltimes).ok());
    const auto phi = phi_map(SQ.hda, Q, ltimes, skeleton_identity(SQ.hda, Q));
    for (std::size_t dim = 0; dim < phi.images.size(); ++dim) {
        for (std::size_t x = 0; x < phi.images[dim].size(); ++x) {
            CHECK(phi.images[dim][x] == SQ.layout.cube(dim, static_cast<CubeIndex>(x)).base);
        }
    }
    CHECK(check_sign_identity(SQ, Q).ok());
}

TEST_CASE("skeleton_identity")
{
    const Hda T = torus_ts();
    const auto Q = build_hda_model(T, rel(T.alphabet, {{"a", "b"}}));
    const auto low = skeleton_identity(Q, Q);
    CHECK(low.images.size() == 2);
    CHECK(low.images[1] == std::vector<CubeIndex>{0, 1});
    CHECK_THROWS_AS(skeleton_identity(Q, three_loop_ts()), std::invalid_argument);
}

TEST_CASE("main theorem on the torus")
{
    const Hda T = torus_ts();
    const auto ltimes = rel(T.alphabet, {{"a", "b"}});
    const auto r = check_main_theorem(T, symmetric_closure(ltimes), ltimes);
    CHECK(r.holds());
    CHECK(r.witness.empty());
    CHECK(r.sizes_q == std::vector<std::size_t>{1, 2, 1});
    CHECK(r.sizes_a == std::vector<std::size_t>{1, 2, 2});
    CHECK(r.sizes_sq == std::vector<std::size_t>{1, 2, 2});
    CHECK(r.hl_q.to_string() == "HL0: [ 1 ]\nHL1: [ a, b ]\nHL2: [ a^b ]\n");
    const auto text = r.to_string();
    CHECK(text.find("A -> SQ isomorphism: ok") != std::string::npos);
    CHECK(text.find("theorem: holds") != std::string::npos);
}

TEST_CASE("main theorem on three commuting loops")
{
    const Hda L = three_loop_ts();
    const auto ltimes = rel(L.alphabet, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    const auto r = check_main_theorem(L, symmetric_closure(ltimes), ltimes);
    CHECK(r.holds());
    CHECK(r.sizes_q == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(r.sizes_a == std::vector<std::size_t>{1, 3, 6, 6});
    CHECK(r.sizes_sq == std::vector<std::size_t>{1, 3, 6, 6});
    CHECK(r.hl_q.to_string().find("HL3: [ a^b^c ]") != std::string::npos);
    CHECK(check_main_theorem(L, symmetric_closure(ltimes), ltimes, Coefficients::rationals).holds());
}

TEST_CASE("empty independence relation")
{
    const Hda L = three_loop_ts();
    const LabelRelation none(3);
    const auto r = check_main_theorem(L, none, none);
    CHECK(r.holds());
    CHECK(r.sizes_q == std::vector<std::size_t>{1, 3});
    CHECK(r.sizes_a == r.sizes_q);
    CHECK(r.sizes_sq == r.sizes_q);
}

TEST_CASE("hypothesis errors")
{
    const Hda L = three_loop_ts();
    const auto& S = L.alphabet;
    const auto cyclic = rel(S, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    try {
        static_cast<void>(check_main_theorem(L, symmetric_closure(cyclic), cyclic));
        FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("not acyclic") != std::string::npos);
    }
    const auto ltimes = rel(S, {{"a", "b"}});
    CHECK_THROWS_AS(static_cast<void>(check_main_theorem(L, ltimes, ltimes)), HypothesisError);
    CHECK_THROWS_AS(static_cast<void>(check_main_theorem(L, rel(S, {{"a", "c"}, {"c", "a"}}), ltimes)),
                    HypothesisError);
    CHECK_THROWS_AS(static_cast<void>(check_main_theorem(L, LabelRelation(2), LabelRelation(2))), HypothesisError);
    CHECK_THROWS_AS(static_cast<void>(check_main_theorem(torus_fixture(), LabelRelation(2), LabelRelation(2))),
                    std::invalid_argument);
}

TEST_CASE("theta and phi checks on the torus")
{
    const Hda T = torus_ts();
    const auto ltimes = rel(T.alphabet, {{"a", "b"}});
    const Hda A = build_hda_model(T, symmetric_closure(ltimes));
    const auto B = build_hda_model(T, ltimes);
    CHECK(check_theta_morphism(A, ltimes).ok());
    GradedMap phi = phi_map(A, B, ltimes);
    CHECK(check_phi_compatibility(A, B, ltimes, phi).ok());
    // swapping the edge images breaks compatibility
    std::swap(phi.images[1][0], phi.images[1][1]);
    CHECK(check_phi_compatibility(A, B, ltimes, phi).has("phi-compatibility"));
}

TEST_CASE("main theorem on a random corpus")
{
    Rng rng(72);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_instance(rng);
        INFO(serialize_hda(inst.T));
        const auto r = check_main_theorem(inst.T, inst.I, inst.ltimes);
        REQUIRE(r.holds());
        REQUIRE(r.sizes_a == r.sizes_sq);
        // |A_n| = n! |Q_n|
        for (std::size_t n = 0; n < r.sizes_q.size(); ++n) {
            CHECK(r.sizes_a[n] == factorial(n) * r.sizes_q[n]);
        }
        CHECK(lattice_equal(r.hl_a, r.hl_q));
        CHECK(lattice_equal(r.hl_sq, r.hl_q));
    }
}
