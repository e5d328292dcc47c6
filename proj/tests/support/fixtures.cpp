#include "fixtures.hpp"

#include <algorithm>

namespace hda::testing {

Hda make_ts(std::vector<std::string> alphabet, const std::vector<std::string>& vertices,
            const std::vector<EdgeSpec>& edges, const std::string& initial, const std::vector<std::string>& finals)
{
    Hda H;
    H.alphabet = Alphabet(std::move(alphabet));
    for (const auto& v : vertices) {
        H.cells.add_cube(0, v);
    }
    for (const auto& e : edges) {
        const CubeIndex s = H.cells.index_of(0, e.source);
        const CubeIndex t = H.cells.index_of(0, e.target);
        H.cells.add_cube(1, e.id, std::vector<CubeIndex>{s}, std::vector<CubeIndex>{t});
        H.labels.push_back(H.alphabet.index_of(e.label));
    }
    H.initial = H.cells.index_of(0, initial);
    for (const auto& f : finals) {
        H.finals.push_back(H.cells.index_of(0, f));
    }
    std::sort(H.finals.begin(), H.finals.end());
    return H;
}

CubeIndex add_cube(Hda& H, std::size_t dim, const std::string& id, const std::vector<std::string>& d0,
                   const std::vector<std::string>& d1)
{
    std::vector<CubeIndex> lower;
    std::vector<CubeIndex> upper;
    for (const auto& f : d0) {
        lower.push_back(H.cells.index_of(dim - 1, f));
    }
    for (const auto& f : d1) {
        upper.push_back(H.cells.index_of(dim - 1, f));
    }
    return H.cells.add_cube(dim, id, lower, upper);
}

Hda torus_ts()
{
    return make_ts({"a", "b"}, {"v"}, {{"e_a", "v", "v", "a"}, {"e_b", "v", "v", "b"}}, "v", {"v"});
}

Hda torus_fixture()
{
    Hda H = torus_ts();
    add_cube(H, 2, "x", {"e_b", "e_a"}, {"e_b", "e_a"});
    return H;
}

Hda hollow_square()
{
    return make_ts({"a", "b"}, {"v00", "v10", "v01", "v11"},
                   {{"a0", "v00", "v10", "a"}, {"b0", "v00", "v01", "b"}, {"b1", "v10", "v11", "b"},
                    {"a1", "v01", "v11", "a"}},
                   "v00", {"v11"});
}

Hda filled_square()
{
    Hda H = hollow_square();
    // e_1 = d^0_2 = a0, e_2 = d^0_1 = b0.
    add_cube(H, 2, "s", {"b0", "a0"}, {"b1", "a1"});
    return H;
}

Hda three_loop_ts()
{
    return make_ts({"a", "b", "c"}, {"s"}, {{"la", "s", "s", "a"}, {"lb", "s", "s", "b"}, {"lc", "s", "s", "c"}},
                   "s", {});
}

Hda point()
{
    return make_ts({"a"}, {"p"}, {}, "p", {"p"});
}

} // namespace hda::testing
