#pragma once

#include "hda/precubical.hpp"

#include <string>
#include <vector>

namespace hda::testing {

struct EdgeSpec {
    std::string id;
    std::string source;
    std::string target;
    std::string label;
};

// A 1-dimensional HDA from named vertices and labeled edges.
Hda make_ts(std::vector<std::string> alphabet, const std::vector<std::string>& vertices,
            const std::vector<EdgeSpec>& edges, const std::string& initial, const std::vector<std::string>& finals);

// Adds an n-cube given by face ids; d0[i-1] = d^0_i, d1[i-1] = d^1_i.
CubeIndex add_cube(Hda& H, std::size_t dim, const std::string& id, const std::vector<std::string>& d0,
                   const std::vector<std::string>& d1);

// One vertex v, loops e_a (a) and e_b (b).
Hda torus_ts();
// torus_ts() plus the square x with d^k_1 x = e_b and d^k_2 x = e_a.
Hda torus_fixture();
// v00 -a0-> v10 -b1-> v11, v00 -b0-> v01 -a1-> v11.
Hda hollow_square();
// hollow_square() with the square filled in.
Hda filled_square();
// One state s with loops a, b, c.
Hda three_loop_ts();
// A single vertex.
Hda point();

} // namespace hda::testing
