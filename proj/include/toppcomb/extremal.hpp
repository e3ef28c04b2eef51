#pragma once

#include <utility>
#include <vector>

#include "toppcomb/count.hpp"
#include "toppcomb/graph.hpp"

namespace toppcomb {

// An edge (a,b) may slide to (c,b) when a dominates b (N(a)\{b} contains N(b)\{a})
// and (c,b) is not already present, c != b. Sliding never decreases the number of
// acyclic orientations.
bool slide_applicable(const Graph& g, Edge e, int c);
Graph apply_slide(const Graph& g, Edge e, int c);

// K_n minus a matching on the first 2*(C(n,2)-m) vertices; requires
// C(n,2) - floor(n/2) <= m <= C(n,2).
Graph complement_of_matching(int n, int m);

struct MaxAoResult {
    Count max_ao;
    std::vector<Graph> maximizers;  // every labeled m-edge graph attaining max_ao
};

// Scans all C(C(n,2), m) labeled graphs; AO counts via the memoized chromatic
// polynomial. n <= 7.
MaxAoResult find_max_ao(int n, int m);

}
