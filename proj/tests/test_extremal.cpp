#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toppcomb/extremal.hpp"
#include "toppcomb/graph.hpp"

using namespace toppcomb;

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
    return out;
}

Graph mask_graph(int n, std::uint32_t mask) {
    const auto all = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
    return Graph(n, std::move(edges));
}

// Reference check: the slide keeps b, moves the other endpoint to c.
bool slide_oracle(const Graph& g, int a, int b, int c) {
    if (c == b || g.has_edge(c, b)) return false;
    auto nb = g.neighbors(b);
    nb.erase(std::remove(nb.begin(), nb.end(), a), nb.end());
    const auto na = g.neighbors(a);
    return std::includes(na.begin(), na.end(), nb.begin(), nb.end());
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (auto [u, v] : all_pairs(g.vertex_count()))
        if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges));
}

int degree(const Graph& g, int v) { return static_cast<int>(g.neighbors(v).size()); }

}  // namespace

TEST_CASE("slide applicability on a path") {
    const Graph path(3, {{1, 2}, {2, 3}});
    CHECK_FALSE(slide_applicable(path, {1, 2}, 3));  // (3,2) already present
    CHECK(slide_applicable(path, {2, 3}, 1));        // b=3 has no other neighbors
    CHECK(slide_applicable(path, {2, 1}, 3));        // b=1 has no other neighbors
    CHECK_FALSE(slide_applicable(path, {2, 3}, 3));  // c == b
    CHECK_FALSE(slide_applicable(path, {2, 3}, 2));  // (2,3) present

    CHECK_THROWS_AS(slide_applicable(path, {1, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(slide_applicable(path, {1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(slide_applicable(path, {1, 2}, 4), std::invalid_argument);
}

TEST_CASE("slide applicability matches the neighborhood test everywhere") {
    const int n = 4;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        const Graph g = mask_graph(n, mask);
        for (auto [u, v] : g.edges()) {
            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                for (int c = 1; c <= n; ++c)
                    CHECK(slide_applicable(g, {a, b}, c) == slide_oracle(g, a, b, c));
            }
        }
    }
}

TEST_CASE("applying a slide replaces one endpoint") {
    const Graph path(3, {{1, 2}, {2, 3}});
    const Graph slid = apply_slide(path, {2, 3}, 1);
    CHECK(slid == Graph(3, {{1, 2}, {1, 3}}));
    CHECK(slid.edge_count() == path.edge_count());

    const Graph other = apply_slide(path, {2, 1}, 3);
    CHECK(other == Graph(3, {{2, 3}, {1, 3}}));

    CHECK_THROWS_AS(apply_slide(path, {1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(apply_slide(path, {2, 3}, 3), std::invalid_argument);
}

TEST_CASE("slides preserve the deletion and relate the contractions") {
    const int n = 4;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        const Graph g = mask_graph(n, mask);
        for (auto [u, v] : g.edges()) {
            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                for (int c = 1; c <= n; ++c) {
                    if (!slide_applicable(g, {a, b}, c)) continue;
                    const Graph slid = apply_slide(g, {a, b}, c);
                    CHECK(delete_edge(g, {a, b}) == delete_edge(slid, {c, b}));
                    if (a < b) CHECK(contract_edge(g, {a, b}) == delete_vertex(g, b));
                    if (a < b && c < b) {
                        const Graph ga = contract_edge(g, {a, b});
                        const Graph gc = contract_edge(slid, {c, b});
                        REQUIRE(ga.vertex_count() == gc.vertex_count());
                        for (auto [x, y] : ga.edges()) CHECK(gc.has_edge(x, y));
                    }
                }
            }
        }
    }
}

TEST_CASE("slides never lose acyclic orientations") {
    const int n = 4;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        const Graph g = mask_graph(n, mask);
        const Count before = count_ao_brute(g);
        for (auto [u, v] : g.edges()) {
            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                for (int c = 1; c <= n; ++c) {
                    if (!slide_applicable(g, {a, b}, c)) continue;
                    CHECK(count_ao_brute(apply_slide(g, {a, b}, c)) >= before);
                }
            }
        }
    }
}

TEST_CASE("dense graphs slide to complements of matchings") {
    ChromaticMemo memo;
    for (int n = 2; n <= 6; ++n) {
        const int full = n * (n - 1) / 2;
        for (int m = full - n / 2; m <= full; ++m) {
            // Every labeled n-vertex graph with m edges.
            std::vector<int> pick(m);
            for (int i = 0; i < m; ++i) pick[i] = i;
            while (true) {
                std::uint32_t mask = 0;
                for (int i : pick) mask |= 1u << i;
                Graph g = mask_graph(n, mask);
                const Count before = count_ao_chromatic(g, memo);

                for (int step = 0; step <= 2 * n; ++step) {
                    Graph co = complement(g);
                    int x = 0;
                    for (int v = 1; v <= n; ++v)
                        if (degree(co, v) >= 2) x = v;
                    if (x == 0) break;
                    REQUIRE(step < 2 * n);
                    const int z = co.neighbors(x).front();
                    int w = 0;
                    for (int v = 1; v <= n; ++v)
                        if (degree(co, v) == 0) w = v;
                    REQUIRE(w != 0);
                    REQUIRE(slide_applicable(g, {w, z}, x));
                    g = apply_slide(g, {w, z}, x);
                }

                const Graph co = complement(g);
                for (int v = 1; v <= n; ++v) CHECK(degree(co, v) <= 1);
                CHECK(g.edge_count() == m);
                CHECK(count_ao_chromatic(g, memo) >= before);
                CHECK(count_ao_chromatic(g, memo) ==
                      count_ao_chromatic(complement_of_matching(n, m), memo));

                int i = m - 1;
                while (i >= 0 && pick[i] == full - m + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
}

TEST_CASE("complements of matchings") {
    CHECK(complement_of_matching(4, 5) ==
          Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(complement_of_matching(5, 8) ==
          Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}));
    for (int n = 2; n <= 8; ++n) {
        const int full = n * (n - 1) / 2;
        CHECK(complement_of_matching(n, full) == mask_graph(n, (1u << full) - 1));
        for (int m = full - n / 2; m <= full; ++m) {
            const Graph co = complement(complement_of_matching(n, m));
            CHECK(co.edge_count() == full - m);
            for (int v = 1; v <= n; ++v) CHECK(degree(co, v) <= 1);
        }
    }
    CHECK_THROWS_AS(complement_of_matching(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(complement_of_matching(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(complement_of_matching(4, 7), std::invalid_argument);
}

TEST_CASE("maximum orientation counts at fixed size") {
    const auto near = find_max_ao(4, 5);
    CHECK(near.max_ao == 18);
    CHECK(near.max_ao == count_ao_brute(complement_of_matching(4, 5)));
    CHECK(near.maximizers.size() == 6);
    CHECK(std::count(near.maximizers.begin(), near.maximizers.end(),
                     complement_of_matching(4, 5)) == 1);

    const auto cycle = find_max_ao(4, 4);
    CHECK(cycle.max_ao == 14);
    CHECK(cycle.maximizers.size() == 3);
    CHECK(std::count(cycle.maximizers.begin(), cycle.maximizers.end(),
                     complement_of_matching(4, 4)) == 1);

    const auto five = find_max_ao(5, 9);
    CHECK(five.max_ao == 96);
    CHECK(five.maximizers.size() == 10);
    CHECK(std::count(five.maximizers.begin(), five.maximizers.end(),
                     complement_of_matching(5, 9)) == 1);

    const auto pair = find_max_ao(5, 8);
    CHECK(pair.max_ao == count_ao_brute(complement_of_matching(5, 8)));
    CHECK(pair.maximizers.size() == 15);  // one maximizer per 2-edge matching

    for (int n = 3; n <= 5; ++n) {
        const auto full = find_max_ao(n, n * (n - 1) / 2);
        CHECK(full.max_ao == count_ao_brute(mask_graph(n, (1u << (n * (n - 1) / 2)) - 1)));
        REQUIRE(full.maximizers.size() == 1);
        CHECK(full.maximizers.front() == complement_of_matching(n, n * (n - 1) / 2));
    }

    CHECK_THROWS_AS(find_max_ao(8, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_max_ao(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_max_ao(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(find_max_ao(4, -1), std::invalid_argument);
}
