#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "toppcomb/bijections.hpp"
#include "toppcomb/excedance.hpp"
#include "toppcomb/graph.hpp"
#include "toppcomb/perm.hpp"
#include "toppcomb/toppling.hpp"

using namespace toppcomb;

namespace {

template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

Graph bipartite(int m, int n) {
    if (m == 0) return Graph(n, {});
    return CompleteMultipartiteGraph({m, n}).to_graph();
}

}  // namespace

TEST_CASE("index flip on worked examples") {
    CHECK(topp_to_exc(Permutation::parse("3,1,5,2,4")) == Permutation::parse("5,3,2,4,1"));
    CHECK(topp_to_exc(Permutation::parse("2,1,6,4,3,5")) == Permutation::parse("6,5,2,4,3,1"));
    CHECK(exc_to_topp(Permutation::parse("5,3,2,4,1")) == Permutation::parse("3,1,5,2,4"));
    CHECK(exc_to_topp(Permutation::parse("6,5,2,4,3,1")) == Permutation::parse("2,1,6,4,3,5"));

    CHECK_THROWS_AS(topp_to_exc(Permutation::parse("3,1,4,2")), std::invalid_argument);
    CHECK_THROWS_AS(exc_to_topp(Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("flip bijects the band set onto the excedance class") {
    for (int n = 2; n <= 8; ++n) {
        const int m = (n - 1) / 2;
        std::vector<int> want;
        for (int i = 1; i <= m; ++i) want.push_back(i);
        std::set<std::vector<int>> images;
        long long domain = 0;
        for_each_perm(n, [&](const Permutation& p) {
            if (!is_structurally_toppleable(p)) return;
            ++domain;
            const Permutation s = topp_to_exc(p);
            CHECK(excedance_set(s) == want);
            CHECK(exc_to_topp(s) == p);
            images.insert(s.word());
        });
        std::set<std::vector<int>> target;
        for (const auto& s : enumerate_class({n, m})) target.insert(s.word());
        CHECK(images == target);
        CHECK(domain == static_cast<long long>(target.size()));
    }
}

TEST_CASE("excedance class to orientation, worked example") {
    const Permutation sigma = Permutation::parse("3,9,6,7,5,2,4,8,1");
    const Orientation o = exc_to_auso(sigma);
    CHECK(o.graph == bipartite(4, 5));
    CHECK(o == orientation_from_sort(o.graph, {8, 5, 4, 7, 1, 3, 6, 2, 9}));
    CHECK(is_acyclic(o));
    for (int v : sinks(o)) CHECK(v > 4);
    CHECK(auso_to_exc(o, 4, 5) == sigma);
}

TEST_CASE("excedance class to orientation, small shapes") {
    const Orientation edge = exc_to_auso(Permutation({2, 1}));
    CHECK(edge.graph == bipartite(1, 1));
    CHECK(edge.tail(0) == 1);
    CHECK(edge.head(0) == 2);
    CHECK(auso_to_exc(edge, 1, 1) == Permutation({2, 1}));

    const Orientation empty = exc_to_auso(Permutation::identity(3));
    CHECK(empty.graph == bipartite(0, 3));
    CHECK(auso_to_exc(empty, 0, 3).is_identity());

    CHECK_THROWS_AS(exc_to_auso(Permutation::parse("1,3,2")), std::invalid_argument);
}

TEST_CASE("orientation preconditions") {
    const Graph k22 = bipartite(2, 2);
    // 1 -> 3 -> 2 -> 4 -> 1 is a directed cycle.
    CHECK_THROWS_AS(auso_to_exc(Orientation{k22, {0, 1, 1, 0}}, 2, 2), std::invalid_argument);
    // A sink inside the left part.
    CHECK_THROWS_AS(auso_to_exc(Orientation{bipartite(1, 1), {1}}, 1, 1), std::invalid_argument);
    // Graph shape mismatch.
    const Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(auso_to_exc(Orientation{triangle, {0, 0, 0}}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(auso_to_exc(Orientation{k22, {0, 0}}, 2, 2), std::invalid_argument);
}

TEST_CASE("round trips in both directions") {
    for (int total = 1; total <= 7; ++total) {
        for (int m = 0; m < total; ++m) {
            const int n = total - m;
            long long forward = 0;
            for (const auto& s : enumerate_class({total, m})) {
                CHECK(auso_to_exc(exc_to_auso(s), m, n) == s);
                ++forward;
            }
            const Graph g = bipartite(m, n);
            long long reverse = 0;
            for (std::uint32_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
                std::vector<std::uint8_t> dir(g.edge_count());
                for (int e = 0; e < g.edge_count(); ++e) dir[e] = mask >> e & 1;
                const Orientation o{g, std::move(dir)};
                if (!is_acyclic(o)) continue;
                bool left_sink = false;
                for (int v : sinks(o)) left_sink = left_sink || v <= m;
                if (left_sink) continue;
                CHECK(exc_to_auso(auso_to_exc(o, m, n)) == o);
                ++reverse;
            }
            CHECK(forward == reverse);
        }
    }
}

TEST_CASE("sink extension and restriction") {
    struct Shape {
        int m, n;
        Count expected;
    };
    for (const auto& [m, n, expected] : {Shape{0, 1, 1}, Shape{1, 2, 3}, Shape{2, 3, 31}, Shape{3, 4, 675}}) {
        std::set<std::vector<std::uint8_t>> images;
        for (const auto& s : enumerate_class({m + n, m})) {
            const Orientation o = exc_to_auso(s);
            const Orientation big = extend_to_auso(o, m, n);
            CHECK(big.graph == bipartite(m + 1, n));
            CHECK(is_acyclic(big));
            CHECK(sinks(big) == std::vector<int>{m + 1});
            CHECK(restrict_from_auso(big, m + 1, n) == o);
            images.insert(big.dir);
        }
        CHECK(Count(images.size()) == expected);
        CHECK(count_auso_brute(bipartite(m + 1, n), m + 1) == expected);
    }

    // Restriction demands the designated unique sink.
    const Orientation o = exc_to_auso(enumerate_class({5, 2}).front());
    CHECK_THROWS_AS(restrict_from_auso(o, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(extend_to_auso(o, 3, 3), std::invalid_argument);
}

TEST_CASE("full chain from the band set to unique-sink orientations") {
    for (int n = 2; n <= 6; ++n) {
        const int m = (n - 1) / 2;
        const int rest = n - m;
        std::set<std::vector<std::uint8_t>> images;
        long long domain = 0;
        for_each_perm(n, [&](const Permutation& p) {
            if (!is_structurally_toppleable(p)) return;
            ++domain;
            const Orientation big = extend_to_auso(exc_to_auso(topp_to_exc(p)), m, rest);
            CHECK(sinks(big) == std::vector<int>{m + 1});
            images.insert(big.dir);
        });
        CHECK(static_cast<long long>(images.size()) == domain);
        CHECK(count_auso_brute(bipartite(m + 1, rest), m + 1) == Count(domain));
    }
}
