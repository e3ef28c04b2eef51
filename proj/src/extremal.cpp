#include "toppcomb/extremal.hpp"

#include <algorithm>
#include <stdexcept>

namespace toppcomb {

bool slide_applicable(const Graph& g, Edge e, int c) {
    auto [a, b] = e;
    if (!g.has_edge(a, b)) throw std::invalid_argument("slide_applicable: edge not present");
    if (c < 1 || c > g.vertex_count()) throw std::invalid_argument("slide_applicable: vertex out of range");
    if (c == b || g.has_edge(c, b)) return false;
    // N(a) \ {b} must contain N(b) \ {a}.
    for (int w : g.neighbors(b)) {
        if (w == a) continue;
        if (!g.has_edge(a, w)) return false;
    }
    return true;
}

Graph apply_slide(const Graph& g, Edge e, int c) {
    if (!slide_applicable(g, e, c)) throw std::invalid_argument("apply_slide: slide not applicable");
    auto edges = g.edges();
    edges.erase(edges.begin() + g.edge_index(e.first, e.second));
    const int b = e.second;
    edges.emplace_back(std::min(c, b), std::max(c, b));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph complement_of_matching(int n, int m) {
    if (n < 2) throw std::invalid_argument("complement_of_matching: need n >= 2");
    const int full = n * (n - 1) / 2;
    const int removed = full - m;
    if (removed < 0 || removed > n / 2)
        throw std::invalid_argument("complement_of_matching: need C(n,2) - floor(n/2) <= m <= C(n,2)");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const bool matched = v == u + 1 && u % 2 == 1 && u <= 2 * removed - 1;
            if (!matched) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

MaxAoResult find_max_ao(int n, int m) {
    if (n < 1 || n > 7) throw std::invalid_argument("find_max_ao: need 1 <= n <= 7");
    const int full = n * (n - 1) / 2;
    if (m < 0 || m > full) throw std::invalid_argument("find_max_ao: edge count out of range");

    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);

    ChromaticMemo memo;
    MaxAoResult result{0, {}};

    // All m-subsets of the C(n,2) candidate edges, in lexicographic index order.
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (int i : pick) edges.push_back(all[i]);
        Graph g(n, std::move(edges));
        const Count ao = count_ao_chromatic(g, memo);
        if (ao > result.max_ao) {
            result.max_ao = ao;
            result.maximizers.clear();
        }
        if (ao == result.max_ao) result.maximizers.push_back(std::move(g));

        int i = m - 1;
        while (i >= 0 && pick[i] == full - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return result;
}

}
