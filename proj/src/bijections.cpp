#include "toppcomb/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "toppcomb/toppling.hpp"

namespace toppcomb {

namespace {

// The shared index/value flip: odd n = 2m+1 sends i to the value 2m+2-p at a
// mirrored index (m+1-i on the left block, 3m+2-i on the right); even n = 2m
// uses 2m+1-p with mirrors m-i and 3m-i. Applying it twice is the identity.
Permutation flip(const Permutation& p) {
    const int n = p.size();
    const int m = n / 2;
    std::vector<int> s(n);
    if (n % 2 == 1) {
        for (int i = 1; i <= m; ++i) s[i - 1] = 2 * m + 2 - p.at(m + 1 - i);
        for (int i = m + 1; i <= 2 * m + 1; ++i) s[i - 1] = 2 * m + 2 - p.at(3 * m + 2 - i);
    } else {
        for (int i = 1; i <= m - 1; ++i) s[i - 1] = 2 * m + 1 - p.at(m - i);
        for (int i = m; i <= 2 * m; ++i) s[i - 1] = 2 * m + 1 - p.at(3 * m - i);
    }
    return Permutation(std::move(s));
}

bool has_prefix_excedance_set(const Permutation& p, int m) {
    for (int i = 1; i <= p.size(); ++i) {
        if ((p.at(i) > i) != (i <= m)) return false;
    }
    return true;
}

Graph bipartite_graph(int m, int n) {
    if (m == 0) return Graph(n, {});
    return CompleteMultipartiteGraph({m, n}).to_graph();
}

}  // namespace

Permutation topp_to_exc(const Permutation& p) {
    if (!is_structurally_toppleable(p))
        throw std::invalid_argument("topp_to_exc: input fails the band test");
    return flip(p);
}

Permutation exc_to_topp(const Permutation& s) {
    const int m = (s.size() - 1) / 2;
    if (!has_prefix_excedance_set(s, m))
        throw std::invalid_argument("exc_to_topp: excedance set is not {1..floor((n-1)/2)}");
    return flip(s);
}

Orientation exc_to_auso(const Permutation& s) {
    const auto exc = excedance_set(s);
    const int m = static_cast<int>(exc.size());
    if (!has_prefix_excedance_set(s, m))
        throw std::invalid_argument("exc_to_auso: excedance set is not an initial segment");
    const int n = s.size() - m;

    // Canonical cycle form, parentheses erased, is a topological sort.
    TopologicalSort order;
    order.reserve(s.size());
    for (const auto& cyc : to_cycles(s).cycles)
        for (int v : cyc) order.push_back(v);

    Orientation o = orientation_from_sort(bipartite_graph(m, n), order);
    if (!is_acyclic(o)) throw std::logic_error("exc_to_auso: induced orientation not acyclic");
    for (int v : sinks(o))
        if (v <= m) throw std::logic_error("exc_to_auso: sink in the left part");
    return o;
}

Permutation auso_to_exc(const Orientation& o, int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("auso_to_exc: need m >= 0, n >= 1");
    if (!(o.graph == bipartite_graph(m, n)))
        throw std::invalid_argument("auso_to_exc: graph is not K_{m,n} on parts 1..m, m+1..m+n");
    if (o.dir.size() != o.graph.edges().size())
        throw std::invalid_argument("auso_to_exc: direction vector size mismatch");
    if (!is_acyclic(o)) throw std::invalid_argument("auso_to_exc: orientation has a cycle");
    for (int v : sinks(o))
        if (v <= m) throw std::invalid_argument("auso_to_exc: sink in the left part");

    const int total = m + n;
    // Unique topological sort with the two tie-breaks. In K_{m,n} the available
    // sources always sit in one part (cross-part vertices are adjacent, hence
    // comparable): take the smallest label when they are on the left, the largest
    // when on the right.
    std::vector<int> indeg(total + 1, 0);
    for (size_t e = 0; e < o.dir.size(); ++e) ++indeg[o.head(static_cast<int>(e))];
    std::vector<char> placed(total + 1, 0);
    TopologicalSort order;
    while (static_cast<int>(order.size()) < total) {
        int pick = 0;
        for (int v = 1; v <= total; ++v) {
            if (placed[v] || indeg[v] != 0) continue;
            if (pick == 0) {
                pick = v;
            } else if ((pick <= m) != (v <= m)) {
                throw std::logic_error("auso_to_exc: sources from both parts");
            } else if (v > m) {
                pick = v;  // right part: larger label first
            }
            // left part: keep the smaller label, i.e. the first one found
        }
        if (pick == 0) throw std::logic_error("auso_to_exc: no source available");
        placed[pick] = 1;
        order.push_back(pick);
        for (size_t e = 0; e < o.dir.size(); ++e)
            if (o.tail(static_cast<int>(e)) == pick) --indeg[o.head(static_cast<int>(e))];
    }

    // Cut the word before every left-to-right minimum to recover the cycles.
    CycleDecomposition cycles;
    int seen_min = total + 1;
    std::vector<int> current;
    for (int v : order) {
        if (v < seen_min && !current.empty()) {
            cycles.cycles.push_back(current);
            current.clear();
        }
        seen_min = std::min(seen_min, v);
        current.push_back(v);
    }
    cycles.cycles.push_back(current);

    Permutation s = from_cycles(cycles);
    if (!has_prefix_excedance_set(s, m))
        throw std::logic_error("auso_to_exc: image has the wrong excedance set");
    return s;
}

Orientation extend_to_auso(const Orientation& o, int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("extend_to_auso: need m >= 0, n >= 1");
    if (!(o.graph == bipartite_graph(m, n)))
        throw std::invalid_argument("extend_to_auso: graph is not K_{m,n}");
    if (!is_acyclic(o)) throw std::invalid_argument("extend_to_auso: orientation has a cycle");
    for (int v : sinks(o))
        if (v <= m) throw std::invalid_argument("extend_to_auso: sink in the left part");

    const Graph big = bipartite_graph(m + 1, n);
    std::vector<std::uint8_t> dir(big.edges().size(), 0);
    for (size_t e = 0; e < o.dir.size(); ++e) {
        const auto& [u, v] = o.graph.edges()[e];  // u in 1..m, v in m+1..m+n
        const int idx = big.edge_index(u, v + 1);
        dir[idx] = o.dir[e];  // endpoints keep their order after the shift
    }
    // The new left vertex m+1 is a sink: every edge (m+1, r) points back to m+1.
    for (int j = 1; j <= n; ++j) dir[big.edge_index(m + 1, m + 1 + j)] = 1;
    return Orientation{big, std::move(dir)};
}

Orientation restrict_from_auso(const Orientation& o, int m_plus_one, int n) {
    const int m = m_plus_one - 1;
    if (m < 0 || n < 1) throw std::invalid_argument("restrict_from_auso: need m+1 >= 1, n >= 1");
    if (!(o.graph == bipartite_graph(m + 1, n)))
        throw std::invalid_argument("restrict_from_auso: graph is not K_{m+1,n}");
    if (!is_acyclic(o)) throw std::invalid_argument("restrict_from_auso: orientation has a cycle");
    const auto s = sinks(o);
    if (s.size() != 1 || s[0] != m + 1)
        throw std::invalid_argument("restrict_from_auso: unique sink must be vertex m+1");

    const Graph small = bipartite_graph(m, n);
    std::vector<std::uint8_t> dir(small.edges().size(), 0);
    for (size_t e = 0; e < small.edges().size(); ++e) {
        const auto& [u, v] = small.edges()[e];
        dir[e] = o.dir[o.graph.edge_index(u, v + 1)];
    }
    Orientation out{small, std::move(dir)};
    for (int v : sinks(out))
        if (v <= m) throw std::invalid_argument("restrict_from_auso: removal exposes a left sink");
    return out;
}

}
