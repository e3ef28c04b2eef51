#include "toppcomb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toppcomb {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0 || n_ > 24) throw std::invalid_argument("graph: vertex count must be in 0..24");
    std::vector<char> seen(n_ * n_, 0);
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_) throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop");
        if (seen[(u - 1) * n_ + (v - 1)]++) throw std::invalid_argument("graph: duplicate edge");
    }
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].first == u && edges_[e].second == v) return static_cast<int>(e);
    return -1;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::parse(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph: bad header line");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("graph: bad edge line");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string Graph::str() const {
    std::string out = std::to_string(n_) + ' ' + std::to_string(edge_count()) + '\n';
    for (const auto& [u, v] : edges_) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

CompleteMultipartiteGraph::CompleteMultipartiteGraph(std::vector<int> part_sizes)
    : parts_(std::move(part_sizes)) {
    if (parts_.empty()) throw std::invalid_argument("multipartite: no parts");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("multipartite: part sizes must be positive");
}

int CompleteMultipartiteGraph::vertex_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int CompleteMultipartiteGraph::part_of(int v) const {
    if (v < 1) throw std::invalid_argument("multipartite: vertex out of range");
    int upto = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        upto += parts_[i];
        if (v <= upto) return static_cast<int>(i) + 1;
    }
    throw std::invalid_argument("multipartite: vertex out of range");
}

Graph CompleteMultipartiteGraph::to_graph() const {
    const int n = vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of(u) != part_of(v)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace {

// Incidence-indexed scanner for the 2^m orientation scans; mask bit e set means
// edge e is reversed relative to its stored (u, v) order.
struct MaskScanner {
    const std::vector<Edge>& edges;
    int n;
    std::vector<std::vector<int>> inc;  // incident edge indices per vertex, 0-indexed

    explicit MaskScanner(const Graph& g) : edges(g.edges()), n(g.vertex_count()), inc(n) {
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[edges[e].first - 1].push_back(static_cast<int>(e));
            inc[edges[e].second - 1].push_back(static_cast<int>(e));
        }
    }

    int head_of(int e, std::uint32_t mask) const {
        return (mask >> e) & 1 ? edges[e].first : edges[e].second;
    }
    int tail_of(int e, std::uint32_t mask) const {
        return (mask >> e) & 1 ? edges[e].second : edges[e].first;
    }

    bool acyclic(std::uint32_t mask) const {
        int indeg[24] = {0};
        for (size_t e = 0; e < edges.size(); ++e) ++indeg[head_of(static_cast<int>(e), mask) - 1];
        int queue[24], qtail = 0;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) queue[qtail++] = v;
        int seen = 0;
        for (int qhead = 0; qhead < qtail; ++qhead) {
            const int v = queue[qhead] + 1;
            ++seen;
            for (int e : inc[v - 1]) {
                if (tail_of(e, mask) != v) continue;
                if (--indeg[head_of(e, mask) - 1] == 0) queue[qtail++] = head_of(e, mask) - 1;
            }
        }
        return seen == n;
    }

    // Number of sinks; *only_sink is meaningful when the result is 1.
    int sink_count(std::uint32_t mask, int* only_sink) const {
        int outdeg[24] = {0};
        for (size_t e = 0; e < edges.size(); ++e) ++outdeg[tail_of(static_cast<int>(e), mask) - 1];
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (outdeg[v] == 0) {
                ++count;
                *only_sink = v + 1;
            }
        return count;
    }
};

}  // namespace

bool is_acyclic(const Orientation& o) {
    if (o.dir.size() != o.graph.edges().size())
        throw std::invalid_argument("orientation: direction vector size mismatch");
    const int n = o.graph.vertex_count();
    std::vector<int> indeg(n, 0);
    for (size_t e = 0; e < o.dir.size(); ++e) ++indeg[o.head(static_cast<int>(e)) - 1];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    size_t qhead = 0;
    int seen = 0;
    while (qhead < queue.size()) {
        const int v = queue[qhead++] + 1;
        ++seen;
        for (size_t e = 0; e < o.dir.size(); ++e) {
            if (o.tail(static_cast<int>(e)) != v) continue;
            const int h = o.head(static_cast<int>(e)) - 1;
            if (--indeg[h] == 0) queue.push_back(h);
        }
    }
    return seen == n;
}

std::vector<int> sinks(const Orientation& o) {
    if (o.dir.size() != o.graph.edges().size())
        throw std::invalid_argument("orientation: direction vector size mismatch");
    const int n = o.graph.vertex_count();
    std::vector<int> outdeg(n, 0);
    for (size_t e = 0; e < o.dir.size(); ++e) ++outdeg[o.tail(static_cast<int>(e)) - 1];
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (outdeg[v - 1] == 0) out.push_back(v);
    return out;
}

Count count_ao_brute(const Graph& g) {
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("count_ao_brute: edge budget is 20");
    MaskScanner scan(g);
    unsigned long long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (scan.acyclic(mask)) ++count;
    return count;
}

Count count_auso_brute(const Graph& g, int sink) {
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("count_auso_brute: edge budget is 20");
    if (sink < 1 || sink > g.vertex_count()) throw std::invalid_argument("count_auso_brute: bad sink");
    MaskScanner scan(g);
    unsigned long long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int only = 0;
        if (scan.sink_count(mask, &only) != 1 || only != sink) continue;
        if (scan.acyclic(mask)) ++count;
    }
    return count;
}

Orientation orientation_from_sort(const Graph& g, const TopologicalSort& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("orientation_from_sort: order size mismatch");
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint8_t> dir(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        dir[e] = pos[u] > pos[v];  // 1 directs v -> u
    }
    return Orientation{g, std::move(dir)};
}

std::vector<TopologicalSort> canonical_sorts(const CompleteMultipartiteGraph& k) {
    const int n = k.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical_sorts: vertex budget is 10");
    std::vector<int> part(n + 1);
    for (int v = 1; v <= n; ++v) part[v] = k.part_of(v);

    std::vector<TopologicalSort> out;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::uint32_t> reach(n);
    do {
        // reach[i] = bitmask of vertices reachable from order[i] along the
        // orientation induced by the order (all edges point forward).
        for (int i = n - 1; i >= 0; --i) {
            std::uint32_t r = 0;
            for (int j = i + 1; j < n; ++j)
                if (part[order[i]] != part[order[j]]) r |= reach[j] | (1u << (order[j] - 1));
            reach[i] = r;
        }
        bool canonical = true;
        for (int i = 0; i < n - 1 && canonical; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (part[order[i]] != part[order[j]]) continue;
                const bool incomparable = !(reach[i] >> (order[j] - 1) & 1);
                if (incomparable && order[i] > order[j]) {
                    canonical = false;
                    break;
                }
            }
        if (canonical) out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

namespace {

// Dense canonical key: vertex count then the sorted edge list.
std::vector<int> graph_key(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    std::vector<int> key;
    key.reserve(1 + 2 * edges.size());
    key.push_back(n);
    for (const auto& [u, v] : edges) {
        key.push_back(u);
        key.push_back(v);
    }
    return key;
}

std::vector<Count> chromatic_rec(int n, std::vector<Edge> edges,
                                 std::map<std::vector<int>, std::vector<Count>>& memo) {
    if (edges.empty()) {
        std::vector<Count> poly(n + 1, 0);
        poly[n] = 1;  // q^n
        return poly;
    }
    auto key = graph_key(n, edges);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const Edge e = edges.front();

    std::vector<Edge> del(edges.begin() + 1, edges.end());
    std::vector<Count> pd = chromatic_rec(n, del, memo);

    // Contract e onto its smaller endpoint, drop loops/duplicates, relabel densely.
    const int keep = e.first, gone = e.second;
    std::vector<Edge> con;
    for (const auto& [u0, v0] : edges) {
        int u = u0 == gone ? keep : u0;
        int v = v0 == gone ? keep : v0;
        if (u == v) continue;
        if (u > gone) --u;
        if (v > gone) --v;
        if (u > v) std::swap(u, v);
        con.emplace_back(u, v);
    }
    std::sort(con.begin(), con.end());
    con.erase(std::unique(con.begin(), con.end()), con.end());
    std::vector<Count> pc = chromatic_rec(n - 1, con, memo);

    std::vector<Count> poly(n + 1, 0);
    for (int d = 0; d <= n; ++d) poly[d] = pd[d];
    for (int d = 0; d <= n - 1; ++d) poly[d] -= pc[d];
    memo.emplace(std::move(key), poly);
    return poly;
}

}  // namespace

std::vector<Count> chromatic_polynomial(const Graph& g) {
    ChromaticMemo memo;
    return chromatic_polynomial(g, memo);
}

std::vector<Count> chromatic_polynomial(const Graph& g, ChromaticMemo& memo) {
    if (g.edge_count() > 20) throw std::invalid_argument("chromatic_polynomial: edge budget is 20");
    return chromatic_rec(g.vertex_count(), g.edges(), memo.table());
}

Count count_ao_chromatic(const Graph& g, ChromaticMemo& memo) {
    const auto poly = chromatic_polynomial(g, memo);
    Count at = 0, q = 1;  // evaluate at -1
    for (size_t d = 0; d < poly.size(); ++d) {
        at += poly[d] * q;
        q = -q;
    }
    return abs(at);
}

Graph delete_edge(const Graph& g, Edge e) {
    const int idx = g.edge_index(e.first, e.second);
    if (idx < 0) throw std::invalid_argument("delete_edge: edge not present");
    auto edges = g.edges();
    edges.erase(edges.begin() + idx);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("contract_edge: edge not present");
    const int keep = std::min(e.first, e.second), gone = std::max(e.first, e.second);
    std::vector<Edge> out;
    for (const auto& [u0, v0] : g.edges()) {
        int u = u0 == gone ? keep : u0;
        int v = v0 == gone ? keep : v0;
        if (u == v) continue;
        if (u > gone) --u;
        if (v > gone) --v;
        if (u > v) std::swap(u, v);
        out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Graph(g.vertex_count() - 1, std::move(out));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count()) throw std::invalid_argument("delete_vertex: vertex out of range");
    std::vector<Edge> out;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        if (a > v) --a;
        if (b > v) --b;
        out.emplace_back(a, b);
    }
    return Graph(g.vertex_count() - 1, std::move(out));
}

}
