#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toppcomb/count.hpp"

namespace toppcomb {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..n, n <= 24. Edges are stored with
// u < v in insertion order; loops and duplicates are rejected.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const;  // -1 if absent
    std::vector<int> neighbors(int v) const;

    // Text form: first line "n m", then one "u v" line per edge.
    static Graph parse(std::istream& in);
    static Graph parse(const std::string& text);
    std::string str() const;

    // Equality is structural: same vertex count, same edge set.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Complete multipartite graph; part i >= 1 vertices, labeled consecutively:
// part 1 = 1..n_1, part 2 = n_1+1..n_1+n_2, and so on. Edges join distinct parts.
class CompleteMultipartiteGraph {
public:
    explicit CompleteMultipartiteGraph(std::vector<int> part_sizes);

    const std::vector<int>& part_sizes() const { return parts_; }
    int vertex_count() const;
    int part_of(int v) const;  // 1-indexed part
    Graph to_graph() const;    // edges in lexicographic (u, v) order

private:
    std::vector<int> parts_;
};

// An orientation of a graph: dir[e] = 0 directs edge e from its stored u to v,
// dir[e] = 1 the other way.
struct Orientation {
    Graph graph;
    std::vector<std::uint8_t> dir;

    int tail(int e) const { return dir[e] ? graph.edges()[e].second : graph.edges()[e].first; }
    int head(int e) const { return dir[e] ? graph.edges()[e].first : graph.edges()[e].second; }

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

bool is_acyclic(const Orientation& o);
// Vertices with no outgoing arc, increasing.
std::vector<int> sinks(const Orientation& o);

// Exhaustive scans over all 2^m orientations; m <= 20.
Count count_ao_brute(const Graph& g);
Count count_auso_brute(const Graph& g, int sink);

using TopologicalSort = std::vector<int>;

// Directs every edge from the earlier to the later vertex of the order.
Orientation orientation_from_sort(const Graph& g, const TopologicalSort& order);

// All vertex orders of a complete multipartite graph in which incomparable
// vertices (same part, no directed path either way in the induced orientation)
// appear in increasing label order. These are in bijection with the acyclic
// orientations. Vertex count <= 10.
std::vector<TopologicalSort> canonical_sorts(const CompleteMultipartiteGraph& k);

// Exact coefficients, lowest degree first, size n+1. Deletion-contraction with
// memoization on the densely relabeled graph; edge count <= 20.
class ChromaticMemo {
public:
    std::map<std::vector<int>, std::vector<Count>>& table() { return table_; }

private:
    std::map<std::vector<int>, std::vector<Count>> table_;
};

std::vector<Count> chromatic_polynomial(const Graph& g);
std::vector<Count> chromatic_polynomial(const Graph& g, ChromaticMemo& memo);

// Acyclic orientation count |chi(-1)| through the chromatic polynomial.
Count count_ao_chromatic(const Graph& g, ChromaticMemo& memo);

Graph delete_edge(const Graph& g, Edge e);
// Merges the endpoints into the smaller label, drops loops and duplicate edges,
// then relabels densely (labels above the removed vertex shift down by one).
Graph contract_edge(const Graph& g, Edge e);
// Removes a vertex and its edges, relabeling densely.
Graph delete_vertex(const Graph& g, int v);

}
