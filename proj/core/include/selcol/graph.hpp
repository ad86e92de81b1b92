#ifndef SELCOL_GRAPH_HPP
#define SELCOL_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace selcol {

// Sorted list of distinct vertex ids of some host graph.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1 with bit-packed dense
// adjacency rows. Immutable after construction; sized for n up to a few
// thousand, which covers everything in this project.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const { return degree_[v]; }

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    // Adjacency row of v as 64-bit words, for bit-parallel set intersection.
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int row_words() const { return words_; }

    bool operator==(const Graph& other) const = default;

private:
    void set_edge(int u, int v);
    void finalize_counts();

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;

    friend Graph complement(const Graph&);
};

// Edge iff non-edge in g (u != v).
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // vertices[i] is the host-graph id of local vertex i (ascending).
    std::vector<int> vertices;
};

// Subgraph induced by s; throws std::invalid_argument on ids outside the
// host graph or duplicates in s.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// m / (n(n-1)/2); throws std::domain_error for n < 2.
double edge_density(const Graph& g);

} // namespace selcol

#endif
