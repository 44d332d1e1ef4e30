#ifndef SPECTREE_GRAPH_HPP
#define SPECTREE_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectree {

inline constexpr int kMaxVertices = 4096;

/// Undirected simple graph over vertex indices 0..n-1 with bitset adjacency
/// rows. Rows are stored as 64-bit words; graphs with n <= 64 use a single
/// word per row, which the enumeration and census inner loops rely on via
/// row_word().
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }
    int words_per_row() const { return wpr_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (word(u, v >> 6) >> (v & 63)) & 1u;
    }

    /// Inserts the edge {u,v}; rejects self-loops and out-of-range vertices.
    /// Re-adding an existing edge is a no-op.
    void add_edge(int u, int v);

    int degree(int v) const {
        check_vertex(v);
        const std::uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
        return d;
    }

    int max_degree() const;
    std::vector<int> neighbors(int v) const;

    /// First adjacency word of v; the full row when order() <= 64.
    std::uint64_t row_word(int v) const { return words_[static_cast<std::size_t>(v) * wpr_]; }
    const std::uint64_t* row(int v) const { return words_.data() + static_cast<std::size_t>(v) * wpr_; }

    bool operator==(const Graph&) const = default;

private:
    std::uint64_t word(int v, int w) const { return words_[static_cast<std::size_t>(v) * wpr_ + w]; }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_;
    int wpr_;
    long long edges_;
    std::vector<std::uint64_t> words_;
};

/// Visits every neighbor of v in ascending order.
template <typename F>
inline void for_each_neighbor(const Graph& g, int v, F&& fn) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            fn((w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

/// BFS distance layers around a source vertex: shells[i] holds the vertices
/// at distance exactly i+1. Unreachable vertices appear in no shell.
struct NeighborhoodShells {
    int source = 0;
    std::vector<std::vector<int>> shells;
};

NeighborhoodShells shells(const Graph& g, int v);

/// The graph on N1(v) u N2(v) whose edges are those inside N1(v) plus those
/// between N1(v) and N2(v); edges inside N2(v) are dropped. `vertices` lists
/// the original ids, first-shell vertices first, and `graph` is the relabeled
/// link graph over those positions.
struct LinkGraph {
    int center = 0;
    std::vector<int> vertices;
    int n1_count = 0;
    Graph graph{1};

    /// Degree in the link graph of an original vertex id; -1 if absent.
    int degree_of(int original_vertex) const;
};

LinkGraph link_graph(const Graph& g, int v);

/// K_k joined to an independent set of n-k vertices: vertices 0..k-1 form the
/// clique, k..n-1 the independent part. Requires 1 <= k < n.
Graph make_snk(int n, int k);

/// make_snk(n, k) plus the single edge {k, k+1} inside the independent part.
/// Requires k >= 1 and n >= k+2.
Graph make_snk_plus(int n, int k);

/// Diameter, or nullopt for a disconnected graph (never a finite sentinel).
std::optional<int> diameter(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by a non-empty set of distinct vertices, relabeled to
/// 0..|s|-1 in the order given.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Exact maximum matching size via branch and bound on edges (include or
/// exclude an edge at a highest-degree endpoint, pruned with greedy bounds).
/// Supported for n <= 24.
int max_matching_size(const Graph& g);

/// Isomorphism-class certificate: equal codes iff isomorphic.
struct CanonicalForm {
    std::string code;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographic minimum of the column-major upper-triangle bit string over
/// all vertex orderings, found by branch and bound with prefix pruning and
/// twin skipping. Supported for n <= 10.
CanonicalForm canonical_form(const Graph& g);

/// One representative per isomorphism class of order n (n <= 8), built by
/// incremental vertex extension with canonical-form dedup. The result is
/// cached and the order of graphs is deterministic.
const std::vector<Graph>& enumerate_graphs(int n);

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6 text form (n <= 62): byte n+63, then the upper-triangle bits
/// x01,x02,x12,x03,... packed six per byte, each offset by 63.
std::string to_graph6(const Graph& g);

/// Parses a graph6 line; a leading ">>graph6<<" marker is tolerated.
Graph from_graph6(std::string_view text);

}  // namespace spectree

#endif  // SPECTREE_GRAPH_HPP
