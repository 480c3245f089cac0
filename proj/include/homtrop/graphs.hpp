#ifndef HOMTROP_GRAPHS_HPP
#define HOMTROP_GRAPHS_HPP

#include <homtrop/rat.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace homtrop::graphs {

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string & what) : std::runtime_error(what) {}
};

// Finite simple undirected graph, immutable after construction.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>> & edges() const { return edges_; }
    const std::vector<std::vector<int>> & adjacency() const { return adj_; }
    bool has_edge(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> matrix_;
};

// counts[k] = hom(P_k; G), where P_k is the path with k edges.
struct HomCountVector {
    std::vector<BigInt> counts;
};

BigInt hom_count(const Graph & pattern, const Graph & target, int max_pattern_vertices = 12);

HomCountVector path_hom_vector(const Graph & target, int max_len);

BigInt cycle_hom(const Graph & target, int k);

BigInt star_hom(const Graph & target, int k);

BigInt clique_hom(const Graph & target, int p, int max_clique_size = 12);

Graph tensor_product(const Graph & g1, const Graph & g2, int max_vertices = 4096);

Graph disjoint_union(const Graph & g1, const Graph & g2);

enum class Family { Complete, Cycle, Path, Star, CompleteBipartite, Turan };

// complete(m): K_m; cycle(k): C_k, k >= 3; path(k): k edges, k+1 vertices;
// star(k): k branches, k+1 vertices; complete_bipartite(a, b); turan(n, parts).
Graph make_named(Family family, const std::vector<int> & params);
Graph make_named(const std::string & selector); // e.g. "complete:3", "path:4", "turan:6,3"

// Text format: first line n, then "u v" lines with 0 <= u < v < n, '#' comments.
Graph parse_graph(std::istream & in);
Graph parse_graph_text(const std::string & text);
std::string graph_to_text(const Graph & g);

// All graphs on exactly n vertices up to isomorphism, canonical-form
// deduplicated. n <= 6 by default; n == 7 only when allow_large is set.
const std::vector<Graph> & all_graphs(int n, bool allow_large = false);

bool connected(const Graph & g);

}

#endif
