#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ripcert/errors.hpp"

namespace ripcert::graph {

// Undirected edge in canonical order, first < second.
using Edge = std::pair<int, int>;

// Strictly increasing list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    // Sorts the ids; rejects negatives and duplicates.
    static VertexSet from_list(std::vector<int> ids);

    // Ids must already be strictly increasing and non-negative.
    static VertexSet from_sorted(std::vector<int> ids);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    const std::vector<int>& members() const { return members_; }

    VertexSet complement(int n) const;

    // 0/1 indicator vector in n dimensions.
    Eigen::VectorXd indicator(int n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> members_;
};

// Simple undirected d-regular graph on vertices 0..n-1.
class RegularGraph {
public:
    // Validates simplicity and d-regularity; edges may arrive in any order
    // or orientation and are stored canonically sorted.
    static RegularGraph from_edges(int n, int d, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int degree() const { return d_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    // Dense 0/1 adjacency matrix (symmetric, zero diagonal).
    Eigen::MatrixXd adjacency_matrix() const;

    bool operator==(const RegularGraph& other) const;

private:
    RegularGraph(int n, int d, std::vector<Edge> edges,
                 std::vector<std::vector<int>> adjacency);

    int n_ = 0;
    int d_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// A vertex set together with its boundary size and expansion value
// boundary / (d * min(|S|, n - |S|)).
struct CutReport {
    VertexSet set;
    std::int64_t boundary = 0;
    double expansion = 0.0;
};

// Expansion of a non-empty proper subset S.
CutReport expansion(const RegularGraph& g, const VertexSet& s);

// Exhaustive minimum expansion over all non-empty sets of size <= max_size,
// 1 <= max_size <= n/2. Ties break toward the smaller set, then the
// lexicographically smallest member list.
CutReport min_expansion_small_sets(const RegularGraph& g, int max_size);

// Configuration-model random d-regular graph; pairings with self-loops or
// multi-edges are rejected and redrawn, up to kPairingRetryBudget attempts.
inline constexpr int kPairingRetryBudget = 1000;
RegularGraph gen_random_regular(int n, int d, std::uint64_t seed);

struct PlantedInstance {
    RegularGraph graph;
    VertexSet planted;
};

// Disjoint random d-regular graphs on {0..s-1} and its complement, joined by
// c/2 degree-preserving cross swaps, so the planted set has boundary exactly c.
PlantedInstance gen_planted_cut(int n, int d, int s, int c, std::uint64_t seed);

// Text format: header "n d m", then m lines "u v" with 0 <= u < v < n.
// '#'-prefixed comment lines are permitted anywhere.
RegularGraph read_graph(std::istream& in);
RegularGraph read_graph(const std::filesystem::path& path);
void write_graph(const RegularGraph& g, std::ostream& out);
void write_graph(const RegularGraph& g, const std::filesystem::path& path);

}  // namespace ripcert::graph
