#include "ripcert/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ripcert/combinatorics.hpp"
#include "ripcert/rng.hpp"

namespace ripcert::graph {

VertexSet VertexSet::from_list(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<int> ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0) {
            throw ParameterError("VertexSet: negative vertex id " + std::to_string(ids[i]));
        }
        if (i > 0 && ids[i] <= ids[i - 1]) {
            throw ParameterError("VertexSet: duplicate or unsorted vertex id " +
                                 std::to_string(ids[i]));
        }
    }
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
    if (!members_.empty() && members_.back() >= n) {
        throw ParameterError("VertexSet::complement: member out of range");
    }
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - members_.size());
    std::size_t pos = 0;
    for (int v = 0; v < n; ++v) {
        if (pos < members_.size() && members_[pos] == v) {
            ++pos;
        } else {
            rest.push_back(v);
        }
    }
    return from_sorted(std::move(rest));
}

Eigen::VectorXd VertexSet::indicator(int n) const {
    if (!members_.empty() && members_.back() >= n) {
        throw ParameterError("VertexSet::indicator: member out of range");
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int v : members_) {
        x(v) = 1.0;
    }
    return x;
}

RegularGraph::RegularGraph(int n, int d, std::vector<Edge> edges,
                           std::vector<std::vector<int>> adjacency)
    : n_(n), d_(d), edges_(std::move(edges)), adjacency_(std::move(adjacency)) {}

RegularGraph RegularGraph::from_edges(int n, int d, std::vector<Edge> edges) {
    if (n <= 0 || d <= 0 || d >= n) {
        throw ParameterError("RegularGraph: need n > 0 and 0 < d < n");
    }
    if (static_cast<std::int64_t>(n) * d % 2 != 0) {
        throw ParameterError("RegularGraph: n*d must be even");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw ParameterError("RegularGraph: self-loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (u < 0 || v >= n) {
            throw ParameterError("RegularGraph: edge endpoint out of range");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw ParameterError("RegularGraph: duplicate edge");
    }
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adjacency[static_cast<std::size_t>(u)].push_back(v);
        adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nbrs = adjacency[static_cast<std::size_t>(v)];
        if (static_cast<int>(nbrs.size()) != d) {
            throw ParameterError("RegularGraph: vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(nbrs.size()) + ", expected " + std::to_string(d));
        }
        std::sort(nbrs.begin(), nbrs.end());
    }
    return RegularGraph(n, d, std::move(edges), std::move(adjacency));
}

const std::vector<int>& RegularGraph::neighbors(int v) const {
    if (v < 0 || v >= n_) {
        throw ParameterError("RegularGraph::neighbors: vertex out of range");
    }
    return adjacency_[static_cast<std::size_t>(v)];
}

bool RegularGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
        return false;
    }
    const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Eigen::MatrixXd RegularGraph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const auto& [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

bool RegularGraph::operator==(const RegularGraph& other) const {
    return n_ == other.n_ && d_ == other.d_ && edges_ == other.edges_;
}

namespace {

std::int64_t boundary_size(const RegularGraph& g, const VertexSet& s) {
    std::int64_t crossing = 0;
    for (const auto& [u, v] : g.edges()) {
        if (s.contains(u) != s.contains(v)) {
            ++crossing;
        }
    }
    return crossing;
}

CutReport make_report(const RegularGraph& g, VertexSet s, std::int64_t boundary) {
    const std::int64_t min_side =
        std::min<std::int64_t>(s.size(), g.vertex_count() - s.size());
    CutReport report;
    report.boundary = boundary;
    report.expansion = static_cast<double>(boundary) /
                       static_cast<double>(g.degree() * min_side);
    report.set = std::move(s);
    return report;
}

// Exact comparison of boundary_a/den_a < boundary_b/den_b without floats.
bool strictly_sparser(std::int64_t boundary_a, std::int64_t den_a,
                      std::int64_t boundary_b, std::int64_t den_b) {
    return boundary_a * den_b < boundary_b * den_a;
}

}  // namespace

CutReport expansion(const RegularGraph& g, const VertexSet& s) {
    if (s.empty()) {
        throw InvalidCutError("expansion: cut side is empty");
    }
    if (s.size() >= g.vertex_count()) {
        if (s.size() > g.vertex_count() || s.members().back() >= g.vertex_count()) {
            throw ParameterError("expansion: vertex id out of range");
        }
        throw InvalidCutError("expansion: cut side is the whole vertex set");
    }
    if (s.members().back() >= g.vertex_count()) {
        throw ParameterError("expansion: vertex id out of range");
    }
    return make_report(g, s, boundary_size(g, s));
}

CutReport min_expansion_small_sets(const RegularGraph& g, int max_size) {
    const int n = g.vertex_count();
    if (max_size < 1 || 2 * max_size > n) {
        throw ParameterError("min_expansion_small_sets: need 1 <= k <= n/2");
    }

    bool found = false;
    std::vector<int> best_members;
    std::int64_t best_boundary = 0;
    std::int64_t best_den = 1;

    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    // Sizes ascending, lexicographic within a size; keeping only strict
    // improvements realizes the documented tie-break.
    for (int size = 1; size <= max_size; ++size) {
        for_each_combination(n, size, [&](std::span<const int> comb) {
            std::fill(in_set.begin(), in_set.end(), 0);
            for (int v : comb) {
                in_set[static_cast<std::size_t>(v)] = 1;
            }
            std::int64_t crossing = 0;
            for (const auto& [u, v] : g.edges()) {
                if (in_set[static_cast<std::size_t>(u)] != in_set[static_cast<std::size_t>(v)]) {
                    ++crossing;
                }
            }
            const std::int64_t den = static_cast<std::int64_t>(g.degree()) * size;
            if (!found || strictly_sparser(crossing, den, best_boundary, best_den)) {
                found = true;
                best_members.assign(comb.begin(), comb.end());
                best_boundary = crossing;
                best_den = den;
            }
            return true;
        });
    }
    return make_report(g, VertexSet::from_sorted(std::move(best_members)), best_boundary);
}

namespace {

// One configuration-model pairing attempt; empty result on collision.
std::vector<Edge> try_pairing(int n, int d, Rng& rng, const std::vector<int>& labels) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < d; ++i) {
            stubs.push_back(v);
        }
    }
    rng.shuffle(stubs);

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        int u = stubs[i];
        int v = stubs[i + 1];
        if (u == v) {
            return {};
        }
        if (u > v) {
            std::swap(u, v);
        }
        auto& row = seen[static_cast<std::size_t>(u)];
        if (std::find(row.begin(), row.end(), v) != row.end()) {
            return {};
        }
        row.push_back(v);
        edges.emplace_back(labels[static_cast<std::size_t>(u)],
                           labels[static_cast<std::size_t>(v)]);
    }
    return edges;
}

// d-regular edges on the given vertex labels, drawn from `rng`.
std::vector<Edge> random_regular_edges(const std::vector<int>& labels, int d, Rng& rng) {
    const int n = static_cast<int>(labels.size());
    if (d <= 0 || d >= n) {
        throw ParameterError("random regular generation: need 0 < d < n (n=" +
                             std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    if (static_cast<std::int64_t>(n) * d % 2 != 0) {
        throw ParameterError("random regular generation: n*d must be even");
    }
    for (int attempt = 0; attempt < kPairingRetryBudget; ++attempt) {
        auto edges = try_pairing(n, d, rng, labels);
        if (!edges.empty()) {
            return edges;
        }
    }
    throw GenerationError("random regular generation: no simple pairing within " +
                          std::to_string(kPairingRetryBudget) + " attempts");
}

}  // namespace

RegularGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(labels.begin(), labels.end(), 0);
    Rng rng(seed);
    auto edges = random_regular_edges(labels, d, rng);
    return RegularGraph::from_edges(n, d, std::move(edges));
}

PlantedInstance gen_planted_cut(int n, int d, int s, int c, std::uint64_t seed) {
    if (s < 1 || 2 * s > n) {
        throw ParameterError("gen_planted_cut: need 1 <= s <= n/2");
    }
    if (c < 0 || c % 2 != 0) {
        throw ParameterError("gen_planted_cut: cross-edge count c must be even and >= 0");
    }
    if (2 * c > d * s) {
        throw ParameterError("gen_planted_cut: need c <= d*s/2");
    }
    if (static_cast<std::int64_t>(s) * d % 2 != 0 ||
        static_cast<std::int64_t>(n - s) * d % 2 != 0) {
        throw ParameterError("gen_planted_cut: s*d and (n-s)*d must both be even");
    }

    Rng rng(seed);
    std::vector<int> side_a(static_cast<std::size_t>(s));
    std::iota(side_a.begin(), side_a.end(), 0);
    std::vector<int> side_b(static_cast<std::size_t>(n - s));
    std::iota(side_b.begin(), side_b.end(), s);

    std::vector<Edge> edges_a = random_regular_edges(side_a, d, rng);
    std::vector<Edge> edges_b = random_regular_edges(side_b, d, rng);

    // Each swap retires one edge per side and adds two crossing edges,
    // keeping every degree intact. Crossing pairs never collide with
    // in-side edges, so only earlier crossing edges can clash.
    std::vector<Edge> crossing;
    crossing.reserve(static_cast<std::size_t>(c));
    int budget = kPairingRetryBudget;
    while (static_cast<int>(crossing.size()) < c) {
        if (edges_a.empty() || edges_b.empty()) {
            throw GenerationError("gen_planted_cut: ran out of in-side edges to swap");
        }
        const std::size_t ia = rng.next_below(edges_a.size());
        const std::size_t ib = rng.next_below(edges_b.size());
        const Edge ea = edges_a[ia];
        const Edge eb = edges_b[ib];
        const Edge c1{ea.first, eb.first};
        const Edge c2{ea.second, eb.second};
        const bool clash =
            std::find(crossing.begin(), crossing.end(), c1) != crossing.end() ||
            std::find(crossing.begin(), crossing.end(), c2) != crossing.end();
        if (clash) {
            if (--budget <= 0) {
                throw GenerationError("gen_planted_cut: no non-clashing swap within budget");
            }
            continue;
        }
        edges_a.erase(edges_a.begin() + static_cast<std::ptrdiff_t>(ia));
        edges_b.erase(edges_b.begin() + static_cast<std::ptrdiff_t>(ib));
        crossing.push_back(c1);
        crossing.push_back(c2);
    }

    std::vector<Edge> edges = std::move(edges_a);
    edges.insert(edges.end(), edges_b.begin(), edges_b.end());
    edges.insert(edges.end(), crossing.begin(), crossing.end());

    std::vector<int> planted(static_cast<std::size_t>(s));
    std::iota(planted.begin(), planted.end(), 0);
    return PlantedInstance{RegularGraph::from_edges(n, d, std::move(edges)),
                           VertexSet::from_sorted(std::move(planted))};
}

}  // namespace ripcert::graph
