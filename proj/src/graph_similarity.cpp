#include "dgbench/metrics/graph_similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dgbench::metrics {

LabeledGraph LabeledGraph::from_player_graph(const parsing::PlayerGraph& g) {
    LabeledGraph out;
    out.labels = g.nodes;
    auto index_of = [&](const std::string& label) {
        return static_cast<int>(std::find(out.labels.begin(), out.labels.end(), label) -
                                out.labels.begin());
    };
    for (const auto& [direction, pairs] : g.edges) {
        (void)direction;  // the skeleton is undirected
        for (const auto& [a, b] : pairs) {
            int ia = index_of(a);
            int ib = index_of(b);
            if (ia == ib) continue;
            auto e = std::minmax(ia, ib);
            std::pair<int, int> edge{e.first, e.second};
            if (std::find(out.edges.begin(), out.edges.end(), edge) == out.edges.end()) {
                out.edges.push_back(edge);
            }
        }
    }
    return out;
}

namespace {

struct GedSearch {
    const LabeledGraph& a;
    const LabeledGraph& b;
    std::vector<std::vector<bool>> adj_a;
    std::vector<std::vector<bool>> adj_b;
    std::vector<int> assignment;  // a-node -> b-node or -1 (deleted)
    std::vector<bool> used_b;
    int best = 0;

    GedSearch(const LabeledGraph& ga, const LabeledGraph& gb) : a(ga), b(gb) {
        adj_a = adjacency(ga);
        adj_b = adjacency(gb);
        assignment.assign(a.labels.size(), -1);
        used_b.assign(b.labels.size(), false);
    }

    static std::vector<std::vector<bool>> adjacency(const LabeledGraph& g) {
        std::vector<std::vector<bool>> m(g.labels.size(),
                                         std::vector<bool>(g.labels.size(), false));
        for (const auto& [x, y] : g.edges) {
            m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
            m[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = true;
        }
        return m;
    }

    // Minimum remaining node-edit cost if a-nodes [next..) are still open:
    // shared labels map for free, the rest substitute or insert/delete.
    int label_lower_bound(std::size_t next) const {
        std::map<std::string, int> pool;
        std::size_t remaining_b = 0;
        for (std::size_t j = 0; j < b.labels.size(); ++j) {
            if (!used_b[j]) {
                ++pool[b.labels[j]];
                ++remaining_b;
            }
        }
        std::size_t remaining_a = a.labels.size() - next;
        int common = 0;
        for (std::size_t i = next; i < a.labels.size(); ++i) {
            auto it = pool.find(a.labels[i]);
            if (it != pool.end() && it->second > 0) {
                --it->second;
                ++common;
            }
        }
        return static_cast<int>(std::max(remaining_a, remaining_b)) - common;
    }

    // Incremental edge cost of fixing a-node `i` against already-decided nodes.
    int edge_cost_of(std::size_t i, int target) const {
        int cost = 0;
        for (std::size_t j = 0; j < i; ++j) {
            bool ea = adj_a[i][j];
            bool eb = false;
            if (target >= 0 && assignment[j] >= 0) {
                eb = adj_b[static_cast<std::size_t>(target)]
                          [static_cast<std::size_t>(assignment[j])];
            }
            if (ea != eb) ++cost;
        }
        return cost;
    }

    // Cost of everything in b untouched by the assignment: leftover nodes plus
    // every b-edge with an unmatched endpoint.
    int closing_cost() const {
        int cost = 0;
        for (std::size_t j = 0; j < b.labels.size(); ++j) {
            if (!used_b[j]) ++cost;
        }
        for (const auto& [x, y] : b.edges) {
            bool x_used = used_b[static_cast<std::size_t>(x)];
            bool y_used = used_b[static_cast<std::size_t>(y)];
            if (!x_used || !y_used) ++cost;
        }
        return cost;
    }

    void search(std::size_t i, int cost) {
        if (cost + label_lower_bound(i) >= best) return;
        if (i == a.labels.size()) {
            best = std::min(best, cost + closing_cost());
            return;
        }
        for (std::size_t j = 0; j < b.labels.size(); ++j) {
            if (used_b[j]) continue;
            int c = (a.labels[i] == b.labels[j] ? 0 : 1) + edge_cost_of(i, static_cast<int>(j));
            assignment[i] = static_cast<int>(j);
            used_b[j] = true;
            search(i + 1, cost + c);
            used_b[j] = false;
            assignment[i] = -1;
        }
        // Delete a-node i (and its edges toward decided nodes).
        search(i + 1, cost + 1 + edge_cost_of(i, -1));
    }

    int run() {
        // Any full assignment works as an initial upper bound; deleting all of
        // a and inserting all of b is always feasible.
        best = static_cast<int>(a.labels.size() + a.edges.size() + b.labels.size() +
                                b.edges.size()) + 1;
        search(0, 0);
        return best;
    }
};

}  // namespace

int graph_edit_distance(const LabeledGraph& a, const LabeledGraph& b, int max_nodes) {
    if (static_cast<int>(a.labels.size()) > max_nodes ||
        static_cast<int>(b.labels.size()) > max_nodes) {
        throw std::invalid_argument("graph_edit_distance: graph exceeds the exact-search bound");
    }
    return GedSearch(a, b).run();
}

double similarity_from_distance(int dist) {
    double norm = 2.0 * (1.0 / (1.0 + std::exp(-0.5 * static_cast<double>(dist))) - 0.5);
    return 100.0 * (1.0 - norm);
}

double graph_similarity(const LabeledGraph& generated, const LabeledGraph& truth, int max_nodes) {
    return similarity_from_distance(graph_edit_distance(generated, truth, max_nodes));
}

}  // namespace dgbench::metrics
