#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgbench/parsing/parsers.hpp"

namespace dgbench::metrics {

// Undirected graph with category labels on nodes. Labels may repeat
// (ambiguous maps), so node identity is positional.
struct LabeledGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;  // indices into labels, unordered

    static LabeledGraph from_player_graph(const parsing::PlayerGraph& g);
};

// Exact graph edit distance with unit cost for node insertion, deletion and
// label substitution, and for edge insertion and deletion. Branch-and-bound
// over node assignments; exponential, so inputs above `max_nodes` are refused.
int graph_edit_distance(const LabeledGraph& a, const LabeledGraph& b, int max_nodes = 12);

// 100 * (1 - norm) where norm = 2 * (1 / (1 + e^(-0.5 * dist)) - 0.5).
double similarity_from_distance(int dist);

double graph_similarity(const LabeledGraph& generated, const LabeledGraph& truth,
                        int max_nodes = 12);

}  // namespace dgbench::metrics
