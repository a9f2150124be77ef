#pragma once

#include <set>
#include <vector>

#include "dgbench/core/types.hpp"
#include "dgbench/games/map_graph.hpp"
#include "dgbench/parsing/actions.hpp"

namespace dgbench::metrics {

// Breadth-first enumeration of all minimum-length walks from `current` over
// `edges` whose node set covers every node of `seen` that is not yet in
// `visited`. Walks may re-traverse visited nodes. If there is nothing left to
// cover, the unique answer is the zero-move walk [current].
//
// Each returned path is a node sequence starting at `current`.
std::vector<std::vector<int>> find_shortest_paths(const std::vector<std::pair<int, int>>& edges,
                                                  const std::set<int>& visited,
                                                  const std::set<int>& seen, int current);

// First nodes stepped to by any minimal covering walk; empty iff the frontier
// is empty (then stopping is the only good move).
std::set<int> optimal_first_steps(const std::vector<std::pair<int, int>>& edges,
                                  const std::set<int>& visited, const std::set<int>& seen,
                                  int current);

// Edges of the subgraph induced by the seen set.
std::vector<std::pair<int, int>> seen_edges(const MapGraph& map, const std::set<int>& seen);

// Whether `action` taken from `state` begins some minimal covering walk
// (Done is good iff nothing is left to cover).
bool is_good_move(const MapGraph& map, const ExplorationState& state, const MoveAction& action);

// The accepted actions of a map episode, recovered from the transcript: each
// player response is parsed as a bare move or as the action field of a JSON
// answer. Stops at the first response that parses as neither (aborted tail).
std::vector<MoveAction> extract_actions(const Episode& episode);

// Fraction of accepted actions (moves and the final Done) that were good,
// scaled to 0..100. Replays the transcript against the map.
double efficiency(const Episode& episode, const MapGraph& map);

// Same computation for a plain action sequence; shared by tests and oracles.
double efficiency_of_actions(const std::vector<MoveAction>& actions, const MapGraph& map);

// 100 * |visited| / |nodes| after replaying the episode's accepted actions.
double exploration(const Episode& episode, const MapGraph& map);

}  // namespace dgbench::metrics
