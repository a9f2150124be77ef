#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dgbench/core/types.hpp"
#include "dgbench/parsing/actions.hpp"

namespace dgbench {

struct MapNode {
    int id = 0;
    int x = 0;
    int y = 0;
    std::string category;
    std::string image;  // optional file reference
};

// Lattice-embedded room graph. Edges join lattice-adjacent coordinates only,
// so direction labels are derivable from coordinates and always consistent.
struct MapGraph {
    std::vector<MapNode> nodes;                // ids are 0..n-1, node i at index i
    std::vector<std::pair<int, int>> edges;    // unordered, stored as (min, max)
    int start = 0;
    std::optional<int> target;                 // G2X goal node

    bool has_edge(int a, int b) const;
    const MapNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
    std::vector<int> neighbors(int id) const;
    std::optional<int> neighbor_in_direction(int id, Direction d) const;
    // Directions with an exit, in fixed north/south/east/west order.
    std::vector<Direction> exits(int id) const;
    std::optional<Direction> direction_between(int from, int to) const;

    Json to_json() const;
    static MapGraph from_json(const Json& j);
};

// Checks every MapGraph invariant: connected, one node per coordinate, edges
// lattice-adjacent, degree <= 4. Returns a description of the first violation.
std::optional<std::string> validate_map(const MapGraph& map);

// BFS hop distances from a source node (unreachable = -1).
std::vector<int> bfs_distances(const MapGraph& map, int from);

struct ExplorationState {
    int current = 0;
    std::set<int> visited;
    std::set<int> seen;  // visited plus announced neighbors
    std::vector<std::pair<Direction, bool>> moves;  // (direction, valid?)
    int turn = 0;
};

ExplorationState initial_state(const MapGraph& map);

struct StepResult {
    bool terminal = false;  // Done was issued
    bool moved = false;     // a Go action crossed an edge
};

// Applies one parsed action. An off-graph Go leaves the position unchanged and
// records the move as invalid (the game replies with the reprompt template,
// it does not abort).
StepResult step(const MapGraph& map, ExplorationState& state, const MoveAction& action);

// The seen-set law: seen == visited plus all neighbors of visited nodes.
bool seen_law_holds(const MapGraph& map, const ExplorationState& state);

}  // namespace dgbench
