#include "dgbench/games/map_graph.hpp"

#include <algorithm>
#include <deque>

namespace dgbench {

bool MapGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<int> MapGraph::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == id) out.push_back(b);
        if (b == id) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> MapGraph::neighbor_in_direction(int id, Direction d) const {
    const MapNode& from = node(id);
    const auto [dx, dy] = delta(d);
    for (int nb : neighbors(id)) {
        const MapNode& to = node(nb);
        if (to.x == from.x + dx && to.y == from.y + dy) return nb;
    }
    return std::nullopt;
}

std::vector<Direction> MapGraph::exits(int id) const {
    std::vector<Direction> out;
    for (Direction d : kAllDirections) {
        if (neighbor_in_direction(id, d)) out.push_back(d);
    }
    return out;
}

std::optional<Direction> MapGraph::direction_between(int from, int to) const {
    for (Direction d : kAllDirections) {
        auto nb = neighbor_in_direction(from, d);
        if (nb && *nb == to) return d;
    }
    return std::nullopt;
}

Json MapGraph::to_json() const {
    Json j;
    j["nodes"] = Json::array();
    for (const auto& n : nodes) {
        Json jn{{"id", n.id}, {"x", n.x}, {"y", n.y}, {"category", n.category}};
        if (!n.image.empty()) jn["image"] = n.image;
        j["nodes"].push_back(jn);
    }
    j["edges"] = Json::array();
    for (const auto& [a, b] : edges) j["edges"].push_back(Json::array({a, b}));
    j["start"] = start;
    if (target) j["target"] = *target;
    return j;
}

MapGraph MapGraph::from_json(const Json& j) {
    MapGraph map;
    for (const auto& jn : j.at("nodes")) {
        MapNode n;
        n.id = jn.at("id").get<int>();
        n.x = jn.at("x").get<int>();
        n.y = jn.at("y").get<int>();
        n.category = jn.at("category").get<std::string>();
        if (jn.contains("image")) n.image = jn.at("image").get<std::string>();
        map.nodes.push_back(std::move(n));
    }
    for (const auto& je : j.at("edges")) {
        int a = je.at(0).get<int>();
        int b = je.at(1).get<int>();
        if (a > b) std::swap(a, b);
        map.edges.emplace_back(a, b);
    }
    map.start = j.at("start").get<int>();
    if (j.contains("target")) map.target = j.at("target").get<int>();
    return map;
}

std::optional<std::string> validate_map(const MapGraph& map) {
    const int n = static_cast<int>(map.nodes.size());
    if (n == 0) return "map has no nodes";
    for (int i = 0; i < n; ++i) {
        if (map.nodes[static_cast<std::size_t>(i)].id != i) return "node ids are not 0..n-1";
    }
    std::set<std::pair<int, int>> coords;
    for (const auto& node : map.nodes) {
        if (!coords.insert({node.x, node.y}).second) return "two nodes share a coordinate";
    }
    for (const auto& [a, b] : map.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) return "edge endpoint out of range";
        if (a >= b) return "edge not stored as (min, max) with distinct endpoints";
        const auto& na = map.node(a);
        const auto& nb = map.node(b);
        if (std::abs(na.x - nb.x) + std::abs(na.y - nb.y) != 1) {
            return "edge joins non-adjacent lattice cells";
        }
    }
    for (int i = 0; i < n; ++i) {
        if (map.neighbors(i).size() > 4) return "node degree exceeds 4";
    }
    if (map.start < 0 || map.start >= n) return "start out of range";
    if (map.target && (*map.target < 0 || *map.target >= n)) return "target out of range";
    auto dist = bfs_distances(map, 0);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
        return "graph is not connected";
    }
    return std::nullopt;
}

std::vector<int> bfs_distances(const MapGraph& map, int from) {
    std::vector<int> dist(map.nodes.size(), -1);
    std::deque<int> queue{from};
    dist[static_cast<std::size_t>(from)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int nb : map.neighbors(v)) {
            if (dist[static_cast<std::size_t>(nb)] < 0) {
                dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(nb);
            }
        }
    }
    return dist;
}

namespace {

void mark_seen(const MapGraph& map, ExplorationState& state, int node) {
    state.visited.insert(node);
    state.seen.insert(node);
    for (int nb : map.neighbors(node)) state.seen.insert(nb);
}

}  // namespace

ExplorationState initial_state(const MapGraph& map) {
    ExplorationState state;
    state.current = map.start;
    mark_seen(map, state, map.start);
    return state;
}

StepResult step(const MapGraph& map, ExplorationState& state, const MoveAction& action) {
    StepResult result;
    if (action.done) {
        result.terminal = true;
        return result;
    }
    auto destination = map.neighbor_in_direction(state.current, action.direction);
    if (destination) {
        state.current = *destination;
        mark_seen(map, state, *destination);
        result.moved = true;
    }
    state.moves.emplace_back(action.direction, result.moved);
    ++state.turn;
    return result;
}

bool seen_law_holds(const MapGraph& map, const ExplorationState& state) {
    std::set<int> expected = state.visited;
    for (int v : state.visited) {
        for (int nb : map.neighbors(v)) expected.insert(nb);
    }
    if (expected != state.seen) return false;
    return state.visited.count(state.current) > 0;
}

}  // namespace dgbench
