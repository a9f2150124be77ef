#include "dgbench/metrics/efficiency.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "dgbench/parsing/parsers.hpp"

namespace dgbench::metrics {

std::vector<std::vector<int>> find_shortest_paths(const std::vector<std::pair<int, int>>& edges,
                                                  const std::set<int>& visited,
                                                  const std::set<int>& seen, int current) {
    std::set<int> frontier;
    for (int v : seen) {
        if (!visited.count(v)) frontier.insert(v);
    }
    if (frontier.empty()) {
        return {{current}};
    }

    // Adjacency over the given edge set, expanded in both directions.
    std::vector<std::pair<int, int>> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        directed.emplace_back(a, b);
        directed.emplace_back(b, a);
    }

    auto covers_frontier = [&frontier](const std::vector<int>& path) {
        std::set<int> remaining = frontier;
        for (int v : path) remaining.erase(v);
        return remaining.empty();
    };

    std::deque<std::vector<int>> queue;
    queue.push_back({current});
    std::vector<std::vector<int>> found;
    std::size_t min_len = std::numeric_limits<std::size_t>::max();

    while (!queue.empty()) {
        std::vector<int> path = std::move(queue.front());
        queue.pop_front();
        if (covers_frontier(path)) {
            if (path.size() < min_len) {
                min_len = path.size();
                found.clear();
            }
            if (path.size() == min_len) found.push_back(std::move(path));
            continue;
        }
        if (path.size() >= min_len) continue;
        for (const auto& [from, to] : directed) {
            if (path.back() == from) {
                std::vector<int> extended = path;
                extended.push_back(to);
                queue.push_back(std::move(extended));
            }
        }
    }
    return found;
}

std::set<int> optimal_first_steps(const std::vector<std::pair<int, int>>& edges,
                                  const std::set<int>& visited, const std::set<int>& seen,
                                  int current) {
    std::set<int> firsts;
    for (const auto& path : find_shortest_paths(edges, visited, seen, current)) {
        if (path.size() >= 2) firsts.insert(path[1]);
    }
    return firsts;
}

std::vector<std::pair<int, int>> seen_edges(const MapGraph& map, const std::set<int>& seen) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : map.edges) {
        if (seen.count(e.first) && seen.count(e.second)) out.push_back(e);
    }
    return out;
}

bool is_good_move(const MapGraph& map, const ExplorationState& state, const MoveAction& action) {
    auto firsts = optimal_first_steps(seen_edges(map, state.seen), state.visited, state.seen,
                                      state.current);
    if (action.done) return firsts.empty();
    auto destination = map.neighbor_in_direction(state.current, action.direction);
    return destination && firsts.count(*destination) > 0;
}

std::vector<MoveAction> extract_actions(const Episode& episode) {
    std::vector<MoveAction> actions;
    for (const Message& event : episode.events) {
        if (event.sender == Participant::GameMaster) continue;
        auto move = parsing::parse_move(event.content);
        if (move.ok()) {
            actions.push_back(move.value());
            continue;
        }
        auto answer = parsing::parse_graph_answer(event.content, false, false);
        if (answer.ok()) {
            actions.push_back(answer.value().action);
            continue;
        }
        break;  // malformed tail of an aborted episode
    }
    return actions;
}

double efficiency_of_actions(const std::vector<MoveAction>& actions, const MapGraph& map) {
    ExplorationState state = initial_state(map);
    int good = 0;
    int total = 0;
    for (const MoveAction& action : actions) {
        ++total;
        if (is_good_move(map, state, action)) ++good;
        step(map, state, action);
        if (action.done) break;  // nothing is accepted after a terminal action
    }
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(good) / static_cast<double>(total);
}

double efficiency(const Episode& episode, const MapGraph& map) {
    if (validate_map(map)) {
        throw IntegrityError("efficiency: invalid map for episode " + episode.instance_ref);
    }
    return efficiency_of_actions(extract_actions(episode), map);
}

double exploration(const Episode& episode, const MapGraph& map) {
    ExplorationState state = initial_state(map);
    for (const MoveAction& action : extract_actions(episode)) {
        if (action.done) break;
        step(map, state, action);
    }
    return 100.0 * static_cast<double>(state.visited.size()) /
           static_cast<double>(map.nodes.size());
}

}  // namespace dgbench::metrics
