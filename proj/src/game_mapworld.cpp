#include "dgbench/games/mapworld.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dgbench/core/engine.hpp"
#include "dgbench/metrics/efficiency.hpp"
#include "dgbench/metrics/graph_similarity.hpp"

namespace dgbench {

namespace {

constexpr const char* kTextEeInitial = R"(Please help me with the following task. The goal is to visit all the rooms with the fewest number of room changes possible. In each room, you need to decide the direction to go in. Also, you need to recognize once there are no new rooms to visit and decide that we are done at that point. Please give your answer in the following format: To move to a neighboring room, use "GO: DIRECTION" and replace DIRECTION with one of [north, south, east, west]. To stop the exploration, answer with "DONE" instead. Omit any other text.

Here is an example:

You are in the Kitchen. Currently available directions: south, west. What is your next instruction?

GO: west

You have made a step and entered a Lobby. Currently available directions: east, north. What is your next instruction?

GO: north

...

You have made a step and entered a Bedroom. Currently available directions: south. What is your next instruction?

DONE

Let us start. You are in the $INITIAL_ROOM$. Currently available directions: $INITIAL_DIRECTIONS$. What is your next instruction?)";

constexpr const char* kMultimodalEeInitial = R"(We are currently in this room. Please help me with the following task. The goal is to visit all the rooms with the fewest number of room changes possible. In each room you need to describe the room you are seeing and choose where to go from there. Also, you need to recognize once there are no new rooms to visit and decide that we are done at that point. Please give your answer in the following format: "{"description": "<room description>", "action": "<action>"}". Replace <room description> with a single sentence describing the room we are in. To move to a neighboring room, replace <action> with "GO: DIRECTION" where DIRECTION can be one of [north, south, east, west]. To stop the exploration, replace <action> with "DONE". Omit any other text.

Here is an example:

We are in this room. From here we can go: north, west. What is your next instruction?

{"description": "We are in a kitchen with a red fridge.", "action": "GO: north"}

We have made a step and are now in this room. From here we can go: south, east. What is your next instruction?

{"description": "We are in a living room with a couch and a tv.", "action": "GO: east"}

...

We have made a step and are now in this room. From here we can go: south, east. What is your next instruction?

{"description": "We are in a bathroom", "action": "DONE"}

Let us start.
We have made a step and are now in this room. From here we can go: $INITIAL_DIRECTIONS$. What is your next instruction?)";

constexpr const char* kTextG2xInitial = R"(Please help me with the following task. The goal is to explore rooms and find the target room. In each room, you need to decide the direction to go in. Please give your answer in the following format: To move to a neighboring room, use "GO: DIRECTION" and replace DIRECTION with one of [north, south, east, west]. Most importantly, once we have found the target room, answer with "DONE" instead. Omit any other text.

Here is an example:

The target room is a Bedroom. You are in the Kitchen. Currently available directions: south, west. What is your next instruction?

GO: west

You have made a step and entered a Lobby. Currently available directions: east, north. What is your next instruction?

GO: north

...

You have made a step and entered a Bedroom. Currently available directions: south. What is your next instruction?

DONE

Let us start. The target room is $GOAL$. You are in the $INITIAL_ROOM$. Currently available directions: $INITIAL_DIRECTIONS$. What is your next instruction?)";

constexpr const char* kMultimodalG2xInitial = R"(Please help me with the following task. The goal is to explore rooms and find target room. In each room I will show you an image of the room and tell you in what directions we can go from there. You then give me a description of the room you see in exactly one sentence. Please give your answer in the following format: "{"description": "<room description>", "action": "<action>"}". To move to a neighboring room, replace <action> with "GO: DIRECTION" where DIRECTION can be one of [north, south, east, west]. Most importantly, once we have found the target room, replace <action> with "DONE" instead. Omit any other text.

Here is an example:

The target room is a bathroom.
We have made a step and are now in this room. From here we can go: north, west. What is your next instruction?
{"description": "We are in a kitchen with a red fridge.", "action": "GO: north"}

We have made a step and are now in this room. From here we can go: south, east. What is your next instruction?
{"description": "We are in a living room with a couch and a tv.", "action": "GO: east"}

...
We have made a step and are now in this room. From here we can go: south, east. What is your next instruction?
{"description": "We are in a bathroom, there is a shower and a sink", "action": "DONE"}

Let us start. The target room is a $GOAL$
We are now in this room. From here we can go: $INITIAL_DIRECTIONS$. What is your next instruction?)";

constexpr const char* kTextGraphInitial = R"(Please help me with the following task. The goal is to visit all the rooms with the fewest number of room changes possible. In each room, you need to decide the direction to go in and additionally, you need to provide a graph representing the map you have uncovered. Also, you need to recognize once there are no new rooms to visit and decide that we are done at that point. Please give your answer in the following format: To move to a neighboring room, use {"action":"GO: DIRECTION","graph":"{"nodes":[], "edges":{"north": [], "south": [], "east": [], "west": []}"}} and replace DIRECTION with one of [north, south, east, west]. To stop the exploration, answer with "DONE" instead. Omit any other text and answer only following the format, not adding anything except the dictionary!

Here is an example:

You are in the Living Room. Currently available directions: south, west. What is your next instruction?
{"action": "GO: west", "graph": {"nodes":["Living Room"], "edges":{"north":[], "south":[], "east":[], "west":[]}}}

You have made a step and entered a Library. Currently available directions: east, north. What is your next instruction?
{"action": "GO: north", "graph":{"nodes":["Living Room", "Library"], "edges":{"north":[], "south":[], "east":[], "west":[["Living Room", "Library"]]}}}

You have made a step and entered a Kitchen. Currently available directions: south, east. What is your next instruction?
{"action": "GO: east", "graph":{"nodes": ["Living Room", "Library", "Kitchen"], "edges":{"north": [["Library", "Kitchen"]], "south": [], "east": [], "west": [["Living Room", "Library"]]}}}

...

You have made a step and entered a Bedroom. Currently available directions: south, west. What is your next instruction?
{"action": "DONE", "graph": {...}}

Let us start. You are in the $INITIAL_ROOM$. Currently available directions: $INITIAL_DIRECTIONS$. What is your next instruction?)";

constexpr const char* kMultimodalGraphInitial = R"(We are currently in this room. Please help me with the following task. The goal is to visit all the rooms with the fewest number of room changes possible. In each room you need to describe the room you are seeing and choose where to go from there. Additionally, you need to provide a graph representing the map you have uncovered. Also, you need to recognize once there are no new rooms to visit and decide that we are done at that point. Please give your answer in the following format:
'{"action":"<action>", "description": "<room description>", "graph": <graph>}'.
<action> needs to be in the format "GO: <direction>" where <direction> is one of [north, east, south, west]. Alternatively, choose "DONE" as your action once you have explored the entire map.
<room description> should be a single sentence describing the room shown to you.
<graph> represents the map in this format: {"nodes":[], "edges":{"north": [], "south": [], "east": [], "west": []}}
Omit any other text and answer only following the format, not adding anything except the dictionary!

Here is an example:

We are in this room. From here we can go: south, west. What is your next instruction?

{"action":"GO: north", "description": "We are in a kitchen with a red fridge.", "graph":{"nodes":["Kitchen"], "edges":{"north": [], "south": [], "east": [], "west": []}}}

We have made a step and are now in this room. From here we can go: east. What is your next instruction?

{"action":"GO: east", "description": "We are in a living room with a couch and a tv.", "graph":{"nodes":["Kitchen", "Living Room"], "edges":{"north": [["Kitchen", "Living Room"]], "south": [], "east": [], "west": []}}}

...

You have made a step and are now in this room. From here we can go: north. What is your next instruction?

Example answer:
{"action":"DONE", "description": "We are in a stairwell, the stair is curved.", "graph":"{...}"}

Let us start.
Currently available directions: $INITIAL_DIRECTIONS$. What is your next instruction?)";

std::string replace_all(std::string text, const std::string& token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
    return text;
}

std::string lowercased(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

MapGraph map_of(const GameInstance& instance) { return MapGraph::from_json(instance.payload); }

// Replay of a transcript against its map; everything score() needs.
struct Replay {
    ExplorationState state;
    std::vector<MoveAction> actions;
    bool finished_with_done = false;
};

Replay replay_episode(const Episode& episode, const MapGraph& map) {
    Replay r;
    r.state = initial_state(map);
    r.actions = metrics::extract_actions(episode);
    for (const MoveAction& action : r.actions) {
        if (action.done) {
            r.finished_with_done = true;
            break;
        }
        step(map, r.state, action);
    }
    return r;
}

// The ground truth for graph similarity: the subgraph induced by the rooms
// actually visited, labeled with their categories.
metrics::LabeledGraph visited_subgraph(const MapGraph& map, const std::set<int>& visited) {
    metrics::LabeledGraph g;
    std::map<int, int> index;
    for (int v : visited) {
        index[v] = static_cast<int>(g.labels.size());
        g.labels.push_back(map.node(v).category);
    }
    for (const auto& [a, b] : map.edges) {
        if (visited.count(a) && visited.count(b)) g.edges.emplace_back(index[a], index[b]);
    }
    return g;
}

metrics::LabeledGraph last_reported_graph(const Episode& episode) {
    for (auto it = episode.events.rbegin(); it != episode.events.rend(); ++it) {
        if (it->sender == Participant::GameMaster) continue;
        auto answer = parsing::parse_graph_answer(it->content, true, false);
        if (answer.ok() && answer.value().graph) {
            return metrics::LabeledGraph::from_player_graph(*answer.value().graph);
        }
    }
    return {};
}

}  // namespace

const char* map_game_id(MapVariant v) {
    switch (v) {
        case MapVariant::ExploreExhaustively: return "mapworld_ee";
        case MapVariant::ExploreWithGraph: return "mapworld_eegr";
        case MapVariant::GoToTarget: return "mapworld_g2x";
    }
    return "";
}

std::string directions_string(const MapGraph& map, int node) {
    std::ostringstream out;
    bool first = true;
    for (Direction d : map.exits(node)) {
        if (!first) out << ", ";
        out << to_string(d);
        first = false;
    }
    return out.str();
}

std::string with_article(const std::string& category) {
    if (category.empty()) return category;
    const char first = static_cast<char>(std::tolower(static_cast<unsigned char>(category[0])));
    const bool vowel = first == 'a' || first == 'e' || first == 'i' || first == 'o' || first == 'u';
    return (vowel ? "an " : "a ") + category;
}

std::string MapWorldGame::initial_prompt(const MapGraph& map) const {
    const MapNode& start = map.node(map.start);
    std::string text;
    switch (variant_) {
        case MapVariant::ExploreExhaustively:
            text = modality_ == Modality::Text ? kTextEeInitial : kMultimodalEeInitial;
            break;
        case MapVariant::ExploreWithGraph:
            text = modality_ == Modality::Text ? kTextGraphInitial : kMultimodalGraphInitial;
            break;
        case MapVariant::GoToTarget:
            text = modality_ == Modality::Text ? kTextG2xInitial : kMultimodalG2xInitial;
            break;
    }
    if (variant_ == MapVariant::GoToTarget) {
        const std::string goal = map.node(map.target.value()).category;
        text = replace_all(text, "$GOAL$",
                           modality_ == Modality::Text ? with_article(goal) : lowercased(goal));
    }
    text = replace_all(text, "$INITIAL_ROOM$", start.category);
    text = replace_all(text, "$INITIAL_DIRECTIONS$", directions_string(map, map.start));
    return text;
}

std::string MapWorldGame::reply_valid_move(const MapGraph& map, int entered) const {
    if (modality_ == Modality::Text) {
        return "You have made a step and entered " + with_article(map.node(entered).category) +
               ". Currently available directions: " + directions_string(map, entered) +
               ". What is your next instruction?";
    }
    return "We have made a step and are now in this room. From here we can go: " +
           directions_string(map, entered) + ". What is your next instruction?";
}

std::string MapWorldGame::reply_invalid_move(const MapGraph& map, int still_at) const {
    if (modality_ == Modality::Text) {
        return "The move is not valid. You are still in the " + map.node(still_at).category +
               ". Currently available directions: " + directions_string(map, still_at) +
               ". What is your next instruction?";
    }
    return "The move was invalid and we are still in this room. From here we can go: " +
           directions_string(map, still_at) + ". What is your next instruction?";
}

parsing::ParseResult<MoveAction> MapWorldGame::parse_response(const std::string& raw) const {
    if (variant_ == MapVariant::ExploreWithGraph) {
        auto answer = parsing::parse_graph_answer(raw, /*require_graph=*/true,
                                                  modality_ == Modality::Multimodal);
        if (!answer.ok()) return answer.error();
        return answer.value().action;
    }
    if (modality_ == Modality::Multimodal) {
        auto answer = parsing::parse_graph_answer(raw, false, /*require_description=*/true);
        if (!answer.ok()) return answer.error();
        return answer.value().action;
    }
    return parsing::parse_move(raw);
}

void MapWorldGame::play(EpisodeContext& ctx, const GameInstance& instance) const {
    const MapGraph map = map_of(instance);
    if (auto violation = validate_map(map)) {
        throw IntegrityError("instance " + instance.ref() + ": " + *violation);
    }
    if (variant_ == MapVariant::GoToTarget && !map.target) {
        throw IntegrityError("instance " + instance.ref() + ": G2X instance without target");
    }
    ExplorationState state = initial_state(map);

    std::vector<std::string> attachments;
    if (modality_ == Modality::Multimodal && !map.node(map.start).image.empty()) {
        attachments.push_back(map.node(map.start).image);
    }
    std::string raw = ctx.prompt(Role::PlayerA, initial_prompt(map), attachments);

    for (;;) {
        auto parsed = parse_response(raw);
        if (!parsed.ok()) ctx.abort_bad_format(Role::PlayerA, raw);
        const MoveAction action = parsed.value();
        const StepResult result = step(map, state, action);
        if (result.terminal) return;

        std::string reply = result.moved ? reply_valid_move(map, state.current)
                                         : reply_invalid_move(map, state.current);
        std::vector<std::string> reply_attachments;
        if (result.moved && modality_ == Modality::Multimodal &&
            !map.node(state.current).image.empty()) {
            reply_attachments.push_back(map.node(state.current).image);
        }
        raw = ctx.reprompt(Role::PlayerA, reply, reply_attachments);
    }
}

PlayResult MapWorldGame::score(const Episode& episode) const {
    const MapGraph map = map_of(episode.instance);
    const Replay replay = replay_episode(episode, map);

    double success = 0.0;
    if (replay.finished_with_done) {
        if (variant_ == MapVariant::GoToTarget) {
            const std::string& goal = map.node(map.target.value()).category;
            success = map.node(replay.state.current).category == goal ? 1.0 : 0.0;
        } else {
            success = replay.state.visited.size() == map.nodes.size() ? 1.0 : 0.0;
        }
    }
    double steps = 0.0;
    for (const MoveAction& a : replay.actions) {
        if (!a.done) steps += 1.0;
    }

    PlayResult out;
    out.metrics["success"] = success;
    out.metrics["steps"] = steps;
    if (variant_ == MapVariant::GoToTarget) {
        out.quality = success * 100.0;
        return out;
    }

    const double eff = metrics::efficiency(episode, map);
    out.metrics["efficiency"] = eff;
    out.metrics["exploration"] = metrics::exploration(episode, map);
    if (variant_ == MapVariant::ExploreWithGraph) {
        out.metrics["graph_similarity"] = metrics::graph_similarity(
            last_reported_graph(episode), visited_subgraph(map, replay.state.visited));
    }
    out.quality = success * eff;
    return out;
}

}  // namespace dgbench
