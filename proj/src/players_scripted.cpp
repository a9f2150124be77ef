#include "dgbench/players/scripted.hpp"

#include <algorithm>
#include <deque>

#include "dgbench/games/matchit.hpp"
#include "dgbench/games/mapworld.hpp"
#include "dgbench/games/reference.hpp"
#include "dgbench/metrics/efficiency.hpp"
#include "dgbench/parsing/parsers.hpp"

namespace dgbench {

namespace {

// Reported graph: everything visited so far, edges keyed by travel direction.
Json graph_json(const MapGraph& map, const ExplorationState& state) {
    Json nodes = Json::array();
    for (int v : state.visited) nodes.push_back(map.node(v).category);
    Json edges{{"north", Json::array()},
               {"south", Json::array()},
               {"east", Json::array()},
               {"west", Json::array()}};
    for (const auto& [a, b] : map.edges) {
        if (!state.visited.count(a) || !state.visited.count(b)) continue;
        Direction d = map.direction_between(a, b).value();
        edges[to_string(d)].push_back(
            Json::array({map.node(a).category, map.node(b).category}));
    }
    return Json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace

OptimalExplorer::OptimalExplorer(MapGraph map, bool emit_graph, Modality modality)
    : map_(std::move(map)), state_(initial_state(map_)), emit_graph_(emit_graph),
      modality_(modality) {}

std::string OptimalExplorer::format_action(const MoveAction& action) const {
    if (!emit_graph_ && modality_ == Modality::Text) return serialize(action);
    Json answer;
    answer["action"] = serialize(action);
    if (modality_ == Modality::Multimodal) {
        answer["description"] = "We are in a room.";
    }
    if (emit_graph_) {
        answer["graph"] = graph_json(map_, state_);
    }
    return answer.dump();
}

std::string OptimalExplorer::respond(const PlayerView&) {
    auto firsts = metrics::optimal_first_steps(metrics::seen_edges(map_, state_.seen),
                                               state_.visited, state_.seen, state_.current);
    MoveAction action = MoveAction::stop();
    if (!firsts.empty()) {
        for (Direction d : kAllDirections) {
            auto nb = map_.neighbor_in_direction(state_.current, d);
            if (nb && firsts.count(*nb)) {
                action = MoveAction::go(d);
                break;
            }
        }
    }
    // The answer reports knowledge before the move; advance afterwards.
    std::string text = format_action(action);
    step(map_, state_, action);
    return text;
}

TargetSeeker::TargetSeeker(MapGraph map, Modality modality)
    : map_(std::move(map)), position_(map_.start), modality_(modality) {
    // BFS parents toward the target, then unwind the path.
    const int target = map_.target.value_or(map_.start);
    std::vector<int> parent(map_.nodes.size(), -1);
    std::deque<int> queue{map_.start};
    std::vector<bool> visited(map_.nodes.size(), false);
    visited[static_cast<std::size_t>(map_.start)] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == target) break;
        for (int nb : map_.neighbors(v)) {
            if (!visited[static_cast<std::size_t>(nb)]) {
                visited[static_cast<std::size_t>(nb)] = true;
                parent[static_cast<std::size_t>(nb)] = v;
                queue.push_back(nb);
            }
        }
    }
    for (int v = target; v != map_.start; v = parent[static_cast<std::size_t>(v)]) {
        route_.push_back(v);
    }
    std::reverse(route_.begin(), route_.end());
}

std::string TargetSeeker::respond(const PlayerView&) {
    MoveAction action = MoveAction::stop();
    if (!route_.empty()) {
        int next = route_.front();
        route_.erase(route_.begin());
        action = MoveAction::go(map_.direction_between(position_, next).value());
        position_ = next;
    }
    if (modality_ == Modality::Text) return serialize(action);
    return Json{{"description", "We are in a room."}, {"action", serialize(action)}}.dump();
}

std::string RandomMover::respond(const PlayerView&) {
    const int roll = uniform_int(rng_, 0, 4);
    MoveAction action =
        roll == 4 ? MoveAction::stop() : MoveAction::go(kAllDirections[static_cast<std::size_t>(roll)]);
    if (modality_ == Modality::Text) return serialize(action);
    return Json{{"description", "We are in a room."}, {"action", serialize(action)}}.dump();
}

std::string ReferenceMatchingOracle::respond(const PlayerView& view) {
    // The relayed expression sits between the tag and the fixed question line.
    const std::string& prompt = view.pending_prompt.content;
    const std::string tag = "Expression: ";
    const std::string question = "\nQuestion: Which";
    std::string expression;
    auto begin = prompt.find(tag);
    auto end = prompt.find(question);
    if (begin != std::string::npos && end != std::string::npos && begin < end) {
        expression = prompt.substr(begin + tag.size(), end - begin - tag.size());
    }
    static const char* kOrdinals[] = {"first", "second", "third"};
    for (std::size_t i = 0; i < presented_.size() && i < 3; ++i) {
        if (presented_[i] == expression) {
            return std::string("Answer: ") + kOrdinals[i];
        }
    }
    return "Answer: first";
}

std::string RandomReferenceAnswerer::respond(const PlayerView&) {
    static const char* kOrdinals[] = {"first", "second", "third"};
    return std::string("Answer: ") + kOrdinals[uniform_int(rng_, 0, 2)];
}

std::string MatchItOracle::respond(const PlayerView& view) {
    const std::string& prompt = view.pending_prompt.content;
    const char* noun = modality_ == Modality::Text ? "grid" : "image";

    if (prompt.rfind("Describe your", 0) == 0) {
        return "DESCRIPTION: " + own_;
    }
    if (prompt.rfind("QUESTION: ", 0) == 0) {
        return "ANSWER: " + own_;
    }
    if (prompt.rfind("Ask a question", 0) == 0) {
        return std::string("QUESTION: What exactly does your ") + noun + " look like?";
    }
    // Decision: Same iff every relayed partner statement matches our stimulus.
    bool saw_partner_fact = false;
    bool all_match = true;
    for (const Message& m : view.history) {
        if (m.sender != Participant::GameMaster) continue;
        for (parsing::Tag tag : {parsing::Tag::Description, parsing::Tag::Answer}) {
            auto parsed = parsing::parse_tagged(m.content, tag);
            if (parsed.ok()) {
                saw_partner_fact = true;
                if (parsed.value().payload != own_) all_match = false;
            }
        }
    }
    const bool same = saw_partner_fact && all_match;
    return std::string("DECISION: ") +
           (same ? (std::string("same ") + noun + ".")
                 : (std::string("different ") + noun + "s."));
}

namespace {

Modality instance_modality(const GameInstance& instance, Modality run_modality) {
    // Reference and MatchIt instances fix their own modality; map games take
    // the run-level presentation mode.
    if (instance.payload.contains("modality")) {
        return instance.payload["modality"] == "image" ? Modality::Multimodal : Modality::Text;
    }
    return run_modality;
}

class ScriptedBinding : public PlayerBinding {
public:
    ScriptedBinding(std::string kind, Modality modality, std::uint64_t seed)
        : kind_(std::move(kind)), modality_(modality), seed_(seed) {}

    std::string id() const override { return "scripted:" + kind_; }

    std::shared_ptr<Player> make_player(const GameInstance& instance, Role role) override {
        const Modality modality = instance_modality(instance, modality_);
        if (kind_ == "violator") return std::make_shared<FixedResponder>("hello");
        if (kind_ == "looper") return std::make_shared<FixedResponder>("GO: north");
        if (kind_ == "stopper") return std::make_shared<FixedResponder>("DONE");
        if (kind_ == "oracle") return make_oracle(instance, role, modality);
        if (kind_ == "random") return make_random(instance, role, modality);
        throw ConfigError("unknown scripted player '" + kind_ + "'");
    }

private:
    std::uint64_t episode_seed(const GameInstance& instance, Role role) const {
        return derive_seed(seed_, instance.ref() + "/" + to_string(as_participant(role)));
    }

    std::shared_ptr<Player> make_oracle(const GameInstance& instance, Role role,
                                        Modality modality) const {
        const std::string& game = instance.game;
        if (game == "mapworld_ee" || game == "mapworld_eegr") {
            return std::make_shared<OptimalExplorer>(MapGraph::from_json(instance.payload),
                                                     game == "mapworld_eegr", modality);
        }
        if (game == "mapworld_g2x") {
            return std::make_shared<TargetSeeker>(MapGraph::from_json(instance.payload), modality);
        }
        if (game == "reference") {
            auto ref = ReferenceInstance::from_payload(instance.payload);
            if (role == Role::PlayerA) {
                return std::make_shared<ReferenceExpressionOracle>(ref.stimuli.front());
            }
            std::vector<std::string> presented;
            for (int pos = 0; pos < 3; ++pos) {
                presented.push_back(
                    ref.stimuli[static_cast<std::size_t>(ref.order_b[static_cast<std::size_t>(pos)])]);
            }
            return std::make_shared<ReferenceMatchingOracle>(std::move(presented));
        }
        if (game == "matchit_ascii" || game == "matchit_images") {
            auto match = MatchItInstance::from_payload(instance.payload);
            return std::make_shared<MatchItOracle>(
                role == Role::PlayerA ? match.stimulus_a : match.stimulus_b, modality);
        }
        throw ConfigError("scripted:oracle has no policy for game '" + game + "'");
    }

    std::shared_ptr<Player> make_random(const GameInstance& instance, Role role,
                                        Modality modality) const {
        if (instance.game == "reference") {
            // A well-formed expression from A keeps the episode alive; the
            // randomness under test is B's pick.
            if (role == Role::PlayerA) return make_oracle(instance, role, modality);
            return std::make_shared<RandomReferenceAnswerer>(episode_seed(instance, role));
        }
        return std::make_shared<RandomMover>(episode_seed(instance, role), modality);
    }

    std::string kind_;
    Modality modality_;
    std::uint64_t seed_;
};

}  // namespace

std::shared_ptr<PlayerBinding> make_scripted_binding(const std::string& kind, Modality modality,
                                                     std::uint64_t seed) {
    return std::make_shared<ScriptedBinding>(kind, modality, seed);
}

}  // namespace dgbench
