#pragma once

#include <memory>
#include <string>

#include "dgbench/core/game.hpp"
#include "dgbench/core/player.hpp"
#include "dgbench/games/map_graph.hpp"
#include "dgbench/util/rng.hpp"

namespace dgbench {

// Deterministic agents for tests and oracles. Each is constructed per episode
// by its binding, so instances never share mutable state across episodes.

// Always answers with the same text. Covers the format-violator ("hello"),
// the turn-limit looper ("GO: north") and the premature stopper ("DONE").
class FixedResponder : public Player {
public:
    explicit FixedResponder(std::string text) : text_(std::move(text)) {}
    std::string respond(const PlayerView&) override { return text_; }

private:
    std::string text_;
};

// Explores with the metric's own policy: always takes the first edge of some
// minimum-length walk covering the unexplored frontier of the seen graph, and
// stops exactly when the frontier is empty. By construction it scores
// success 1 and efficiency 100 on any valid map.
class OptimalExplorer : public Player {
public:
    OptimalExplorer(MapGraph map, bool emit_graph, Modality modality);
    std::string respond(const PlayerView& view) override;

private:
    std::string format_action(const MoveAction& action) const;

    MapGraph map_;
    ExplorationState state_;
    bool emit_graph_;
    Modality modality_;
};

// Walks a BFS shortest path to the target room, then answers DONE.
class TargetSeeker : public Player {
public:
    TargetSeeker(MapGraph map, Modality modality);
    std::string respond(const PlayerView& view) override;

private:
    MapGraph map_;
    std::vector<int> route_;  // remaining nodes to visit, front first
    int position_;
    Modality modality_;
};

// Uniformly random well-formed map responses: each of the four directions and
// DONE with equal probability.
class RandomMover : public Player {
public:
    RandomMover(std::uint64_t seed, Modality modality) : rng_(seed), modality_(modality) {}
    std::string respond(const PlayerView& view) override;

private:
    Rng rng_;
    Modality modality_;
};

// Reference player A: refers to the target by quoting the stimulus itself
// (the rendered grid, or the image reference).
class ReferenceExpressionOracle : public Player {
public:
    explicit ReferenceExpressionOracle(std::string target_stimulus)
        : target_(std::move(target_stimulus)) {}
    std::string respond(const PlayerView&) override { return "Expression: " + target_; }

private:
    std::string target_;
};

// Reference player B: extracts the relayed expression from the prompt and
// answers with the ordinal of the matching stimulus in its own presentation.
class ReferenceMatchingOracle : public Player {
public:
    explicit ReferenceMatchingOracle(std::vector<std::string> presented_stimuli)
        : presented_(std::move(presented_stimuli)) {}
    std::string respond(const PlayerView& view) override;

private:
    std::vector<std::string> presented_;
};

// Reference player B answering uniformly at random (chance level 33.3).
class RandomReferenceAnswerer : public Player {
public:
    explicit RandomReferenceAnswerer(std::uint64_t seed) : rng_(seed) {}
    std::string respond(const PlayerView&) override;

private:
    Rng rng_;
};

// Truthful MatchIt player: describes its stimulus verbatim, answers every
// question with the full stimulus, and decides Same iff everything the
// partner said matches its own stimulus exactly.
class MatchItOracle : public Player {
public:
    MatchItOracle(std::string own_stimulus, Modality modality)
        : own_(std::move(own_stimulus)), modality_(modality) {}
    std::string respond(const PlayerView& view) override;

private:
    std::string own_;
    Modality modality_;
};

// Role- and game-aware binding for the scripted agents; `kind` is the part
// after "scripted:" in a player spec.
std::shared_ptr<PlayerBinding> make_scripted_binding(const std::string& kind, Modality modality,
                                                     std::uint64_t seed);

}  // namespace dgbench
