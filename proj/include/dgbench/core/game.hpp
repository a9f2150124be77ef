#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgbench/core/player.hpp"
#include "dgbench/core/types.hpp"
#include "dgbench/parsing/parsers.hpp"

namespace dgbench {

class EpisodeContext;

struct PlayResult {
    double quality = 0.0;  // 0..100, used only when the episode was played
    std::map<std::string, double> metrics;
};

// A game definition drives one episode through the EpisodeContext: it sends
// GM messages, collects player responses, and validates each response with
// the parsing module before any state change. Turn counting, abort semantics
// and event recording live in the engine.
//
// Scoring is transcript-based: score() recomputes quality and metrics from
// the persisted events (plus the embedded instance), so a rescore of a stored
// episode reproduces the run-time numbers exactly.
class Game {
public:
    virtual ~Game() = default;
    virtual std::string id() const = 0;
    virtual std::vector<Role> required_roles() const = 0;
    virtual int default_turn_limit() const = 0;

    // Returns normally when the game reaches a terminal state; abort
    // conditions surface via the context and end the episode.
    virtual void play(EpisodeContext& ctx, const GameInstance& instance) const = 0;

    virtual PlayResult score(const Episode& episode) const = 0;
};

// Presentation mode shared by the games that have image variants.
enum class Modality { Text, Multimodal };

inline const char* to_string(Modality m) {
    return m == Modality::Text ? "text" : "multimodal";
}

}  // namespace dgbench
