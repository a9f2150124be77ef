#pragma once

#include <memory>
#include <string>

#include "dgbench/core/game.hpp"
#include "dgbench/core/player.hpp"

namespace dgbench {

// Player spec mini-language:
//   scripted:<name>   deterministic agents (oracle, violator, looper,
//                     stopper, random)
//   human             interactive terminal player
//   remote:<path>     chat-API client configured by the JSON file at <path>
// Throws ConfigError for anything else.
std::shared_ptr<PlayerBinding> resolve_player_spec(const std::string& spec, Modality modality,
                                                   std::uint64_t seed);

}  // namespace dgbench
