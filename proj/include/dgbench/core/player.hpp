#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgbench/core/types.hpp"

namespace dgbench {

// What a player gets to see when asked to respond: only its own lane of the
// transcript (messages it sent or received), never the other player's
// stimulus or utterances beyond what the GM relayed.
struct PlayerView {
    std::vector<Message> history;  // visible messages before the pending prompt
    Message pending_prompt;        // the GM message awaiting a response
};

class Player {
public:
    virtual ~Player() = default;
    // Returns raw text; the engine, not the player, validates the format.
    // Remote players throw InfrastructureError on exhausted transport retries.
    virtual std::string respond(const PlayerView& view) = 0;
};

// Produces the player for one episode. Bindings whose make_player returns a
// shared instance must be safe to invoke from concurrent episodes, or declare
// single-episode affinity so the engine serializes runs.
class PlayerBinding {
public:
    virtual ~PlayerBinding() = default;
    virtual std::shared_ptr<Player> make_player(const GameInstance& instance, Role role) = 0;
    virtual bool single_episode_affinity() const { return false; }
    virtual std::string id() const = 0;  // used for the results directory layout
};

struct PlayerSet {
    std::shared_ptr<PlayerBinding> player_a;
    std::shared_ptr<PlayerBinding> player_b;  // may be null for single-player games

    std::shared_ptr<PlayerBinding> binding(Role role) const {
        return role == Role::PlayerA ? player_a : player_b;
    }
};

}  // namespace dgbench
