#pragma once

#include <array>
#include <string>
#include <vector>

#include "dgbench/core/game.hpp"

namespace dgbench {

struct ReferenceInstance {
    std::vector<std::string> stimuli;  // 3 entries, target first (A's order)
    std::array<int, 3> order_b{0, 1, 2};  // B's presentation: position -> stimulus index
    int target_index_a = 0;
    Modality modality = Modality::Text;

    static ReferenceInstance from_payload(const Json& payload);
    Json to_payload() const;
    // Position of the target in B's presentation.
    int target_position_b() const;
};

// Single-turn game: A produces a referring expression for the target among
// two distractors, B picks the referent from a shuffled presentation.
// Quality is 100 when B's ordinal matches the target's position in B's order.
class ReferenceGame : public Game {
public:
    std::string id() const override { return "reference"; }
    std::vector<Role> required_roles() const override { return {Role::PlayerA, Role::PlayerB}; }
    int default_turn_limit() const override { return 2; }  // one response per player

    void play(EpisodeContext& ctx, const GameInstance& instance) const override;
    PlayResult score(const Episode& episode) const override;

    std::string prompt_a(const ReferenceInstance& instance) const;
    std::string prompt_b(const ReferenceInstance& instance, const std::string& expression) const;
};

}  // namespace dgbench
