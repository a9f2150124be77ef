#pragma once

#include <string>
#include <vector>

#include "dgbench/core/game.hpp"
#include "dgbench/games/map_graph.hpp"

namespace dgbench {

enum class MapVariant {
    ExploreExhaustively,  // EE: visit all rooms, then DONE
    ExploreWithGraph,     // EE-gr: EE plus an explicit graph in every answer
    GoToTarget,           // G2X: find the room of the target category
};

const char* map_game_id(MapVariant v);

// Single-player navigation over a lattice room graph. The text and multimodal
// presentations traverse the identical state machine; only prompt composition
// differs (text names the room, multimodal attaches its image and never names
// it). Invalid moves are re-prompted, not aborted, and consume a turn.
class MapWorldGame : public Game {
public:
    explicit MapWorldGame(MapVariant variant, Modality modality = Modality::Text)
        : variant_(variant), modality_(modality) {}

    std::string id() const override { return map_game_id(variant_); }
    std::vector<Role> required_roles() const override { return {Role::PlayerA}; }
    int default_turn_limit() const override { return 20; }

    void play(EpisodeContext& ctx, const GameInstance& instance) const override;
    PlayResult score(const Episode& episode) const override;

    MapVariant variant() const { return variant_; }
    Modality modality() const { return modality_; }

    std::string initial_prompt(const MapGraph& map) const;
    std::string reply_valid_move(const MapGraph& map, int entered) const;
    std::string reply_invalid_move(const MapGraph& map, int still_at) const;

    parsing::ParseResult<MoveAction> parse_response(const std::string& raw) const;

private:
    MapVariant variant_;
    Modality modality_;
};

// "north, south, east" in fixed direction order.
std::string directions_string(const MapGraph& map, int node);

// "a Bedroom" / "an Attic".
std::string with_article(const std::string& category);

}  // namespace dgbench
