#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbench/core/game.hpp"

namespace dgbench {

struct MatchItInstance {
    std::string stimulus_a;
    std::string stimulus_b;
    bool same = false;  // ground truth; true iff stimuli are byte-identical
    std::string difficulty;
    Modality modality = Modality::Text;

    static MatchItInstance from_payload(const Json& payload);
    Json to_payload() const;
};

// Agreement game: both players describe their private stimulus, exchange Q/A
// rounds, then each independently decides SAME or DIFFERENT. One round is one
// question plus its answer; askers alternate, B first. Quality is 100 iff
// both decisions match the ground truth.
class MatchItGame : public Game {
public:
    explicit MatchItGame(Modality modality = Modality::Text, int max_qa_rounds = 3)
        : modality_(modality), max_qa_rounds_(max_qa_rounds) {}

    std::string id() const override {
        return modality_ == Modality::Text ? "matchit_ascii" : "matchit_images";
    }
    std::vector<Role> required_roles() const override { return {Role::PlayerA, Role::PlayerB}; }
    int default_turn_limit() const override { return 15; }

    void play(EpisodeContext& ctx, const GameInstance& instance) const override;
    PlayResult score(const Episode& episode) const override;

    std::string initial_prompt(const std::string& stimulus) const;
    std::string describe_prompt() const;

    int max_qa_rounds() const { return max_qa_rounds_; }

private:
    std::string wording(const char* text) const;

    Modality modality_;
    int max_qa_rounds_;
};

}  // namespace dgbench
