#include "dgbench/players/human.hpp"

#include <string>

namespace dgbench {

std::string HumanPlayer::respond(const PlayerView& view) {
    out_ << "\n--- " << to_string(view.pending_prompt.sender) << " -> "
         << to_string(view.pending_prompt.recipient) << " ---\n";
    out_ << view.pending_prompt.content << "\n";
    for (const auto& attachment : view.pending_prompt.attachments) {
        out_ << "[image: " << attachment << "]\n";
    }
    out_ << "> " << std::flush;

    std::string line;
    if (!std::getline(in_, line)) return "";
    std::string response = line;
    // Graph answers span lines; keep reading until a blank line closes the block.
    if (!line.empty() && line.front() == '{') {
        while (std::getline(in_, line) && !line.empty()) {
            response += "\n" + line;
        }
    }
    return response;
}

namespace {

class HumanBinding : public PlayerBinding {
public:
    HumanBinding() : player_(std::make_shared<HumanPlayer>()) {}
    std::string id() const override { return "human"; }
    bool single_episode_affinity() const override { return true; }
    std::shared_ptr<Player> make_player(const GameInstance&, Role) override { return player_; }

private:
    std::shared_ptr<Player> player_;
};

}  // namespace

std::shared_ptr<PlayerBinding> make_human_binding() { return std::make_shared<HumanBinding>(); }

}  // namespace dgbench
