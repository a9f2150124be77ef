#pragma once

#include <iostream>
#include <memory>

#include "dgbench/core/player.hpp"

namespace dgbench {

// Interactive terminal player: prints the pending prompt (and attachment
// names), reads one line, or a multi-line block terminated by a blank line
// when the response opens a JSON object (graph answers). Declares
// single-episode affinity, which forces jobs=1.
class HumanPlayer : public Player {
public:
    explicit HumanPlayer(std::istream& in = std::cin, std::ostream& out = std::cout)
        : in_(in), out_(out) {}
    std::string respond(const PlayerView& view) override;

private:
    std::istream& in_;
    std::ostream& out_;
};

std::shared_ptr<PlayerBinding> make_human_binding();

}  // namespace dgbench
