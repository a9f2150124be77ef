#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgbench/core/game.hpp"
#include "dgbench/core/player.hpp"
#include "dgbench/core/types.hpp"
#include "dgbench/metrics/aggregate.hpp"

namespace dgbench {

// GM-side handle a game uses to run one episode. One "turn" is one player
// response, accepted or rejected; once the limit is reached or an abort is
// recorded, no further event is appended.
class EpisodeContext {
public:
    EpisodeContext(const Game& game, const GameInstance& instance,
                   std::map<Role, std::shared_ptr<Player>> players, int turn_limit);

    // Records a GM message to a player without expecting a response.
    void gm_message(Role to, std::string content, std::vector<std::string> attachments = {});

    // Sends a GM prompt, invokes the player, records both events, and returns
    // the normalized response. Counts one turn.
    std::string prompt(Role who, std::string content, std::vector<std::string> attachments = {});

    // Re-prompts after a GM reply to the previous response (the content is the
    // reply); identical mechanics to prompt().
    std::string reprompt(Role who, std::string reply_content,
                         std::vector<std::string> attachments = {});

    // Ends the episode as Aborted{bad_format}, attributing the offending raw
    // response. Never returns.
    [[noreturn]] void abort_bad_format(Role offender, const std::string& raw_response);

    int turns_used() const { return turns_used_; }
    int turn_limit() const { return turn_limit_; }
    const std::vector<Message>& events() const { return events_; }

private:
    friend Episode run_episode(const Game&, const GameInstance&, const PlayerSet&, int);

    struct AbortSignal {
        Outcome outcome;
    };

    std::string collect_response(Role who);
    void record(Message m);
    PlayerView view_for(Role who) const;

    const Game& game_;
    const GameInstance& instance_;
    std::map<Role, std::shared_ptr<Player>> players_;
    int turn_limit_;
    int turns_used_ = 0;
    std::vector<Message> events_;
};

// Plays one instance to completion. Every player response is validated by the
// game's parser before any state change; a parse failure yields
// Aborted{bad_format}, exceeding the turn limit yields Aborted{turn_limit}.
// Throws ConfigError if a required role has no player bound.
Episode run_episode(const Game& game, const GameInstance& instance, const PlayerSet& players,
                    int turn_limit);

struct SuiteEntry {
    const Game* game = nullptr;
    std::vector<GameInstance> instances;
};

struct BenchmarkRunOptions {
    int turn_limit = 0;  // 0 = each game's default
    int jobs = 1;        // forced to 1 when any binding has single-episode affinity
    std::filesystem::path output_dir;  // empty = no persistence
    std::string player_id;             // results/<player_id>/... ; derived if empty
    std::function<void(const Episode&)> on_episode;  // optional progress hook
};

struct BenchmarkRun {
    BenchmarkResult result;
    std::vector<Episode> episodes;
};

// Runs every instance of the suite, persists episodes and the aggregate
// result under output_dir (when set), and computes per-game aggregates plus
// the clemscore. Aborted episodes are recorded, never raised; configuration
// and infrastructure errors propagate.
BenchmarkRun run_benchmark(const std::vector<SuiteEntry>& suite, const PlayerSet& players,
                           const BenchmarkRunOptions& options = {});

// results/<player-id>/<game>/<experiment>/<instance-id>.json
std::filesystem::path episode_path(const std::filesystem::path& root, const std::string& player_id,
                                   const GameInstance& instance);

std::string derive_player_id(const PlayerSet& players);

}  // namespace dgbench
