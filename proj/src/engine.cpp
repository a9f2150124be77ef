#include "dgbench/core/engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "dgbench/core/episode_io.hpp"

namespace dgbench {

EpisodeContext::EpisodeContext(const Game& game, const GameInstance& instance,
                               std::map<Role, std::shared_ptr<Player>> players, int turn_limit)
    : game_(game), instance_(instance), players_(std::move(players)), turn_limit_(turn_limit) {}

void EpisodeContext::record(Message m) {
    m.turn_index = static_cast<int>(events_.size());
    events_.push_back(std::move(m));
}

void EpisodeContext::gm_message(Role to, std::string content,
                                std::vector<std::string> attachments) {
    Message m;
    m.sender = Participant::GameMaster;
    m.recipient = as_participant(to);
    m.content = std::move(content);
    m.attachments = std::move(attachments);
    record(std::move(m));
}

PlayerView EpisodeContext::view_for(Role who) const {
    PlayerView view;
    const Participant self = as_participant(who);
    for (std::size_t i = 0; i + 1 < events_.size(); ++i) {
        const Message& m = events_[i];
        if (m.sender == self || m.recipient == self) view.history.push_back(m);
    }
    view.pending_prompt = events_.back();
    return view;
}

std::string EpisodeContext::collect_response(Role who) {
    const std::string raw = players_.at(who)->respond(view_for(who));
    Message m;
    m.sender = as_participant(who);
    m.recipient = Participant::GameMaster;
    m.content = raw;
    record(std::move(m));
    ++turns_used_;
    return raw;
}

std::string EpisodeContext::prompt(Role who, std::string content,
                                   std::vector<std::string> attachments) {
    if (turns_used_ >= turn_limit_) {
        throw AbortSignal{Outcome::aborted(AbortReason::TurnLimit)};
    }
    gm_message(who, std::move(content), std::move(attachments));
    return collect_response(who);
}

std::string EpisodeContext::reprompt(Role who, std::string reply_content,
                                     std::vector<std::string> attachments) {
    return prompt(who, std::move(reply_content), std::move(attachments));
}

void EpisodeContext::abort_bad_format(Role offender, const std::string& raw_response) {
    throw AbortSignal{Outcome::aborted_bad_format(as_participant(offender), raw_response)};
}

Episode run_episode(const Game& game, const GameInstance& instance, const PlayerSet& players,
                    int turn_limit) {
    if (instance.game != game.id()) {
        throw ConfigError("instance " + instance.ref() + " does not belong to game " + game.id());
    }
    std::map<Role, std::shared_ptr<Player>> per_episode;
    for (Role role : game.required_roles()) {
        auto binding = players.binding(role);
        if (!binding) {
            throw ConfigError("game " + game.id() + " requires a player for role " +
                              to_string(as_participant(role)));
        }
        per_episode[role] = binding->make_player(instance, role);
    }
    if (turn_limit <= 0) turn_limit = game.default_turn_limit();

    EpisodeContext ctx(game, instance, std::move(per_episode), turn_limit);
    Episode episode;
    episode.instance_ref = instance.ref();
    episode.instance = instance;

    bool played = true;
    Outcome outcome;
    try {
        game.play(ctx, instance);
    } catch (const EpisodeContext::AbortSignal& signal) {
        played = false;
        outcome = signal.outcome;
    }
    episode.events = ctx.events();

    const PlayResult scored = game.score(episode);
    episode.metrics = scored.metrics;
    episode.outcome = played ? Outcome::played(scored.quality) : outcome;
    return episode;
}

std::filesystem::path episode_path(const std::filesystem::path& root, const std::string& player_id,
                                   const GameInstance& instance) {
    return root / player_id / instance.game / instance.experiment / (instance.id + ".json");
}

std::string derive_player_id(const PlayerSet& players) {
    std::string id = players.player_a ? players.player_a->id() : "none";
    if (players.player_b && players.player_b->id() != id) {
        id += "__" + players.player_b->id();
    }
    std::replace_if(
        id.begin(), id.end(),
        [](char c) { return c == '/' || c == '\\' || c == ':' || c == ' '; }, '_');
    return id;
}

BenchmarkRun run_benchmark(const std::vector<SuiteEntry>& suite, const PlayerSet& players,
                           const BenchmarkRunOptions& options) {
    if (suite.empty()) throw ConfigError("run_benchmark: empty suite");

    struct Work {
        const Game* game;
        const GameInstance* instance;
    };
    std::vector<Work> work;
    for (const auto& entry : suite) {
        for (const auto& instance : entry.instances) {
            work.push_back({entry.game, &instance});
        }
    }

    int jobs = std::max(1, options.jobs);
    const bool affinity =
        (players.player_a && players.player_a->single_episode_affinity()) ||
        (players.player_b && players.player_b->single_episode_affinity());
    if (affinity) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(work.size()));

    std::vector<Episode> episodes(work.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= work.size()) return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            try {
                episodes[i] = run_episode(*work[i].game, *work[i].instance, players,
                                          options.turn_limit);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    BenchmarkRun run;
    run.episodes = std::move(episodes);

    std::map<std::string, GameAggregate> per_game;
    for (const Episode& episode : run.episodes) {
        GameAggregate& agg = per_game[episode.instance.game];
        ++agg.n;
        if (episode.outcome.is_played) {
            ++agg.played;
            agg.avg_quality += episode.outcome.quality;
        }
    }
    for (auto& [id, agg] : per_game) {
        agg.percent_played = 100.0 * agg.played / agg.n;
        agg.avg_quality = agg.played > 0 ? agg.avg_quality / agg.played : 0.0;
    }
    run.result.per_game = per_game;
    run.result.clemscore = metrics::clemscore(per_game);

    if (!options.output_dir.empty()) {
        const std::string player_id =
            options.player_id.empty() ? derive_player_id(players) : options.player_id;
        for (const Episode& episode : run.episodes) {
            save_episode(episode_path(options.output_dir, player_id, episode.instance), episode);
        }
        Json result_json = run.result.to_json();
        result_json["model"] = player_id;
        save_json(options.output_dir / player_id / "benchmark_result.json", result_json);
    }
    if (options.on_episode) {
        for (const Episode& episode : run.episodes) options.on_episode(episode);
    }
    return run;
}

}  // namespace dgbench
