#include "dgbench/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "dgbench/core/engine.hpp"
#include "dgbench/core/episode_io.hpp"
#include "dgbench/games/matchit.hpp"
#include "dgbench/games/mapworld.hpp"
#include "dgbench/games/reference.hpp"
#include "dgbench/gen/instances.hpp"
#include "dgbench/metrics/aggregate.hpp"
#include "dgbench/players/registry.hpp"

namespace dgbench::cli {

namespace fs = std::filesystem;

std::unique_ptr<Game> make_game(const std::string& game_id, Modality modality) {
    if (game_id == "reference") return std::make_unique<ReferenceGame>();
    if (game_id == "matchit_ascii") return std::make_unique<MatchItGame>(Modality::Text);
    if (game_id == "matchit_images") return std::make_unique<MatchItGame>(Modality::Multimodal);
    if (game_id == "mapworld_ee") {
        return std::make_unique<MapWorldGame>(MapVariant::ExploreExhaustively, modality);
    }
    if (game_id == "mapworld_eegr") {
        return std::make_unique<MapWorldGame>(MapVariant::ExploreWithGraph, modality);
    }
    if (game_id == "mapworld_g2x") {
        return std::make_unique<MapWorldGame>(MapVariant::GoToTarget, modality);
    }
    throw ConfigError("unknown game id '" + game_id + "'");
}

namespace {

Modality parse_modality(const std::string& name) {
    if (name == "text") return Modality::Text;
    if (name == "multimodal") return Modality::Multimodal;
    throw ConfigError("unknown modality '" + name + "' (expected text or multimodal)");
}

std::vector<GameInstance> collect_instances(const std::vector<fs::path>& paths) {
    std::vector<fs::path> files;
    for (const auto& path : paths) {
        if (fs::is_directory(path)) {
            for (const auto& entry : fs::recursive_directory_iterator(path)) {
                if (entry.is_regular_file() && entry.path().extension() == ".json") {
                    files.push_back(entry.path());
                }
            }
        } else if (fs::is_regular_file(path)) {
            files.push_back(path);
        } else {
            throw ConfigError("instance path does not exist: " + path.string());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<GameInstance> instances;
    for (const auto& file : files) {
        auto batch = load_instance_file(file);
        instances.insert(instances.end(), batch.begin(), batch.end());
    }
    return instances;
}

}  // namespace

int cmd_generate(const GenerateOptions& options, std::ostream& log) {
    try {
        std::vector<std::string> games;
        if (options.game == "all") {
            games = known_game_ids();
        } else {
            games.push_back(options.game);
        }
        int total = 0;
        for (const auto& game : games) {
            auto suite = generate_suite(game, options.seed);
            for (auto& experiment : suite) {
                if (!options.experiment.empty() && experiment.experiment != options.experiment) {
                    continue;
                }
                if (options.count > 0 &&
                    options.count < static_cast<int>(experiment.instances.size())) {
                    experiment.instances.resize(static_cast<std::size_t>(options.count));
                }
                const fs::path file =
                    options.out / game / (experiment.experiment + ".json");
                save_instance_file(file, experiment.instances);
                total += static_cast<int>(experiment.instances.size());
                log << "wrote " << experiment.instances.size() << " instances to "
                    << file.string() << "\n";
            }
        }
        if (total == 0) {
            log << "error: no experiment matched\n";
            return kExitUsage;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_run(const RunOptions& options, std::ostream& log) {
    PlayerSet players;
    std::vector<SuiteEntry> suite;
    std::map<std::string, std::unique_ptr<Game>> games;
    try {
        const Modality modality = parse_modality(options.modality);
        if (options.player_a.empty()) throw ConfigError("--player-a is required");
        players.player_a = resolve_player_spec(options.player_a, modality, options.seed);
        if (!options.player_b.empty()) {
            players.player_b = resolve_player_spec(options.player_b, modality, options.seed + 1);
        }

        std::map<std::string, std::vector<GameInstance>> by_game;
        for (auto& instance : collect_instances(options.instances)) {
            if (!options.game_filter.empty() && instance.game != options.game_filter) continue;
            if (!options.experiment_filter.empty() &&
                instance.experiment != options.experiment_filter) {
                continue;
            }
            by_game[instance.game].push_back(std::move(instance));
        }
        if (by_game.empty()) throw ConfigError("no instances matched the run filters");

        for (auto& [game_id, instances] : by_game) {
            games[game_id] = make_game(game_id, modality);
            suite.push_back(SuiteEntry{games[game_id].get(), std::move(instances)});
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        BenchmarkRunOptions run_options;
        run_options.turn_limit = options.turn_limit;
        run_options.jobs = options.jobs > 0
                               ? options.jobs
                               : static_cast<int>(std::thread::hardware_concurrency());
        run_options.output_dir = options.out;
        run_options.player_id = options.run_id;

        const BenchmarkRun run = run_benchmark(suite, players, run_options);

        int played = 0;
        int aborted = 0;
        for (const auto& episode : run.episodes) {
            (episode.outcome.is_played ? played : aborted) += 1;
        }
        log << "episodes: " << run.episodes.size() << " (played " << played << ", aborted "
            << aborted << ")\n";
        for (const auto& [game_id, agg] : run.result.per_game) {
            log << "  " << game_id << ": %played " << metrics::format2(agg.percent_played)
                << ", avg quality "
                << (agg.played > 0 ? metrics::format2(agg.avg_quality) : "-") << "\n";
        }
        log << "clemscore: " << metrics::format2(run.result.clemscore) << "\n";
        return kExitOk;
    } catch (const InfrastructureError& e) {
        log << "infrastructure failure: " << e.what() << "\n";
        return kExitInfrastructure;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_score(const ScoreOptions& options, std::ostream& log) {
    if (!fs::is_directory(options.results_dir)) {
        log << "error: results directory does not exist: " << options.results_dir.string()
            << "\n";
        return kExitUsage;
    }
    // results/<player>/<game>/<experiment>/<instance>.json
    struct PlayerScores {
        std::map<std::string, GameAggregate> per_game;
    };
    std::map<std::string, PlayerScores> by_player;
    int scored = 0;
    int skipped = 0;

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(options.results_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        const auto name = entry.path().filename().string();
        if (name == "benchmark_result.json" || name.ends_with(".scores.json")) continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
        try {
            Episode episode = load_episode(file);
            auto game = make_game(episode.instance.game, Modality::Text);
            const PlayResult rescored = game->score(episode);

            Json scores = rescored.metrics;
            fs::path scores_path = file;
            scores_path.replace_extension(".scores.json");
            save_json(scores_path, scores);

            const auto player = fs::relative(file, options.results_dir).begin()->string();
            GameAggregate& agg = by_player[player].per_game[episode.instance.game];
            ++agg.n;
            if (episode.outcome.is_played) {
                ++agg.played;
                agg.avg_quality += rescored.quality;
            }
            ++scored;
        } catch (const std::exception& e) {
            log << "warning: skipping " << file.string() << ": " << e.what() << "\n";
            ++skipped;
        }
    }
    if (scored == 0) {
        log << "error: no scorable episodes under " << options.results_dir.string() << "\n";
        return kExitUsage;
    }
    for (auto& [player, scores] : by_player) {
        for (auto& [game_id, agg] : scores.per_game) {
            agg.percent_played = 100.0 * agg.played / agg.n;
            agg.avg_quality = agg.played > 0 ? agg.avg_quality / agg.played : 0.0;
        }
        BenchmarkResult result;
        result.per_game = scores.per_game;
        result.clemscore = metrics::clemscore(scores.per_game);
        Json j = result.to_json();
        j["model"] = player;
        save_json(options.results_dir / player / "benchmark_result.json", j);
        log << player << ": clemscore " << metrics::format2(result.clemscore) << " over "
            << scores.per_game.size() << " game(s)\n";
    }
    if (skipped > 0) {
        log << skipped << " file(s) skipped\n";
        return kExitPartial;
    }
    return kExitOk;
}

int cmd_leaderboard(const LeaderboardOptions& options, std::ostream& log) {
    std::vector<metrics::LeaderboardRow> rows;
    std::set<std::string> models;
    for (const auto& file : options.score_files) {
        try {
            Json j = load_json(file);
            metrics::LeaderboardRow row;
            row.model = j.at("model").get<std::string>();
            row.result = BenchmarkResult::from_json(j);
            if (!models.insert(row.model).second) {
                log << "error: duplicate model id '" << row.model << "'\n";
                return kExitUsage;
            }
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            log << "warning: skipping " << file.string() << ": " << e.what() << "\n";
        }
    }
    if (rows.empty()) {
        log << "error: no usable score files\n";
        return kExitUsage;
    }
    const auto board = metrics::build_leaderboard(std::move(rows));
    fs::create_directories(options.out);
    const auto text_path = options.out / "leaderboard.txt";
    const auto csv_path = options.out / "leaderboard.csv";
    {
        std::ofstream text(text_path);
        text << board.to_text();
        std::ofstream csv(csv_path);
        csv << board.to_csv();
    }
    log << board.to_text();
    log << "wrote " << text_path.string() << " and " << csv_path.string() << "\n";
    return kExitOk;
}

}  // namespace dgbench::cli
