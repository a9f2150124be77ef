#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dgbench/cli/commands.hpp"
#include "dgbench/gen/instances.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Dialogue-game benchmark engine: procedural instance generation, "
                 "GameMaster-orchestrated play, transcript scoring, leaderboards"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 1;
    int jobs = 0;
    int turn_limit = 0;
    std::string global_out;
    app.add_option("--seed", seed, "Generator / scripted player seed")->capture_default_str();
    app.add_option("--jobs", jobs, "Parallel episodes (default: CPU count)");
    app.add_option("--turn-limit", turn_limit, "Override the per-game turn limit");
    app.add_option("--out", global_out, "Output directory (overrides per-subcommand --out)");

    dgbench::cli::GenerateOptions generate;
    auto* cmd_generate = app.add_subcommand("generate", "Write instance files for a game suite");
    cmd_generate->add_option("game", generate.game, "Game id or 'all'")
        ->check(CLI::IsMember([] {
            auto ids = dgbench::known_game_ids();
            ids.push_back("all");
            return ids;
        }()));
    cmd_generate->add_option("--experiment", generate.experiment, "Only this experiment");
    cmd_generate->add_option("--out", generate.out, "Output directory")->capture_default_str();
    cmd_generate->add_option("--count", generate.count, "Instances per experiment override");

    dgbench::cli::RunOptions run;
    auto* cmd_run = app.add_subcommand("run", "Play instances with bound players");
    cmd_run->add_option("instances", run.instances, "Instance files or directories")->required();
    cmd_run->add_option("--game", run.game_filter, "Only instances of this game");
    cmd_run->add_option("--experiment", run.experiment_filter, "Only this experiment");
    cmd_run->add_option("--player-a", run.player_a,
                        "Player spec: scripted:<name> | human | remote:<config>")
        ->required();
    cmd_run->add_option("--player-b", run.player_b, "Player spec for role B");
    cmd_run->add_option("--out", run.out, "Results directory")->capture_default_str();
    cmd_run->add_option("--modality", run.modality, "text | multimodal")->capture_default_str();
    cmd_run->add_option("--run-id", run.run_id, "Override the player id in the results layout");

    dgbench::cli::ScoreOptions score;
    auto* cmd_score = app.add_subcommand("score", "Recompute metrics from persisted transcripts");
    cmd_score->add_option("results", score.results_dir, "Results directory")->required();

    dgbench::cli::LeaderboardOptions leaderboard;
    auto* cmd_leaderboard =
        app.add_subcommand("leaderboard", "Aggregate benchmark results into a leaderboard");
    cmd_leaderboard->add_option("scores", leaderboard.score_files, "benchmark_result.json files")
        ->required();
    cmd_leaderboard->add_option("--out", leaderboard.out, "Output directory")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : dgbench::cli::kExitUsage;
    }

    generate.seed = seed;
    run.seed = seed;
    run.jobs = jobs;
    run.turn_limit = turn_limit;
    if (!global_out.empty()) {
        generate.out = global_out;
        run.out = global_out;
        leaderboard.out = global_out;
    }

    if (cmd_generate->parsed()) return dgbench::cli::cmd_generate(generate);
    if (cmd_run->parsed()) return dgbench::cli::cmd_run(run);
    if (cmd_score->parsed()) return dgbench::cli::cmd_score(score);
    if (cmd_leaderboard->parsed()) return dgbench::cli::cmd_leaderboard(leaderboard);
    return dgbench::cli::kExitUsage;
}
