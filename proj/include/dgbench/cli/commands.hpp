#pragma once

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "dgbench/core/game.hpp"

namespace dgbench::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;           // usage / configuration error
inline constexpr int kExitInfrastructure = 2;  // transport failure during a run
inline constexpr int kExitPartial = 3;         // scoring skipped some files

std::unique_ptr<Game> make_game(const std::string& game_id, Modality modality);

struct GenerateOptions {
    std::string game = "all";
    std::string experiment;  // empty = every experiment
    std::uint64_t seed = 1;
    std::filesystem::path out = "instances";
    int count = 0;  // 0 = the published default per experiment
};

struct RunOptions {
    std::vector<std::filesystem::path> instances;  // files or directories
    std::string game_filter;
    std::string experiment_filter;
    std::string player_a;
    std::string player_b;
    std::filesystem::path out = "results";
    int turn_limit = 0;  // 0 = per-game default
    int jobs = 0;        // 0 = hardware concurrency
    std::uint64_t seed = 1;
    std::string modality = "text";
    std::string run_id;  // overrides the derived player id in the layout
};

struct ScoreOptions {
    std::filesystem::path results_dir;
};

struct LeaderboardOptions {
    std::vector<std::filesystem::path> score_files;  // benchmark result files
    std::filesystem::path out = ".";
};

int cmd_generate(const GenerateOptions& options, std::ostream& log = std::cout);
int cmd_run(const RunOptions& options, std::ostream& log = std::cout);
int cmd_score(const ScoreOptions& options, std::ostream& log = std::cout);
int cmd_leaderboard(const LeaderboardOptions& options, std::ostream& log = std::cout);

}  // namespace dgbench::cli
