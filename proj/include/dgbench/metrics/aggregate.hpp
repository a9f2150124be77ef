#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgbench/core/types.hpp"

namespace dgbench {

struct GameAggregate {
    double percent_played = 0.0;  // 100 * played / total
    double avg_quality = 0.0;     // micro-average over played episodes only
    int n = 0;                    // total episodes
    int played = 0;
};

struct BenchmarkResult {
    std::map<std::string, GameAggregate> per_game;
    double clemscore = 0.0;

    Json to_json() const;
    static BenchmarkResult from_json(const Json& j);
};

namespace metrics {

// clemscore = (macro-average %played over games) * (macro-average quality over
// games) / 100. Games without a single played episode have no quality and are
// excluded from the quality macro-average (they still drag down %played).
double clemscore(const std::map<std::string, GameAggregate>& per_game);

inline double clemscore_from(double avg_percent_played, double avg_quality) {
    return avg_percent_played * avg_quality / 100.0;
}

double macro_percent_played(const std::map<std::string, GameAggregate>& per_game);
double macro_quality(const std::map<std::string, GameAggregate>& per_game);

// Scores are stored at full precision and displayed to two decimals,
// round-half-up.
double round2(double x);
std::string format2(double x);

struct LeaderboardRow {
    std::string model;
    BenchmarkResult result;
};

struct Leaderboard {
    std::vector<LeaderboardRow> rows;     // sorted: clemscore desc, model id asc
    std::vector<std::string> game_ids;    // union over rows, sorted

    std::string to_text() const;
    std::string to_csv() const;
};

// Rows sorted descending by clemscore; ties broken by model id.
Leaderboard build_leaderboard(std::vector<LeaderboardRow> rows);

}  // namespace metrics
}  // namespace dgbench
