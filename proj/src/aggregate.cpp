#include "dgbench/metrics/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace dgbench {

Json BenchmarkResult::to_json() const {
    Json games = Json::object();
    for (const auto& [id, agg] : per_game) {
        games[id] = Json{{"percent_played", agg.percent_played},
                         {"avg_quality", agg.avg_quality},
                         {"n", agg.n},
                         {"played", agg.played}};
    }
    return Json{{"games", games}, {"clemscore", clemscore}};
}

BenchmarkResult BenchmarkResult::from_json(const Json& j) {
    BenchmarkResult r;
    for (const auto& [id, jg] : j.at("games").items()) {
        GameAggregate agg;
        agg.percent_played = jg.at("percent_played").get<double>();
        agg.avg_quality = jg.at("avg_quality").get<double>();
        agg.n = jg.at("n").get<int>();
        agg.played = jg.value("played", 0);
        r.per_game[id] = agg;
    }
    r.clemscore = j.at("clemscore").get<double>();
    return r;
}

namespace metrics {

double macro_percent_played(const std::map<std::string, GameAggregate>& per_game) {
    if (per_game.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& [id, agg] : per_game) sum += agg.percent_played;
    return sum / static_cast<double>(per_game.size());
}

double macro_quality(const std::map<std::string, GameAggregate>& per_game) {
    double sum = 0.0;
    int games_with_quality = 0;
    for (const auto& [id, agg] : per_game) {
        if (agg.played > 0) {
            sum += agg.avg_quality;
            ++games_with_quality;
        }
    }
    if (games_with_quality == 0) return 0.0;
    return sum / static_cast<double>(games_with_quality);
}

double clemscore(const std::map<std::string, GameAggregate>& per_game) {
    return clemscore_from(macro_percent_played(per_game), macro_quality(per_game));
}

double round2(double x) {
    return std::floor(x * 100.0 + 0.5) / 100.0;
}

std::string format2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", round2(x));
    return buf;
}

Leaderboard build_leaderboard(std::vector<LeaderboardRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const LeaderboardRow& a,
                                                  const LeaderboardRow& b) {
        if (a.result.clemscore != b.result.clemscore) {
            return a.result.clemscore > b.result.clemscore;
        }
        return a.model < b.model;
    });
    std::set<std::string> ids;
    for (const auto& row : rows) {
        for (const auto& [id, agg] : row.result.per_game) ids.insert(id);
    }
    Leaderboard board;
    board.rows = std::move(rows);
    board.game_ids.assign(ids.begin(), ids.end());
    return board;
}

namespace {

std::vector<std::string> header_cells(const std::vector<std::string>& game_ids) {
    std::vector<std::string> cells{"model", "clemscore", "avg %p", "avg ql"};
    for (const auto& id : game_ids) {
        cells.push_back(id + " %p");
        cells.push_back(id + " ql");
    }
    return cells;
}

std::vector<std::string> row_cells(const LeaderboardRow& row,
                                   const std::vector<std::string>& game_ids) {
    std::vector<std::string> cells{row.model, format2(row.result.clemscore),
                                   format2(macro_percent_played(row.result.per_game)),
                                   format2(macro_quality(row.result.per_game))};
    for (const auto& id : game_ids) {
        auto it = row.result.per_game.find(id);
        if (it == row.result.per_game.end()) {
            cells.emplace_back("-");
            cells.emplace_back("-");
        } else {
            cells.push_back(format2(it->second.percent_played));
            cells.push_back(it->second.played > 0 ? format2(it->second.avg_quality)
                                                  : std::string("-"));
        }
    }
    return cells;
}

}  // namespace

std::string Leaderboard::to_text() const {
    std::vector<std::vector<std::string>> table;
    table.push_back(header_cells(game_ids));
    for (const auto& row : rows) table.push_back(row_cells(row, game_ids));

    std::vector<std::size_t> widths(table.front().size(), 0);
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << "  ";
            out << row[i];
            if (i + 1 < row.size()) {
                for (std::size_t pad = row[i].size(); pad < widths[i]; ++pad) out << ' ';
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string Leaderboard::to_csv() const {
    std::ostringstream out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit(header_cells(game_ids));
    for (const auto& row : rows) emit(row_cells(row, game_ids));
    return out.str();
}

}  // namespace metrics
}  // namespace dgbench
