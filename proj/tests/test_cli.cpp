#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dgbench/cli/commands.hpp"
#include "dgbench/core/engine.hpp"
#include "dgbench/core/episode_io.hpp"
#include "dgbench/games/mapworld.hpp"
#include "dgbench/metrics/aggregate.hpp"

using namespace dgbench;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("dgbench_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// One scripted map episode with a known 80-efficiency transcript.
class ScriptPlayer : public Player {
public:
    explicit ScriptPlayer(std::vector<std::string> lines) : lines_(std::move(lines)) {}
    std::string respond(const PlayerView&) override {
        const std::size_t i = std::min(cursor_++, lines_.size() - 1);
        return lines_[i];
    }

private:
    std::vector<std::string> lines_;
    std::size_t cursor_ = 0;
};

class ScriptBinding : public PlayerBinding {
public:
    explicit ScriptBinding(std::vector<std::string> lines) : lines_(std::move(lines)) {}
    std::string id() const override { return "script"; }
    std::shared_ptr<Player> make_player(const GameInstance&, Role) override {
        return std::make_shared<ScriptPlayer>(lines_);
    }

private:
    std::vector<std::string> lines_;
};

GameInstance path3_instance(const std::string& id) {
    MapGraph map;
    map.nodes = {{0, 0, 0, "Kitchen", ""}, {1, 1, 0, "Lobby", ""}, {2, 2, 0, "Bar", ""}};
    map.edges = {{0, 1}, {1, 2}};
    map.start = 0;
    GameInstance instance;
    instance.game = "mapworld_ee";
    instance.experiment = "fixture";
    instance.id = id;
    instance.payload = map.to_json();
    return instance;
}

}  // namespace

TEST_CASE("generate -> run -> score -> leaderboard is deterministic end to end") {
    TempDir tmp;
    std::ostringstream log;

    cli::GenerateOptions generate;
    generate.game = "matchit_ascii";
    generate.seed = 5;
    generate.count = 3;
    generate.out = tmp.path / "inst";
    REQUIRE(cli::cmd_generate(generate, log) == cli::kExitOk);
    REQUIRE(fs::exists(tmp.path / "inst" / "matchit_ascii" / "same.json"));

    cli::GenerateOptions again = generate;
    again.out = tmp.path / "inst2";
    REQUIRE(cli::cmd_generate(again, log) == cli::kExitOk);
    CHECK(slurp(tmp.path / "inst" / "matchit_ascii" / "same.json") ==
          slurp(tmp.path / "inst2" / "matchit_ascii" / "same.json"));

    cli::RunOptions run;
    run.instances = {tmp.path / "inst"};
    run.player_a = "scripted:oracle";
    run.player_b = "scripted:oracle";
    run.out = tmp.path / "results";
    run.seed = 5;
    run.jobs = 2;
    REQUIRE(cli::cmd_run(run, log) == cli::kExitOk);

    cli::RunOptions rerun = run;
    rerun.out = tmp.path / "results2";
    REQUIRE(cli::cmd_run(rerun, log) == cli::kExitOk);
    const fs::path one = fs::path("scripted_oracle") / "matchit_ascii" / "same" / "same_00.json";
    CHECK(slurp(tmp.path / "results" / one) == slurp(tmp.path / "results2" / one));

    cli::ScoreOptions score;
    score.results_dir = tmp.path / "results";
    REQUIRE(cli::cmd_score(score, log) == cli::kExitOk);
    const fs::path scores_file =
        tmp.path / "results" / "scripted_oracle" / "matchit_ascii" / "same" / "same_00.scores.json";
    REQUIRE(fs::exists(scores_file));
    CHECK(load_json(scores_file).at("success") == 1.0);

    const fs::path result_file = tmp.path / "results" / "scripted_oracle" /
                                 "benchmark_result.json";
    const std::string first_scoring = slurp(result_file);
    REQUIRE(cli::cmd_score(score, log) == cli::kExitOk);
    CHECK(slurp(result_file) == first_scoring);  // rescoring is idempotent

    cli::LeaderboardOptions leaderboard;
    leaderboard.score_files = {result_file};
    leaderboard.out = tmp.path / "board";
    REQUIRE(cli::cmd_leaderboard(leaderboard, log) == cli::kExitOk);
    CHECK(fs::exists(tmp.path / "board" / "leaderboard.txt"));
    CHECK(fs::exists(tmp.path / "board" / "leaderboard.csv"));
    CHECK(slurp(tmp.path / "board" / "leaderboard.csv").find("scripted_oracle,100.00") !=
          std::string::npos);
}

TEST_CASE("the oracle pair plays all 390 reference instances without an abort") {
    TempDir tmp;
    std::ostringstream log;
    cli::GenerateOptions generate;
    generate.game = "reference";
    generate.seed = 1;
    generate.out = tmp.path / "inst";
    REQUIRE(cli::cmd_generate(generate, log) == cli::kExitOk);

    cli::RunOptions run;
    run.instances = {tmp.path / "inst"};
    run.player_a = "scripted:oracle";
    run.player_b = "scripted:oracle";
    run.out = tmp.path / "results";
    run.jobs = 2;
    REQUIRE(cli::cmd_run(run, log) == cli::kExitOk);

    Json result =
        load_json(tmp.path / "results" / "scripted_oracle" / "benchmark_result.json");
    CHECK(result.at("games").at("reference").at("n") == 390);
    CHECK(result.at("games").at("reference").at("percent_played") == 100.0);
}

TEST_CASE("cmd_generate rejects unknown ids and honors experiment filters") {
    TempDir tmp;
    std::ostringstream log;
    cli::GenerateOptions generate;
    generate.game = "poker";
    generate.out = tmp.path;
    CHECK(cli::cmd_generate(generate, log) == cli::kExitUsage);

    generate.game = "mapworld_g2x";
    generate.experiment = "far";
    generate.count = 2;
    CHECK(cli::cmd_generate(generate, log) == cli::kExitOk);
    CHECK(fs::exists(tmp.path / "mapworld_g2x" / "far.json"));
    CHECK_FALSE(fs::exists(tmp.path / "mapworld_g2x" / "on.json"));

    generate.experiment = "nonexistent";
    CHECK(cli::cmd_generate(generate, log) == cli::kExitUsage);
}

TEST_CASE("cmd_run usage errors: bad specs, missing instances, bad filters") {
    TempDir tmp;
    std::ostringstream log;
    cli::RunOptions run;
    run.out = tmp.path / "results";

    run.instances = {tmp.path / "missing"};
    run.player_a = "scripted:oracle";
    CHECK(cli::cmd_run(run, log) == cli::kExitUsage);

    cli::GenerateOptions generate;
    generate.game = "mapworld_ee";
    generate.experiment = "small";
    generate.count = 2;
    generate.out = tmp.path / "inst";
    REQUIRE(cli::cmd_generate(generate, log) == cli::kExitOk);

    run.instances = {tmp.path / "inst"};
    run.player_a = "oracle without prefix";
    CHECK(cli::cmd_run(run, log) == cli::kExitUsage);

    run.player_a = "scripted:oracle";
    run.game_filter = "reference";  // nothing matches
    CHECK(cli::cmd_run(run, log) == cli::kExitUsage);
}

TEST_CASE("cmd_run: transport failure during a run exits with the infrastructure code") {
    TempDir tmp;
    std::ostringstream log;
    cli::GenerateOptions generate;
    generate.game = "mapworld_ee";
    generate.experiment = "small";
    generate.count = 1;
    generate.out = tmp.path / "inst";
    REQUIRE(cli::cmd_generate(generate, log) == cli::kExitOk);

    // An endpoint nothing listens on; retries exhaust quickly.
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    save_json(tmp.path / "endpoint.json", Json{{"base_url", "http://127.0.0.1:9/v1"},
                                               {"model", "m"},
                                               {"auth_env", "DGBENCH_TEST_TOKEN"},
                                               {"max_retries", 0},
                                               {"timeout_ms", 200}});
    cli::RunOptions run;
    run.instances = {tmp.path / "inst"};
    run.player_a = "remote:" + (tmp.path / "endpoint.json").string();
    run.out = tmp.path / "results";
    CHECK(cli::cmd_run(run, log) == cli::kExitInfrastructure);
}

TEST_CASE("a format violator aborts every episode and scores zero") {
    TempDir tmp;
    std::ostringstream log;
    cli::GenerateOptions generate;
    generate.game = "mapworld_ee";
    generate.experiment = "small";
    generate.count = 4;
    generate.out = tmp.path / "inst";
    REQUIRE(cli::cmd_generate(generate, log) == cli::kExitOk);

    cli::RunOptions run;
    run.instances = {tmp.path / "inst"};
    run.player_a = "scripted:violator";
    run.out = tmp.path / "results";
    REQUIRE(cli::cmd_run(run, log) == cli::kExitOk);

    Json result = load_json(tmp.path / "results" / "scripted_violator" /
                            "benchmark_result.json");
    CHECK(result.at("games").at("mapworld_ee").at("percent_played") == 0.0);
    CHECK(result.at("clemscore") == 0.0);
}

TEST_CASE("cmd_score: 29 played at quality 80 plus one abort gives %p 96.67, clemscore 77.33") {
    TempDir tmp;
    std::ostringstream log;
    MapWorldGame game(MapVariant::ExploreExhaustively);

    // flags [1,0,1,1,1]: efficiency 80 with success 1.
    const std::vector<std::string> eighty = {"GO: east", "GO: west", "GO: east", "GO: east",
                                             "DONE"};
    PlayerSet players;
    for (int i = 0; i < 29; ++i) {
        players.player_a = std::make_shared<ScriptBinding>(eighty);
        char id[16];
        std::snprintf(id, sizeof(id), "fix_%02d", i);
        GameInstance instance = path3_instance(id);
        Episode episode = run_episode(game, instance, players, 20);
        REQUIRE(episode.outcome.quality == doctest::Approx(80.0));
        save_episode(episode_path(tmp.path / "results", "fixture_model", instance), episode);
    }
    players.player_a = std::make_shared<ScriptBinding>(std::vector<std::string>{"nonsense"});
    GameInstance aborted_instance = path3_instance("fix_29");
    Episode aborted = run_episode(game, aborted_instance, players, 20);
    REQUIRE_FALSE(aborted.outcome.is_played);
    save_episode(episode_path(tmp.path / "results", "fixture_model", aborted_instance), aborted);

    cli::ScoreOptions score;
    score.results_dir = tmp.path / "results";
    REQUIRE(cli::cmd_score(score, log) == cli::kExitOk);

    Json result = load_json(tmp.path / "results" / "fixture_model" / "benchmark_result.json");
    CHECK(metrics::format2(result.at("games").at("mapworld_ee").at("percent_played")
                               .get<double>()) == "96.67");
    CHECK(metrics::format2(result.at("games").at("mapworld_ee").at("avg_quality")
                               .get<double>()) == "80.00");
    CHECK(metrics::format2(result.at("clemscore").get<double>()) == "77.33");
}

TEST_CASE("cmd_score: stored run-time metrics are ignored, transcripts decide") {
    TempDir tmp;
    std::ostringstream log;
    MapWorldGame game(MapVariant::ExploreExhaustively);
    PlayerSet players;
    players.player_a = std::make_shared<ScriptBinding>(
        std::vector<std::string>{"GO: east", "GO: east", "DONE"});
    GameInstance instance = path3_instance("tamper_00");
    Episode episode = run_episode(game, instance, players, 20);

    // Tamper with the persisted metrics and quality; rescoring must restore them.
    Json j = episode_to_json(episode);
    j["metrics"] = Json::object();
    j["outcome"]["quality"] = 5.0;
    const fs::path file = episode_path(tmp.path / "results", "tamper_model", instance);
    save_json(file, j);

    cli::ScoreOptions score;
    score.results_dir = tmp.path / "results";
    REQUIRE(cli::cmd_score(score, log) == cli::kExitOk);
    Json result = load_json(tmp.path / "results" / "tamper_model" / "benchmark_result.json");
    CHECK(result.at("games").at("mapworld_ee").at("avg_quality") == 100.0);
}

TEST_CASE("cmd_score error paths") {
    TempDir tmp;
    std::ostringstream log;
    cli::ScoreOptions score;

    SUBCASE("missing or empty results directory") {
        score.results_dir = tmp.path / "nope";
        CHECK(cli::cmd_score(score, log) == cli::kExitUsage);
        fs::create_directories(tmp.path / "empty");
        score.results_dir = tmp.path / "empty";
        CHECK(cli::cmd_score(score, log) == cli::kExitUsage);
    }
    SUBCASE("corrupt episode files are reported, skipped, and counted") {
        MapWorldGame game(MapVariant::ExploreExhaustively);
        PlayerSet players;
        players.player_a = std::make_shared<ScriptBinding>(std::vector<std::string>{"DONE"});
        GameInstance instance = path3_instance("ok_00");
        save_episode(episode_path(tmp.path / "results", "m", instance),
                     run_episode(game, instance, players, 20));
        std::ofstream(tmp.path / "results" / "m" / "mapworld_ee" / "fixture" / "broken.json")
            << "{not json";
        score.results_dir = tmp.path / "results";
        CHECK(cli::cmd_score(score, log) == cli::kExitPartial);
        CHECK(log.str().find("skipping") != std::string::npos);
    }
}

TEST_CASE("cmd_leaderboard orders rows and enforces distinct model ids") {
    TempDir tmp;
    std::ostringstream log;
    auto write_result = [&](const std::string& model, double p, double q) {
        BenchmarkResult result;
        result.per_game["g"] = {p, q, 30, 30};
        result.clemscore = metrics::clemscore_from(p, q);
        Json j = result.to_json();
        j["model"] = model;
        const fs::path file = tmp.path / (model + ".json");
        save_json(file, j);
        return file;
    };
    // The published top-three aggregation pairs.
    auto a = write_result("claude-3-5", 95.33, 84.73);
    auto b = write_result("gpt-4o-aug", 96.93, 82.57);
    auto c = write_result("gpt-4-1106", 97.79, 75.21);

    cli::LeaderboardOptions options;
    options.score_files = {c, a, b};
    options.out = tmp.path / "board";
    REQUIRE(cli::cmd_leaderboard(options, log) == cli::kExitOk);
    const std::string csv = slurp(tmp.path / "board" / "leaderboard.csv");
    const auto pos_a = csv.find("claude-3-5,80.77");
    const auto pos_b = csv.find("gpt-4o-aug,80.04");
    const auto pos_c = csv.find("gpt-4-1106,73.55");
    REQUIRE(pos_a != std::string::npos);
    REQUIRE(pos_b != std::string::npos);
    REQUIRE(pos_c != std::string::npos);
    CHECK(pos_a < pos_b);
    CHECK(pos_b < pos_c);

    SUBCASE("duplicate model ids are rejected") {
        options.score_files = {a, a};
        CHECK(cli::cmd_leaderboard(options, log) == cli::kExitUsage);
    }
    SUBCASE("unusable files are skipped with a warning; none usable is an error") {
        std::ofstream(tmp.path / "junk.json") << "{}";
        options.score_files = {tmp.path / "junk.json"};
        CHECK(cli::cmd_leaderboard(options, log) == cli::kExitUsage);
        options.score_files = {tmp.path / "junk.json", a};
        CHECK(cli::cmd_leaderboard(options, log) == cli::kExitOk);
    }
}
