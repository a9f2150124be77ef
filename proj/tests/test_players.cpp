#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"

#include "dgbench/core/engine.hpp"
#include "dgbench/core/episode_io.hpp"
#include "dgbench/games/mapworld.hpp"
#include "dgbench/players/human.hpp"
#include "dgbench/players/registry.hpp"
#include "dgbench/players/remote.hpp"
#include "dgbench/players/scripted.hpp"

using namespace dgbench;

namespace {

Message gm_message(const std::string& text, Participant to = Participant::PlayerA,
                   std::vector<std::string> attachments = {}) {
    Message m;
    m.sender = Participant::GameMaster;
    m.recipient = to;
    m.content = text;
    m.attachments = std::move(attachments);
    return m;
}

Message player_message(const std::string& text, Participant from = Participant::PlayerA) {
    Message m;
    m.sender = from;
    m.recipient = Participant::GameMaster;
    m.content = text;
    return m;
}

// Minimal chat endpoint; scripted status codes per request index.
class StubServer {
public:
    explicit StubServer(std::vector<int> statuses = {}) : statuses_(std::move(statuses)) {
        server_.Post("/v1/chat/completions",
                     [this](const httplib::Request& req, httplib::Response& res) {
                         const int index = request_count_.fetch_add(1);
                         last_body_ = req.body;
                         last_auth_ = req.get_header_value("Authorization");
                         int status = 200;
                         if (index < static_cast<int>(statuses_.size())) {
                             status = statuses_[static_cast<std::size_t>(index)];
                         }
                         res.status = status;
                         if (status == 200) {
                             res.set_content(body_, "application/json");
                         }
                     });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~StubServer() {
        server_.stop();
        thread_.join();
    }

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
    int requests() const { return request_count_.load(); }
    const std::string& last_body() const { return last_body_; }
    const std::string& last_auth() const { return last_auth_; }
    void set_body(std::string body) { body_ = std::move(body); }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> request_count_{0};
    std::vector<int> statuses_;
    std::string body_ = R"({"choices":[{"message":{"content":"DONE"}}]})";
    std::string last_body_;
    std::string last_auth_;
};

EndpointConfig test_config(const std::string& base_url) {
    EndpointConfig config;
    config.base_url = base_url;
    config.model = "stub-model";
    config.auth_env = "DGBENCH_TEST_TOKEN";
    config.max_retries = 3;
    config.retry_base_ms = 1;
    config.timeout_ms = 5000;
    return config;
}

PlayerView view_with_history(int history_size) {
    PlayerView view;
    for (int i = 0; i < history_size; ++i) {
        if (i % 2 == 0) {
            view.history.push_back(gm_message("prompt " + std::to_string(i)));
        } else {
            view.history.push_back(player_message("reply " + std::to_string(i)));
        }
    }
    view.pending_prompt = gm_message("pending prompt");
    return view;
}

}  // namespace

TEST_CASE("remote player: a history of k messages becomes k+1 chat messages") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server;
    RemoteChatPlayer player(test_config(server.url()));

    const PlayerView view = view_with_history(4);
    CHECK(player.respond(view) == "DONE");

    const Json body = Json::parse(server.last_body());
    CHECK(body.at("model") == "stub-model");
    CHECK(body.at("temperature") == doctest::Approx(0.0));
    REQUIRE(body.at("messages").size() == 5);
    CHECK(body["messages"][0]["role"] == "user");
    CHECK(body["messages"][1]["role"] == "assistant");  // own turns become assistant
    CHECK(body["messages"][4]["role"] == "user");
    CHECK(body["messages"][4]["content"] == "pending prompt");
    CHECK(server.last_auth() == "Bearer sekrit");
}

TEST_CASE("remote player: image attachments become base64 content parts") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    const std::string image_path = "/tmp/dgbench_test_image.jpg";
    {
        std::ofstream out(image_path, std::ios::binary);
        out << "fakejpegbytes";
    }
    StubServer server;
    RemoteChatPlayer player(test_config(server.url()));
    PlayerView view;
    view.pending_prompt = gm_message("look", Participant::PlayerA, {image_path});
    CHECK(player.respond(view) == "DONE");

    const Json body = Json::parse(server.last_body());
    const Json& content = body["messages"][0]["content"];
    REQUIRE(content.is_array());
    CHECK(content[0]["type"] == "text");
    CHECK(content[1]["type"] == "image_url");
    const std::string url = content[1]["image_url"]["url"].get<std::string>();
    CHECK(url.rfind("data:image/jpeg;base64,", 0) == 0);
    CHECK(url.find("ZmFrZWpwZWdieXRlcw==") != std::string::npos);  // "fakejpegbytes"
    std::remove(image_path.c_str());
}

TEST_CASE("remote player: transient failures retry with backoff, then succeed") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server({500, 503});  // two failures, then 200
    RemoteChatPlayer player(test_config(server.url()));
    CHECK(player.respond(view_with_history(0)) == "DONE");
    CHECK(server.requests() == 3);
    CHECK(player.retries_total() == 2);
}

TEST_CASE("remote player: exhausted retries raise an infrastructure failure") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server({500, 500, 500, 500, 500});
    RemoteChatPlayer player(test_config(server.url()));
    CHECK_THROWS_AS(player.respond(view_with_history(0)), InfrastructureError);
    CHECK(server.requests() == 4);  // initial attempt + 3 retries
}

TEST_CASE("remote player: malformed responses are infrastructure failures, not aborts") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server;
    server.set_body(R"({"unexpected": true})");
    RemoteChatPlayer player(test_config(server.url()));
    CHECK_THROWS_AS(player.respond(view_with_history(0)), InfrastructureError);
}

TEST_CASE("remote player: unset auth token is a configuration error before any request") {
    unsetenv("DGBENCH_TEST_TOKEN_MISSING");
    EndpointConfig config = test_config("http://127.0.0.1:1/v1");
    config.auth_env = "DGBENCH_TEST_TOKEN_MISSING";
    CHECK_THROWS_AS(RemoteChatPlayer{config}, ConfigError);
}

TEST_CASE("remote player: 4xx responses fail without retries") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server({404});
    RemoteChatPlayer player(test_config(server.url()));
    CHECK_THROWS_AS(player.respond(view_with_history(0)), InfrastructureError);
    CHECK(server.requests() == 1);
}

TEST_CASE("endpoint config file round trip and defaults") {
    const Json j{{"base_url", "http://localhost:9/v1"}, {"model", "m"},
                 {"api_style", "chat"},  {"max_tokens", 64},
                 {"temperature", 0.0},   {"concurrency", 2},
                 {"auth_env", ""}};
    EndpointConfig config = EndpointConfig::from_json(j);
    CHECK(config.max_tokens == 64);
    CHECK(config.concurrency == 2);
    CHECK(config.auth_env.empty());
    // Empty auth_env means no Authorization header and no env lookup.
    CHECK_NOTHROW(RemoteChatPlayer{config});

    Json bad = j;
    bad["api_style"] = "completions";
    CHECK_THROWS_AS(RemoteChatPlayer{EndpointConfig::from_json(bad)}, ConfigError);
}

TEST_CASE("human player prints the prompt and reads one line or a JSON block") {
    std::istringstream in("GO: north\n{\"action\": \"DONE\",\n \"graph\": {}}\n\nrest\n");
    std::ostringstream out;
    HumanPlayer human(in, out);

    PlayerView view;
    view.pending_prompt = gm_message("Which way?", Participant::PlayerA, {"room.jpg"});
    CHECK(human.respond(view) == "GO: north");
    CHECK(out.str().find("Which way?") != std::string::npos);
    CHECK(out.str().find("[image: room.jpg]") != std::string::npos);

    CHECK(human.respond(view) == "{\"action\": \"DONE\",\n \"graph\": {}}");
    CHECK(human.respond(view) == "rest");
}

TEST_CASE("player spec registry") {
    CHECK(resolve_player_spec("scripted:oracle", Modality::Text, 1)->id() == "scripted:oracle");
    CHECK(resolve_player_spec("human", Modality::Text, 1)->single_episode_affinity());
    CHECK_FALSE(resolve_player_spec("scripted:looper", Modality::Text, 1)
                    ->single_episode_affinity());
    CHECK_THROWS_AS(resolve_player_spec("psychic", Modality::Text, 1), ConfigError);
    CHECK_THROWS_AS(resolve_player_spec("remote:/nonexistent/config.json", Modality::Text, 1),
                    std::exception);
    // Unknown scripted names surface when the first player is created.
    auto binding = resolve_player_spec("scripted:nope", Modality::Text, 1);
    GameInstance instance;
    instance.game = "mapworld_ee";
    CHECK_THROWS_AS(binding->make_player(instance, Role::PlayerA), ConfigError);
}

TEST_CASE("scripted players are deterministic under a fixed seed") {
    GameInstance instance;
    instance.game = "mapworld_ee";
    instance.experiment = "unit";
    instance.id = "det_00";
    MapGraph map;
    map.nodes = {{0, 0, 0, "A", ""}, {1, 1, 0, "B", ""}};
    map.edges = {{0, 1}};
    map.start = 0;
    instance.payload = map.to_json();

    auto binding = make_scripted_binding("random", Modality::Text, 99);
    auto first = binding->make_player(instance, Role::PlayerA);
    auto second = binding->make_player(instance, Role::PlayerA);
    PlayerView view;
    view.pending_prompt = gm_message("go");
    for (int i = 0; i < 20; ++i) {
        CHECK(first->respond(view) == second->respond(view));
    }
}

TEST_CASE("remote player bounds concurrent in-flight requests") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    std::atomic<int> in_flight{0};
    std::atomic<int> peak{0};
    httplib::Server server;
    server.Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
        const int now = ++in_flight;
        int seen = peak.load();
        while (now > seen && !peak.compare_exchange_weak(seen, now)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(30));
        --in_flight;
        res.set_content(R"({"choices":[{"message":{"content":"DONE"}}]})", "application/json");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread listener([&server] { server.listen_after_bind(); });
    server.wait_until_ready();

    EndpointConfig config = test_config("http://127.0.0.1:" + std::to_string(port) + "/v1");
    config.concurrency = 2;
    RemoteChatPlayer player(config);
    std::vector<std::thread> callers;
    for (int i = 0; i < 6; ++i) {
        callers.emplace_back([&player] { (void)player.respond(view_with_history(0)); });
    }
    for (auto& t : callers) t.join();
    server.stop();
    listener.join();
    CHECK(peak.load() <= 2);
    CHECK(peak.load() >= 1);
}

TEST_CASE("remote player works as a map game player end to end") {
    setenv("DGBENCH_TEST_TOKEN", "sekrit", 1);
    StubServer server;  // always answers DONE
    auto config_path = std::filesystem::temp_directory_path() / "dgbench_endpoint.json";
    save_json(config_path, Json{{"base_url", server.url()},
                                {"model", "stub-model"},
                                {"auth_env", "DGBENCH_TEST_TOKEN"},
                                {"max_tokens", 32},
                                {"concurrency", 2}});

    MapGraph map;
    map.nodes = {{0, 0, 0, "A", ""}, {1, 1, 0, "B", ""}};
    map.edges = {{0, 1}};
    map.start = 0;
    GameInstance instance;
    instance.game = "mapworld_ee";
    instance.experiment = "unit";
    instance.id = "remote_00";
    instance.payload = map.to_json();

    PlayerSet players;
    players.player_a = resolve_player_spec("remote:" + config_path.string(), Modality::Text, 1);
    MapWorldGame game(MapVariant::ExploreExhaustively);
    Episode episode = run_episode(game, instance, players, 20);
    CHECK(episode.outcome.is_played);  // DONE right away: played, success 0
    CHECK(episode.outcome.quality == doctest::Approx(0.0));
    std::filesystem::remove(config_path);
}
