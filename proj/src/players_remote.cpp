#include "dgbench/players/remote.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "httplib.h"

#include "dgbench/core/episode_io.hpp"

namespace dgbench {

namespace {

std::string base64_encode(const std::string& bytes) {
    static const char* kAlphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 2 < bytes.size()) {
        unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                     (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                     static_cast<unsigned char>(bytes[i + 2]);
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += kAlphabet[(v >> 6) & 63];
        out += kAlphabet[v & 63];
        i += 3;
    }
    if (i + 1 == bytes.size()) {
        unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += "==";
    } else if (i + 2 == bytes.size()) {
        unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                     (static_cast<unsigned char>(bytes[i + 1]) << 8);
        out += kAlphabet[(v >> 18) & 63];
        out += kAlphabet[(v >> 12) & 63];
        out += kAlphabet[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

std::string image_data_url(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InfrastructureError("cannot read image attachment: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return "data:image/jpeg;base64," + base64_encode(bytes);
}

Json chat_message(const std::string& role, const Message& m) {
    if (m.attachments.empty()) {
        return Json{{"role", role}, {"content", m.content}};
    }
    Json parts = Json::array();
    parts.push_back(Json{{"type", "text"}, {"text", m.content}});
    for (const auto& attachment : m.attachments) {
        parts.push_back(Json{{"type", "image_url"},
                             {"image_url", Json{{"url", image_data_url(attachment)}}}});
    }
    return Json{{"role", role}, {"content", parts}};
}

}  // namespace

EndpointConfig EndpointConfig::from_json(const Json& j) {
    EndpointConfig config;
    config.base_url = j.at("base_url").get<std::string>();
    config.model = j.at("model").get<std::string>();
    config.api_style = j.value("api_style", "chat");
    config.max_tokens = j.value("max_tokens", config.max_tokens);
    config.temperature = j.value("temperature", config.temperature);
    config.concurrency = j.value("concurrency", config.concurrency);
    if (j.contains("auth_env")) config.auth_env = j.at("auth_env").get<std::string>();
    config.max_retries = j.value("max_retries", config.max_retries);
    config.retry_base_ms = j.value("retry_base_ms", config.retry_base_ms);
    config.timeout_ms = j.value("timeout_ms", config.timeout_ms);
    return config;
}

EndpointConfig EndpointConfig::from_file(const std::filesystem::path& path) {
    return from_json(load_json(path));
}

RemoteChatPlayer::RemoteChatPlayer(EndpointConfig config) : config_(std::move(config)) {
    if (config_.api_style != "chat") {
        throw ConfigError("unsupported api_style '" + config_.api_style + "'");
    }
    if (!config_.auth_env.empty()) {
        const char* token = std::getenv(config_.auth_env.c_str());
        if (token == nullptr || *token == '\0') {
            throw ConfigError("auth token environment variable '" + config_.auth_env +
                              "' is not set");
        }
        token_ = token;
    }
    // Split base_url into scheme://host[:port] and a path prefix.
    auto scheme_end = config_.base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("base_url must start with http:// or https://");
    }
    auto path_start = config_.base_url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        host_part_ = config_.base_url;
    } else {
        host_part_ = config_.base_url.substr(0, path_start);
        path_prefix_ = config_.base_url.substr(path_start);
        while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
    }
    slots_free_ = std::max(1, config_.concurrency);
}

Json RemoteChatPlayer::build_messages(const PlayerView& view) const {
    Json messages = Json::array();
    const Participant self = view.pending_prompt.recipient;
    for (const Message& m : view.history) {
        messages.push_back(chat_message(m.sender == self ? "assistant" : "user", m));
    }
    messages.push_back(chat_message("user", view.pending_prompt));
    return messages;
}

std::string RemoteChatPlayer::post_chat(const Json& body) {
    httplib::Client client(host_part_);
    client.set_connection_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
    client.set_read_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
    httplib::Headers headers;
    if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);

    const std::string payload = body.dump();
    int delay_ms = config_.retry_base_ms;
    for (int attempt = 0;; ++attempt) {
        auto result = client.Post(path_prefix_ + "/chat/completions", headers, payload,
                                  "application/json");
        const bool transient =
            !result || result->status == 429 || result->status >= 500;
        if (result && result->status == 200) return result->body;
        if (!transient) {
            throw InfrastructureError("chat endpoint returned status " +
                                      std::to_string(result->status));
        }
        if (attempt >= config_.max_retries) {
            throw InfrastructureError("chat endpoint unreachable after " +
                                      std::to_string(config_.max_retries) + " retries");
        }
        retries_total_.fetch_add(1);
        std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
        delay_ms *= 2;
    }
}

std::string RemoteChatPlayer::respond(const PlayerView& view) {
    Json body{{"model", config_.model},
              {"messages", build_messages(view)},
              {"temperature", config_.temperature},
              {"max_tokens", config_.max_tokens}};

    {
        std::unique_lock<std::mutex> lock(slots_mutex_);
        slots_cv_.wait(lock, [this] { return slots_free_ > 0; });
        --slots_free_;
    }
    std::string response_body;
    try {
        response_body = post_chat(body);
    } catch (...) {
        std::lock_guard<std::mutex> lock(slots_mutex_);
        ++slots_free_;
        slots_cv_.notify_one();
        throw;
    }
    {
        std::lock_guard<std::mutex> lock(slots_mutex_);
        ++slots_free_;
        slots_cv_.notify_one();
    }

    Json parsed = Json::parse(response_body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("choices") || parsed["choices"].empty() ||
        !parsed["choices"][0].contains("message") ||
        !parsed["choices"][0]["message"].contains("content") ||
        !parsed["choices"][0]["message"]["content"].is_string()) {
        throw InfrastructureError("malformed chat completion response");
    }
    return parsed["choices"][0]["message"]["content"].get<std::string>();
}

namespace {

class RemoteBinding : public PlayerBinding {
public:
    explicit RemoteBinding(EndpointConfig config)
        : id_("remote:" + config.model),
          player_(std::make_shared<RemoteChatPlayer>(std::move(config))) {}
    std::string id() const override { return id_; }
    std::shared_ptr<Player> make_player(const GameInstance&, Role) override { return player_; }

private:
    std::string id_;
    std::shared_ptr<Player> player_;
};

}  // namespace

std::shared_ptr<PlayerBinding> make_remote_binding(const std::filesystem::path& config_path) {
    return std::make_shared<RemoteBinding>(EndpointConfig::from_file(config_path));
}

}  // namespace dgbench
