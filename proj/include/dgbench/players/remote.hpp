#pragma once

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>

#include "dgbench/core/player.hpp"

namespace dgbench {

// Endpoint configuration, loaded from a JSON file:
//   {"base_url": ..., "model": ..., "api_style": "chat", "max_tokens": ...,
//    "temperature": ..., "concurrency": ..., "auth_env": ...}
// The auth token comes from the environment variable named by auth_env; an
// empty name means no Authorization header (local endpoints).
struct EndpointConfig {
    std::string base_url;
    std::string model;
    std::string api_style = "chat";
    int max_tokens = 512;
    double temperature = 0.0;
    int concurrency = 4;
    std::string auth_env = "DGBENCH_API_KEY";
    int max_retries = 3;
    int retry_base_ms = 500;
    int timeout_ms = 60000;

    static EndpointConfig from_json(const Json& j);
    static EndpointConfig from_file(const std::filesystem::path& path);
};

// Generic chat-completions client. The full visible history is sent on every
// turn (GM messages as user turns, own responses as assistant turns, image
// attachments as base64 data-URL content parts). Transport failures are
// retried with exponential backoff, then surface as InfrastructureError —
// never as an episode abort. Safe for concurrent episodes; in-flight requests
// are bounded by the configured concurrency.
class RemoteChatPlayer : public Player {
public:
    explicit RemoteChatPlayer(EndpointConfig config);
    std::string respond(const PlayerView& view) override;

    // Chat-message array for one request; exposed for tests.
    Json build_messages(const PlayerView& view) const;

    long retries_total() const { return retries_total_.load(); }

private:
    std::string post_chat(const Json& body);

    EndpointConfig config_;
    std::string token_;
    std::string host_part_;  // scheme://host[:port]
    std::string path_prefix_;
    std::atomic<long> retries_total_{0};

    std::mutex slots_mutex_;
    std::condition_variable slots_cv_;
    int slots_free_;
};

std::shared_ptr<PlayerBinding> make_remote_binding(const std::filesystem::path& config_path);

}  // namespace dgbench
