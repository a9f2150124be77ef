#include "dgbench/core/episode_io.hpp"

#include <fstream>

namespace dgbench {

std::string to_string(Participant p) {
    switch (p) {
        case Participant::GameMaster: return "GM";
        case Participant::PlayerA: return "PlayerA";
        case Participant::PlayerB: return "PlayerB";
    }
    return "";
}

std::optional<Participant> participant_from_string(const std::string& s) {
    if (s == "GM") return Participant::GameMaster;
    if (s == "PlayerA") return Participant::PlayerA;
    if (s == "PlayerB") return Participant::PlayerB;
    return std::nullopt;
}

Json instance_to_json(const GameInstance& instance) {
    return Json{{"game", instance.game},
                {"experiment", instance.experiment},
                {"instance_id", instance.id},
                {"seed", instance.seed},
                {"payload", instance.payload}};
}

GameInstance instance_from_json(const Json& j) {
    GameInstance instance;
    instance.game = j.at("game").get<std::string>();
    instance.experiment = j.at("experiment").get<std::string>();
    instance.id = j.at("instance_id").get<std::string>();
    instance.seed = j.at("seed").get<std::uint64_t>();
    instance.payload = j.at("payload");
    return instance;
}

Json episode_to_json(const Episode& episode) {
    Json events = Json::array();
    for (const Message& m : episode.events) {
        events.push_back(Json{{"turn", m.turn_index},
                              {"from", to_string(m.sender)},
                              {"to", to_string(m.recipient)},
                              {"text", m.content},
                              {"images", m.attachments}});
    }
    Json outcome;
    if (episode.outcome.is_played) {
        outcome = Json{{"status", "played"}, {"quality", episode.outcome.quality}};
    } else {
        outcome = Json{{"status", "aborted"},
                       {"reason", episode.outcome.reason == AbortReason::BadFormat
                                      ? "bad_format"
                                      : "turn_limit"}};
        if (episode.outcome.offender) outcome["player"] = to_string(*episode.outcome.offender);
        if (episode.outcome.offending_response) {
            outcome["response"] = *episode.outcome.offending_response;
        }
    }
    return Json{{"instance_ref", episode.instance_ref},
                {"events", events},
                {"outcome", outcome},
                {"metrics", episode.metrics},
                {"instance", instance_to_json(episode.instance)}};
}

Episode episode_from_json(const Json& j) {
    Episode episode;
    episode.instance_ref = j.at("instance_ref").get<std::string>();
    for (const auto& je : j.at("events")) {
        Message m;
        m.turn_index = je.at("turn").get<int>();
        m.sender = participant_from_string(je.at("from").get<std::string>())
                       .value_or(Participant::GameMaster);
        m.recipient = participant_from_string(je.at("to").get<std::string>())
                          .value_or(Participant::GameMaster);
        m.content = je.at("text").get<std::string>();
        for (const auto& img : je.at("images")) m.attachments.push_back(img.get<std::string>());
        episode.events.push_back(std::move(m));
    }
    const Json& jo = j.at("outcome");
    if (jo.at("status").get<std::string>() == "played") {
        episode.outcome = Outcome::played(jo.at("quality").get<double>());
    } else {
        episode.outcome = Outcome::aborted(jo.at("reason").get<std::string>() == "bad_format"
                                               ? AbortReason::BadFormat
                                               : AbortReason::TurnLimit);
        if (jo.contains("player")) {
            episode.outcome.offender = participant_from_string(jo.at("player").get<std::string>());
        }
        if (jo.contains("response")) {
            episode.outcome.offending_response = jo.at("response").get<std::string>();
        }
    }
    for (const auto& [k, v] : j.at("metrics").items()) {
        episode.metrics[k] = v.get<double>();
    }
    episode.instance = instance_from_json(j.at("instance"));
    return episode;
}

void save_json(const std::filesystem::path& path, const Json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return Json::parse(in);
}

void save_episode(const std::filesystem::path& path, const Episode& episode) {
    save_json(path, episode_to_json(episode));
}

Episode load_episode(const std::filesystem::path& path) {
    return episode_from_json(load_json(path));
}

void save_instance_file(const std::filesystem::path& path,
                        const std::vector<GameInstance>& instances) {
    Json arr = Json::array();
    for (const auto& instance : instances) arr.push_back(instance_to_json(instance));
    save_json(path, arr);
}

std::vector<GameInstance> load_instance_file(const std::filesystem::path& path) {
    Json arr = load_json(path);
    std::vector<GameInstance> out;
    for (const auto& j : arr) out.push_back(instance_from_json(j));
    return out;
}

}  // namespace dgbench
