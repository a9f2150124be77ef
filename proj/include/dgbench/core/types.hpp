#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace dgbench {

using Json = nlohmann::json;

// Misconfiguration (missing role binding, unknown game id, missing auth token).
// Distinct from in-game aborts, which are recorded, never thrown.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transport-level failure of a remote player after retries were exhausted.
// Never converted into an episode abort.
struct InfrastructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Episode data inconsistent with the instance it claims to belong to.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Participant { GameMaster, PlayerA, PlayerB };
enum class Role { PlayerA, PlayerB };

std::string to_string(Participant p);
std::optional<Participant> participant_from_string(const std::string& s);
inline Participant as_participant(Role r) {
    return r == Role::PlayerA ? Participant::PlayerA : Participant::PlayerB;
}

struct Message {
    Participant sender = Participant::GameMaster;
    Participant recipient = Participant::GameMaster;
    std::string content;
    std::vector<std::string> attachments;  // image file references, usually empty
    int turn_index = 0;
};

enum class AbortReason { BadFormat, TurnLimit };

struct Outcome {
    bool is_played = false;
    double quality = 0.0;                       // only meaningful when played
    AbortReason reason = AbortReason::BadFormat;  // only meaningful when aborted
    std::optional<Participant> offender;        // bad_format attribution
    std::optional<std::string> offending_response;

    static Outcome played(double quality_score) {
        Outcome o;
        o.is_played = true;
        o.quality = quality_score;
        return o;
    }
    static Outcome aborted(AbortReason why) {
        Outcome o;
        o.is_played = false;
        o.reason = why;
        return o;
    }
    static Outcome aborted_bad_format(Participant who, std::string raw) {
        Outcome o = aborted(AbortReason::BadFormat);
        o.offender = who;
        o.offending_response = std::move(raw);
        return o;
    }
};

// One playable task. The payload layout is game-specific; games parse it into
// their own instance structs.
struct GameInstance {
    std::string game;
    std::string experiment;
    std::string id;
    std::uint64_t seed = 0;
    Json payload;

    std::string ref() const { return game + "/" + experiment + "/" + id; }
};

// Full record of one played instance.
struct Episode {
    std::string instance_ref;
    std::vector<Message> events;
    Outcome outcome;
    std::map<std::string, double> metrics;
    GameInstance instance;  // embedded so score runs are self-contained
};

}  // namespace dgbench
