#include "dgbench/players/registry.hpp"

#include "dgbench/players/human.hpp"
#include "dgbench/players/remote.hpp"
#include "dgbench/players/scripted.hpp"

namespace dgbench {

std::shared_ptr<PlayerBinding> resolve_player_spec(const std::string& spec, Modality modality,
                                                   std::uint64_t seed) {
    if (spec == "human") return make_human_binding();
    const std::string scripted_prefix = "scripted:";
    if (spec.rfind(scripted_prefix, 0) == 0) {
        return make_scripted_binding(spec.substr(scripted_prefix.size()), modality, seed);
    }
    const std::string remote_prefix = "remote:";
    if (spec.rfind(remote_prefix, 0) == 0) {
        return make_remote_binding(spec.substr(remote_prefix.size()));
    }
    throw ConfigError("unknown player spec '" + spec +
                      "' (expected scripted:<name>, human, or remote:<config-path>)");
}

}  // namespace dgbench
