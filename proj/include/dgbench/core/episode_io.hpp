#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dgbench/core/types.hpp"
#include "dgbench/metrics/aggregate.hpp"

namespace dgbench {

Json episode_to_json(const Episode& episode);
Episode episode_from_json(const Json& j);

Json instance_to_json(const GameInstance& instance);
GameInstance instance_from_json(const Json& j);

void save_json(const std::filesystem::path& path, const Json& j);
Json load_json(const std::filesystem::path& path);

void save_episode(const std::filesystem::path& path, const Episode& episode);
Episode load_episode(const std::filesystem::path& path);

// One file per experiment holding an instance array.
void save_instance_file(const std::filesystem::path& path,
                        const std::vector<GameInstance>& instances);
std::vector<GameInstance> load_instance_file(const std::filesystem::path& path);

}  // namespace dgbench
