#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgbench/core/types.hpp"
#include "dgbench/games/mapworld.hpp"
#include "dgbench/gen/grid.hpp"
#include "dgbench/gen/mapgen.hpp"

namespace dgbench {

inline constexpr const char* kGeneratorVersion = "1.0";

struct ExperimentInstances {
    std::string game;
    std::string experiment;
    std::vector<GameInstance> instances;
};

// Default per-experiment counts follow the published suite sizes: 30 per
// reference experiment (13 experiments), 10 per MatchIt difficulty, 10 per
// map experiment. A fixed seed regenerates byte-identical files.

// 13 experiments: row/column/diagonal/letter/shape/random as grids (text) and
// as image references, plus pentomino. 390 instances by default.
std::vector<ExperimentInstances> generate_reference_suite(std::uint64_t seed,
                                                          int per_experiment = 30);

// 4 difficulties (same, similar_transform, similar_edit2, different) over the
// diagonal/letter/shape base grids. 40 instances by default.
std::vector<ExperimentInstances> generate_matchit_ascii_suite(std::uint64_t seed,
                                                              int per_difficulty = 10);

// 6 experiments (photos and pentomino boards, 3 difficulties each) with
// opaque image references. 60 instances by default.
std::vector<ExperimentInstances> generate_matchit_images_suite(std::uint64_t seed,
                                                               int per_difficulty = 10);

// EE: small/medium/large plus medium_cycle/large_cycle (50 instances).
// EE-gr: small/medium/large (30). G2X: distance buckets on/close/far (30).
std::vector<ExperimentInstances> generate_mapworld_suite(MapVariant variant, std::uint64_t seed,
                                                         int per_experiment = 10);

// Dispatch by game id ("reference", "matchit_ascii", "matchit_images",
// "mapworld_ee", "mapworld_eegr", "mapworld_g2x"). Throws ConfigError on an
// unknown id.
std::vector<ExperimentInstances> generate_suite(const std::string& game, std::uint64_t seed);

std::vector<std::string> known_game_ids();

}  // namespace dgbench
