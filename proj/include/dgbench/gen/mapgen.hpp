#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgbench/games/map_graph.hpp"
#include "dgbench/util/rng.hpp"

namespace dgbench {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bundled room categories (scene names in the style of the map environment's
// source imagery). Ambiguous maps repeat entries from this list.
const std::vector<std::string>& room_categories();

struct MapGenParams {
    int n_rooms = 4;
    bool cycle = false;
    // (k, m): k categories appear m times each; all others distinct.
    std::optional<std::pair<int, int>> ambiguity;
    bool with_images = false;  // attach per-category image references
};

// Lays out n rooms by a self-avoiding random walk on the integer lattice
// (branching from a random placed room when the walk gets stuck), which gives
// a tree; cycle=true additionally closes one lattice-adjacent non-tree pair.
// The result always satisfies every MapGraph invariant, or the generator
// throws after bounded retries.
MapGraph gen_map(const MapGenParams& params, Rng& rng);

enum class DistanceBucket { On, Close, Far };  // 0, 1-2, 3-4

const char* to_string(DistanceBucket b);
bool bucket_contains(DistanceBucket b, int distance);

// Picks (start, target) with BFS distance inside the bucket and a target
// category unique on the map. Throws GenerationError when the map has no such
// pair (caller regenerates).
std::pair<int, int> select_g2x_endpoints(const MapGraph& map, DistanceBucket bucket, Rng& rng);

}  // namespace dgbench
