#include "dgbench/gen/mapgen.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dgbench {

const std::vector<std::string>& room_categories() {
    static const std::vector<std::string> kCategories = {
        "Nursery",     "Bar",          "Closet",      "Bedroom",     "Kitchen",
        "Living Room", "Bathroom",     "Library",     "Lobby",       "Pantry",
        "Attic",       "Basement",     "Study",       "Garage",      "Hallway",
        "Dining Room", "Office",       "Laundry Room", "Playroom",   "Sunroom",
        "Wine Cellar", "Home Theater", "Gym",         "Workshop",    "Balcony",
        "Greenhouse",  "Music Room",   "Storage Room", "Game Room",  "Utility Room",
    };
    return kCategories;
}

namespace {

std::string slug(const std::string& category) {
    std::string out;
    for (char c : category) {
        out += (c == ' ') ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::vector<std::string> draw_categories(int n, const std::optional<std::pair<int, int>>& ambiguity,
                                         Rng& rng) {
    std::vector<std::string> pool = room_categories();
    shuffle(rng, pool);
    std::vector<std::string> labels;
    if (ambiguity) {
        auto [k, m] = *ambiguity;
        if (k * m > n || k > static_cast<int>(pool.size())) {
            throw GenerationError("ambiguity spec does not fit the room count");
        }
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < m; ++j) labels.push_back(pool[static_cast<std::size_t>(i)]);
        }
        for (int i = k; static_cast<int>(labels.size()) < n; ++i) {
            labels.push_back(pool[static_cast<std::size_t>(i)]);
        }
        shuffle(rng, labels);
    } else {
        labels.assign(pool.begin(), pool.begin() + n);
    }
    return labels;
}

// One layout attempt; may fail on a boxed-in walk or a missing cycle edge.
std::optional<MapGraph> try_layout(const MapGenParams& params, Rng& rng) {
    MapGraph map;
    std::map<std::pair<int, int>, int> occupied;

    auto place = [&](int x, int y) {
        MapNode node;
        node.id = static_cast<int>(map.nodes.size());
        node.x = x;
        node.y = y;
        occupied[{x, y}] = node.id;
        map.nodes.push_back(node);
        return node.id;
    };

    int current = place(0, 0);
    while (static_cast<int>(map.nodes.size()) < params.n_rooms) {
        std::vector<std::pair<Direction, std::pair<int, int>>> free_cells;
        const MapNode& at = map.node(current);
        for (Direction d : kAllDirections) {
            auto [dx, dy] = delta(d);
            std::pair<int, int> cell{at.x + dx, at.y + dy};
            if (!occupied.count(cell)) free_cells.emplace_back(d, cell);
        }
        if (free_cells.empty()) {
            // Walk is boxed in; branch from a random placed room with space.
            std::vector<int> candidates;
            for (const auto& node : map.nodes) {
                for (Direction d : kAllDirections) {
                    auto [dx, dy] = delta(d);
                    if (!occupied.count({node.x + dx, node.y + dy})) {
                        candidates.push_back(node.id);
                        break;
                    }
                }
            }
            if (candidates.empty()) return std::nullopt;
            current = pick(rng, candidates);
            continue;
        }
        auto [dir, cell] = free_cells[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<int>(free_cells.size()) - 1))];
        (void)dir;
        int added = place(cell.first, cell.second);
        map.edges.emplace_back(std::min(current, added), std::max(current, added));
        current = added;
    }

    if (params.cycle) {
        // Close one lattice-adjacent pair that the tree left open.
        std::vector<std::pair<int, int>> closable;
        for (const auto& node : map.nodes) {
            for (Direction d : {Direction::North, Direction::East}) {
                auto [dx, dy] = delta(d);
                auto it = occupied.find({node.x + dx, node.y + dy});
                if (it == occupied.end()) continue;
                int a = std::min(node.id, it->second);
                int b = std::max(node.id, it->second);
                if (!map.has_edge(a, b)) closable.emplace_back(a, b);
            }
        }
        if (closable.empty()) return std::nullopt;
        map.edges.push_back(pick(rng, closable));
    }
    return map;
}

}  // namespace

MapGraph gen_map(const MapGenParams& params, Rng& rng) {
    if (params.cycle && params.n_rooms != 6 && params.n_rooms != 8) {
        throw GenerationError("cycle maps are defined for 6 or 8 rooms");
    }
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto candidate = try_layout(params, rng);
        if (!candidate) continue;
        MapGraph map = std::move(*candidate);
        auto labels = draw_categories(params.n_rooms, params.ambiguity, rng);
        for (std::size_t i = 0; i < map.nodes.size(); ++i) {
            map.nodes[i].category = labels[i];
            if (params.with_images) {
                map.nodes[i].image = "stimuli/rooms/" + slug(labels[i]) + ".jpg";
            }
        }
        map.start = uniform_int(rng, 0, params.n_rooms - 1);
        if (auto violation = validate_map(map)) {
            throw GenerationError("generated map violates invariants: " + *violation);
        }
        return map;
    }
    throw GenerationError("map generation failed after bounded retries");
}

const char* to_string(DistanceBucket b) {
    switch (b) {
        case DistanceBucket::On: return "on";
        case DistanceBucket::Close: return "close";
        case DistanceBucket::Far: return "far";
    }
    return "";
}

bool bucket_contains(DistanceBucket b, int distance) {
    switch (b) {
        case DistanceBucket::On: return distance == 0;
        case DistanceBucket::Close: return distance == 1 || distance == 2;
        case DistanceBucket::Far: return distance == 3 || distance == 4;
    }
    return false;
}

std::pair<int, int> select_g2x_endpoints(const MapGraph& map, DistanceBucket bucket, Rng& rng) {
    std::map<std::string, int> label_count;
    for (const auto& node : map.nodes) ++label_count[node.category];

    std::vector<std::pair<int, int>> candidates;
    for (const auto& start : map.nodes) {
        auto dist = bfs_distances(map, start.id);
        for (const auto& target : map.nodes) {
            if (!bucket_contains(bucket, dist[static_cast<std::size_t>(target.id)])) continue;
            if (label_count[target.category] != 1) continue;  // target must be unambiguous
            candidates.emplace_back(start.id, target.id);
        }
    }
    if (candidates.empty()) {
        throw GenerationError(std::string("no start/target pair in bucket '") + to_string(bucket) +
                              "'");
    }
    return pick(rng, candidates);
}

}  // namespace dgbench
