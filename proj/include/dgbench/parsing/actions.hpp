#pragma once

#include <array>
#include <optional>
#include <string>

namespace dgbench {

enum class Direction { North, South, East, West };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::North, Direction::South, Direction::East, Direction::West};

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::North: return "north";
        case Direction::South: return "south";
        case Direction::East: return "east";
        case Direction::West: return "west";
    }
    return "";
}

inline std::optional<Direction> direction_from_string(const std::string& s) {
    if (s == "north") return Direction::North;
    if (s == "south") return Direction::South;
    if (s == "east") return Direction::East;
    if (s == "west") return Direction::West;
    return std::nullopt;
}

inline Direction opposite(Direction d) {
    switch (d) {
        case Direction::North: return Direction::South;
        case Direction::South: return Direction::North;
        case Direction::East: return Direction::West;
        case Direction::West: return Direction::East;
    }
    return Direction::North;
}

// Lattice convention: north = +y, south = -y, east = +x, west = -x.
inline std::pair<int, int> delta(Direction d) {
    switch (d) {
        case Direction::North: return {0, 1};
        case Direction::South: return {0, -1};
        case Direction::East: return {1, 0};
        case Direction::West: return {-1, 0};
    }
    return {0, 0};
}

struct MoveAction {
    bool done = false;
    Direction direction = Direction::North;  // meaningful iff !done

    static MoveAction go(Direction d) { return MoveAction{false, d}; }
    static MoveAction stop() { return MoveAction{true, Direction::North}; }

    bool operator==(const MoveAction& other) const {
        return done == other.done && (done || direction == other.direction);
    }
};

inline std::string serialize(const MoveAction& a) {
    if (a.done) return "DONE";
    return std::string("GO: ") + to_string(a.direction);
}

}  // namespace dgbench
