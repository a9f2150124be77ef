#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgbench/util/rng.hpp"

namespace dgbench {

// Rectangular character stimulus. Rendered with 'X' for filled cells and the
// white-square glyph for empty ones, cells space-separated, rows on their own
// lines.
struct Grid {
    int height = 5;
    int width = 5;
    std::vector<std::uint8_t> cells;  // row-major, 1 = filled

    Grid() = default;
    Grid(int h, int w) : height(h), width(w), cells(static_cast<std::size_t>(h * w), 0) {}

    std::uint8_t& at(int row, int col) {
        return cells[static_cast<std::size_t>(row * width + col)];
    }
    std::uint8_t at(int row, int col) const {
        return cells[static_cast<std::size_t>(row * width + col)];
    }
    int filled_count() const;

    bool operator==(const Grid&) const = default;
};

inline constexpr const char* kFilledCell = "X";
inline constexpr const char* kEmptyCell = "▢";

std::string render(const Grid& g);
std::optional<Grid> parse_grid(std::string_view text);

int hamming_distance(const Grid& a, const Grid& b);

enum class GridKind { Row, Column, Diagonal, Letter, Shape, Random };
enum class GridTransform { MirrorH, MirrorV, Rotate90 };

const char* to_string(GridKind k);
std::optional<GridKind> grid_kind_from_string(const std::string& s);

struct GridGenOptions {
    int size = 5;             // grids are size x size
    double random_fill = 0.4;  // fill probability for GridKind::Random
};

Grid gen_grid(GridKind kind, Rng& rng, const GridGenOptions& options = {});

// Standard geometric transform of the cell matrix. Rotate90 (clockwise)
// requires a square grid.
Grid transform_grid(const Grid& g, GridTransform t);

// Inverts the symbol at exactly two distinct random positions.
Grid edit_distance_two(const Grid& g, Rng& rng);

}  // namespace dgbench
