#include "dgbench/gen/grid.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace dgbench {

namespace {

// Bundled 5x5 stencils; '#' marks a filled cell.
const std::vector<std::array<const char*, 5>> kLetterStencils = {
    {".###.", "#...#", "#####", "#...#", "#...#"},  // A
    {".####", "#....", "#....", "#....", ".####"},  // C
    {"#####", "#....", "####.", "#....", "#####"},  // E
    {"#####", "#....", "####.", "#....", "#...."},  // F
    {"#...#", "#...#", "#####", "#...#", "#...#"},  // H
    {"#....", "#....", "#....", "#....", "#####"},  // L
    {"#####", "..#..", "..#..", "..#..", "..#.."},  // T
    {"#...#", "#...#", "#...#", "#...#", ".###."},  // U
    {"#...#", ".#.#.", "..#..", ".#.#.", "#...#"},  // X
    {"#####", "...#.", "..#..", ".#...", "#####"},  // Z
};

// Contiguous filled blobs.
const std::vector<std::array<const char*, 5>> kShapeStencils = {
    {".....", ".###.", ".###.", ".###.", "....."},  // block
    {"..#..", "..#..", "#####", "..#..", "..#.."},  // plus
    {"..#..", ".###.", "#####", ".###.", "..#.."},  // diamond
    {"#####", "#...#", "#...#", "#...#", "#####"},  // ring
    {".....", "#####", "#####", ".....", "....."},  // bar
    {"#....", "#....", "#....", "#....", "#####"},  // corner
};

Grid from_stencil(const std::array<const char*, 5>& stencil, int size) {
    Grid g(size, size);
    for (int r = 0; r < size && r < 5; ++r) {
        for (int c = 0; c < size && c < 5; ++c) {
            g.at(r, c) = stencil[static_cast<std::size_t>(r)][c] == '#' ? 1 : 0;
        }
    }
    return g;
}

}  // namespace

int Grid::filled_count() const {
    int n = 0;
    for (auto c : cells) n += c;
    return n;
}

std::string render(const Grid& g) {
    std::ostringstream out;
    for (int r = 0; r < g.height; ++r) {
        if (r > 0) out << '\n';
        for (int c = 0; c < g.width; ++c) {
            if (c > 0) out << ' ';
            out << (g.at(r, c) ? kFilledCell : kEmptyCell);
        }
    }
    return out.str();
}

std::optional<Grid> parse_grid(std::string_view text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::uint8_t> row;
        std::istringstream cells(line);
        std::string cell;
        while (cells >> cell) {
            if (cell == kFilledCell) {
                row.push_back(1);
            } else if (cell == kEmptyCell) {
                row.push_back(0);
            } else {
                return std::nullopt;
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return std::nullopt;
    Grid g(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < g.height; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != g.width) {
            return std::nullopt;
        }
        for (int c = 0; c < g.width; ++c) {
            g.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return g;
}

int hamming_distance(const Grid& a, const Grid& b) {
    if (a.height != b.height || a.width != b.width) {
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    }
    int n = 0;
    for (std::size_t i = 0; i < a.cells.size(); ++i) n += a.cells[i] != b.cells[i];
    return n;
}

const char* to_string(GridKind k) {
    switch (k) {
        case GridKind::Row: return "row";
        case GridKind::Column: return "column";
        case GridKind::Diagonal: return "diagonal";
        case GridKind::Letter: return "letter";
        case GridKind::Shape: return "shape";
        case GridKind::Random: return "random";
    }
    return "";
}

std::optional<GridKind> grid_kind_from_string(const std::string& s) {
    if (s == "row") return GridKind::Row;
    if (s == "column") return GridKind::Column;
    if (s == "diagonal") return GridKind::Diagonal;
    if (s == "letter") return GridKind::Letter;
    if (s == "shape") return GridKind::Shape;
    if (s == "random") return GridKind::Random;
    return std::nullopt;
}

Grid gen_grid(GridKind kind, Rng& rng, const GridGenOptions& options) {
    const int size = options.size;
    Grid g(size, size);
    switch (kind) {
        case GridKind::Row: {
            int row = uniform_int(rng, 0, size - 1);
            for (int c = 0; c < size; ++c) g.at(row, c) = 1;
            break;
        }
        case GridKind::Column: {
            int col = uniform_int(rng, 0, size - 1);
            for (int r = 0; r < size; ++r) g.at(r, col) = 1;
            break;
        }
        case GridKind::Diagonal: {
            bool anti = chance(rng, 0.5);
            for (int i = 0; i < size; ++i) g.at(i, anti ? size - 1 - i : i) = 1;
            break;
        }
        case GridKind::Letter: {
            auto index = static_cast<std::size_t>(
                uniform_int(rng, 0, static_cast<int>(kLetterStencils.size()) - 1));
            g = from_stencil(kLetterStencils[index], size);
            break;
        }
        case GridKind::Shape: {
            auto index = static_cast<std::size_t>(
                uniform_int(rng, 0, static_cast<int>(kShapeStencils.size()) - 1));
            g = from_stencil(kShapeStencils[index], size);
            break;
        }
        case GridKind::Random: {
            for (int r = 0; r < size; ++r) {
                for (int c = 0; c < size; ++c) {
                    g.at(r, c) = chance(rng, options.random_fill) ? 1 : 0;
                }
            }
            break;
        }
    }
    return g;
}

Grid transform_grid(const Grid& g, GridTransform t) {
    switch (t) {
        case GridTransform::MirrorH: {
            Grid out(g.height, g.width);
            for (int r = 0; r < g.height; ++r) {
                for (int c = 0; c < g.width; ++c) out.at(r, g.width - 1 - c) = g.at(r, c);
            }
            return out;
        }
        case GridTransform::MirrorV: {
            Grid out(g.height, g.width);
            for (int r = 0; r < g.height; ++r) {
                for (int c = 0; c < g.width; ++c) out.at(g.height - 1 - r, c) = g.at(r, c);
            }
            return out;
        }
        case GridTransform::Rotate90: {
            if (g.height != g.width) {
                throw std::invalid_argument("transform_grid: rotate90 needs a square grid");
            }
            Grid out(g.width, g.height);
            for (int r = 0; r < g.height; ++r) {
                for (int c = 0; c < g.width; ++c) out.at(c, g.height - 1 - r) = g.at(r, c);
            }
            return out;
        }
    }
    return g;
}

Grid edit_distance_two(const Grid& g, Rng& rng) {
    const int total = g.height * g.width;
    if (total < 2) throw std::invalid_argument("edit_distance_two: grid has fewer than 2 cells");
    int first = uniform_int(rng, 0, total - 1);
    int second = uniform_int(rng, 0, total - 2);
    if (second >= first) ++second;
    Grid out = g;
    out.cells[static_cast<std::size_t>(first)] ^= 1;
    out.cells[static_cast<std::size_t>(second)] ^= 1;
    return out;
}

}  // namespace dgbench
