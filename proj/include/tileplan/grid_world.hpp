#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tileplan {

// Grid coordinates. Origin is the lower-left corner, x grows rightward,
// y grows upward. Map files list the top row first and are flipped on load.
struct Cell {
    int x = 0;
    int y = 0;

    friend Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
    auto operator<=>(const Cell&) const = default;
};

inline int manhattan(Cell a, Cell b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Rotations of a unit heading vector, used for pivot kinematics.
inline Cell rot_left(Cell h) { return {-h.y, h.x}; }
inline Cell rot_right(Cell h) { return {h.y, -h.x}; }

enum class CellKind : uint8_t { Free = 0, Tile = 1, Obstacle = 2 };

// A bounded rectangular workspace. Every cell is free, a tile, or an
// obstacle; tiles form the walkable structure being reconfigured.
class Workspace {
public:
    Workspace() = default;
    Workspace(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }

    CellKind at(Cell c) const { return static_cast<CellKind>(cells_[index(c)]); }
    bool is_tile(Cell c) const { return in_bounds(c) && at(c) == CellKind::Tile; }
    bool is_obstacle(Cell c) const { return in_bounds(c) && at(c) == CellKind::Obstacle; }
    bool is_free(Cell c) const { return in_bounds(c) && at(c) == CellKind::Free; }

    // Mutators throw std::logic_error if the resulting cell sets would
    // violate the tiles/obstacles disjointness or bounds.
    void add_tile(Cell c);
    void remove_tile(Cell c);
    void add_obstacle(Cell c);

    int tile_count() const { return tile_count_; }
    std::vector<Cell> tiles() const;

    bool operator==(const Workspace& other) const {
        return width_ == other.width_ && height_ == other.height_ && cells_ == other.cells_;
    }

    // Raw occupancy bytes, row-major from y=0. Used for hashing snapshots.
    const std::vector<uint8_t>& raw() const { return cells_; }

    size_t index(Cell c) const { return static_cast<size_t>(c.y) * width_ + c.x; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> cells_;
    int tile_count_ = 0;
};

// BFS distances over the 4-adjacency graph of tiles, from a source tile.
// Cells that are not tiles or are unreachable report reachable() == false.
struct DistanceField {
    Cell source;
    int width = 0;
    int height = 0;
    std::vector<int> dist;  // -1 = unreachable or not a tile

    bool reachable(Cell c) const {
        if (c.x < 0 || c.x >= width || c.y < 0 || c.y >= height) return false;
        return dist[static_cast<size_t>(c.y) * width + c.x] >= 0;
    }
    int at(Cell c) const { return dist[static_cast<size_t>(c.y) * width + c.x]; }
};

// True iff the tile set forms a single 4-connected component.
// Empty and singleton sets count as connected.
bool is_connected(const Workspace& w);

// True iff w.tiles minus {c} is 4-connected. Throws if c is not a tile.
bool connected_after_removal(const Workspace& w, Cell c);

// Throws std::invalid_argument if source is not a tile.
DistanceField geodesic_distances(const Workspace& w, Cell source);

// ASCII map format, one char per cell: '.' free, '#' obstacle, 'T' tile.
// Rows are newline-separated, top row first; ragged rows are rejected.
Workspace parse_map(const std::string& text);
Workspace load_map(const std::string& path);
std::string format_map(const Workspace& w);

constexpr Cell kDirs4[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

}  // namespace tileplan

template <>
struct std::hash<tileplan::Cell> {
    size_t operator()(const tileplan::Cell& c) const {
        return std::hash<uint64_t>{}((static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
                                     static_cast<uint32_t>(c.y));
    }
};
