#include "tileplan/grid_world.hpp"

#include <fstream>
#include <queue>
#include <sstream>

namespace tileplan {

Workspace::Workspace(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("workspace dimensions must be positive");
    }
    cells_.assign(static_cast<size_t>(width) * height, static_cast<uint8_t>(CellKind::Free));
}

void Workspace::add_tile(Cell c) {
    if (!in_bounds(c)) throw std::logic_error("add_tile: cell out of bounds");
    if (at(c) == CellKind::Obstacle) throw std::logic_error("add_tile: cell is an obstacle");
    if (at(c) == CellKind::Tile) throw std::logic_error("add_tile: cell already a tile");
    cells_[index(c)] = static_cast<uint8_t>(CellKind::Tile);
    ++tile_count_;
}

void Workspace::remove_tile(Cell c) {
    if (!is_tile(c)) throw std::logic_error("remove_tile: cell is not a tile");
    cells_[index(c)] = static_cast<uint8_t>(CellKind::Free);
    --tile_count_;
}

void Workspace::add_obstacle(Cell c) {
    if (!in_bounds(c)) throw std::logic_error("add_obstacle: cell out of bounds");
    if (at(c) == CellKind::Tile) throw std::logic_error("add_obstacle: cell is a tile");
    cells_[index(c)] = static_cast<uint8_t>(CellKind::Obstacle);
}

std::vector<Cell> Workspace::tiles() const {
    std::vector<Cell> out;
    out.reserve(tile_count_);
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            Cell c{x, y};
            if (at(c) == CellKind::Tile) out.push_back(c);
        }
    }
    return out;
}

bool is_connected(const Workspace& w) {
    if (w.tile_count() <= 1) return true;

    Cell seed{-1, -1};
    for (int y = 0; y < w.height() && seed.x < 0; ++y) {
        for (int x = 0; x < w.width(); ++x) {
            if (w.is_tile({x, y})) {
                seed = {x, y};
                break;
            }
        }
    }

    std::vector<uint8_t> seen(static_cast<size_t>(w.width()) * w.height(), 0);
    std::queue<Cell> q;
    q.push(seed);
    seen[w.index(seed)] = 1;
    int reached = 0;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        ++reached;
        for (Cell d : kDirs4) {
            Cell n = c + d;
            if (w.is_tile(n) && !seen[w.index(n)]) {
                seen[w.index(n)] = 1;
                q.push(n);
            }
        }
    }
    return reached == w.tile_count();
}

bool connected_after_removal(const Workspace& w, Cell c) {
    if (!w.is_tile(c)) throw std::invalid_argument("connected_after_removal: not a tile");
    Workspace copy = w;
    copy.remove_tile(c);
    return is_connected(copy);
}

DistanceField geodesic_distances(const Workspace& w, Cell source) {
    if (!w.is_tile(source)) throw std::invalid_argument("geodesic_distances: source is not a tile");
    DistanceField f;
    f.source = source;
    f.width = w.width();
    f.height = w.height();
    f.dist.assign(static_cast<size_t>(w.width()) * w.height(), -1);
    std::queue<Cell> q;
    q.push(source);
    f.dist[w.index(source)] = 0;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        int d = f.dist[w.index(c)];
        for (Cell dir : kDirs4) {
            Cell n = c + dir;
            if (w.is_tile(n) && f.dist[w.index(n)] < 0) {
                f.dist[w.index(n)] = d + 1;
                q.push(n);
            }
        }
    }
    return f;
}

Workspace parse_map(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw std::runtime_error("map: empty input");

    const size_t width = rows[0].size();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw std::runtime_error("map: ragged row " + std::to_string(i + 1) + " (expected width " +
                                     std::to_string(width) + ", got " + std::to_string(rows[i].size()) + ")");
        }
    }

    Workspace w(static_cast<int>(width), static_cast<int>(rows.size()));
    // First text row is the top of the map.
    for (size_t r = 0; r < rows.size(); ++r) {
        int y = static_cast<int>(rows.size() - 1 - r);
        for (size_t x = 0; x < width; ++x) {
            char ch = rows[r][x];
            Cell c{static_cast<int>(x), y};
            switch (ch) {
                case '.': break;
                case 'T': w.add_tile(c); break;
                case '#': w.add_obstacle(c); break;
                default:
                    throw std::runtime_error("map: invalid character '" + std::string(1, ch) + "' at row " +
                                             std::to_string(r + 1) + ", col " + std::to_string(x + 1));
            }
        }
    }
    return w;
}

Workspace load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str());
}

std::string format_map(const Workspace& w) {
    std::string out;
    out.reserve(static_cast<size_t>(w.height()) * (w.width() + 1));
    for (int y = w.height() - 1; y >= 0; --y) {
        for (int x = 0; x < w.width(); ++x) {
            switch (w.at({x, y})) {
                case CellKind::Free: out += '.'; break;
                case CellKind::Tile: out += 'T'; break;
                case CellKind::Obstacle: out += '#'; break;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace tileplan
