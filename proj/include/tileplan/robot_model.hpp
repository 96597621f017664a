#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tileplan/grid_world.hpp"

namespace tileplan {

// Basic motions plus the pick/place actions. Back pivots are S7-only.
enum class MoveKind : uint8_t {
    Wait,
    StepForward,
    StepBackward,
    FrontPivotLeft,
    FrontPivotRight,
    BackPivotLeft,
    BackPivotRight,
    Pick,
    Place,
};

const char* move_name(MoveKind m);
std::optional<MoveKind> move_from_name(const std::string& name);

// An inchworm robot configuration: two feet on orthogonally adjacent
// cells plus whether a tile is gripped. The carried tile rides one cell
// beyond the front foot along the heading.
struct RobotPose {
    Cell front;
    Cell back;
    bool carrying = false;

    Cell heading() const { return front - back; }
    Cell carried_cell() const { return front + heading(); }

    auto operator<=>(const RobotPose&) const = default;
};

enum class MovesetId : uint8_t { S5, S7 };

struct Moveset {
    MovesetId id;
    std::vector<MoveKind> moves;  // motions only; Pick/Place are always available

    static const Moveset& s5();
    static const Moveset& s7();
    static const Moveset& by_id(MovesetId id);
};

// Cells occupied or swept during one transition. Always contains the
// start and end foot cells; pivots add the corner cell of the 2x2 block
// spanned by the old and new body link; carried-tile cells are added
// when carrying.
struct CollisionSet {
    std::vector<Cell> cells;  // sorted, unique

    void insert(Cell c);
    bool contains(Cell c) const;
    bool intersects(const CollisionSet& other) const;
    size_t size() const { return cells.size(); }
};

// True when both feet are on tiles, adjacent and distinct, and a carried
// tile (if any) hangs over an in-bounds, non-obstacle cell.
bool pose_valid(const RobotPose& pose, const Workspace& w);

// Pure geometry of one motion: where the feet end up, ignoring the
// workspace. Pick/Place keep the feet and toggle carrying.
RobotPose move_geometry(const RobotPose& pose, MoveKind m);

// Successor pose if the motion lands both feet on tiles (and the carried
// tile stays legal); nullopt marks an invalid move so planners can skip.
std::optional<RobotPose> apply_move(const RobotPose& pose, MoveKind m, const Workspace& w);

// Collision set of executing m from pose. `carrying` is taken explicitly
// since pick/place transitions change it mid-move.
CollisionSet collision_set(const RobotPose& pose, MoveKind m, bool carrying);

struct Neighbor {
    MoveKind move;
    RobotPose pose;
    CollisionSet sweep;
};

// All valid successors under the moveset, plus Pick/Place where legal.
std::vector<Neighbor> neighbors(const RobotPose& pose, const Workspace& w, const Moveset& s);

// Remove the tile beyond the front foot and grip it. Fails if not facing
// a tile, already carrying, or the remaining structure would disconnect.
std::optional<std::pair<RobotPose, Workspace>> pick(const RobotPose& pose, const Workspace& w);

// Place the gripped tile beyond the front foot. Fails if not carrying or
// the target cell is not free.
std::optional<std::pair<RobotPose, Workspace>> place(const RobotPose& pose, const Workspace& w);

}  // namespace tileplan

template <>
struct std::hash<tileplan::RobotPose> {
    size_t operator()(const tileplan::RobotPose& p) const {
        uint64_t k = (static_cast<uint64_t>(static_cast<uint16_t>(p.front.x)) << 48) |
                     (static_cast<uint64_t>(static_cast<uint16_t>(p.front.y)) << 32) |
                     (static_cast<uint64_t>(static_cast<uint16_t>(p.back.x)) << 16) |
                     static_cast<uint16_t>(p.back.y);
        return std::hash<uint64_t>{}(k * 2 + (p.carrying ? 1 : 0));
    }
};
