#include "tileplan/robot_model.hpp"

#include <algorithm>
#include <array>

namespace tileplan {

namespace {

constexpr std::array<const char*, 9> kMoveNames = {
    "Wait",          "StepForward",   "StepBackward", "FrontPivotLeft", "FrontPivotRight",
    "BackPivotLeft", "BackPivotRight", "Pick",         "Place",
};

bool is_pivot(MoveKind m) {
    return m == MoveKind::FrontPivotLeft || m == MoveKind::FrontPivotRight ||
           m == MoveKind::BackPivotLeft || m == MoveKind::BackPivotRight;
}

}  // namespace

const char* move_name(MoveKind m) { return kMoveNames[static_cast<size_t>(m)]; }

std::optional<MoveKind> move_from_name(const std::string& name) {
    for (size_t i = 0; i < kMoveNames.size(); ++i) {
        if (name == kMoveNames[i]) return static_cast<MoveKind>(i);
    }
    return std::nullopt;
}

const Moveset& Moveset::s5() {
    static const Moveset s{MovesetId::S5,
                           {MoveKind::Wait, MoveKind::StepForward, MoveKind::StepBackward,
                            MoveKind::FrontPivotLeft, MoveKind::FrontPivotRight}};
    return s;
}

const Moveset& Moveset::s7() {
    static const Moveset s{MovesetId::S7,
                           {MoveKind::Wait, MoveKind::StepForward, MoveKind::StepBackward,
                            MoveKind::FrontPivotLeft, MoveKind::FrontPivotRight,
                            MoveKind::BackPivotLeft, MoveKind::BackPivotRight}};
    return s;
}

const Moveset& Moveset::by_id(MovesetId id) { return id == MovesetId::S5 ? s5() : s7(); }

void CollisionSet::insert(Cell c) {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) cells.insert(it, c);
}

bool CollisionSet::contains(Cell c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

bool CollisionSet::intersects(const CollisionSet& other) const {
    auto a = cells.begin();
    auto b = other.cells.begin();
    while (a != cells.end() && b != other.cells.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            return true;
        }
    }
    return false;
}

bool pose_valid(const RobotPose& pose, const Workspace& w) {
    if (manhattan(pose.front, pose.back) != 1) return false;
    if (!w.is_tile(pose.front) || !w.is_tile(pose.back)) return false;
    if (pose.carrying) {
        Cell t = pose.carried_cell();
        if (!w.in_bounds(t) || w.is_obstacle(t)) return false;
    }
    return true;
}

RobotPose move_geometry(const RobotPose& pose, MoveKind m) {
    const Cell h = pose.heading();
    RobotPose out = pose;
    switch (m) {
        case MoveKind::Wait:
            break;
        case MoveKind::StepForward:
            out.back = pose.front;
            out.front = pose.front + h;
            break;
        case MoveKind::StepBackward:
            out.front = pose.back;
            out.back = pose.back - h;
            break;
        case MoveKind::FrontPivotLeft:
            out.front = pose.front + rot_left(h);
            out.back = pose.front;
            break;
        case MoveKind::FrontPivotRight:
            out.front = pose.front + rot_right(h);
            out.back = pose.front;
            break;
        case MoveKind::BackPivotLeft:
            out.back = pose.back + rot_left(h);
            out.front = pose.back;
            break;
        case MoveKind::BackPivotRight:
            out.back = pose.back + rot_right(h);
            out.front = pose.back;
            break;
        case MoveKind::Pick:
            out.carrying = true;
            break;
        case MoveKind::Place:
            out.carrying = false;
            break;
    }
    return out;
}

std::optional<RobotPose> apply_move(const RobotPose& pose, MoveKind m, const Workspace& w) {
    if (m == MoveKind::Pick || m == MoveKind::Place) return std::nullopt;
    RobotPose next = move_geometry(pose, m);
    if (!pose_valid(next, w)) return std::nullopt;
    return next;
}

CollisionSet collision_set(const RobotPose& pose, MoveKind m, bool carrying) {
    CollisionSet cs;
    cs.insert(pose.front);
    cs.insert(pose.back);

    if (m == MoveKind::Pick || m == MoveKind::Place) {
        cs.insert(pose.carried_cell());  // the manipulated tile cell
        return cs;
    }

    const RobotPose end = move_geometry(pose, m);
    cs.insert(end.front);
    cs.insert(end.back);

    if (is_pivot(m)) {
        // Corner cell completing the 2x2 block spanned by old and new link.
        const Cell h = pose.heading();
        const Cell p = (m == MoveKind::FrontPivotLeft || m == MoveKind::BackPivotLeft) ? rot_left(h)
                                                                                       : rot_right(h);
        const bool front_pivot = (m == MoveKind::FrontPivotLeft || m == MoveKind::FrontPivotRight);
        cs.insert(front_pivot ? pose.back + p : pose.front + p);
    }

    if (carrying) {
        const Cell t0 = pose.carried_cell();
        const Cell t1 = end.carried_cell();
        if (is_pivot(m)) {
            // The gripped tile swings with the reorienting body; cover the
            // bounding box of its start and end cells.
            for (int x = std::min(t0.x, t1.x); x <= std::max(t0.x, t1.x); ++x) {
                for (int y = std::min(t0.y, t1.y); y <= std::max(t0.y, t1.y); ++y) {
                    cs.insert({x, y});
                }
            }
        } else {
            cs.insert(t0);
            cs.insert(t1);
        }
    }
    return cs;
}

std::vector<Neighbor> neighbors(const RobotPose& pose, const Workspace& w, const Moveset& s) {
    std::vector<Neighbor> out;
    out.reserve(s.moves.size() + 1);
    for (MoveKind m : s.moves) {
        if (auto next = apply_move(pose, m, w)) {
            out.push_back({m, *next, collision_set(pose, m, pose.carrying)});
        }
    }
    const Cell target = pose.carried_cell();
    if (!pose.carrying) {
        if (w.is_tile(target) && connected_after_removal(w, target)) {
            RobotPose next = pose;
            next.carrying = true;
            out.push_back({MoveKind::Pick, next, collision_set(pose, MoveKind::Pick, false)});
        }
    } else {
        if (w.is_free(target)) {
            RobotPose next = pose;
            next.carrying = false;
            out.push_back({MoveKind::Place, next, collision_set(pose, MoveKind::Place, true)});
        }
    }
    return out;
}

std::optional<std::pair<RobotPose, Workspace>> pick(const RobotPose& pose, const Workspace& w) {
    if (pose.carrying) return std::nullopt;
    const Cell target = pose.carried_cell();
    if (!w.is_tile(target)) return std::nullopt;
    if (!connected_after_removal(w, target)) return std::nullopt;
    Workspace next = w;
    next.remove_tile(target);
    RobotPose p = pose;
    p.carrying = true;
    if (!pose_valid(p, next)) return std::nullopt;
    return std::make_pair(p, std::move(next));
}

std::optional<std::pair<RobotPose, Workspace>> place(const RobotPose& pose, const Workspace& w) {
    if (!pose.carrying) return std::nullopt;
    const Cell target = pose.carried_cell();
    if (!w.is_free(target)) return std::nullopt;
    Workspace next = w;
    next.add_tile(target);
    RobotPose p = pose;
    p.carrying = false;
    return std::make_pair(p, std::move(next));
}

}  // namespace tileplan
