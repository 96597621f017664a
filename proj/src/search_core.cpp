#include "tileplan/search_core.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

namespace tileplan {

int heuristic(const RobotPose& pose, const GoalSpec& goal) {
    const int md = manhattan(pose.front, goal.target);
    if (goal.kind == GoalSpec::Kind::FrontAt) {
        return (md + 1) / 2;
    }
    // Action goals: reach a cell adjacent to the target, then one action.
    return 1 + (std::max(0, md - 1) + 1) / 2;
}

bool goal_satisfied(const RobotPose& pose, const GoalSpec& goal) {
    return goal.kind == GoalSpec::Kind::FrontAt && pose.front == goal.target;
}

bool goal_complete(const RobotPose& pose, const GoalSpec& goal, const Workspace& w) {
    switch (goal.kind) {
        case GoalSpec::Kind::FrontAt:
            return pose.front == goal.target;
        case GoalSpec::Kind::PickAt:
            return !pose.carrying && pose.carried_cell() == goal.target && w.is_tile(goal.target) &&
                   connected_after_removal(w, goal.target);
        case GoalSpec::Kind::PlaceAt:
            return pose.carrying && pose.carried_cell() == goal.target && w.is_free(goal.target);
    }
    return false;
}

namespace {

struct Node {
    RobotPose pose;
    int g;
    int parent;  // index into arena, -1 for start
    MoveKind move;
};

struct OpenEntry {
    double f;
    int h;
    long long seq;
    int node;
};

struct OpenOrder {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.seq > b.seq;
    }
};

}  // namespace

PlanResult astar(const RobotPose& start, const GoalSpec& goal, const Workspace& w, const Moveset& s,
                 double epsilon, const SearchLimits& limits) {
    PlanResult result;
    result.end_pose = start;

    if (!pose_valid(start, w)) {
        result.status = SearchStatus::Unreachable;
        return result;
    }
    // Carrying state cannot change mid-search (the structure is fixed), so
    // action goals that do not match it are unreachable outright.
    if (goal.kind == GoalSpec::Kind::PickAt && start.carrying) return result;
    if (goal.kind == GoalSpec::Kind::PlaceAt && !start.carrying) return result;
    if (goal.kind == GoalSpec::Kind::PickAt &&
        (!w.is_tile(goal.target) || !connected_after_removal(w, goal.target))) {
        return result;
    }
    if (goal.kind == GoalSpec::Kind::PlaceAt && !w.is_free(goal.target)) return result;

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Node> arena;
    std::unordered_map<RobotPose, int> best_g;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
    long long seq = 0;

    arena.push_back({start, 0, -1, MoveKind::Wait});
    best_g[start] = 0;
    open.push({epsilon * heuristic(start, goal), heuristic(start, goal), seq++, 0});

    auto finish = [&](int node_index) {
        std::vector<MoveKind> moves;
        for (int i = node_index; arena[i].parent >= 0; i = arena[i].parent) {
            moves.push_back(arena[i].move);
        }
        std::reverse(moves.begin(), moves.end());
        RobotPose end = arena[node_index].pose;
        if (goal.kind == GoalSpec::Kind::PickAt) {
            moves.push_back(MoveKind::Pick);
            end.carrying = true;
        } else if (goal.kind == GoalSpec::Kind::PlaceAt) {
            moves.push_back(MoveKind::Place);
            end.carrying = false;
        }
        result.status = SearchStatus::Solved;
        result.moves = std::move(moves);
        result.cost = static_cast<int>(result.moves.size());
        result.end_pose = end;
    };

    while (!open.empty()) {
        const OpenEntry e = open.top();
        open.pop();
        const Node node = arena[e.node];
        auto it = best_g.find(node.pose);
        if (it != best_g.end() && node.g > it->second) continue;  // stale entry

        ++result.expansions;
        if (result.expansions > limits.max_expansions ||
            ((result.expansions & 1023) == 0 &&
             std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
                 limits.max_seconds)) {
            result.status = SearchStatus::Timeout;
            return result;
        }

        if (goal_complete(node.pose, goal, w)) {
            finish(e.node);
            return result;
        }

        for (MoveKind m : s.moves) {
            auto next = apply_move(node.pose, m, w);
            if (!next || *next == node.pose) continue;  // invalid or self-loop
            const int g2 = node.g + 1;
            auto found = best_g.find(*next);
            if (found != best_g.end() && found->second <= g2) continue;
            best_g[*next] = g2;
            const int h2 = heuristic(*next, goal);
            arena.push_back({*next, g2, e.node, m});
            open.push({g2 + epsilon * h2, h2, seq++, static_cast<int>(arena.size()) - 1});
        }
    }
    result.status = SearchStatus::Unreachable;
    return result;
}

}  // namespace tileplan
