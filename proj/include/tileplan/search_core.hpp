#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tileplan/robot_model.hpp"

namespace tileplan {

// What a single-robot search is asked to achieve. FrontAt targets move
// the front foot onto a cell (the back foot may end anywhere valid);
// PickAt/PlaceAt end the plan with the respective action on the target.
struct GoalSpec {
    enum class Kind : uint8_t { FrontAt, PickAt, PlaceAt };

    Kind kind = Kind::FrontAt;
    Cell target;

    static GoalSpec front_at(Cell c) { return {Kind::FrontAt, c}; }
    static GoalSpec pick_at(Cell c) { return {Kind::PickAt, c}; }
    static GoalSpec place_at(Cell c) { return {Kind::PlaceAt, c}; }

    auto operator<=>(const GoalSpec&) const = default;
};

// Admissible and consistent: no motion displaces the front foot by a
// Manhattan distance above 2, and action goals end with the front foot
// adjacent to the target plus one action move.
int heuristic(const RobotPose& pose, const GoalSpec& goal);

// True when the goal can be completed from this pose: FrontAt is already
// satisfied; PickAt/PlaceAt mean the terminal action is legal right now.
bool goal_complete(const RobotPose& pose, const GoalSpec& goal, const Workspace& w);

// For FrontAt goals only: satisfied without any further action.
bool goal_satisfied(const RobotPose& pose, const GoalSpec& goal);

struct SearchLimits {
    long long max_expansions = 10'000'000;
    double max_seconds = 3600.0;  // one hour per solve
};

enum class SearchStatus : uint8_t { Solved, Unreachable, Timeout };

struct PlanResult {
    SearchStatus status = SearchStatus::Unreachable;
    std::vector<MoveKind> moves;
    int cost = 0;  // same as moves.size(); every move costs one step
    long long expansions = 0;
    RobotPose end_pose;

    bool solved() const { return status == SearchStatus::Solved; }
};

// Weighted A* over the single-robot configuration graph on a fixed
// structure. With epsilon = 1 the plan is optimal; otherwise the cost is
// within epsilon of optimal. For PickAt/PlaceAt goals the returned plan
// ends with the Pick/Place move and end_pose reflects the action.
PlanResult astar(const RobotPose& start, const GoalSpec& goal, const Workspace& w, const Moveset& s,
                 double epsilon, const SearchLimits& limits = {});

}  // namespace tileplan
