#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sftcop/core.hpp"
#include "sftcop/env.hpp"
#include "sftcop/rng.hpp"

namespace sftcop {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Inclusive rectangle of cells flagged as unsafe for metrics decomposition.
struct UnsafeRegion {
    int row0 = 0, col0 = 0, row1 = 0, col1 = 0;
    bool contains(Cell c) const {
        return c.row >= row0 && c.row <= row1 && c.col >= col0 && c.col <= col1;
    }
};

struct GridObject {
    Cell cell;
    int class_index = 0;
    bool unsafe = false;  // on a trap cell or inside an unsafe region
};

/// Parse/validation failure; what() carries the offending location.
class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Feature layout: [object class 0 .. C-1, goal, trap], so d = C + 2.
struct GridLayout {
    int width = 0;
    int height = 0;
    int object_classes = 0;
    std::vector<std::string> grid;  // raw rows, for dumps
    Cell start;
    Cell goal;
    std::vector<GridObject> objects;
    std::vector<Cell> traps;
    double trap_activation_prob = 1.0;
    double object_reward_prob = 1.0;
    std::vector<UnsafeRegion> unsafe_regions;
    int layout_version = 1;

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    bool is_wall(int row, int col) const { return wall_[row * width + col] != 0; }
    bool is_trap(Cell c) const { return trap_[c.row * width + c.col] != 0; }
    /// Object index at a cell, or -1.
    int object_at(Cell c) const { return object_index_[c.row * width + c.col]; }

    std::size_t feature_dim() const { return static_cast<std::size_t>(object_classes) + 2; }
    std::size_t goal_component() const { return static_cast<std::size_t>(object_classes); }
    std::size_t trap_component() const { return static_cast<std::size_t>(object_classes) + 1; }

    void rebuild_lookup();  // called by the parser

private:
    std::vector<std::uint8_t> wall_;
    std::vector<std::uint8_t> trap_;
    std::vector<int> object_index_;
};

/// Parses a layout document (JSON text). Grid rows use '#' wall, '.' empty,
/// 'S' start, 'G' goal, 'T' trap and digits 0..9 for object classes; any
/// other character is rejected with its location.
GridLayout load_layout(const std::string& json_text);
GridLayout load_layout_file(const std::string& path);

/// The bundled default Four-Room map (13x13, 18 objects of 3 classes,
/// trap-guarded corner pockets in the top-right and bottom-left rooms).
const std::string& default_four_room_json();

struct GridState {
    std::uint32_t pos = 0;       // row * width + col
    std::uint64_t picked = 0;    // bit i set iff objects[i] has been picked
};

State encode_state(const GridState& s, const GridLayout& layout);
GridState decode_state(State s, const GridLayout& layout);

inline constexpr int kGridActions = 4;  // up, down, left, right

/// Samples a task: one Uniform[-1,1] reward weight per object class (drawn in
/// class order), goal weight 2, trap reward weight 0; cost weights zero
/// except -0.1 on the trap component. tau and gamma come from the run config.
TaskSpec sample_task(Stream& rng, const GridLayout& layout, double tau, double gamma,
                     std::string task_id = {});

/// Indicator features of the cell s' enters (deterministic form; step()
/// applies the activation probabilities on top of this).
FeatureVec features(const GridState& s, int action, const GridState& next,
                    const GridLayout& layout);

GridState reset(const GridLayout& layout);

struct Transition {
    GridState s;
    int action = 0;
    GridState next;
    FeatureVec phi;
    double reward = 0.0;
    double cost = 0.0;
    bool done = false;
    bool trap_entered = false;
    bool goal_reached = false;
    int picked_class = -1;
    bool picked_unsafe = false;
    double object_reward = 0.0;
};

/// One environment step. Movement is deterministic; moves into walls or off
/// the grid leave the position unchanged. Entering an object cell always
/// marks it picked; its feature fires with probability object_reward_prob.
/// The trap feature fires with probability trap_activation_prob.
Transition step(const GridState& s, int action, const GridLayout& layout,
                const TaskSpec& task, Stream& rng);

/// Environment adapter binding a layout to one task.
class GridEnv final : public Environment {
public:
    GridEnv(const GridLayout& layout, TaskSpec task, int horizon);

    int num_actions() const override { return kGridActions; }
    std::size_t feature_dim() const override { return layout_->feature_dim(); }
    int horizon() const override { return horizon_; }
    State start_state() const override;
    StepOutcome step(State s, int action, Stream& rng) const override;

    const GridLayout& layout() const { return *layout_; }
    const TaskSpec& task() const { return task_; }

private:
    const GridLayout* layout_;
    TaskSpec task_;
    int horizon_;
};

/// Character-grid dump of a state (agent position marked '@'), for debugging.
std::string render(const GridLayout& layout, const GridState& s);

}  // namespace sftcop
