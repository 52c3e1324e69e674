#include "sftcop/gridworld.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sftcop {

namespace {

constexpr int kPosBits = 20;  // low bits of the encoded state hold the position
constexpr int kMaxObjects = 44;

const int kRowDelta[kGridActions] = {-1, +1, 0, 0};
const int kColDelta[kGridActions] = {0, 0, -1, +1};

[[noreturn]] void fail(const std::string& msg) { throw LayoutError("layout: " + msg); }

std::string cell_str(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

void GridLayout::rebuild_lookup() {
    wall_.assign(static_cast<std::size_t>(width) * height, 0);
    trap_.assign(static_cast<std::size_t>(width) * height, 0);
    object_index_.assign(static_cast<std::size_t>(width) * height, -1);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (grid[r][c] == '#') wall_[r * width + c] = 1;
        }
    }
    for (const Cell& t : traps) trap_[t.row * width + t.col] = 1;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const Cell& c = objects[i].cell;
        object_index_[c.row * width + c.col] = static_cast<int>(i);
    }
}

namespace {

void validate_layout(GridLayout& layout) {
    if (layout.width <= 0 || layout.height <= 0) fail("grid must be non-empty");
    if (static_cast<long>(layout.width) * layout.height > 65536) fail("grid too large");
    if (layout.object_classes < 0 || layout.object_classes > 10) {
        fail("object_classes must lie in [0, 10]");
    }
    if (!(layout.trap_activation_prob > 0.0 && layout.trap_activation_prob <= 1.0)) {
        fail("trap_activation_prob must lie in (0, 1]");
    }
    if (!(layout.object_reward_prob > 0.0 && layout.object_reward_prob <= 1.0)) {
        fail("object_reward_prob must lie in (0, 1]");
    }
    if (layout.objects.size() > kMaxObjects) {
        fail("at most " + std::to_string(kMaxObjects) + " objects are supported");
    }
    layout.rebuild_lookup();

    auto check_floor = [&](Cell c, const char* what) {
        if (!layout.in_bounds(c.row, c.col)) fail(std::string(what) + " out of bounds at " + cell_str(c.row, c.col));
        if (layout.is_wall(c.row, c.col)) fail(std::string(what) + " on a wall cell at " + cell_str(c.row, c.col));
    };
    check_floor(layout.start, "start");
    check_floor(layout.goal, "goal");
    for (const Cell& t : layout.traps) check_floor(t, "trap");

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(layout.width) * layout.height, 0);
    for (const GridObject& o : layout.objects) {
        check_floor(o.cell, "object");
        if (o.class_index < 0 || o.class_index >= layout.object_classes) {
            fail("object class " + std::to_string(o.class_index) + " out of range at " +
                 cell_str(o.cell.row, o.cell.col));
        }
        std::size_t idx = static_cast<std::size_t>(o.cell.row) * layout.width + o.cell.col;
        if (seen[idx]) fail("duplicate object cell at " + cell_str(o.cell.row, o.cell.col));
        seen[idx] = 1;
    }
    for (const UnsafeRegion& u : layout.unsafe_regions) {
        if (u.row0 > u.row1 || u.col0 > u.col1 || !layout.in_bounds(u.row0, u.col0) ||
            !layout.in_bounds(u.row1, u.col1)) {
            fail("unsafe region out of bounds");
        }
    }
    // Tag objects: unsafe when on a trap cell or inside a declared region.
    for (GridObject& o : layout.objects) {
        o.unsafe = layout.is_trap(o.cell);
        for (const UnsafeRegion& u : layout.unsafe_regions) {
            if (u.contains(o.cell)) o.unsafe = true;
        }
    }
    layout.rebuild_lookup();
}

}  // namespace

GridLayout load_layout(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document root must be an object");

    static const std::vector<std::string> known = {
        "layout_version", "grid",       "object_classes",
        "trap_activation_prob", "object_reward_prob", "unsafe_regions"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
            fail("unknown key '" + it.key() + "'");
        }
    }
    if (!doc.contains("grid") || !doc.contains("object_classes")) {
        fail("required keys: grid, object_classes");
    }

    GridLayout layout;
    layout.layout_version = doc.value("layout_version", 1);
    layout.object_classes = doc.at("object_classes").get<int>();
    layout.trap_activation_prob = doc.value("trap_activation_prob", 1.0);
    layout.object_reward_prob = doc.value("object_reward_prob", 1.0);
    layout.grid = doc.at("grid").get<std::vector<std::string>>();
    if (layout.grid.empty()) fail("grid must be non-empty");
    layout.height = static_cast<int>(layout.grid.size());
    layout.width = static_cast<int>(layout.grid[0].size());

    int starts = 0;
    int goals = 0;
    for (int r = 0; r < layout.height; ++r) {
        const std::string& row = layout.grid[r];
        if (static_cast<int>(row.size()) != layout.width) {
            fail("row " + std::to_string(r) + " has length " + std::to_string(row.size()) +
                 ", expected " + std::to_string(layout.width));
        }
        for (int c = 0; c < layout.width; ++c) {
            char ch = row[c];
            if (ch == '#' || ch == '.') continue;
            if (ch == 'S') {
                layout.start = {r, c};
                ++starts;
            } else if (ch == 'G') {
                layout.goal = {r, c};
                ++goals;
            } else if (ch == 'T') {
                layout.traps.push_back({r, c});
            } else if (ch >= '0' && ch <= '9') {
                layout.objects.push_back({{r, c}, ch - '0', false});
            } else {
                fail(std::string("unknown character '") + ch + "' at " + cell_str(r, c));
            }
        }
    }
    if (starts != 1) fail("grid must contain exactly one 'S'");
    if (goals != 1) fail("grid must contain exactly one 'G'");

    if (doc.contains("unsafe_regions")) {
        for (const auto& entry : doc.at("unsafe_regions")) {
            if (!entry.is_array() || entry.size() != 4) {
                fail("unsafe_regions entries must be [row0, col0, row1, col1]");
            }
            layout.unsafe_regions.push_back(
                {entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(), entry[3].get<int>()});
        }
    }

    validate_layout(layout);
    return layout;
}

GridLayout load_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open layout file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_layout(buf.str());
}

const std::string& default_four_room_json() {
    static const std::string text = R"json({
  "layout_version": 1,
  "grid": [
    "#############",
    "#S....#..T20#",
    "#.0...#..T.1#",
    "#...1.....TT#",
    "#.....#...1.#",
    "#.2...#.0...#",
    "##.####...2.#",
    "#.1...###.###",
    "#...2.#.....#",
    "#TT.0.#.0...#",
    "#10T.....1..#",
    "#.2T..#2...G#",
    "#############"
  ],
  "object_classes": 3,
  "trap_activation_prob": 1.0,
  "object_reward_prob": 1.0,
  "unsafe_regions": [[1, 10, 2, 11], [10, 1, 11, 2]]
})json";
    return text;
}

State encode_state(const GridState& s, const GridLayout& layout) {
    (void)layout;
    return static_cast<State>(s.pos) | (s.picked << kPosBits);
}

GridState decode_state(State s, const GridLayout& layout) {
    (void)layout;
    GridState out;
    out.pos = static_cast<std::uint32_t>(s & ((1ULL << kPosBits) - 1));
    out.picked = s >> kPosBits;
    return out;
}

TaskSpec sample_task(Stream& rng, const GridLayout& layout, double tau, double gamma,
                     std::string task_id) {
    const std::size_t d = layout.feature_dim();
    TaskSpec task;
    task.reward_weights.assign(d, 0.0);
    task.cost_weights.assign(d, 0.0);
    for (int k = 0; k < layout.object_classes; ++k) {
        task.reward_weights[k] = rng.uniform(-1.0, 1.0);
    }
    task.reward_weights[layout.goal_component()] = 2.0;
    task.reward_weights[layout.trap_component()] = 0.0;
    task.cost_weights[layout.trap_component()] = -0.1;
    task.threshold = tau;
    task.discount = gamma;
    task.task_id = std::move(task_id);
    task.validate(d);
    return task;
}

FeatureVec features(const GridState& s, int action, const GridState& next,
                    const GridLayout& layout) {
    (void)action;
    FeatureVec phi(layout.feature_dim(), 0.0);
    if (next.pos == s.pos) return phi;  // blocked move enters nothing
    Cell cell{static_cast<int>(next.pos) / layout.width, static_cast<int>(next.pos) % layout.width};
    int obj = layout.object_at(cell);
    if (obj >= 0 && ((s.picked >> obj) & 1ULL) == 0) {
        phi[layout.objects[obj].class_index] = 1.0;
    }
    if (cell == layout.goal) phi[layout.goal_component()] = 1.0;
    if (layout.is_trap(cell)) phi[layout.trap_component()] = 1.0;
    return phi;
}

GridState reset(const GridLayout& layout) {
    GridState s;
    s.pos = static_cast<std::uint32_t>(layout.start.row * layout.width + layout.start.col);
    s.picked = 0;
    return s;
}

Transition step(const GridState& s, int action, const GridLayout& layout, const TaskSpec& task,
                Stream& rng) {
    if (action < 0 || action >= kGridActions) {
        throw std::invalid_argument("step: invalid action index " + std::to_string(action));
    }
    Transition t;
    t.s = s;
    t.action = action;

    const int row = static_cast<int>(s.pos) / layout.width;
    const int col = static_cast<int>(s.pos) % layout.width;
    int nr = row + kRowDelta[action];
    int nc = col + kColDelta[action];
    if (!layout.in_bounds(nr, nc) || layout.is_wall(nr, nc)) {
        nr = row;
        nc = col;
    }

    t.next.pos = static_cast<std::uint32_t>(nr * layout.width + nc);
    t.next.picked = s.picked;
    t.phi.assign(layout.feature_dim(), 0.0);

    const bool moved = t.next.pos != s.pos;
    if (moved) {
        Cell cell{nr, nc};
        int obj = layout.object_at(cell);
        if (obj >= 0 && ((s.picked >> obj) & 1ULL) == 0) {
            t.next.picked |= 1ULL << obj;  // picked regardless of whether the reward fires
            bool fired = layout.object_reward_prob >= 1.0 ||
                         rng.bernoulli(layout.object_reward_prob);
            if (fired) {
                t.phi[layout.objects[obj].class_index] = 1.0;
                t.picked_class = layout.objects[obj].class_index;
                t.picked_unsafe = layout.objects[obj].unsafe;
            }
        }
        if (layout.is_trap(cell)) {
            bool fired = layout.trap_activation_prob >= 1.0 ||
                         rng.bernoulli(layout.trap_activation_prob);
            if (fired) {
                t.phi[layout.trap_component()] = 1.0;
                t.trap_entered = true;
            }
        }
        if (cell == layout.goal) {
            t.phi[layout.goal_component()] = 1.0;
            t.goal_reached = true;
            t.done = true;
        }
    }

    t.reward = dot(t.phi, task.reward_weights);
    t.cost = dot(t.phi, task.cost_weights);
    if (t.picked_class >= 0) t.object_reward = task.reward_weights[t.picked_class];
    return t;
}

GridEnv::GridEnv(const GridLayout& layout, TaskSpec task, int horizon)
    : layout_(&layout), task_(std::move(task)), horizon_(horizon) {
    task_.validate(layout.feature_dim());
    if (horizon_ <= 0) throw std::invalid_argument("GridEnv: horizon must be positive");
}

State GridEnv::start_state() const { return encode_state(reset(*layout_), *layout_); }

StepOutcome GridEnv::step(State s, int action, Stream& rng) const {
    Transition t = sftcop::step(decode_state(s, *layout_), action, *layout_, task_, rng);
    StepOutcome out;
    out.next = encode_state(t.next, *layout_);
    out.phi = std::move(t.phi);
    out.reward = t.reward;
    out.cost = t.cost;
    out.done = t.done;
    out.trap_entered = t.trap_entered;
    out.goal_reached = t.goal_reached;
    out.picked_class = t.picked_class;
    out.picked_unsafe = t.picked_unsafe;
    out.object_reward = t.object_reward;
    return out;
}

std::string render(const GridLayout& layout, const GridState& s) {
    std::string out;
    for (int r = 0; r < layout.height; ++r) {
        std::string row = layout.grid[r];
        for (int c = 0; c < layout.width; ++c) {
            int obj = layout.object_at({r, c});
            if (obj >= 0 && ((s.picked >> obj) & 1ULL)) row[c] = '.';
        }
        int ar = static_cast<int>(s.pos) / layout.width;
        int ac = static_cast<int>(s.pos) % layout.width;
        if (ar == r) row[ac] = '@';
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace sftcop
