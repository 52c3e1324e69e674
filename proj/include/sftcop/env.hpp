#pragma once

#include <cstdint>

#include "sftcop/core.hpp"
#include "sftcop/rng.hpp"

namespace sftcop {

/// Opaque encoded state. Environments define their own packing.
using State = std::uint64_t;

struct StepOutcome {
    State next = 0;
    FeatureVec phi;
    double reward = 0.0;
    double cost = 0.0;
    bool done = false;
    // Event annotations used by the metrics pipeline.
    bool trap_entered = false;  // trap feature fired this step
    bool goal_reached = false;
    int picked_class = -1;  // -1 when no object was picked this step
    bool picked_unsafe = false;
    double object_reward = 0.0;  // reward contribution of the picked object, if it fired
};

/// Task-bound environment with explicit state passing. Instances are
/// immutable; every episode owns its own Stream, so concurrent episodes on
/// one environment are safe.
class Environment {
public:
    virtual ~Environment() = default;
    virtual int num_actions() const = 0;
    virtual std::size_t feature_dim() const = 0;
    virtual int horizon() const = 0;
    virtual State start_state() const = 0;
    virtual StepOutcome step(State s, int action, Stream& rng) const = 0;
};

}  // namespace sftcop
