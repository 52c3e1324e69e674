#include "sftcop/core.hpp"

#include <cmath>
#include <stdexcept>

namespace sftcop {

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

void TaskSpec::validate(std::size_t dim) const {
    if (reward_weights.size() != dim || cost_weights.size() != dim) {
        throw std::invalid_argument("TaskSpec: weight vectors must have dimension " +
                                    std::to_string(dim));
    }
    for (double v : reward_weights) {
        if (!std::isfinite(v)) throw std::invalid_argument("TaskSpec: non-finite reward weight");
    }
    for (double v : cost_weights) {
        if (!std::isfinite(v)) throw std::invalid_argument("TaskSpec: non-finite cost weight");
    }
    if (!(discount >= 0.0 && discount < 1.0)) {
        throw std::invalid_argument("TaskSpec: discount must lie in [0, 1)");
    }
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("TaskSpec: non-finite threshold");
    }
}

double evaluate_q(std::span<const double> sf_row, std::span<const double> w) {
    return dot(sf_row, w);
}

double combined_q(double q_r, double q_c, const CombinedQParams& params) {
    if (params.lambda < 0.0) {
        throw std::invalid_argument("combined_q: lambda must be nonnegative");
    }
    return q_r + params.lambda * (q_c - params.threshold);
}

double lagrangian_reward(double r, double c, double lambda, double tau, double gamma) {
    if (lambda < 0.0) {
        throw std::invalid_argument("lagrangian_reward: lambda must be nonnegative");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("lagrangian_reward: gamma must lie in [0, 1)");
    }
    return r + lambda * (c - (1.0 - gamma) * tau);
}

}  // namespace sftcop
