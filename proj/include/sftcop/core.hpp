#pragma once

#include <span>
#include <string>
#include <vector>

namespace sftcop {

/// Shared reward/cost feature vector phi(s,a,s'). The dimension d is fixed
/// when an environment is constructed and never changes within a run.
using FeatureVec = std::vector<double>;

/// Inner product with strict dimension checking. Mismatched sizes are a
/// programming error and throw std::invalid_argument.
double dot(std::span<const double> a, std::span<const double> b);

/// One task of the family: reward/cost weight vectors over the shared
/// features, the constraint threshold and the discount.
struct TaskSpec {
    FeatureVec reward_weights;
    FeatureVec cost_weights;
    double threshold = 0.0;
    double discount = 0.0;  // in [0, 1)
    std::string task_id;

    /// Throws std::invalid_argument unless both weight vectors have length
    /// `dim`, all entries are finite and discount is in [0, 1).
    void validate(std::size_t dim) const;
};

struct CombinedQParams {
    double lambda = 0.0;  // >= 0
    double threshold = 0.0;
};

/// Q value of one successor-feature row under weights w: psi(s,a)^T w.
double evaluate_q(std::span<const double> sf_row, std::span<const double> w);

/// Scalarized action value: q_r + lambda * (q_c - threshold).
double combined_q(double q_r, double q_c, const CombinedQParams& params);

/// Per-step scalarized reward r + lambda * (c - (1 - gamma) * tau). Its
/// discounted sum equals combined_q of the discounted r- and c-returns.
double lagrangian_reward(double r, double c, double lambda, double tau, double gamma);

}  // namespace sftcop
