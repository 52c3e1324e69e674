#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sftcop/core.hpp"
#include "sftcop/env.hpp"

namespace sftcop {

/// Key of one (state, action) cell.
inline std::uint64_t sa_key(State s, int action, int num_actions) {
    return s * static_cast<std::uint64_t>(num_actions) + static_cast<std::uint64_t>(action);
}

/// Tabular successor features: a lazily grown map from (state, action) keys
/// to d-dimensional rows stored in one contiguous arena. Rows default to
/// zero, which makes the table a total function over the state-action space.
class SfTable {
public:
    explicit SfTable(std::size_t dim) : dim_(dim), zero_(dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return index_.size(); }

    /// Mutable row; inserts a zero row when absent.
    std::span<double> row(std::uint64_t key) {
        auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(index_.size()));
        if (inserted) data_.resize(data_.size() + dim_, 0.0);
        return {data_.data() + static_cast<std::size_t>(it->second) * dim_, dim_};
    }

    /// Read-only row; unknown keys read as zero without inserting.
    std::span<const double> row_or_zero(std::uint64_t key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return {zero_.data(), dim_};
        return {data_.data() + static_cast<std::size_t>(it->second) * dim_, dim_};
    }

    bool contains(std::uint64_t key) const { return index_.count(key) != 0; }

    /// Keys in ascending order, for deterministic serialization.
    std::vector<std::uint64_t> sorted_keys() const {
        std::vector<std::uint64_t> keys;
        keys.reserve(index_.size());
        for (const auto& [k, _] : index_) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        return keys;
    }

private:
    std::size_t dim_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<double> data_;
    FeatureVec zero_;
};

/// One source policy: its successor-feature table, the reward/cost weights it
/// learned for its own task and the dual variable it trained with.
struct PolicyEntry {
    SfTable psi;
    FeatureVec w_r_hat;
    FeatureVec w_c_hat;
    double training_dual = 0.0;
    std::string source_task_id;

    explicit PolicyEntry(std::size_t dim)
        : psi(dim), w_r_hat(dim, 0.0), w_c_hat(dim, 0.0) {}

    /// Greedy action under the entry's own combined criterion
    /// psi^T w_r_hat + training_dual * psi^T w_c_hat; ties -> lowest index.
    int greedy_action(State s, int num_actions) const;
};

}  // namespace sftcop
