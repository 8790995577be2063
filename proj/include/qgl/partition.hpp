#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qgl {

/// Boundary data of a resonance module: lambda0_{nu k + i + 1} = -nu r - c_i.
struct TailSpec {
    int k = 1;
    int r = 2;
    std::vector<int> c;  // c_1..c_{k-1}

    /// Throws InvalidInput unless 0 <= c_1 <= ... <= c_{k-1} <= r, k >= 1, r >= 1.
    void validate() const;
    friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

int tail_value(const TailSpec& t, int j);

/// Every c vector allowed for (k, r), in lexicographic order.
std::vector<TailSpec> all_tail_specs(int k, int r);

enum class PartitionKind { nonneg, zvalued, tailed };

class Partition {
public:
    /// Nonnegative parts; trailing zeros are trimmed.
    static Partition nonneg(std::vector<int> parts);
    /// Exactly N integer parts.
    static Partition zvalued(std::vector<int> parts);
    /// Prefix of a shape that agrees with the tail beyond it; the prefix is
    /// trimmed of trailing entries already equal to the tail.
    static Partition tailed(std::vector<int> prefix, const TailSpec& tail);

    PartitionKind kind() const { return kind_; }
    const std::vector<int>& parts() const { return parts_; }
    const TailSpec& tail() const { return tail_; }
    /// Stored entries: nonzero parts, N, or the stabilization index.
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based entry; 0 or the tail value beyond the stored entries.
    int at(int i) const;
    /// Sum of parts; for tailed shapes the excess over the tail.
    int weight() const;

    /// lambda + 1_i if it stays weakly decreasing (and nonnegative / of length N).
    std::optional<Partition> add_box(int i) const;
    std::optional<Partition> remove_box(int i) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.kind_ == b.kind_ && a.parts_ == b.parts_ && a.tail_ == b.tail_;
    }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const;
    nlohmann::json to_json() const;
    static Partition from_json(const nlohmann::json& j, PartitionKind kind);

private:
    PartitionKind kind_ = PartitionKind::nonneg;
    std::vector<int> parts_;
    TailSpec tail_;
};

/// lambda_i - lambda_{i+k} >= r for every i with both entries stored (finite
/// kinds) or for all i (tailed kind).
bool is_admissible(const Partition& lambda, int k, int r);
bool is_admissible(const std::vector<int>& parts, int k, int r);

/// Dominance order; throws InvalidInput on unequal weights.
bool dominance_leq(const std::vector<int>& mu, const std::vector<int>& lambda);
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Partitions of exactly `weight`, lexicographically decreasing.
std::vector<Partition> enumerate_nonneg(int weight);
/// All partitions with weight <= max_weight, graded then lexicographically decreasing.
std::vector<Partition> enumerate_nonneg_upto(int max_weight);
/// Length-N weakly decreasing sequences with entries in [lo, hi].
std::vector<Partition> enumerate_zvalued(int n, int lo, int hi);
/// Admissible shapes over the tail with excess weight <= max_weight.
std::vector<Partition> enumerate_tailed(const TailSpec& tail, int max_weight);

}  // namespace qgl
