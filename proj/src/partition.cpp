#include "qgl/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qgl/errors.hpp"

namespace qgl {

void TailSpec::validate() const {
    if (k < 1 || r < 1) throw InvalidInput("tail: need k >= 1 and r >= 1");
    if (static_cast<int>(c.size()) != k - 1)
        throw InvalidInput("tail: c must have k-1 = " + std::to_string(k - 1) + " entries");
    int prev = 0;
    for (int ci : c) {
        if (ci < prev || ci > r) throw InvalidInput("tail: c must satisfy 0 <= c_1 <= ... <= c_{k-1} <= r");
        prev = ci;
    }
}

int tail_value(const TailSpec& t, int j) {
    if (j < 1) throw InvalidInput("tail_value: index must be >= 1");
    int nu = (j - 1) / t.k;
    int i = (j - 1) % t.k;
    int ci = i == 0 ? 0 : t.c[static_cast<std::size_t>(i - 1)];
    return -nu * t.r - ci;
}

std::vector<TailSpec> all_tail_specs(int k, int r) {
    std::vector<TailSpec> out;
    std::vector<int> c;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(c.size()) == k - 1) {
            out.push_back({k, r, c});
            return;
        }
        for (int v = lo; v <= r; ++v) {
            c.push_back(v);
            rec(v);
            c.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

void require_decreasing(const std::vector<int>& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) throw InvalidInput("partition entries must be weakly decreasing");
}

}  // namespace

Partition Partition::nonneg(std::vector<int> parts) {
    require_decreasing(parts);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!parts.empty() && parts.back() < 0) throw InvalidInput("nonnegative partition has a negative part");
    Partition p;
    p.kind_ = PartitionKind::nonneg;
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::zvalued(std::vector<int> parts) {
    require_decreasing(parts);
    Partition p;
    p.kind_ = PartitionKind::zvalued;
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::tailed(std::vector<int> prefix, const TailSpec& tail) {
    tail.validate();
    require_decreasing(prefix);
    if (!prefix.empty() && prefix.back() < tail_value(tail, static_cast<int>(prefix.size() + 1)))
        throw InvalidInput("tailed partition: prefix is not weakly decreasing into the tail");
    while (!prefix.empty() && prefix.back() == tail_value(tail, static_cast<int>(prefix.size()))) prefix.pop_back();
    Partition p;
    p.kind_ = PartitionKind::tailed;
    p.parts_ = std::move(prefix);
    p.tail_ = tail;
    return p;
}

int Partition::at(int i) const {
    if (i < 1) throw InvalidInput("partition index must be >= 1");
    if (i <= length()) return parts_[static_cast<std::size_t>(i - 1)];
    if (kind_ == PartitionKind::tailed) return tail_value(tail_, i);
    if (kind_ == PartitionKind::zvalued) throw InvalidInput("index beyond N for a length-N partition");
    return 0;
}

int Partition::weight() const {
    int w = 0;
    for (int i = 1; i <= length(); ++i) w += parts_[static_cast<std::size_t>(i - 1)];
    if (kind_ == PartitionKind::tailed)
        for (int i = 1; i <= length(); ++i) w -= tail_value(tail_, i);
    return w;
}

std::optional<Partition> Partition::add_box(int i) const {
    if (i < 1) return std::nullopt;
    if (kind_ == PartitionKind::zvalued && i > length()) return std::nullopt;
    if (i > 1 && at(i - 1) < at(i) + 1) return std::nullopt;
    std::vector<int> p = parts_;
    if (kind_ != PartitionKind::zvalued)
        while (static_cast<int>(p.size()) < i) p.push_back(at(static_cast<int>(p.size()) + 1));
    p[static_cast<std::size_t>(i - 1)] += 1;
    switch (kind_) {
        case PartitionKind::nonneg: return nonneg(std::move(p));
        case PartitionKind::zvalued: return zvalued(std::move(p));
        case PartitionKind::tailed: return tailed(std::move(p), tail_);
    }
    return std::nullopt;
}

std::optional<Partition> Partition::remove_box(int i) const {
    if (i < 1) return std::nullopt;
    if (kind_ == PartitionKind::zvalued && i > length()) return std::nullopt;
    if (kind_ == PartitionKind::nonneg && at(i) == 0) return std::nullopt;
    if ((kind_ != PartitionKind::zvalued || i < length()) && at(i + 1) > at(i) - 1) return std::nullopt;
    std::vector<int> p = parts_;
    if (kind_ != PartitionKind::zvalued)
        while (static_cast<int>(p.size()) < i + 1) p.push_back(at(static_cast<int>(p.size()) + 1));
    p[static_cast<std::size_t>(i - 1)] -= 1;
    switch (kind_) {
        case PartitionKind::nonneg: return nonneg(std::move(p));
        case PartitionKind::zvalued: return zvalued(std::move(p));
        case PartitionKind::tailed: return tailed(std::move(p), tail_);
    }
    return std::nullopt;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

nlohmann::json Partition::to_json() const {
    if (kind_ != PartitionKind::tailed) return nlohmann::json(parts_);
    return {{"prefix", parts_}, {"k", tail_.k}, {"r", tail_.r}, {"c", tail_.c}};
}

Partition Partition::from_json(const nlohmann::json& j, PartitionKind kind) {
    switch (kind) {
        case PartitionKind::nonneg: return nonneg(j.get<std::vector<int>>());
        case PartitionKind::zvalued: return zvalued(j.get<std::vector<int>>());
        case PartitionKind::tailed: {
            TailSpec t{j.at("k").get<int>(), j.at("r").get<int>(), j.at("c").get<std::vector<int>>()};
            return tailed(j.at("prefix").get<std::vector<int>>(), t);
        }
    }
    throw InvalidInput("unknown partition kind");
}

bool is_admissible(const std::vector<int>& parts, int k, int r) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) < parts.size(); ++i)
        if (parts[i] - parts[i + static_cast<std::size_t>(k)] < r) return false;
    return true;
}

bool is_admissible(const Partition& lambda, int k, int r) {
    if (lambda.kind() != PartitionKind::tailed) return is_admissible(lambda.parts(), k, r);
    // Past the prefix the differences are periodic with the tail's period.
    for (int i = 1; i <= lambda.length() + lambda.tail().k; ++i)
        if (lambda.at(i) - lambda.at(i + k) < r) return false;
    return true;
}

bool dominance_leq(const std::vector<int>& mu, const std::vector<int>& lambda) {
    std::size_t n = std::max(mu.size(), lambda.size());
    long sm = 0, sl = 0, tm = 0, tl = 0;
    for (int x : mu) tm += x;
    for (int x : lambda) tl += x;
    if (tm != tl) throw InvalidInput("dominance_leq: partitions of different weight");
    for (std::size_t i = 0; i < n; ++i) {
        sm += i < mu.size() ? mu[i] : 0;
        sl += i < lambda.size() ? lambda[i] : 0;
        if (sm > sl) return false;
    }
    return true;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    return dominance_leq(mu.parts(), lambda.parts());
}

std::vector<Partition> enumerate_nonneg(int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(Partition::nonneg(cur));
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (weight >= 0) rec(weight, weight);
    return out;
}

std::vector<Partition> enumerate_nonneg_upto(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto part = enumerate_nonneg(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

void sort_graded(std::vector<Partition>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        int n = std::max(a.length(), b.length());
        for (int i = 1; i <= n; ++i)
            if (a.at(i) != b.at(i)) return a.at(i) > b.at(i);
        return false;
    });
}

}  // namespace

std::vector<Partition> enumerate_zvalued(int n, int lo, int hi) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int maxv) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(Partition::zvalued(cur));
            return;
        }
        for (int v = maxv; v >= lo; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(hi);
    sort_graded(out);
    return out;
}

std::vector<Partition> enumerate_tailed(const TailSpec& tail, int max_weight) {
    tail.validate();
    // An excess at position j forces excess at j-k, j-2k, ..., so only the
    // first k*max_weight positions can differ from the tail.
    const int span = tail.k * std::max(max_weight, 0);
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        int j = static_cast<int>(cur.size()) + 1;
        if (j > span) {
            std::vector<int> full = cur;
            for (int i = j; i <= span + tail.k; ++i) full.push_back(tail_value(tail, i));
            if (is_admissible(full, tail.k, tail.r)) out.push_back(Partition::tailed(cur, tail));
            return;
        }
        int base = tail_value(tail, j);
        for (int x = 0; x <= left; ++x) {
            int v = base + x;
            if (!cur.empty() && v > cur.back()) break;
            cur.push_back(v);
            if (is_admissible(cur, tail.k, tail.r)) rec(left - x);
            cur.pop_back();
        }
    };
    rec(max_weight);
    sort_graded(out);
    return out;
}

}  // namespace qgl
