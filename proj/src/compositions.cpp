#include "sympv/compositions.hpp"

#include <numeric>
#include <stdexcept>

namespace sympv {

const char* stat_name(Stat s) {
    switch (s) {
        case Stat::sp: return "sp";
        case Stat::sv: return "sv";
        case Stat::hsp: return "hsp";
        case Stat::dsv: return "dsv";
    }
    return "?";
}

std::optional<Stat> stat_from_name(std::string_view name) {
    for (Stat s : kAllStats)
        if (name == stat_name(s)) return s;
    return std::nullopt;
}

std::uint64_t StatRecord::get(Stat s) const {
    switch (s) {
        case Stat::sp: return sp;
        case Stat::sv: return sv;
        case Stat::hsp: return hsp;
        case Stat::dsv: return dsv;
    }
    return 0;
}

StatRecord stat_record(std::span<const int> parts) {
    StatRecord r;
    for (std::size_t i = 0; i + 2 < parts.size(); ++i) {
        const int a = parts[i], m = parts[i + 1], b = parts[i + 2];
        if (a == b) {
            if (a < m) {
                ++r.sp;
                r.hsp += static_cast<std::uint64_t>(m - a);
            } else if (a > m) {
                ++r.sv;
                r.dsv += static_cast<std::uint64_t>(a - m);
            }
        }
    }
    return r;
}

CompositionEnumerator::CompositionEnumerator(int n, std::optional<int> k) : n_(n), k_(k) {
    if (n < 0 || (k && *k < 0)) throw std::invalid_argument("negative n or k");
}

bool CompositionEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (n_ == 0) {
            // the empty composition, unless a positive part count was requested
            done_ = true;
            if (!k_ || *k_ == 0) {
                parts_.clear();
                return true;
            }
            return false;
        }
        if (k_) {
            if (*k_ < 1 || *k_ > n_) {
                done_ = true;
                return false;
            }
            parts_.assign(static_cast<std::size_t>(*k_), 1);
            parts_.back() = n_ - (*k_ - 1);
        } else {
            parts_.assign(static_cast<std::size_t>(n_), 1);
        }
        return true;
    }

    if (!k_) {
        // Successor over all compositions: increment the rightmost part that
        // has a nonempty tail, replace the tail by all ones.
        if (parts_.size() <= 1) {
            done_ = true;
            return false;
        }
        const std::size_t j = parts_.size() - 2;
        const int tail = parts_.back();
        parts_.resize(j + 1);
        parts_[j] += 1;
        parts_.insert(parts_.end(), static_cast<std::size_t>(tail - 1), 1);
        return true;
    }

    // Fixed part count: find the rightmost position whose strict tail can give
    // up one unit while keeping every part >= 1.
    const std::size_t k = parts_.size();
    if (k == 0) {
        done_ = true;
        return false;
    }
    int tail_sum = 0;
    for (std::size_t idx = k; idx-- > 1;) {
        tail_sum += parts_[idx];
        const int tail_len = static_cast<int>(k - idx);
        if (tail_sum > tail_len) {
            parts_[idx - 1] += 1;
            for (std::size_t t = idx; t + 1 < k; ++t) parts_[t] = 1;
            parts_[k - 1] = tail_sum - 1 - static_cast<int>(k - 1 - idx);
            return true;
        }
    }
    done_ = true;
    return false;
}

BigInt composition_count(int n, std::optional<int> k) {
    if (n < 0) return 0;
    if (!k) {
        if (n == 0) return 1;
        return int_pow(BigInt(2), static_cast<unsigned>(n - 1));
    }
    if (n == 0) return *k == 0 ? 1 : 0;
    if (*k < 1 || *k > n) return 0;
    // binom(n-1, k-1)
    BigInt r = 1;
    for (int i = 0; i < *k - 1; ++i) {
        r *= n - 1 - i;
        r /= i + 1;
    }
    return r;
}

const BigInt& AggregateRow::get(Stat s) const {
    switch (s) {
        case Stat::sp: return sp;
        case Stat::sv: return sv;
        case Stat::hsp: return hsp;
        case Stat::dsv: return dsv;
    }
    return sp;
}

AggregateTable aggregate(int n) {
    AggregateTable table;
    table.rows.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) table.rows[static_cast<std::size_t>(k)].k = k;

    for_each_composition(n, std::nullopt, [&](std::span<const int> parts) {
        const StatRecord r = stat_record(parts);
        AggregateRow& row = table.rows[parts.size()];
        row.count += 1;
        row.sp += r.sp;
        row.sv += r.sv;
        row.hsp += r.hsp;
        row.dsv += r.dsv;
    });

    table.totals.k = -1;
    for (const AggregateRow& row : table.rows) {
        table.totals.count += row.count;
        table.totals.sp += row.sp;
        table.totals.sv += row.sv;
        table.totals.hsp += row.hsp;
        table.totals.dsv += row.dsv;
    }
    return table;
}

std::map<JointKey, BigInt> joint_distribution(int n, Family family) {
    std::map<JointKey, BigInt> hist;
    for_each_composition(n, std::nullopt, [&](std::span<const int> parts) {
        const StatRecord r = stat_record(parts);
        JointKey key;
        if (family == Family::peak)
            key = {static_cast<int>(parts.size()), static_cast<int>(r.sp), static_cast<int>(r.hsp)};
        else
            key = {static_cast<int>(parts.size()), static_cast<int>(r.sv), static_cast<int>(r.dsv)};
        hist[key] += 1;
    });
    return hist;
}

}  // namespace sympv
