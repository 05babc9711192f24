#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sympv/rational.hpp"

namespace sympv {

/// The four statistics tracked over compositions and random words.
enum class Stat { sp, sv, hsp, dsv };

constexpr std::array<Stat, 4> kAllStats{Stat::sp, Stat::sv, Stat::hsp, Stat::dsv};

const char* stat_name(Stat s);
std::optional<Stat> stat_from_name(std::string_view name);

/// Per-sequence counts: sp/sv are the numbers of symmetric peaks/valleys,
/// hsp/dsv the sums of their heights/depths.
struct StatRecord {
    std::uint64_t sp = 0;
    std::uint64_t sv = 0;
    std::uint64_t hsp = 0;
    std::uint64_t dsv = 0;

    bool operator==(const StatRecord&) const = default;
    std::uint64_t get(Stat s) const;
};

/// Window scan shared by compositions and geometric words: position i holds a
/// symmetric peak when parts[i] < parts[i+1] and parts[i] == parts[i+2]
/// (height parts[i+1]-parts[i]); a valley is the mirror case. Overlapping
/// windows all count.
StatRecord stat_record(std::span<const int> parts);

/// Streaming enumeration of the compositions of n (with exactly k parts when
/// k is given), in lexicographic order of the part sequence. The parts() view
/// is mutated in place by next(); copy it if you need to keep it.
class CompositionEnumerator {
  public:
    explicit CompositionEnumerator(int n, std::optional<int> k = std::nullopt);

    /// Advances to the next composition; returns false when exhausted.
    /// Must be called once before reading the first composition.
    bool next();
    std::span<const int> parts() const { return parts_; }

  private:
    int n_;
    std::optional<int> k_;
    std::vector<int> parts_;
    bool started_ = false;
    bool done_ = false;
};

/// Calls fn(parts) for every composition, in lexicographic order.
template <typename Fn>
void for_each_composition(int n, std::optional<int> k, Fn&& fn) {
    CompositionEnumerator e(n, k);
    while (e.next()) fn(e.parts());
}

/// Number of compositions: 2^(n-1) for n >= 1, or binom(n-1, k-1) with k given.
BigInt composition_count(int n, std::optional<int> k = std::nullopt);

struct AggregateRow {
    int k = 0;
    BigInt count;
    BigInt sp, sv, hsp, dsv;

    const BigInt& get(Stat s) const;
};

struct AggregateTable {
    std::vector<AggregateRow> rows;  // k = 0..n
    AggregateRow totals;
};

/// Sums stat_record over C_{n,k} for every k, plus a totals row over C_n.
AggregateTable aggregate(int n);

enum class Family { peak, valley };

/// Key (k, count, magnitude): number of parts, sp (or sv), hsp (or dsv).
using JointKey = std::array<int, 3>;

/// Joint histogram of (parts, count, magnitude) over C_n for one family.
std::map<JointKey, BigInt> joint_distribution(int n, Family family);

}  // namespace sympv
