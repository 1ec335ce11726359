#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace asfc {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so `Partition{2,1,0}` and `Partition{2,1}` are
/// the same value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    // 0-based; parts past the end read as zero
    int part(int k) const noexcept { return k >= 0 && k < length() ? parts_[k] : 0; }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;
    /// True when the diagram of `inner` fits inside this one.
    bool contains(const Partition& inner) const noexcept;

    /// "(3,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Cell of N x N: i is the row (vertical axis), j the column.
struct Box {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
    friend bool operator==(const Box&, const Box&) = default;
};

/// All partitions of n, largest first in lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions whose diagram lies inside `outer`, reverse-lexicographic.
std::vector<Partition> subpartitions(const Partition& outer);

bool dominates(const Partition& a, const Partition& b);

/// Sorts a composition (zeros allowed) into a partition.
Partition sort_composition(std::vector<int> composition);

/// Weak compositions of n with exactly `parts` parts, lexicographic.
std::vector<std::vector<int>> weak_compositions(int n, int parts);

/// Parses "3,1" / "" / "3, 1" into a partition; throws std::invalid_argument.
Partition parse_partition(const std::string& text);

/// Parses a comma separated list of nonnegative integers.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace asfc
