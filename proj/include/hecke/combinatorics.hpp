#pragma once

#include "hecke/scalars.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// A weakly decreasing sequence of positive parts. Zero parts passed to the
/// constructor are dropped; `part(i)` pads with zeros past the length.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// True when every part of `this` is <= the corresponding part of `other`.
    bool contained_in(const Partition& other) const;

    auto operator<=>(const Partition& other) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct DoublePartition {
    Partition first;
    Partition second;

    int size() const noexcept { return first.size() + second.size(); }
    bool contained_in(const DoublePartition& other) const {
        return first.contained_in(other.first) && second.contained_in(other.second);
    }
    auto operator<=>(const DoublePartition& other) const = default;
};

enum class Component : int { first = 0, second = 1 };

/// A box of a double diagram; row and column count from 1.
struct Box {
    Component component = Component::first;
    int row = 1;
    int col = 1;

    int content() const noexcept { return col - row; }
    auto operator<=>(const Box& other) const = default;
};

struct BoxStat {
    Component component;
    int content;
    int row;

    bool operator==(const BoxStat& other) const = default;
};

/// A standard filling of a double diagram, stored as entry -> box.
/// Single-partition tableaux use an empty second component.
class DoubleTableau {
public:
    DoubleTableau(DoublePartition shape, std::vector<Box> placement);

    const DoublePartition& shape() const noexcept { return shape_; }
    const std::vector<Box>& placement() const noexcept { return placement_; }
    std::size_t size() const noexcept { return placement_.size(); }

    /// Box holding `entry` (1-based).
    const Box& box(std::size_t entry) const;

    /// Lexicographic on the placement vectors; this is the canonical basis order.
    auto operator<=>(const DoubleTableau& other) const { return placement_ <=> other.placement_; }
    bool operator==(const DoubleTableau& other) const { return placement_ == other.placement_; }

private:
    DoublePartition shape_;
    std::vector<Box> placement_;
};

/// Partitions of n in reverse lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions(int n);

/// All (alpha, beta) with |alpha| + |beta| = n, ordered by |alpha| descending,
/// then alpha, then beta in partition order.
std::vector<DoublePartition> double_partitions(int n);

/// Standard tableaux of the shape, sorted in canonical order.
std::vector<DoubleTableau> standard_tableaux(const DoublePartition& shape);
std::vector<DoubleTableau> standard_tableaux(const Partition& shape);

/// Shapes obtained by adding one box; first-component corners first, top to bottom.
std::vector<DoublePartition> one_box_successors(const DoublePartition& shape);

/// Shapes obtained by removing one box, in the same order convention.
std::vector<DoublePartition> one_box_predecessors(const DoublePartition& shape);

/// mu = [m + alpha_1, ..., m + alpha_r1, beta_1, beta_2, ...]: the double diagram
/// glued to the right of and below an r1 x m rectangle.
Partition embed_double(const DoublePartition& shape, int m, int r1);

/// Inverse of embed_double on partitions containing [m^r1].
DoublePartition split_embedded(const Partition& mu, int m, int r1);

/// Row and column of a double-diagram box inside embed_double(shape, m, r1).
Box embed_box(const Box& box, int m, int r1);

int n_stat(const Partition& alpha);

BoxStat box_stat(const DoubleTableau& t, std::size_t entry);

/// Swaps entries i and i+1; empty when the result is not standard.
std::optional<DoubleTableau> apply_transposition(const DoubleTableau& t, std::size_t i);

/// Ratio x(t, i) of the Jucys-Murphy eigenvalues of entries i+1 and i.
/// Same component: q^(c(i+1) - c(i)); i in first, i+1 in second:
/// -q^(c(i+1) - c(i)) / Q; i in second, i+1 in first: -Q q^(c(i+1) - c(i)).
Scalar axial_parameter(const DoubleTableau& t, std::size_t i, const ParameterPoint& point);

/// Number of standard tableaux of a single shape (hook length formula).
long long count_standard(const Partition& shape);

/// Text encodings: "[2,1]" and "[2,1]|[1]"; the empty partition is "[]".
std::string format_partition(const Partition& p);
std::string format_double(const DoublePartition& d);
Partition parse_partition(std::string_view text);
DoublePartition parse_double(std::string_view text);

}  // namespace hecke
