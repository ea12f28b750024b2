#pragma once

// Partitions, tuples of partitions, weighted-set compositions and the
// symmetric-group arithmetic built on them (characters, Littlewood-Richardson
// coefficients, hook lengths).

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace wfin {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// valid and has size 0.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are stripped; throws std::invalid_argument if the parts
    /// are not weakly decreasing or contain a negative entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based), 0 beyond the length.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// m_j: the number of parts equal to j.
    int multiplicity(int j) const;
    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of m, in reverse lexicographic order ((m) first, (1^m) last).
const std::vector<Partition>& partitions_of(int m);

/// An n-tuple of partitions (lambda^1, ..., lambda^n).
struct PartitionTuple {
    std::vector<Partition> components;

    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> c) : components(std::move(c)) {}
    PartitionTuple(std::initializer_list<Partition> c) : components(c) {}
    static PartitionTuple empty(int n) { return PartitionTuple(std::vector<Partition>(static_cast<std::size_t>(n))); }

    int arity() const { return static_cast<int>(components.size()); }
    const Partition& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
    /// Sum of |lambda^i|.
    int total_size() const;
    /// (|lambda^1|, ..., |lambda^n|).
    std::vector<int> sizes() const;

    auto operator<=>(const PartitionTuple&) const = default;
    bool operator==(const PartitionTuple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const PartitionTuple& p);

/// Same data as a PartitionTuple, read as the cycle type of an element of
/// S_{a_1} x ... x S_{a_n}.
using CycleTypeTuple = PartitionTuple;

/// All n-tuples of partitions whose i-th component has size sizes[i].
std::vector<PartitionTuple> partition_tuples_of(const std::vector<int>& sizes);
/// All n-tuples of partitions with total size exactly m.
std::vector<PartitionTuple> partition_tuples_of_total(int n, int m);

/// An n-tuple of nonnegative integers; doubles as the canonical [n]-weighted
/// set with a_i elements of weight i.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument on a negative entry.
    explicit Composition(std::vector<int> entries);
    Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}
    static Composition zero(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    const std::vector<int>& entries() const { return entries_; }
    int arity() const { return static_cast<int>(entries_.size()); }
    /// Entry for weight i, 1-based as in the weighted-set convention.
    int at_weight(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    int operator[](std::size_t i) const { return entries_[i]; }
    /// |a| = sum of entries.
    int total() const;
    int max_entry() const;
    /// tau(a) = (a_n, ..., a_1).
    Composition reversed() const;

    friend Composition operator+(const Composition& a, const Composition& b);

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Composition& a);

/// All compositions of arity n with total at most max_total, ordered by total
/// then lexicographically.
std::vector<Composition> compositions_up_to(int n, int max_total);
/// All compositions of arity n with total exactly m.
std::vector<Composition> compositions_of(int n, int m);

/// Prefix-sum dominance: true iff a_1+...+a_i <= b_1+...+b_i for every i.
/// Throws std::invalid_argument on arity mismatch.
bool dominance_leq(const Composition& a, const Composition& b);

std::int64_t factorial(int m);
std::int64_t binomial(int m, int r);

/// |lambda|! / prod of hook lengths.
std::int64_t hook_dimension(const Partition& lambda);

/// z_mu = prod_j j^{m_j} m_j!, the centralizer order of a permutation of
/// cycle type mu.
std::int64_t centralizer_order(const Partition& mu);

/// prod_{i,j} m_j(mu^i)!.
std::int64_t lambda_factorial(const CycleTypeTuple& mu);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule (memoized, thread-safe).
/// Throws std::invalid_argument when |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// c^nu_{lambda mu}: the number of skew semistandard tableaux of shape
/// nu/lambda and content mu whose reverse reading word is a lattice word.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda * s_mu expanded in the Schur basis (memoized, thread-safe).
const std::map<Partition, std::int64_t>& lr_product(const Partition& lambda, const Partition& mu);

}  // namespace wfin
