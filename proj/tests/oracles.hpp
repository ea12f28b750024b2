#pragma once

// Slow, direct reimplementations used only as references in the tests.
// None of them calls the routine it is checking.

#include "wfin/hilbert.hpp"
#include "wfin/weighted_cat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using wfin::Composition;
using wfin::Element;
using wfin::Partition;
using wfin::PartitionTuple;
using wfin::Rational;

/// Tabloids of shape lambda fixed by a permutation of cycle type mu.
std::int64_t tabloid_fixed_points(const Partition& lambda, const Partition& mu);
/// Semistandard tableaux of shape nu and content lambda, by filling cells.
std::int64_t kostka(const Partition& nu, const Partition& lambda);
/// chi^lambda(mu), peeled off the permutation characters with Kostka numbers.
std::int64_t character(const Partition& lambda, const Partition& mu);
/// Skew tableaux of shape nu/lambda, content mu, with lattice reading word.
std::int64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu);

enum class Cat { FB, FI, C };

/// Every map from the elements of b to those of a, kept if it is injective,
/// never lowers weight and meets the extra condition of the category
/// (FB: bijective, C: hits every target of weight < d).
std::vector<std::vector<Element>> morphisms(Cat cat, int d, const Composition& b, const Composition& a);
/// |Hom_FI(b, a)| = prod_i (free targets of weight >= i) falling b_i.
std::int64_t fi_count(const Composition& b, const Composition& a);

/// Truncated series as a sparse map keyed like wfin::EGFSeries.
struct Series {
    int n = 1;
    int N = 0;
    std::map<std::vector<int>, Rational> terms;
    int size_of(const std::vector<int>& e) const;
    void add(const std::vector<int>& e, const Rational& c);
    Series times(const Series& other) const;
};

/// exp(t_{1j} + ... + t_{dj} summed over j), multiplied out one variable at a time.
Series exp_product(int n, int d, int N);
/// sum_mu prod_i chi^{lambda^i}(mu^i) t^mu / mu!, with the reference characters.
Series schur_series(const PartitionTuple& lambda, int N);
bool same(const Series& s, const wfin::EGFSeries& f);

}  // namespace oracle
