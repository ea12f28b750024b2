#pragma once

// The categories FB(n), FI(n) and C_d of [n]-weighted finite sets. Objects are
// always the canonical sets a = ([a_1], ..., [a_n]); a morphism records, for
// every source element, the target element it is sent to.

#include "wfin/partition.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

namespace wfin {

/// An element of a canonical weighted set: weight in [1,n], index in [1,a_weight].
struct Element {
    int weight = 0;
    int index = 0;
    auto operator<=>(const Element&) const = default;
};

/// Elements of a in canonical order: all weight-1 elements by index, then
/// weight 2, and so on. Tensor factors are laid out in this order everywhere.
std::vector<Element> elements_of(const Composition& a);

/// Position of e in elements_of(a).
int element_position(const Composition& a, Element e);

class CategoryFlavor {
public:
    enum class Kind { FB, C };

    static CategoryFlavor fb() { return CategoryFlavor(Kind::FB, 0); }
    /// FI(n) is C_1: the surjectivity condition is vacuous.
    static CategoryFlavor fi() { return CategoryFlavor(Kind::C, 1); }
    static CategoryFlavor c(int d);

    Kind kind() const { return kind_; }
    /// The surjectivity parameter of C_d; 0 for FB(n).
    int d() const { return d_; }
    bool is_fi() const { return kind_ == Kind::C && d_ == 1; }

    bool operator==(const CategoryFlavor&) const = default;

private:
    CategoryFlavor(Kind k, int d) : kind_(k), d_(d) {}
    Kind kind_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const CategoryFlavor& f);

/// An injection of weighted sets that does not decrease weights.
class WeightedInjection {
public:
    /// images[p] is the image of elements_of(source)[p]. Throws
    /// std::invalid_argument unless the assignment is an injection into
    /// target that never decreases weight.
    WeightedInjection(Composition source, Composition target, std::vector<Element> images);

    static WeightedInjection identity(const Composition& a);

    const Composition& source() const { return source_; }
    const Composition& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }
    Element image(Element e) const;

    bool is_bijection() const { return source_.total() == target_.total(); }
    /// True iff every target element of weight < d is hit.
    bool covers_below(int d) const;
    /// True iff this is a morphism of the given category.
    bool valid_in(const CategoryFlavor& flavor) const;
    /// Preimage of a target element, if any.
    std::optional<Element> preimage(Element t) const;

    auto operator<=>(const WeightedInjection&) const = default;
    bool operator==(const WeightedInjection&) const = default;

private:
    Composition source_;
    Composition target_;
    std::vector<Element> images_;
};

std::ostream& operator<<(std::ostream& os, const WeightedInjection& f);

/// g o f. Throws std::invalid_argument unless target(f) == source(g).
WeightedInjection compose(const WeightedInjection& g, const WeightedInjection& f);

/// Disjoint union f + g : a + c -> b + d, with the elements of the first
/// summand listed before those of the second inside each weight.
WeightedInjection disjoint_union(const WeightedInjection& f, const WeightedInjection& g);

/// Existence of a morphism b -> a. FI(n) by tau-dominance, FB(n) by equal
/// size plus tau-dominance (Hall's condition for the weight-respecting
/// matching), C_d by search. Throws std::invalid_argument on arity mismatch.
bool hom_exists(const CategoryFlavor& flavor, const Composition& b, const Composition& a);

/// Every morphism b -> a, duplicate-free, in lexicographic order of the
/// image sequence.
std::vector<WeightedInjection> enumerate_homs(const CategoryFlavor& flavor, const Composition& b, const Composition& a);

/// |Hom(b, a)|, memoized.
std::int64_t count_homs(const CategoryFlavor& flavor, const Composition& b, const Composition& a);

/// Objects b (canonical representatives) admitting a C_d morphism b -> a,
/// sorted. Finite since such b satisfy |b| <= |a|.
std::vector<Composition> inward_objects(int d, const Composition& a);

}  // namespace wfin
