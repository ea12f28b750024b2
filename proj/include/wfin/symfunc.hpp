#pragma once

#include "wfin/linalg.hpp"
#include "wfin/partition.hpp"

#include <map>
#include <ostream>

namespace wfin {

/// An element of Lambda^{(x)n} in the Schur basis with exact rational
/// coefficients, truncated by total degree: terms with sum |lambda^i| larger
/// than degree_bound are dropped. Zero coefficients are never stored.
class TensorSymElt {
public:
    using Terms = std::map<PartitionTuple, Rational>;

    TensorSymElt(int arity, int degree_bound);
    /// The Schur function s_lambda (zero if it exceeds the bound).
    static TensorSymElt schur(const PartitionTuple& lambda, int degree_bound, const Rational& coeff = 1);
    /// s_{(empty,...,empty)}, the unit.
    static TensorSymElt one(int arity, int degree_bound);

    int arity() const { return arity_; }
    int degree_bound() const { return bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const PartitionTuple& lambda) const;

    /// Adds c * s_lambda; silently ignores keys above the bound.
    void add_term(const PartitionTuple& lambda, const Rational& c);

    TensorSymElt& operator+=(const TensorSymElt& other);
    TensorSymElt& operator-=(const TensorSymElt& other);
    TensorSymElt& operator*=(const Rational& c);

    friend TensorSymElt operator+(TensorSymElt a, const TensorSymElt& b) { return a += b; }
    friend TensorSymElt operator-(TensorSymElt a, const TensorSymElt& b) { return a -= b; }
    friend TensorSymElt operator*(TensorSymElt a, const Rational& c) { return a *= c; }

    bool operator==(const TensorSymElt& other) const = default;

private:
    void check_compatible(const TensorSymElt& other) const;

    int arity_;
    int bound_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TensorSymElt& x);

/// Componentwise Littlewood-Richardson product, truncated at the common bound.
/// Throws std::invalid_argument on arity or bound mismatch.
TensorSymElt multiply(const TensorSymElt& x, const TensorSymElt& y);

/// sum over keys lambda with |lambda^i| = |mu^i| of coeff * prod_i chi^{lambda^i}(mu^i).
Rational trace_at(const TensorSymElt& x, const CycleTypeTuple& mu);

}  // namespace wfin
