#pragma once

// Ideals of A = C[x_ij : i in [n], j >= 1] stable under the parabolic group.
// p_i is generated by the variables in rows 1..n-i; every such proper ideal
// is a sum of powers p_i^a, so it is stored as the list of its (i, a) terms.

#include <ostream>
#include <set>
#include <utility>
#include <vector>

namespace wfin {

/// Exponent vector over the variables x_{rc}, r in [n], c in [k], at
/// position (r-1)*k + (c-1).
using Monomial = std::vector<int>;

class PIdeal {
public:
    using Term = std::pair<int, int>;  // (index i, exponent a) meaning p_i^a

    /// The zero ideal (= p_n).
    explicit PIdeal(int n);
    static PIdeal zero(int n) { return PIdeal(n); }
    static PIdeal unit(int n);
    /// p_i^a.
    static PIdeal power(int n, int i, int a);
    /// Drops terms with index n and every term dominated by another one.
    /// Throws std::invalid_argument on an index outside [0, n] or exponent < 1.
    static PIdeal canonicalize(int n, const std::vector<Term>& raw);

    int n() const { return n_; }
    bool is_unit() const { return unit_; }
    bool is_zero() const { return !unit_ && terms_.empty(); }
    /// Indices strictly decreasing, exponents strictly increasing.
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const PIdeal&) const = default;

private:
    int n_;
    bool unit_ = false;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const PIdeal& I);

PIdeal sum(const PIdeal& I, const PIdeal& J);
/// I contains J.
bool contains(const PIdeal& I, const PIdeal& J);
PIdeal radical(const PIdeal& I);
bool is_prime(const PIdeal& I);
/// [p_n = 0, p_{n-1}, ..., p_0].
std::vector<PIdeal> prime_chain(int n);

/// Every canonical proper ideal with indices < n and exponents <= max_exp.
std::vector<PIdeal> all_canonical_ideals(int n, int max_exp);

/// Membership of a monomial, counting its factors in each row.
bool monomial_in(const PIdeal& I, const Monomial& m, int k);

/// All monomials of degree <= D in the n*k truncated variables, by degree
/// then lexicographically.
std::vector<Monomial> monomials_up_to(int n, int k, int D);

/// The monomials of degree <= D lying in I.
std::set<Monomial> monomial_realize(const PIdeal& I, int k, int D);

/// The monomials of degree <= D in the product ideal I*J: those m with a
/// divisor m1 in I and m/m1 in J.
std::set<Monomial> product_realize(const PIdeal& I, const PIdeal& J, int k, int D);

}  // namespace wfin
