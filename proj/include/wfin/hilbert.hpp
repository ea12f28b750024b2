#pragma once

// Enhanced Hilbert series as truncated exponential generating functions in
// the variables t_{ij} (i in [n], j >= 1), and K-classes as (n+1)-vectors
// over Lambda^{(x)n}.
//
// Row i of t belongs to tensor factor i of Lambda^{(x)n}, i.e. to the
// symmetric group acting on the weight-i elements, which corresponds to the
// graded piece V_(n-i+1). A cycle-type tuple mu gives the monomial t^mu with
// exponent m_j(mu^i) on t_{ij}.

#include "wfin/symfunc.hpp"

#include <map>
#include <ostream>
#include <vector>

namespace wfin {

class EGFSeries {
public:
    /// Dense exponents: position (i-1)*N + (j-1) holds the exponent of t_{ij}.
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    EGFSeries(int n, int N);

    int arity() const { return n_; }
    int truncation() const { return N_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Exponents zero_exponents() const;
    int& at(Exponents& e, int i, int j) const { return e[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
    int at(const Exponents& e, int i, int j) const { return e[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
    /// sum_{i,j} j * e_{ij}.
    int size_of(const Exponents& e) const;
    Exponents exponents_of(const CycleTypeTuple& mu) const;

    Rational coefficient(const Exponents& e) const;
    /// Ignores exponents of size > N and zero coefficients.
    void add_term(const Exponents& e, const Rational& c);

    EGFSeries& operator+=(const EGFSeries& other);
    bool operator==(const EGFSeries&) const = default;

private:
    void check_compatible(const EGFSeries& other) const;

    int n_;
    int N_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const EGFSeries& f);

/// 1/mu! with mu! = prod_{i,j} m_j(mu^i)!.
Rational inverse_lambda_factorial(const CycleTypeTuple& mu);

/// exp(T_d) with T_d = sum_j (t_{1j} + ... + t_{dj}), truncated at size N.
EGFSeries exp_T(int n, int d, int N);

/// sum_mu trace_at(x, mu) t^mu / mu! over cycle-type tuples of size <= N.
EGFSeries hseries_of_symelt(const TensorSymElt& x, int N);

/// Truncated product of power series.
EGFSeries series_multiply(const EGFSeries& f, const EGFSeries& g);

/// Coordinates in the basis [A_0], ..., [A_n]; coordinate d carries the class
/// of the coefficient representation V in [A_d (x) V].
class KClass {
public:
    KClass(int n, int degree_bound);
    /// The basis vector [A_d].
    static KClass basis(int n, int d, int degree_bound);

    int arity() const { return n_; }
    int degree_bound() const { return bound_; }
    const TensorSymElt& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    TensorSymElt& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }

    KClass& operator+=(const KClass& other);
    bool operator==(const KClass&) const = default;

private:
    int n_;
    int bound_;
    std::vector<TensorSymElt> coeffs_;
};

/// Componentwise multiplication by v. Throws on arity or truncation mismatch.
KClass kclass_scale(const KClass& k, const TensorSymElt& v);

/// hseries(c_0) + sum_d hseries(c_d) * exp(T_d), truncated at N.
EGFSeries hseries_of_class(const KClass& k, int N);

/// The L-representation A_d = Sym of the rows n-d+1..n, in the Schur basis:
/// sum of s_{((m_1),...,(m_d),empty,...)} up to total degree degree_bound.
TensorSymElt ad_lclass(int n, int d, int degree_bound);

/// Exact full-rank test of the series of s_lambda [A_d] for d = 0..n and
/// |lambda| <= g. Throws std::invalid_argument when N < 2g + n.
bool independence_certificate(int n, int g, int N);

}  // namespace wfin
