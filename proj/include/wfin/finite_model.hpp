#pragma once

// A finite truncation of the flagged space V with basis e_{rc}, r in [n],
// c in [k], and V_m spanned by the rows 1..m. Cells are numbered
// (r-1)*k + (c-1); the same numbering indexes the variables x_{rc} of A.
//
// A module here is a tensor product of factors, each factor spanned by the
// e_{rc} with r in some row range, tensored with the monomials of degree
// <= D in the variables whose row lies in another range:
//   W_a       weight-i factor uses rows 1..n-i+1, no variables
//   Q_a^{<=D} as W_a, variables in all rows
//   T_{d,a}   weight-i factor uses rows n-i+1..n (a quotient of V)
// Factors are laid out in the order of elements_of(a).

#include "wfin/ideal.hpp"
#include "wfin/linalg.hpp"
#include "wfin/weighted_cat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wfin {

struct FlagModel {
    int n = 1;
    int k = 1;

    FlagModel(int n_, int k_);
    int cells() const { return n * k; }
    int cell(int r, int c) const { return (r - 1) * k + (c - 1); }
    int row_of(int cell) const { return cell / k + 1; }
    int col_of(int cell) const { return cell % k + 1; }
    bool operator==(const FlagModel&) const = default;
};

/// Multiplicities of e_{rc} / x_{rc}, indexed by cell.
using WeightMatrix = std::vector<int>;

/// The weight of eps_a: row r has ones in columns 1..a_{n-r+1}.
/// Throws if k < max entry of a.
WeightMatrix lambda_weight(const FlagModel& model, const Composition& a);

struct RowRange {
    int lo = 1;
    int hi = 0;
    bool contains(int r) const { return lo <= r && r <= hi; }
    bool empty() const { return lo > hi; }
    bool operator==(const RowRange&) const = default;
};

struct BasisElement {
    Monomial mono;           // exponent per cell
    std::vector<int> cells;  // one cell per tensor factor
    auto operator<=>(const BasisElement&) const = default;
};

/// Factor ranges, variable range and degree bound, without the basis.
struct ModuleShape {
    FlagModel model;
    std::vector<RowRange> factors;
    RowRange vars;  // empty: no polynomial part
    int degree_bound = 0;
    std::string label;

    static ModuleShape W(const FlagModel& model, const Composition& a);
    static ModuleShape Q(const FlagModel& model, const Composition& a, int D);
    static ModuleShape T(const FlagModel& model, int d, const Composition& a);

    WeightMatrix weight(const BasisElement& e) const;
    /// Number of basis elements of weight w, counted without building the basis.
    std::int64_t weight_space_dim(const WeightMatrix& w) const;
    /// The basis elements of weight w, sorted.
    std::vector<BasisElement> weight_space_basis(const WeightMatrix& w) const;
};

/// A module together with its explicit basis, sorted lexicographically by
/// (monomial exponents, cells); basis vectors are addressed by position.
class TruncatedModule {
public:
    explicit TruncatedModule(ModuleShape shape);

    const ModuleShape& shape() const { return shape_; }
    const FlagModel& model() const { return shape_.model; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
    /// Position of e, or -1.
    int index_of(const BasisElement& e) const;

private:
    ModuleShape shape_;
    std::vector<BasisElement> basis_;
};

std::int64_t weight_space_dim(const TruncatedModule& m, const WeightMatrix& w);

/// Sparse vector: (basis position, coefficient), positions strictly increasing.
using SparseVec = std::vector<std::pair<int, Integer>>;

class LinearMap {
public:
    LinearMap(std::shared_ptr<const TruncatedModule> source, std::shared_ptr<const TruncatedModule> target);

    const TruncatedModule& source() const { return *source_; }
    const TruncatedModule& target() const { return *target_; }
    std::shared_ptr<const TruncatedModule> source_ptr() const { return source_; }
    std::shared_ptr<const TruncatedModule> target_ptr() const { return target_; }
    const SparseVec& column(std::size_t j) const { return columns_[j]; }
    void set_column(std::size_t j, SparseVec v);

    SparseVec apply(const SparseVec& v) const;
    bool operator==(const LinearMap& other) const;

private:
    std::shared_ptr<const TruncatedModule> source_;
    std::shared_ptr<const TruncatedModule> target_;
    std::vector<SparseVec> columns_;
};

/// g o f. Throws unless f's target and g's source are the same module.
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap identity_map(std::shared_ptr<const TruncatedModule> m);

/// Sum of (entry * coefficient) vectors, merged and with zeros dropped.
SparseVec combine(std::vector<std::pair<SparseVec, Integer>> parts);

/// The elementary matrix sending e_src to e_dst, acting by derivations.
struct Elementary {
    int dst = 0;
    int src = 0;
    auto operator<=>(const Elementary&) const = default;
};

/// p: every E with row(dst) <= row(src). h_d: the members of p whose dst is
/// not (n-d+1, 1), i.e. those annihilated by xi_d.
struct LieAlgebra {
    enum class Kind { Parabolic, Stabilizer } kind = Kind::Parabolic;
    int d = 0;
    static LieAlgebra parabolic() { return {Kind::Parabolic, 0}; }
    static LieAlgebra stabilizer(int d) { return {Kind::Stabilizer, d}; }
};

std::vector<Elementary> lie_generators(const FlagModel& model, const LieAlgebra& algebra);

/// E applied to a basis vector. Terms whose destination leaves a factor's
/// row range or the variable range are zero (quotient factors, A/p_d).
SparseVec lie_act(const TruncatedModule& m, const Elementary& e, std::size_t j);

/// True iff f(E v) = E f(v) for every generator E and basis vector v.
bool lie_equivariance_check(const LinearMap& f, const LieAlgebra& algebra = LieAlgebra::parabolic());

/// |Hom_A(Q_a, Q_b)| in weight lambda(a) terms: the dimension of the
/// lambda(a)-weight space of Q_b^{<=D}. Returns 0 when |a| < |b|; throws
/// std::invalid_argument when k < max entry + 1 or D < |a| - |b|.
std::int64_t hom_dim_Q(const Composition& a, const Composition& b, int k, int D);

/// The generator 1 (x) eps_a of Q_a.
BasisElement eps_generator(const FlagModel& model, const Composition& a);

/// Image of a basis element of Q_a under f_sigma (sigma: b -> a): cells of
/// matched elements pass to the factor of their preimage, cells of unmatched
/// elements become variables.
BasisElement f_sigma_image(const FlagModel& model, const WeightedInjection& sigma, const BasisElement& e);

/// The identification Q_a (x) Q_c = Q_{a+c}: monomials multiply, and inside
/// each weight the factors of a come before those of c.
BasisElement tensor_merge(const Composition& a, const BasisElement& u, const Composition& c, const BasisElement& v);

/// f_sigma : Q_a^{<=D} -> Q_b^{<=D+|a|-|b|} for sigma : b -> a in FI(n).
LinearMap build_f_sigma(const WeightedInjection& sigma, int k, int D);

/// T_d(psi) : T_{d,a} -> T_{d,b} for psi : b -> a in C_d.
LinearMap build_Td_morphism(int d, const WeightedInjection& psi, int k);

/// xi_d(e_{rc}) = 1 iff (r, c) = (n-d+1, 1).
int xi_d(const FlagModel& model, int d, int cell);

enum class KernelMode {
    Generators,  // moves of one element down by one weight, deletions of one weight-d element
    AllNonIsomorphisms,
};

/// dim of the joint kernel of T_d(psi) over the chosen family of
/// non-isomorphisms psi : b -> a, by exact rank.
std::int64_t kernel_intersection_dim(int d, const Composition& a, int k, KernelMode mode = KernelMode::Generators);

/// The morphisms used by KernelMode::Generators.
std::vector<WeightedInjection> kernel_generators(int d, const Composition& a);

// Presentations F_1 -> F_0 of A_d-modules, F_i free of finite rank.

using Polynomial = std::map<Monomial, Integer>;

struct Presentation {
    FlagModel model;
    int d = 1;
    int rank0 = 0;
    /// One column per generator of F_1: (row of F_0, polynomial entry).
    std::vector<std::map<int, Polynomial>> columns;
};

struct PhiResult {
    std::size_t dim = 0;
    /// Standard basis vectors of F_0 that span the cokernel after evaluation.
    std::vector<int> basis;
};

/// The polynomial evaluated at xi_d inside A_d: monomials using a row <= n-d
/// vanish, x_{n-d+1,1} -> 1, every other variable -> 0.
Integer evaluate_at_xi(const FlagModel& model, int d, const Polynomial& p);

PhiResult phi_d_of_presentation(const Presentation& p);

/// A_d (x) V with no relations.
Presentation free_presentation(const FlagModel& model, int d, int dim_v);
/// A_d (x) V presented as the cokernel of v -> (p v, v) into two copies.
Presentation doubled_presentation(const FlagModel& model, int d, int dim_v, const Polynomial& p);
/// (A_d / p_{d-1}^m) (x) W_c.
Presentation torsion_presentation(const FlagModel& model, int d, const Composition& c, int m);
/// coker f_sigma over A_d, from the images of the generators 1 (x) W_a.
Presentation fsigma_presentation(const FlagModel& model, int d, const WeightedInjection& sigma);

}  // namespace wfin
