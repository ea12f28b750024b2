#pragma once

// Dimension functions of FI(n)-modules built from principal projectives P_a
// (P_a(S) = C[Hom(a, S)]) and simples M_lambda (supported at the single
// object (|lambda^1|, ..., |lambda^n|)).

#include "wfin/partition.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace wfin {

struct PrincipalProjectiveSpec {
    Composition base;
    bool operator==(const PrincipalProjectiveSpec&) const = default;
};

struct SimpleModuleSpec {
    PartitionTuple label;
    bool operator==(const SimpleModuleSpec&) const = default;
};

/// A finite formal sum of principal projectives and simples with
/// nonnegative multiplicities.
struct ModuleSpec {
    struct Term {
        std::int64_t multiplicity = 1;
        std::variant<PrincipalProjectiveSpec, SimpleModuleSpec> module;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;

    static ModuleSpec principal(Composition a);
    static ModuleSpec simple(PartitionTuple lambda);
    /// P_emptyset, the monoidal unit.
    static ModuleSpec unit(int n);

    ModuleSpec& operator+=(const ModuleSpec& other);
    bool operator==(const ModuleSpec&) const = default;
};

/// |Hom_FI(n)(a, s)|.
std::int64_t principal_dim(const Composition& a, const Composition& s);

/// prod_i hook_dimension(lambda^i) if b_i = |lambda^i| for all i, else 0.
std::int64_t simple_dim(const PartitionTuple& lambda, const Composition& b);

/// Multiplicity of M_lambda in C[Hom(a, s)], a = (|lambda^i|), as the
/// character inner product over S_a. The fixed-point counts are taken from
/// the enumerated morphisms, not from freeness of the action.
std::int64_t isotypic_projective_dim(const PartitionTuple& lambda, const Composition& s);

/// Dimension of M (x) N at c under Day convolution along disjoint union.
std::int64_t day_tensor_dim(const ModuleSpec& m, const ModuleSpec& nspec, const Composition& c);

/// Pointwise dimension of a spec.
std::int64_t spec_dim(const ModuleSpec& m, const Composition& c);

}  // namespace wfin
