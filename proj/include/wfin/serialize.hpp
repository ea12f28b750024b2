#pragma once

// JSON encodings shared by the CLI and the tests. Rational numbers are
// written as decimal strings under "numerator"/"denominator" so that no
// precision is lost.

#include "wfin/fin_modules.hpp"
#include "wfin/finite_model.hpp"
#include "wfin/hilbert.hpp"
#include "wfin/ideal.hpp"
#include "wfin/weighted_cat.hpp"

#include <json.hpp>

#include <string>

namespace wfin {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const PartitionTuple& p);
json to_json(const Composition& a);
/// [[source weight, source index, target weight, target index], ...]
json to_json(const WeightedInjection& f);
json to_json(const Rational& q);
json to_json(const TensorSymElt& x);
/// Zero ideal: []. Unit ideal: "unit".
json to_json(const PIdeal& I);
/// [{"exponents": [[i, j, e], ...], "numerator": .., "denominator": ..}, ...]
json to_json(const EGFSeries& f);
json to_json(const KClass& k);
/// {"rows", "cols", "entries": [[row, col, value], ...]} with exact values.
json to_json(const LinearMap& f);
json to_json(const ModuleSpec& m);

Partition partition_from_json(const json& j);
PartitionTuple partition_tuple_from_json(const json& j);
Composition composition_from_json(const json& j);
WeightedInjection injection_from_json(const Composition& source, const Composition& target, const json& j);
Rational rational_from_json(const json& j);
TensorSymElt symelt_from_json(int n, int degree_bound, const json& j);
PIdeal ideal_from_json(int n, const json& j);
ModuleSpec module_spec_from_json(const json& j);

/// "2,0", "(2,0)", "[2,0]"; "∅", "empty" or "" give the zero tuple of arity n
/// (n <= 0 means: infer from the text). Throws std::invalid_argument.
Composition parse_composition(const std::string& text, int n);
/// "2,1" or "(2,1)"; "∅" or "" is the empty partition.
Partition parse_partition(const std::string& text);
/// Components separated by '|' or '/': "2,1|1|∅".
PartitionTuple parse_partition_tuple(const std::string& text);
/// "[(1,3),(0,1)]", "[]" for zero, "unit" for A.
PIdeal parse_ideal(int n, const std::string& text);

}  // namespace wfin
