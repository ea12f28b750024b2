#pragma once

// Exact rank computations. Everything is done by fraction-free elimination
// over the integers; rational input is cleared of denominators row by row.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace wfin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using IntRow = std::vector<std::pair<int, Integer>>;
using RationalRow = std::vector<std::pair<int, Rational>>;

/// Incremental row echelon form. Rows are reduced against the stored pivots
/// as they arrive; a row that survives becomes a new pivot.
class EchelonBasis {
public:
    /// Returns true if the row was independent of everything inserted so far.
    bool insert(IntRow row);
    bool insert(const RationalRow& row);
    std::size_t rank() const { return pivots_.size(); }
    /// Leading columns of the stored pivot rows, ascending.
    std::vector<int> leading_columns() const;

private:
    // pivot rows keyed by leading column; each row is primitive with a
    // positive leading entry
    std::vector<std::pair<int, IntRow>> pivots_;
    const IntRow* find_pivot(int col) const;
};

std::size_t exact_rank(const std::vector<IntRow>& rows);
std::size_t exact_rank(const std::vector<RationalRow>& rows);

/// Clears denominators: multiplies the row by the lcm of its denominators.
IntRow to_integer_row(const RationalRow& row);

}  // namespace wfin
