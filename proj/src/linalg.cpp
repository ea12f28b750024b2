#include "wfin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfin {

namespace {

void make_primitive(IntRow& row)
{
    if (row.empty())
        return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& [c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- p * row - q * pivot, where p is the pivot's leading entry and q the
// row's entry in that column; the leading column cancels.
IntRow eliminate(const IntRow& row, const IntRow& pivot)
{
    const Integer& p = pivot.front().second;
    const Integer& q = row.front().second;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, p * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -q * pivot[j].second);
            ++j;
        } else {
            Integer v = p * row[i].second - q * pivot[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

const IntRow* EchelonBasis::find_pivot(int col) const
{
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                               [](const auto& entry, int c) { return entry.first < c; });
    if (it != pivots_.end() && it->first == col)
        return &it->second;
    return nullptr;
}

bool EchelonBasis::insert(IntRow row)
{
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i].first == row[i - 1].first)
            throw std::invalid_argument("EchelonBasis: duplicate column in row");
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    make_primitive(row);
    while (!row.empty()) {
        const IntRow* pivot = find_pivot(row.front().first);
        if (!pivot)
            break;
        row = eliminate(row, *pivot);
        make_primitive(row);
    }
    if (row.empty())
        return false;
    const int lead = row.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [](const auto& entry, int c) { return entry.first < c; });
    pivots_.emplace(it, lead, std::move(row));
    return true;
}

bool EchelonBasis::insert(const RationalRow& row)
{
    return insert(to_integer_row(row));
}

std::vector<int> EchelonBasis::leading_columns() const
{
    std::vector<int> cols;
    cols.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_)
        cols.push_back(c);
    return cols;
}

IntRow to_integer_row(const RationalRow& row)
{
    Integer l = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Integer scaled = l / v.get_den() * v.get_num();
        if (scaled != 0)
            out.emplace_back(c, std::move(scaled));
    }
    return out;
}

std::size_t exact_rank(const std::vector<IntRow>& rows)
{
    EchelonBasis basis;
    for (const auto& r : rows)
        basis.insert(r);
    return basis.rank();
}

std::size_t exact_rank(const std::vector<RationalRow>& rows)
{
    EchelonBasis basis;
    for (const auto& r : rows)
        basis.insert(r);
    return basis.rank();
}

}  // namespace wfin
