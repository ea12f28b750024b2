#include "wfin/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wfin {

PIdeal::PIdeal(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("PIdeal: n must be >= 1");
}

PIdeal PIdeal::unit(int n)
{
    PIdeal I(n);
    I.unit_ = true;
    return I;
}

PIdeal PIdeal::power(int n, int i, int a)
{
    return canonicalize(n, {{i, a}});
}

PIdeal PIdeal::canonicalize(int n, const std::vector<Term>& raw)
{
    PIdeal I(n);
    std::vector<Term> t;
    for (const auto& [i, a] : raw) {
        if (i < 0 || i > n)
            throw std::invalid_argument("PIdeal: index out of range");
        if (a < 1)
            throw std::invalid_argument("PIdeal: exponent must be >= 1");
        if (i < n)
            t.emplace_back(i, a);
    }
    // p_i^a lies in p_j^b exactly when j <= i and b <= a
    auto dominated = [&](const Term& x) {
        return std::any_of(t.begin(), t.end(), [&](const Term& y) {
            return y != x && y.first <= x.first && y.second <= x.second;
        });
    };
    for (const auto& x : t)
        if (!dominated(x))
            I.terms_.push_back(x);
    std::sort(I.terms_.begin(), I.terms_.end(), std::greater<>());
    I.terms_.erase(std::unique(I.terms_.begin(), I.terms_.end()), I.terms_.end());
    return I;
}

std::ostream& operator<<(std::ostream& os, const PIdeal& I)
{
    if (I.is_unit())
        return os << "A";
    os << '[';
    for (std::size_t p = 0; p < I.terms().size(); ++p)
        os << (p ? "," : "") << '(' << I.terms()[p].first << ',' << I.terms()[p].second << ')';
    return os << ']';
}

namespace {

void check_same_n(const PIdeal& I, const PIdeal& J)
{
    if (I.n() != J.n())
        throw std::invalid_argument("PIdeal: n mismatch");
}

}  // namespace

PIdeal sum(const PIdeal& I, const PIdeal& J)
{
    check_same_n(I, J);
    if (I.is_unit() || J.is_unit())
        return PIdeal::unit(I.n());
    auto raw = I.terms();
    raw.insert(raw.end(), J.terms().begin(), J.terms().end());
    return PIdeal::canonicalize(I.n(), raw);
}

bool contains(const PIdeal& I, const PIdeal& J)
{
    check_same_n(I, J);
    if (I.is_unit())
        return true;
    if (J.is_unit())
        return false;
    return std::all_of(J.terms().begin(), J.terms().end(), [&](const PIdeal::Term& x) {
        return std::any_of(I.terms().begin(), I.terms().end(), [&](const PIdeal::Term& y) {
            return y.first <= x.first && y.second <= x.second;
        });
    });
}

PIdeal radical(const PIdeal& I)
{
    if (I.is_unit() || I.is_zero())
        return I;
    return PIdeal::power(I.n(), I.terms().back().first, 1);
}

bool is_prime(const PIdeal& I)
{
    if (I.is_unit())
        return false;
    return I.is_zero() || (I.terms().size() == 1 && I.terms().front().second == 1);
}

std::vector<PIdeal> prime_chain(int n)
{
    std::vector<PIdeal> chain{PIdeal::zero(n)};
    for (int i = n - 1; i >= 0; --i)
        chain.push_back(PIdeal::power(n, i, 1));
    return chain;
}

std::vector<PIdeal> all_canonical_ideals(int n, int max_exp)
{
    std::vector<PIdeal> out;
    std::vector<PIdeal::Term> cur;
    // indices strictly decreasing from n-1, exponents strictly increasing
    std::function<void(int, int)> rec = [&](int below_index, int above_exp) {
        out.push_back(PIdeal::canonicalize(n, cur));
        for (int i = below_index - 1; i >= 0; --i) {
            for (int a = above_exp + 1; a <= max_exp; ++a) {
                cur.emplace_back(i, a);
                rec(i, a);
                cur.pop_back();
            }
        }
    };
    rec(n, 0);
    return out;
}

bool monomial_in(const PIdeal& I, const Monomial& m, int k)
{
    if (I.is_unit())
        return true;
    const int n = I.n();
    if (static_cast<int>(m.size()) != n * k)
        throw std::invalid_argument("monomial_in: monomial length != n*k");
    std::vector<int> rows_prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) {
        int row = 0;
        for (int c = 0; c < k; ++c)
            row += m[static_cast<std::size_t>((r - 1) * k + c)];
        rows_prefix[static_cast<std::size_t>(r)] = rows_prefix[static_cast<std::size_t>(r - 1)] + row;
    }
    return std::any_of(I.terms().begin(), I.terms().end(), [&](const PIdeal::Term& t) {
        return rows_prefix[static_cast<std::size_t>(n - t.first)] >= t.second;
    });
}

std::vector<Monomial> monomials_up_to(int n, int k, int D)
{
    if (n < 1 || k < 1 || D < 0)
        throw std::invalid_argument("monomials_up_to: bad parameters");
    const std::size_t vars = static_cast<std::size_t>(n * k);
    std::vector<Monomial> out;
    Monomial cur(vars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v == vars) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = e;
            rec(v + 1, left - e);
        }
        cur[v] = 0;
    };
    for (int d = 0; d <= D; ++d)
        rec(0, d);
    return out;
}

std::set<Monomial> monomial_realize(const PIdeal& I, int k, int D)
{
    if (k < 1 || D < 1)
        throw std::invalid_argument("monomial_realize: k and D must be >= 1");
    std::set<Monomial> out;
    for (auto& m : monomials_up_to(I.n(), k, D))
        if (monomial_in(I, m, k))
            out.insert(std::move(m));
    return out;
}

std::set<Monomial> product_realize(const PIdeal& I, const PIdeal& J, int k, int D)
{
    check_same_n(I, J);
    std::set<Monomial> out;
    for (const auto& m : monomials_up_to(I.n(), k, D)) {
        Monomial m1(m.size(), 0), m2 = m;
        bool found = false;
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            if (found)
                return;
            if (v == m.size()) {
                found = monomial_in(I, m1, k) && monomial_in(J, m2, k);
                return;
            }
            for (int e = 0; e <= m[v] && !found; ++e) {
                m1[v] = e;
                m2[v] = m[v] - e;
                rec(v + 1);
            }
            m1[v] = 0;
            m2[v] = m[v];
        };
        rec(0);
        if (found)
            out.insert(m);
    }
    return out;
}

}  // namespace wfin
