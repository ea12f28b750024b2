#include "wfin/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wfin {

EGFSeries::EGFSeries(int n, int N) : n_(n), N_(N)
{
    if (n < 1)
        throw std::invalid_argument("EGFSeries: n must be >= 1");
    if (N < 0)
        throw std::invalid_argument("EGFSeries: negative truncation");
}

EGFSeries::Exponents EGFSeries::zero_exponents() const
{
    return Exponents(static_cast<std::size_t>(n_ * N_), 0);
}

int EGFSeries::size_of(const Exponents& e) const
{
    int s = 0;
    for (std::size_t p = 0; p < e.size(); ++p)
        s += static_cast<int>(p % static_cast<std::size_t>(N_) + 1) * e[p];
    return s;
}

EGFSeries::Exponents EGFSeries::exponents_of(const CycleTypeTuple& mu) const
{
    if (mu.arity() != n_)
        throw std::invalid_argument("EGFSeries: cycle type arity mismatch");
    if (mu.total_size() > N_)
        throw std::invalid_argument("EGFSeries: cycle type above truncation");
    auto e = zero_exponents();
    for (int i = 1; i <= n_; ++i)
        for (int part : mu[i - 1].parts())
            ++at(e, i, part);
    return e;
}

Rational EGFSeries::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void EGFSeries::add_term(const Exponents& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != n_ * N_)
        throw std::invalid_argument("EGFSeries: exponent length mismatch");
    if (c == 0 || size_of(e) > N_)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void EGFSeries::check_compatible(const EGFSeries& other) const
{
    if (n_ != other.n_ || N_ != other.N_)
        throw std::invalid_argument("EGFSeries: arity or truncation mismatch");
}

EGFSeries& EGFSeries::operator+=(const EGFSeries& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const EGFSeries& f)
{
    if (f.is_zero())
        return os << '0';
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        os << (first ? "" : " + ") << c;
        for (int i = 1; i <= f.arity(); ++i)
            for (int j = 1; j <= f.truncation(); ++j)
                if (int x = f.at(e, i, j))
                    os << "*t" << i << j << (x > 1 ? "^" + std::to_string(x) : "");
        first = false;
    }
    return os;
}

Rational inverse_lambda_factorial(const CycleTypeTuple& mu)
{
    return Rational(1, lambda_factorial(mu));
}

EGFSeries exp_T(int n, int d, int N)
{
    if (d < 1 || d > n)
        throw std::invalid_argument("exp_T: d must lie in [1,n]");
    EGFSeries f(n, N);
    // exp(sum t_ij) = prod_ij sum_e t_ij^e / e!; walk the exponents directly
    auto e = f.zero_exponents();
    std::vector<std::pair<int, int>> vars;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= N; ++j)
            vars.emplace_back(i, j);
    std::function<void(std::size_t, int, const Integer&)> rec = [&](std::size_t v, int left, const Integer& denom) {
        if (v == vars.size()) {
            f.add_term(e, Rational(Integer(1), denom));
            return;
        }
        const auto [i, j] = vars[v];
        Integer fact = 1;
        for (int x = 0; x * j <= left; ++x) {
            if (x > 0)
                fact *= x;
            f.at(e, i, j) = x;
            rec(v + 1, left - x * j, denom * fact);
        }
        f.at(e, i, j) = 0;
    };
    rec(0, N, Integer(1));
    return f;
}

EGFSeries hseries_of_symelt(const TensorSymElt& x, int N)
{
    EGFSeries f(x.arity(), N);
    std::map<std::vector<int>, bool> done;
    for (const auto& [lambda, c] : x.terms()) {
        if (lambda.total_size() > N)
            continue;
        const auto sizes = lambda.sizes();
        if (done[sizes])
            continue;
        done[sizes] = true;
        for (const auto& mu : partition_tuples_of(sizes))
            f.add_term(f.exponents_of(mu), trace_at(x, mu) * inverse_lambda_factorial(mu));
    }
    return f;
}

EGFSeries series_multiply(const EGFSeries& f, const EGFSeries& g)
{
    if (f.arity() != g.arity() || f.truncation() != g.truncation())
        throw std::invalid_argument("series_multiply: arity or truncation mismatch");
    EGFSeries out(f.arity(), f.truncation());
    for (const auto& [e1, c1] : f.terms()) {
        const int s1 = f.size_of(e1);
        for (const auto& [e2, c2] : g.terms()) {
            if (s1 + g.size_of(e2) > out.truncation())
                continue;
            auto e = e1;
            for (std::size_t p = 0; p < e.size(); ++p)
                e[p] += e2[p];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

KClass::KClass(int n, int degree_bound) : n_(n), bound_(degree_bound)
{
    for (int d = 0; d <= n; ++d)
        coeffs_.emplace_back(n, degree_bound);
}

KClass KClass::basis(int n, int d, int degree_bound)
{
    if (d < 0 || d > n)
        throw std::invalid_argument("KClass::basis: d must lie in [0,n]");
    KClass k(n, degree_bound);
    k[d] = TensorSymElt::one(n, degree_bound);
    return k;
}

KClass& KClass::operator+=(const KClass& other)
{
    if (n_ != other.n_ || bound_ != other.bound_)
        throw std::invalid_argument("KClass: arity or truncation mismatch");
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        coeffs_[d] += other.coeffs_[d];
    return *this;
}

KClass kclass_scale(const KClass& k, const TensorSymElt& v)
{
    if (k.arity() != v.arity() || k.degree_bound() != v.degree_bound())
        throw std::invalid_argument("kclass_scale: arity or truncation mismatch");
    KClass out(k.arity(), k.degree_bound());
    for (int d = 0; d <= k.arity(); ++d)
        out[d] = multiply(k[d], v);
    return out;
}

EGFSeries hseries_of_class(const KClass& k, int N)
{
    EGFSeries f = hseries_of_symelt(k[0], N);
    for (int d = 1; d <= k.arity(); ++d) {
        if (k[d].is_zero())
            continue;
        f += series_multiply(hseries_of_symelt(k[d], N), exp_T(k.arity(), d, N));
    }
    return f;
}

TensorSymElt ad_lclass(int n, int d, int degree_bound)
{
    if (d < 0 || d > n)
        throw std::invalid_argument("ad_lclass: d must lie in [0,n]");
    TensorSymElt x(n, degree_bound);
    std::vector<Partition> comps(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            x.add_term(PartitionTuple(comps), 1);
            return;
        }
        for (int m = 0; m <= left; ++m) {
            comps[static_cast<std::size_t>(i)] = m ? Partition{m} : Partition{};
            rec(i + 1, left - m);
        }
        comps[static_cast<std::size_t>(i)] = Partition{};
    };
    rec(0, degree_bound);
    return x;
}

bool independence_certificate(int n, int g, int N)
{
    if (g < 0)
        throw std::invalid_argument("independence_certificate: negative degree bound");
    if (N < 2 * g + n)
        throw std::invalid_argument("independence_certificate: N < 2g + n");
    std::map<EGFSeries::Exponents, int> column;
    EchelonBasis basis;
    std::size_t count = 0;
    for (int d = 0; d <= n; ++d) {
        for (int m = 0; m <= g; ++m) {
            for (const auto& lambda : partition_tuples_of_total(n, m)) {
                KClass k(n, N);
                k[d] = TensorSymElt::schur(lambda, N);
                const auto f = hseries_of_class(k, N);
                RationalRow row;
                for (const auto& [e, c] : f.terms()) {
                    auto [it, inserted] = column.try_emplace(e, static_cast<int>(column.size()));
                    row.emplace_back(it->second, c);
                }
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                basis.insert(row);
                ++count;
            }
        }
    }
    return basis.rank() == count;
}

}  // namespace wfin
