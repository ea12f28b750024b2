#include "wfin/symfunc.hpp"

#include <stdexcept>

namespace wfin {

TensorSymElt::TensorSymElt(int arity, int degree_bound) : arity_(arity), bound_(degree_bound)
{
    if (arity < 1)
        throw std::invalid_argument("TensorSymElt: arity must be >= 1");
    if (degree_bound < 0)
        throw std::invalid_argument("TensorSymElt: negative degree bound");
}

TensorSymElt TensorSymElt::schur(const PartitionTuple& lambda, int degree_bound, const Rational& coeff)
{
    TensorSymElt x(lambda.arity(), degree_bound);
    x.add_term(lambda, coeff);
    return x;
}

TensorSymElt TensorSymElt::one(int arity, int degree_bound)
{
    return schur(PartitionTuple::empty(arity), degree_bound);
}

Rational TensorSymElt::coefficient(const PartitionTuple& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSymElt::add_term(const PartitionTuple& lambda, const Rational& c)
{
    if (lambda.arity() != arity_)
        throw std::invalid_argument("TensorSymElt: key arity mismatch");
    if (lambda.total_size() > bound_ || c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void TensorSymElt::check_compatible(const TensorSymElt& other) const
{
    if (arity_ != other.arity_)
        throw std::invalid_argument("TensorSymElt: arity mismatch");
    if (bound_ != other.bound_)
        throw std::invalid_argument("TensorSymElt: truncation mismatch");
}

TensorSymElt& TensorSymElt::operator+=(const TensorSymElt& other)
{
    check_compatible(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

TensorSymElt& TensorSymElt::operator-=(const TensorSymElt& other)
{
    check_compatible(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, -c);
    return *this;
}

TensorSymElt& TensorSymElt::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const TensorSymElt& x)
{
    if (x.is_zero())
        return os << '0';
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        os << (first ? "" : " + ") << c << "*s" << k;
        first = false;
    }
    return os;
}

namespace {

void expand_components(const PartitionTuple& x, const PartitionTuple& y, std::size_t i, PartitionTuple& cur, std::int64_t mult, const Rational& coeff, TensorSymElt& out)
{
    if (i == x.components.size()) {
        out.add_term(cur, coeff * mult);
        return;
    }
    for (const auto& [nu, c] : lr_product(x.components[i], y.components[i])) {
        cur.components[i] = nu;
        expand_components(x, y, i + 1, cur, mult * c, coeff, out);
    }
}

}  // namespace

TensorSymElt multiply(const TensorSymElt& x, const TensorSymElt& y)
{
    if (x.arity() != y.arity())
        throw std::invalid_argument("multiply: arity mismatch");
    if (x.degree_bound() != y.degree_bound())
        throw std::invalid_argument("multiply: truncation mismatch");
    TensorSymElt out(x.arity(), x.degree_bound());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const int degree = kx.total_size() + ky.total_size();
            if (degree > out.degree_bound())
                continue;
            PartitionTuple cur = PartitionTuple::empty(x.arity());
            expand_components(kx, ky, 0, cur, 1, cx * cy, out);
        }
    }
    return out;
}

Rational trace_at(const TensorSymElt& x, const CycleTypeTuple& mu)
{
    if (mu.arity() != x.arity())
        throw std::invalid_argument("trace_at: arity mismatch");
    Rational total = 0;
    for (const auto& [lambda, c] : x.terms()) {
        std::int64_t chi = 1;
        for (int i = 0; i < x.arity() && chi != 0; ++i) {
            if (lambda[i].size() != mu[i].size()) {
                chi = 0;
                break;
            }
            chi *= mn_character(lambda[i], mu[i]);
        }
        if (chi != 0)
            total += c * chi;
    }
    return total;
}

}  // namespace wfin
