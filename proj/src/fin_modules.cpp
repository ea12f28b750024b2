#include "wfin/fin_modules.hpp"

#include "wfin/linalg.hpp"
#include "wfin/weighted_cat.hpp"

#include <stdexcept>

namespace wfin {

ModuleSpec ModuleSpec::principal(Composition a)
{
    ModuleSpec m;
    m.terms.push_back({1, PrincipalProjectiveSpec{std::move(a)}});
    return m;
}

ModuleSpec ModuleSpec::simple(PartitionTuple lambda)
{
    ModuleSpec m;
    m.terms.push_back({1, SimpleModuleSpec{std::move(lambda)}});
    return m;
}

ModuleSpec ModuleSpec::unit(int n)
{
    return principal(Composition::zero(n));
}

ModuleSpec& ModuleSpec::operator+=(const ModuleSpec& other)
{
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
}

std::int64_t principal_dim(const Composition& a, const Composition& s)
{
    return count_homs(CategoryFlavor::fi(), a, s);
}

std::int64_t simple_dim(const PartitionTuple& lambda, const Composition& b)
{
    if (lambda.arity() != b.arity())
        throw std::invalid_argument("simple_dim: arity mismatch");
    std::int64_t d = 1;
    for (int i = 0; i < b.arity(); ++i) {
        if (lambda[i].size() != b[static_cast<std::size_t>(i)])
            return 0;
        d *= hook_dimension(lambda[i]);
    }
    return d;
}

namespace {

Composition sizes_of(const PartitionTuple& lambda)
{
    return Composition(lambda.sizes());
}

// A permutation of elements_of(a) (by position) of the given cycle type.
std::vector<int> representative(const Composition& a, const CycleTypeTuple& mu)
{
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(a.total()));
    int offset = 0;
    for (int i = 0; i < a.arity(); ++i) {
        for (int len : mu[i].parts()) {
            for (int t = 0; t < len; ++t)
                perm.push_back(offset + (t + 1) % len);
            offset += len;
        }
    }
    return perm;
}

std::int64_t fixed_points(const std::vector<WeightedInjection>& homs, const std::vector<int>& perm)
{
    std::int64_t fixed = 0;
    for (const auto& f : homs) {
        bool ok = true;
        for (std::size_t p = 0; p < perm.size() && ok; ++p)
            ok = f.images()[static_cast<std::size_t>(perm[p])] == f.images()[p];
        fixed += ok;
    }
    return fixed;
}

bool leq(const Composition& u, const Composition& c)
{
    for (int i = 0; i < c.arity(); ++i)
        if (u[static_cast<std::size_t>(i)] > c[static_cast<std::size_t>(i)])
            return false;
    return true;
}

Composition minus(const Composition& c, const Composition& u)
{
    std::vector<int> e(static_cast<std::size_t>(c.arity()));
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = c[i] - u[i];
    return Composition(std::move(e));
}

std::int64_t binomial_product(const Composition& c, const Composition& u)
{
    std::int64_t r = 1;
    for (int i = 0; i < c.arity(); ++i)
        r *= binomial(c[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)]);
    return r;
}

// All u with 0 <= u <= c componentwise.
std::vector<Composition> sub_compositions(const Composition& c)
{
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(c.arity()), 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == c[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size())
            break;
        ++cur[i];
    }
    return out;
}

// P_a (x) P_b at c: choose the image U of a + b inside c, then split U
// between the two summands; each part is filled by an FB(n) bijection.
std::int64_t day_pp(const Composition& a, const Composition& b, const Composition& c)
{
    const auto fb = CategoryFlavor::fb();
    std::int64_t total = 0;
    for (const auto& u : sub_compositions(c)) {
        if (u.total() != a.total() + b.total())
            continue;
        std::int64_t inner = 0;
        for (const auto& u1 : sub_compositions(u)) {
            if (u1.total() != a.total())
                continue;
            const auto u2 = minus(u, u1);
            const auto h1 = count_homs(fb, a, u1);
            if (h1 == 0)
                continue;
            inner += binomial_product(u, u1) * h1 * count_homs(fb, b, u2);
        }
        total += binomial_product(c, u) * inner;
    }
    return total;
}

// P_a (x) M_mu at c: the simple factor sits weight-preservingly on a subset
// of shape (|mu^i|); every other element of c must be hit bijectively by a.
std::int64_t day_pm(const Composition& a, const PartitionTuple& mu, const Composition& c)
{
    const auto b = sizes_of(mu);
    if (!leq(b, c))
        return 0;
    return binomial_product(c, b) * count_homs(CategoryFlavor::fb(), a, minus(c, b)) * simple_dim(mu, b);
}

std::int64_t day_mm(const PartitionTuple& lambda, const PartitionTuple& mu, const Composition& c)
{
    const auto a = sizes_of(lambda);
    const auto b = sizes_of(mu);
    if (a + b != c)
        return 0;
    return binomial_product(c, a) * simple_dim(lambda, a) * simple_dim(mu, b);
}

struct PairDim {
    const Composition& c;
    std::int64_t operator()(const PrincipalProjectiveSpec& x, const PrincipalProjectiveSpec& y) const
    {
        return day_pp(x.base, y.base, c);
    }
    std::int64_t operator()(const PrincipalProjectiveSpec& x, const SimpleModuleSpec& y) const
    {
        return day_pm(x.base, y.label, c);
    }
    std::int64_t operator()(const SimpleModuleSpec& x, const PrincipalProjectiveSpec& y) const
    {
        return day_pm(y.base, x.label, c);
    }
    std::int64_t operator()(const SimpleModuleSpec& x, const SimpleModuleSpec& y) const
    {
        return day_mm(x.label, y.label, c);
    }
};

int arity_of(const ModuleSpec::Term& t)
{
    return std::visit(
        [](const auto& m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PrincipalProjectiveSpec>)
                return m.base.arity();
            else
                return m.label.arity();
        },
        t.module);
}

void check_terms(const ModuleSpec& m, int n)
{
    for (const auto& t : m.terms) {
        if (t.multiplicity < 0)
            throw std::invalid_argument("module spec: negative multiplicity");
        if (arity_of(t) != n)
            throw std::invalid_argument("module spec: arity mismatch");
    }
}

}  // namespace

std::int64_t isotypic_projective_dim(const PartitionTuple& lambda, const Composition& s)
{
    const auto a = sizes_of(lambda);
    if (a.arity() != s.arity())
        throw std::invalid_argument("isotypic_projective_dim: arity mismatch");
    const auto homs = enumerate_homs(CategoryFlavor::fi(), a, s);
    if (homs.empty())
        return 0;
    // <chi^lambda, chi_perm> = sum over classes chi^lambda(mu) fix(mu) / z_mu
    Rational total = 0;
    for (const auto& mu : partition_tuples_of(a.entries())) {
        std::int64_t chi = 1, z = 1;
        for (int i = 0; i < a.arity(); ++i) {
            chi *= mn_character(lambda[i], mu[i]);
            z *= centralizer_order(mu[i]);
        }
        if (chi == 0)
            continue;
        const auto fix = fixed_points(homs, representative(a, mu));
        Rational term(Integer(chi) * fix, Integer(z));
        term.canonicalize();
        total += term;
    }
    if (total.get_den() != 1 || total < 0)
        throw std::logic_error("isotypic_projective_dim: inner product is not a nonnegative integer");
    return total.get_num().get_si();
}

std::int64_t spec_dim(const ModuleSpec& m, const Composition& c)
{
    check_terms(m, c.arity());
    std::int64_t total = 0;
    for (const auto& t : m.terms) {
        const auto d = std::visit(
            [&](const auto& x) -> std::int64_t {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PrincipalProjectiveSpec>)
                    return principal_dim(x.base, c);
                else
                    return simple_dim(x.label, c);
            },
            t.module);
        total += t.multiplicity * d;
    }
    return total;
}

std::int64_t day_tensor_dim(const ModuleSpec& m, const ModuleSpec& nspec, const Composition& c)
{
    check_terms(m, c.arity());
    check_terms(nspec, c.arity());
    std::int64_t total = 0;
    for (const auto& x : m.terms)
        for (const auto& y : nspec.terms)
            total += x.multiplicity * y.multiplicity * std::visit(PairDim{c}, x.module, y.module);
    return total;
}

}  // namespace wfin
