#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<Partition> all_partitions(int m)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            go(left - p, p);
            cur.pop_back();
        }
    };
    go(m, m);
    return out;
}

int total(const Partition& p)
{
    int s = 0;
    for (int x : p.parts())
        s += x;
    return s;
}

}  // namespace

std::int64_t tabloid_fixed_points(const Partition& lambda, const Partition& mu)
{
    // a tabloid is fixed iff each cycle lies inside one row
    std::vector<int> room(lambda.parts());
    const auto& cycles = mu.parts();
    std::function<std::int64_t(std::size_t)> go = [&](std::size_t c) -> std::int64_t {
        if (c == cycles.size())
            return 1;
        std::int64_t count = 0;
        for (auto& r : room) {
            if (r >= cycles[c]) {
                r -= cycles[c];
                count += go(c + 1);
                r += cycles[c];
            }
        }
        return count;
    };
    return go(0);
}

std::int64_t kostka(const Partition& nu, const Partition& lambda)
{
    if (total(nu) != total(lambda))
        return 0;
    const int rows = nu.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    std::vector<int> left(lambda.parts());
    std::function<std::int64_t(int, int)> go = [&](int r, int c) -> std::int64_t {
        if (r == rows)
            return 1;
        if (c == nu[r])
            return go(r + 1, 0);
        std::int64_t count = 0;
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
                continue;
            if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                continue;
            --left[static_cast<std::size_t>(v - 1)];
            t[static_cast<std::size_t>(r)].push_back(v);
            count += go(r, c + 1);
            t[static_cast<std::size_t>(r)].pop_back();
            ++left[static_cast<std::size_t>(v - 1)];
        }
        return count;
    };
    return go(0, 0);
}

std::int64_t character(const Partition& lambda, const Partition& mu)
{
    static std::mutex lock;
    static std::map<std::pair<Partition, Partition>, std::int64_t> memo;
    {
        std::lock_guard g(lock);
        auto it = memo.find({lambda, mu});
        if (it != memo.end())
            return it->second;
    }
    if (total(lambda) != total(mu))
        throw std::invalid_argument("oracle::character: sizes differ");
    // pi^lambda = sum_nu K_{nu lambda} chi^nu, and K_{lambda lambda} = 1
    std::int64_t chi = tabloid_fixed_points(lambda, mu);
    for (const auto& nu : all_partitions(total(lambda))) {
        if (nu == lambda)
            continue;
        if (const auto k = kostka(nu, lambda))
            chi -= k * character(nu, mu);
    }
    std::lock_guard g(lock);
    memo[{lambda, mu}] = chi;
    return chi;
}

std::int64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (total(lambda) + total(mu) != total(nu))
        return 0;
    for (int r = 0; r < std::max(lambda.length(), 1); ++r)
        if (lambda[r] > nu[r])
            return 0;
    const int rows = nu.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
    std::vector<int> left(mu.parts());
    auto lattice = [&] {
        // reading word: rows top to bottom, each right to left
        std::vector<int> seen(left.size() + 1, 0);
        for (int r = 0; r < rows; ++r) {
            for (int c = nu[r] - 1; c >= lambda[r]; --c) {
                const int v = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                ++seen[static_cast<std::size_t>(v - 1)];
                if (v > 1 && seen[static_cast<std::size_t>(v - 1)] > seen[static_cast<std::size_t>(v - 2)])
                    return false;
            }
        }
        return true;
    };
    std::function<std::int64_t(int, int)> go = [&](int r, int c) -> std::int64_t {
        if (r == rows)
            return lattice() ? 1 : 0;
        if (c == nu[r])
            return go(r + 1, lambda[r + 1]);
        std::int64_t count = 0;
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            if (c > lambda[r] && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
                continue;
            if (r > 0 && c >= lambda[r - 1] && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                continue;
            --left[static_cast<std::size_t>(v - 1)];
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            count += go(r, c + 1);
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            ++left[static_cast<std::size_t>(v - 1)];
        }
        return count;
    };
    if (rows == 0)
        return 1;
    return go(0, lambda[0]);
}

std::vector<std::vector<Element>> morphisms(Cat cat, int d, const Composition& b, const Composition& a)
{
    std::vector<Element> src, dst;
    for (int i = 1; i <= b.arity(); ++i)
        for (int p = 1; p <= b.at_weight(i); ++p)
            src.push_back({i, p});
    for (int i = 1; i <= a.arity(); ++i)
        for (int p = 1; p <= a.at_weight(i); ++p)
            dst.push_back({i, p});
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> choice(src.size(), 0);
    // odometer over all dst^src maps
    if (!src.empty() && dst.empty())
        return out;
    while (true) {
        std::vector<Element> img;
        std::vector<bool> hit(dst.size(), false);
        bool ok = true;
        for (std::size_t s = 0; s < src.size(); ++s) {
            const auto& t = dst[choice[s]];
            if (hit[choice[s]])
                ok = false;
            hit[choice[s]] = true;
            img.push_back(t);
        }
        if (ok) {
            for (std::size_t s = 0; s < src.size(); ++s) {
                if (img[s].weight < src[s].weight)
                    ok = false;
            }
            if (cat == Cat::FB && src.size() != dst.size())
                ok = false;
            if (cat == Cat::C)
                for (std::size_t t = 0; t < dst.size(); ++t)
                    if (dst[t].weight < d && !hit[t])
                        ok = false;
        }
        if (ok)
            out.push_back(img);
        std::size_t s = 0;
        while (s < src.size() && ++choice[s] == dst.size())
            choice[s++] = 0;
        if (s == src.size())
            break;
    }
    return out;
}

std::int64_t fi_count(const Composition& b, const Composition& a)
{
    std::int64_t count = 1;
    int targets = 0, used = 0;
    for (int i = a.arity(); i >= 1; --i) {
        targets += a.at_weight(i);
        for (int x = 0; x < b.at_weight(i); ++x)
            count *= std::max(0, targets - used - x);
        used += b.at_weight(i);
    }
    return count;
}

int Series::size_of(const std::vector<int>& e) const
{
    int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= N; ++j)
            s += j * e[static_cast<std::size_t>(i * N + j - 1)];
    return s;
}

void Series::add(const std::vector<int>& e, const Rational& c)
{
    if (size_of(e) > N)
        return;
    auto& slot = terms[e];
    slot += c;
    if (slot == 0)
        terms.erase(e);
}

Series Series::times(const Series& other) const
{
    Series out{n, N, {}};
    for (const auto& [e, c] : terms) {
        for (const auto& [f, g] : other.terms) {
            std::vector<int> s(e);
            for (std::size_t x = 0; x < s.size(); ++x)
                s[x] += f[x];
            out.add(s, c * g);
        }
    }
    return out;
}

Series exp_product(int n, int d, int N)
{
    const std::vector<int> zero(static_cast<std::size_t>(n * N), 0);
    Series out{n, N, {}};
    out.add(zero, 1);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= N; ++j) {
            Series factor{n, N, {}};
            Rational inv_fact = 1;
            for (int x = 0; x * j <= N; ++x) {
                if (x > 0)
                    inv_fact /= x;
                auto e = zero;
                e[static_cast<std::size_t>((i - 1) * N + j - 1)] = x;
                factor.add(e, inv_fact);
            }
            out = out.times(factor);
        }
    }
    return out;
}

Series schur_series(const PartitionTuple& lambda, int N)
{
    const int n = lambda.arity();
    Series out{n, N, {}};
    int size = 0;
    for (const auto& p : lambda.components)
        size += total(p);
    if (size > N)
        return out;
    // cycle types component by component
    std::vector<std::vector<Partition>> options;
    for (const auto& p : lambda.components)
        options.push_back(all_partitions(total(p)));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(n * N), 0);
        Rational c = 1;
        for (int i = 0; i < n; ++i) {
            const auto& mu = options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            c *= character(lambda.components[static_cast<std::size_t>(i)], mu);
            for (int part : mu.parts())
                ++e[static_cast<std::size_t>(i * N + part - 1)];
        }
        for (int v : e)
            for (int x = 2; x <= v; ++x)
                c /= x;
        out.add(e, c);
        int i = 0;
        while (i < n && ++pick[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size())
            pick[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            break;
    }
    return out;
}

bool same(const Series& s, const wfin::EGFSeries& f)
{
    if (s.n != f.arity() || s.N != f.truncation() || s.terms.size() != f.terms().size())
        return false;
    for (const auto& [e, c] : s.terms)
        if (f.coefficient(e) != c)
            return false;
    return true;
}

}  // namespace oracle
