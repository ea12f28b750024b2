#include "wfin/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace wfin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int j) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::conjugate() const
{
    std::vector<int> conj;
    for (int c = 0; c < (*this)[0]; ++c) {
        int len = 0;
        while (len < length() && parts_[static_cast<std::size_t>(len)] > c)
            ++len;
        conj.push_back(len);
    }
    return Partition(std::move(conj));
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (int i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p[i];
    return os << ')';
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int m)
{
    static std::shared_mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    if (m < 0)
        throw std::invalid_argument("partitions_of: negative size");
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, cur, out);
    std::unique_lock lock(mutex);
    return cache.try_emplace(m, std::move(out)).first->second;
}

int PartitionTuple::total_size() const
{
    int s = 0;
    for (const auto& p : components)
        s += p.size();
    return s;
}

std::vector<int> PartitionTuple::sizes() const
{
    std::vector<int> s;
    s.reserve(components.size());
    for (const auto& p : components)
        s.push_back(p.size());
    return s;
}

std::ostream& operator<<(std::ostream& os, const PartitionTuple& p)
{
    os << '(';
    for (int i = 0; i < p.arity(); ++i)
        os << (i ? "," : "") << p[i];
    return os << ')';
}

std::vector<PartitionTuple> partition_tuples_of(const std::vector<int>& sizes)
{
    std::vector<PartitionTuple> out{PartitionTuple{}};
    for (int s : sizes) {
        std::vector<PartitionTuple> next;
        for (const auto& prefix : out) {
            for (const auto& p : partitions_of(s)) {
                auto t = prefix;
                t.components.push_back(p);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<PartitionTuple> partition_tuples_of_total(int n, int m)
{
    std::vector<PartitionTuple> out;
    for (const auto& c : compositions_of(n, m)) {
        auto part = partition_tuples_of(c.entries());
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 0)
            throw std::invalid_argument("composition entries must be nonnegative");
}

int Composition::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int Composition::max_entry() const
{
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Composition Composition::reversed() const
{
    return Composition(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

Composition operator+(const Composition& a, const Composition& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("composition arity mismatch");
    std::vector<int> s(a.entries_);
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += b.entries_[i];
    return Composition(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const Composition& a)
{
    os << '(';
    for (int i = 0; i < a.arity(); ++i)
        os << (i ? "," : "") << a[static_cast<std::size_t>(i)];
    return os << ')';
}

namespace {

void gen_compositions(int n, int remaining, std::vector<int>& cur, std::vector<Composition>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur.push_back(e);
        gen_compositions(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n, int m)
{
    if (n < 1)
        throw std::invalid_argument("compositions need arity >= 1");
    std::vector<Composition> out;
    std::vector<int> cur;
    gen_compositions(n, m, cur, out);
    return out;
}

std::vector<Composition> compositions_up_to(int n, int max_total)
{
    std::vector<Composition> out;
    for (int t = 0; t <= max_total; ++t) {
        auto part = compositions_of(n, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool dominance_leq(const Composition& a, const Composition& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("dominance_leq: arity mismatch");
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.arity()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb)
            return false;
    }
    return true;
}

std::int64_t factorial(int m)
{
    if (m < 0 || m > 20)
        throw std::out_of_range("factorial argument outside [0,20]");
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i)
        f *= i;
    return f;
}

std::int64_t binomial(int m, int r)
{
    if (r < 0 || r > m)
        return 0;
    r = std::min(r, m - r);
    std::int64_t b = 1;
    for (int i = 1; i <= r; ++i)
        b = b * (m - r + i) / i;
    return b;
}

std::int64_t hook_dimension(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    std::int64_t hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

std::int64_t centralizer_order(const Partition& mu)
{
    std::int64_t z = 1;
    for (int j = 1; j <= mu[0]; ++j) {
        const int m = mu.multiplicity(j);
        for (int t = 0; t < m; ++t)
            z *= j;
        z *= factorial(m);
    }
    return z;
}

std::int64_t lambda_factorial(const CycleTypeTuple& mu)
{
    std::int64_t f = 1;
    for (const auto& p : mu.components)
        for (int j = 1; j <= p[0]; ++j)
            f *= factorial(p.multiplicity(j));
    return f;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu);

std::int64_t mn_cached(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    static std::shared_mutex mutex;
    static std::map<CharKey, std::int64_t> cache;
    CharKey key{lambda, mu};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    const std::int64_t v = mn_recurse(lambda, mu);
    std::unique_lock lock(mutex);
    cache.try_emplace(std::move(key), v);
    return v;
}

// Rim hooks are removed on the beta-set (first-column hook lengths): a hook
// of length r corresponds to sliding one bead down by r onto an empty
// position; its leg length is the number of beads jumped over.
std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu)
{
    if (mu.empty())
        return lambda.empty() ? 1 : 0;
    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int jumped = 0;
        for (int x : beta)
            if (x > target && x < b)
                ++jumped;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> shape;
        for (int t = 0; t < len; ++t) {
            const int part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
            if (part > 0)
                shape.push_back(part);
        }
        const std::int64_t sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_cached(shape, rest);
    }
    return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    return mn_cached(lambda.parts(), mu.parts());
}

namespace {

struct SkewFiller {
    const Partition& outer;
    const Partition& inner;
    const Partition& content;
    std::vector<std::vector<int>> tableau;  // tableau[row][col], 0 = unfilled / inner
    std::vector<int> used;                  // used[v] for letters v = 1..len(content)
    std::int64_t count = 0;

    void fill(int row, int col)
    {
        if (row == outer.length()) {
            ++count;
            return;
        }
        if (col < inner[row]) {
            fill(row + 1, outer[row + 1] - 1);
            return;
        }
        int hi = content.length();
        if (col + 1 < outer[row])
            hi = std::min(hi, tableau[row][col + 1]);
        int lo = 1;
        if (row > 0 && col >= inner[row - 1] && col < outer[row - 1])
            lo = tableau[row - 1][col] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v] + 1 > content[v - 1])
                continue;
            if (v > 1 && used[v] + 1 > used[v - 1])
                continue;
            ++used[v];
            tableau[row][col] = v;
            if (col - 1 >= inner[row])
                fill(row, col - 1);
            else
                fill(row + 1, outer[row + 1] - 1);
            tableau[row][col] = 0;
            --used[v];
        }
    }
};

bool contains_shape(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (nu.size() != lambda.size() + mu.size())
        return 0;
    if (!contains_shape(nu, lambda) || !contains_shape(nu, mu))
        return 0;
    SkewFiller f{nu, lambda, mu, {}, std::vector<int>(static_cast<std::size_t>(mu.length() + 1), 0)};
    f.tableau.assign(static_cast<std::size_t>(nu.length()), std::vector<int>(static_cast<std::size_t>(nu[0]), 0));
    if (nu.length() == 0)
        return 1;
    f.fill(0, nu[0] - 1);
    return f.count;
}

const std::map<Partition, std::int64_t>& lr_product(const Partition& lambda, const Partition& mu)
{
    static std::shared_mutex mutex;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, std::int64_t>> cache;
    // s_lambda s_mu is symmetric; key on the ordered pair.
    std::pair<Partition, Partition> key = lambda <= mu ? std::pair{lambda, mu} : std::pair{mu, lambda};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    std::map<Partition, std::int64_t> out;
    for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
        const std::int64_t c = lr_coefficient(key.first, key.second, nu);
        if (c != 0)
            out.emplace(nu, c);
    }
    std::unique_lock lock(mutex);
    return cache.try_emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace wfin
