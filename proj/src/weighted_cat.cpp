#include "wfin/weighted_cat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace wfin {

std::vector<Element> elements_of(const Composition& a)
{
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(a.total()));
    for (int w = 1; w <= a.arity(); ++w)
        for (int p = 1; p <= a.at_weight(w); ++p)
            out.push_back({w, p});
    return out;
}

int element_position(const Composition& a, Element e)
{
    if (e.weight < 1 || e.weight > a.arity() || e.index < 1 || e.index > a.at_weight(e.weight))
        throw std::out_of_range("element not in weighted set");
    int pos = 0;
    for (int w = 1; w < e.weight; ++w)
        pos += a.at_weight(w);
    return pos + e.index - 1;
}

CategoryFlavor CategoryFlavor::c(int d)
{
    if (d < 1)
        throw std::invalid_argument("C_d needs d >= 1");
    return CategoryFlavor(Kind::C, d);
}

std::ostream& operator<<(std::ostream& os, const CategoryFlavor& f)
{
    if (f.kind() == CategoryFlavor::Kind::FB)
        return os << "FB(n)";
    if (f.is_fi())
        return os << "FI(n)";
    return os << "C_" << f.d();
}

WeightedInjection::WeightedInjection(Composition source, Composition target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (source_.arity() != target_.arity())
        throw std::invalid_argument("morphism: arity mismatch");
    if (static_cast<int>(images_.size()) != source_.total())
        throw std::invalid_argument("morphism: one image per source element required");
    const auto src = elements_of(source_);
    std::vector<bool> used(static_cast<std::size_t>(target_.total()), false);
    for (std::size_t p = 0; p < images_.size(); ++p) {
        const int pos = element_position(target_, images_[p]);
        if (used[static_cast<std::size_t>(pos)])
            throw std::invalid_argument("morphism: not injective");
        used[static_cast<std::size_t>(pos)] = true;
        if (images_[p].weight < src[p].weight)
            throw std::invalid_argument("morphism: weight decreases");
    }
}

WeightedInjection WeightedInjection::identity(const Composition& a)
{
    return WeightedInjection(a, a, elements_of(a));
}

Element WeightedInjection::image(Element e) const
{
    return images_[static_cast<std::size_t>(element_position(source_, e))];
}

bool WeightedInjection::covers_below(int d) const
{
    int low_targets = 0;
    for (int w = 1; w < d && w <= target_.arity(); ++w)
        low_targets += target_.at_weight(w);
    const auto hits = std::count_if(images_.begin(), images_.end(), [d](const Element& e) { return e.weight < d; });
    return hits == low_targets;
}

bool WeightedInjection::valid_in(const CategoryFlavor& flavor) const
{
    if (flavor.kind() == CategoryFlavor::Kind::FB)
        return is_bijection();
    if (flavor.d() > source_.arity())
        return false;
    return covers_below(flavor.d());
}

std::optional<Element> WeightedInjection::preimage(Element t) const
{
    const auto src = elements_of(source_);
    for (std::size_t p = 0; p < images_.size(); ++p)
        if (images_[p] == t)
            return src[p];
    return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const WeightedInjection& f)
{
    os << f.source() << "->" << f.target() << " [";
    const auto src = elements_of(f.source());
    for (std::size_t p = 0; p < src.size(); ++p) {
        os << (p ? " " : "") << src[p].weight << '.' << src[p].index << ':' << f.images()[p].weight << '.'
           << f.images()[p].index;
    }
    return os << ']';
}

WeightedInjection compose(const WeightedInjection& g, const WeightedInjection& f)
{
    if (f.target() != g.source())
        throw std::invalid_argument("compose: target(f) != source(g)");
    std::vector<Element> images;
    images.reserve(f.images().size());
    for (const auto& e : f.images())
        images.push_back(g.image(e));
    return WeightedInjection(f.source(), g.target(), std::move(images));
}

WeightedInjection disjoint_union(const WeightedInjection& f, const WeightedInjection& g)
{
    const Composition src = f.source() + g.source();
    const Composition tgt = f.target() + g.target();
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(src.total()));
    for (const auto& e : elements_of(src)) {
        const int split = f.source().at_weight(e.weight);
        if (e.index <= split) {
            images.push_back(f.image(e));
        } else {
            Element t = g.image({e.weight, e.index - split});
            t.index += f.target().at_weight(t.weight);
            images.push_back(t);
        }
    }
    return WeightedInjection(src, tgt, std::move(images));
}

namespace {

void check_arity(const Composition& b, const Composition& a)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("hom: arity mismatch");
}

struct HomSearch {
    const CategoryFlavor& flavor;
    const Composition& source;
    const Composition& target;
    std::vector<Element> src;
    std::vector<Element> tgt;
    std::vector<bool> used;
    std::vector<Element> current;
    int low_targets = 0;  // target elements of weight < d
    int low_hit = 0;
    bool stop_at_first = false;
    std::vector<WeightedInjection>* out = nullptr;
    bool found = false;

    void run(std::size_t p)
    {
        if (found && stop_at_first)
            return;
        const int remaining = static_cast<int>(src.size() - p);
        if (low_targets - low_hit > remaining)
            return;
        if (p == src.size()) {
            found = true;
            if (out)
                out->emplace_back(source, target, current);
            return;
        }
        for (std::size_t t = 0; t < tgt.size(); ++t) {
            if (used[t] || tgt[t].weight < src[p].weight)
                continue;
            const bool low = tgt[t].weight < flavor.d();
            used[t] = true;
            low_hit += low;
            current.push_back(tgt[t]);
            run(p + 1);
            current.pop_back();
            low_hit -= low;
            used[t] = false;
            if (found && stop_at_first)
                return;
        }
    }
};

bool search(const CategoryFlavor& flavor, const Composition& b, const Composition& a, bool stop_at_first,
            std::vector<WeightedInjection>* out)
{
    if (b.total() > a.total())
        return false;
    if (flavor.kind() == CategoryFlavor::Kind::FB && b.total() != a.total())
        return false;
    if (flavor.kind() == CategoryFlavor::Kind::C && flavor.d() > a.arity())
        throw std::invalid_argument("C_d needs d <= n");
    HomSearch s{flavor, b, a, elements_of(b), elements_of(a), {}, {}, 0, 0, stop_at_first, out, false};
    s.used.assign(s.tgt.size(), false);
    for (const auto& e : s.tgt)
        if (e.weight < flavor.d())
            ++s.low_targets;
    s.run(0);
    return s.found;
}

}  // namespace

bool hom_exists(const CategoryFlavor& flavor, const Composition& b, const Composition& a)
{
    check_arity(b, a);
    switch (flavor.kind()) {
    case CategoryFlavor::Kind::FB:
        return b.total() == a.total() && dominance_leq(b.reversed(), a.reversed());
    case CategoryFlavor::Kind::C:
        if (flavor.d() > a.arity())
            throw std::invalid_argument("C_d needs d <= n");
        if (flavor.is_fi())
            return dominance_leq(b.reversed(), a.reversed());
        return search(flavor, b, a, true, nullptr);
    }
    return false;
}

std::vector<WeightedInjection> enumerate_homs(const CategoryFlavor& flavor, const Composition& b, const Composition& a)
{
    check_arity(b, a);
    std::vector<WeightedInjection> out;
    search(flavor, b, a, false, &out);
    return out;
}

std::int64_t count_homs(const CategoryFlavor& flavor, const Composition& b, const Composition& a)
{
    using Key = std::tuple<int, int, Composition, Composition>;
    static std::shared_mutex mutex;
    static std::map<Key, std::int64_t> cache;
    check_arity(b, a);
    Key key{static_cast<int>(flavor.kind()), flavor.d(), b, a};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    const auto n = static_cast<std::int64_t>(enumerate_homs(flavor, b, a).size());
    std::unique_lock lock(mutex);
    cache.try_emplace(std::move(key), n);
    return n;
}

std::vector<Composition> inward_objects(int d, const Composition& a)
{
    if (d < 1 || d > a.arity())
        throw std::invalid_argument("inward_objects: d must lie in [1,n]");
    const auto flavor = CategoryFlavor::c(d);
    std::vector<Composition> out;
    for (const auto& b : compositions_up_to(a.arity(), a.total()))
        if (hom_exists(flavor, b, a))
            out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wfin
