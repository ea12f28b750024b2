#include "wfin/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace wfin {

json to_json(const Partition& p)
{
    return json(p.parts());
}

json to_json(const PartitionTuple& p)
{
    json out = json::array();
    for (const auto& c : p.components)
        out.push_back(to_json(c));
    return out;
}

json to_json(const Composition& a)
{
    return json(a.entries());
}

json to_json(const WeightedInjection& f)
{
    json out = json::array();
    const auto src = elements_of(f.source());
    for (std::size_t p = 0; p < src.size(); ++p)
        out.push_back({src[p].weight, src[p].index, f.images()[p].weight, f.images()[p].index});
    return out;
}

json to_json(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return {{"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}};
}

json to_json(const TensorSymElt& x)
{
    json out = json::array();
    for (const auto& [k, c] : x.terms()) {
        json t = to_json(c);
        t["partition"] = to_json(k);
        out.push_back(std::move(t));
    }
    return out;
}

json to_json(const PIdeal& I)
{
    if (I.is_unit())
        return "unit";
    json out = json::array();
    for (const auto& [i, a] : I.terms())
        out.push_back({i, a});
    return out;
}

json to_json(const EGFSeries& f)
{
    json out = json::array();
    for (const auto& [e, c] : f.terms()) {
        json ex = json::array();
        for (int i = 1; i <= f.arity(); ++i)
            for (int j = 1; j <= f.truncation(); ++j)
                if (int x = f.at(e, i, j))
                    ex.push_back({i, j, x});
        json t = to_json(c);
        t["exponents"] = std::move(ex);
        out.push_back(std::move(t));
    }
    return out;
}

json to_json(const KClass& k)
{
    json out = json::array();
    for (int d = 0; d <= k.arity(); ++d)
        out.push_back(to_json(k[d]));
    return out;
}

json to_json(const LinearMap& f)
{
    json entries = json::array();
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        for (const auto& [i, c] : f.column(j))
            entries.push_back({i, j, c.get_str()});
    return {{"rows", f.target().dim()}, {"cols", f.source().dim()}, {"entries", std::move(entries)}};
}

json to_json(const ModuleSpec& m)
{
    json out = json::array();
    for (const auto& t : m.terms) {
        json item;
        if (const auto* p = std::get_if<PrincipalProjectiveSpec>(&t.module))
            item["principal"] = to_json(p->base);
        else
            item["simple"] = to_json(std::get<SimpleModuleSpec>(t.module).label);
        item["multiplicity"] = t.multiplicity;
        out.push_back(std::move(item));
    }
    return out;
}

Partition partition_from_json(const json& j)
{
    return Partition(j.get<std::vector<int>>());
}

PartitionTuple partition_tuple_from_json(const json& j)
{
    PartitionTuple p;
    for (const auto& c : j)
        p.components.push_back(partition_from_json(c));
    return p;
}

Composition composition_from_json(const json& j)
{
    return Composition(j.get<std::vector<int>>());
}

WeightedInjection injection_from_json(const Composition& source, const Composition& target, const json& j)
{
    const auto src = elements_of(source);
    if (j.size() != src.size())
        throw std::invalid_argument("injection_from_json: one quadruple per source element required");
    std::vector<Element> images(src.size());
    std::vector<bool> seen(src.size(), false);
    for (const auto& q : j) {
        const Element s{q.at(0).get<int>(), q.at(1).get<int>()};
        const auto pos = static_cast<std::size_t>(element_position(source, s));
        if (seen[pos])
            throw std::invalid_argument("injection_from_json: repeated source element");
        seen[pos] = true;
        images[pos] = {q.at(2).get<int>(), q.at(3).get<int>()};
    }
    return WeightedInjection(source, target, std::move(images));
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(j.get<long>()));
    Rational q(Integer(j.at("numerator").get<std::string>()), Integer(j.at("denominator").get<std::string>()));
    if (q.get_den() == 0)
        throw std::invalid_argument("rational_from_json: zero denominator");
    q.canonicalize();
    return q;
}

TensorSymElt symelt_from_json(int n, int degree_bound, const json& j)
{
    TensorSymElt x(n, degree_bound);
    for (const auto& t : j)
        x.add_term(partition_tuple_from_json(t.at("partition")), rational_from_json(t));
    return x;
}

PIdeal ideal_from_json(int n, const json& j)
{
    if (j.is_string() && j.get<std::string>() == "unit")
        return PIdeal::unit(n);
    std::vector<PIdeal::Term> raw;
    for (const auto& t : j)
        raw.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
    return PIdeal::canonicalize(n, raw);
}

ModuleSpec module_spec_from_json(const json& j)
{
    ModuleSpec m;
    for (const auto& item : j) {
        const std::int64_t mult = item.value("multiplicity", std::int64_t{1});
        if (item.contains("principal"))
            m.terms.push_back({mult, PrincipalProjectiveSpec{composition_from_json(item.at("principal"))}});
        else if (item.contains("simple"))
            m.terms.push_back({mult, SimpleModuleSpec{partition_tuple_from_json(item.at("simple"))}});
        else
            throw std::invalid_argument("module spec term needs 'principal' or 'simple'");
    }
    return m;
}

namespace {

bool is_empty_token(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s.empty() || s == "\xE2\x88\x85" || s == "empty" || s == "()" || s == "[]" || s == "0-tuple";
}

std::vector<int> parse_ints(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    std::vector<int> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c) || c == '-'; }))
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Composition parse_composition(const std::string& text, int n)
{
    if (is_empty_token(text)) {
        if (n <= 0)
            throw std::invalid_argument("empty tuple needs an explicit arity");
        return Composition::zero(n);
    }
    auto v = parse_ints(text);
    if (n > 0 && static_cast<int>(v.size()) != n)
        throw std::invalid_argument("tuple '" + text + "' does not have arity " + std::to_string(n));
    return Composition(std::move(v));
}

Partition parse_partition(const std::string& text)
{
    if (is_empty_token(text))
        return Partition{};
    return Partition(parse_ints(text));
}

PartitionTuple parse_partition_tuple(const std::string& text)
{
    PartitionTuple p;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find_first_of("|/", start);
        p.components.push_back(parse_partition(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos)
            break;
        start = bar + 1;
    }
    return p;
}

PIdeal parse_ideal(int n, const std::string& text)
{
    if (text == "unit" || text == "A")
        return PIdeal::unit(n);
    static const std::regex term(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    static const std::regex whole(R"(^\s*\[?\s*(\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*,?\s*)*\]?\s*$)");
    if (!std::regex_match(text, whole))
        throw std::invalid_argument("malformed ideal: '" + text + "'");
    std::vector<PIdeal::Term> raw;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it)
        raw.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
    return PIdeal::canonicalize(n, raw);
}

}  // namespace wfin
