#include "wfin/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <stdexcept>

using namespace wfin;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Options {
    RunConfig cfg;
    std::string format = "text";
    bool structured() const { return format == "json"; }
};

json record(const std::string& command)
{
    return {{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(const json& j)
{
    std::cout << j.dump() << '\n';
}

template <class T>
std::string text(const T& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

// ------------------------------------------------------------------ homs

struct HomsArgs {
    std::string cat = "fi";
    int d = 1;
    std::string from, to;
    bool count = false;
};

int run_homs(const Options& o, const HomsArgs& h)
{
    CategoryFlavor flavor = CategoryFlavor::fi();
    if (h.cat == "fb")
        flavor = CategoryFlavor::fb();
    else if (h.cat == "c")
        flavor = CategoryFlavor::c(h.d);
    else if (h.cat != "fi")
        throw std::invalid_argument("unknown category '" + h.cat + "' (fi, fb, c)");

    // the arity comes from --n, else from whichever tuple is written out
    int n = o.cfg.n.value_or(0);
    if (n <= 0) {
        for (const auto* t : {&h.from, &h.to}) {
            try {
                n = parse_composition(*t, 0).arity();
                break;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    if (n <= 0)
        throw std::invalid_argument("cannot infer the arity: pass --n");
    const auto b = parse_composition(h.from, n);
    const auto a = parse_composition(h.to, n);
    if (!h.count && !o.structured()) {
        for (const auto& f : enumerate_homs(flavor, b, a))
            std::cout << f << '\n';
        return kPass;
    }
    if (!o.structured()) {
        std::cout << count_homs(flavor, b, a) << '\n';
        return kPass;
    }
    auto r = record("homs");
    r["category"] = text(flavor);
    r["from"] = to_json(b);
    r["to"] = to_json(a);
    r["count"] = count_homs(flavor, b, a);
    if (!h.count) {
        json list = json::array();
        for (const auto& f : enumerate_homs(flavor, b, a))
            list.push_back(to_json(f));
        r["morphisms"] = std::move(list);
    }
    emit(r);
    return kPass;
}

// ---------------------------------------------------------------- verify

int run_verify(const Options& o, const std::vector<std::string>& names)
{
    std::vector<const SuiteInfo*> chosen;
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& s : suites())
                chosen.push_back(&s);
            continue;
        }
        const auto* s = find_suite(name);
        if (!s)
            throw std::invalid_argument("unknown suite '" + name + "'");
        chosen.push_back(s);
    }
    bool all_passed = true;
    for (const auto* s : chosen) {
        const auto report = s->run(o.cfg);
        all_passed = all_passed && report.passed();
        if (o.structured()) {
            auto r = record("verify");
            r.update(to_json(report));
            emit(r);
            continue;
        }
        std::cout << (report.passed() ? "PASS " : "FAIL ") << report.suite << " [" << report.criterion << "] checks=" << report.checks
                  << " failed=" << report.failed << '\n';
        for (const auto& [key, value] : report.facts.items())
            std::cout << "  " << key << " = " << value.dump() << '\n';
        for (const auto& f : report.failures)
            std::cout << "  counterexample: " << f << '\n';
    }
    return all_passed ? kPass : kFail;
}

int run_suites(const Options& o)
{
    for (const auto& s : suites()) {
        if (o.structured()) {
            auto r = record("suites");
            r["suite"] = s.name;
            r["criterion"] = s.criterion;
            r["description"] = s.description;
            emit(r);
        } else {
            std::cout << s.name << " [" << s.criterion << "] " << s.description << '\n';
        }
    }
    return kPass;
}

// ----------------------------------------------------------------- ideal

int ideal_arity(const Options& o, const std::vector<std::string>& args)
{
    if (o.cfg.n)
        return *o.cfg.n;
    // smallest n for which every written index is a proper one
    int n = 1;
    for (const auto& a : args) {
        const auto I = parse_ideal(1000, a);
        for (const auto& [i, e] : I.terms())
            n = std::max(n, i + 1);
    }
    return n;
}

int run_ideal(const Options& o, const std::string& op, const std::vector<std::string>& args)
{
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("ideal " + op + ": wrong number of ideals");
    };
    const int n = ideal_arity(o, args);
    std::vector<PIdeal> ideals;
    for (const auto& a : args)
        ideals.push_back(parse_ideal(n, a));

    auto r = record("ideal");
    r["op"] = op;
    r["n"] = n;
    std::string out;
    if (op == "sum") {
        need(1, 1000);
        PIdeal s = PIdeal::zero(n);
        for (const auto& I : ideals)
            s = sum(s, I);
        r["result"] = to_json(s);
        out = text(s);
    } else if (op == "contains") {
        need(2, 2);
        const bool c = contains(ideals[0], ideals[1]);
        r["result"] = c;
        out = c ? "true" : "false";
    } else if (op == "radical") {
        need(1, 1);
        const auto rad = radical(ideals[0]);
        r["result"] = to_json(rad);
        out = text(rad);
    } else if (op == "is-prime") {
        need(1, 1);
        const bool p = is_prime(ideals[0]);
        r["result"] = p;
        out = p ? "true" : "false";
    } else if (op == "chain") {
        need(0, 0);
        json chain = json::array();
        for (const auto& I : prime_chain(n)) {
            chain.push_back(to_json(I));
            out += (out.empty() ? "" : " < ") + text(I);
        }
        r["result"] = std::move(chain);
        r["length"] = n;
    } else {
        throw std::invalid_argument("unknown ideal operation '" + op + "'");
    }
    if (o.structured())
        emit(r);
    else
        std::cout << out << '\n';
    return kPass;
}

// --------------------------------------------------------- hilbert/kclass

// "c:tuple" terms, e.g. "1:2,1|1" or "-1/2:∅|1"; a bare tuple has coefficient 1
TensorSymElt parse_symelt(int n, int bound, const std::vector<std::string>& terms)
{
    TensorSymElt x(n, bound);
    for (const auto& t : terms) {
        const auto colon = t.find(':');
        Rational c = 1;
        std::string tuple = t;
        if (colon != std::string::npos) {
            c = Rational(t.substr(0, colon));
            c.canonicalize();
            tuple = t.substr(colon + 1);
        }
        auto lambda = parse_partition_tuple(tuple);
        if (lambda.arity() != n)
            throw std::invalid_argument("term '" + t + "' does not have arity " + std::to_string(n));
        x.add_term(lambda, c);
    }
    return x;
}

// "d=c:tuple": the term c s_tuple on the basis vector [A_d]
KClass parse_kclass(int n, int bound, const std::vector<std::string>& terms)
{
    KClass k(n, bound);
    for (const auto& t : terms) {
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("class term '" + t + "' needs the form d=coeff:tuple");
        const int d = std::stoi(t.substr(0, eq));
        if (d < 0 || d > n)
            throw std::invalid_argument("class term '" + t + "': basis index out of range");
        k[d] += parse_symelt(n, bound, {t.substr(eq + 1)});
    }
    return k;
}

struct HilbertArgs {
    int basis = -1;
    std::vector<std::string> terms;
    std::vector<std::string> by;
};

int series_out(const Options& o, const std::string& command, const EGFSeries& f)
{
    if (o.structured()) {
        auto r = record(command);
        r["n"] = f.arity();
        r["N"] = f.truncation();
        r["series"] = to_json(f);
        emit(r);
    } else {
        std::cout << f << '\n';
    }
    return kPass;
}

int run_hilbert(const Options& o, const std::string& op, const HilbertArgs& h)
{
    const int N = o.cfg.N.value_or(4);
    if (op == "class" || op == "exp") {
        if (h.basis < 0 && h.terms.empty())
            throw std::invalid_argument("hilbert " + op + ": pass --basis d or class terms");
        const int n = o.cfg.n.value_or(std::max(1, h.basis));
        if (op == "exp")
            return series_out(o, "hilbert", exp_T(n, h.basis, N));
        KClass k = h.terms.empty() ? KClass::basis(n, h.basis, N) : parse_kclass(n, N, h.terms);
        return series_out(o, "hilbert", hseries_of_class(k, N));
    }
    if (op == "symelt") {
        const int n = o.cfg.n.value_or(1);
        return series_out(o, "hilbert", hseries_of_symelt(parse_symelt(n, N, h.terms), N));
    }
    throw std::invalid_argument("unknown hilbert operation '" + op + "'");
}

int run_kclass(const Options& o, const std::string& op, const HilbertArgs& h)
{
    if (op != "scale")
        throw std::invalid_argument("unknown kclass operation '" + op + "'");
    const int N = o.cfg.N.value_or(4);
    const int n = o.cfg.n.value_or(std::max(1, h.basis));
    const KClass k = h.terms.empty() ? KClass::basis(n, std::max(0, h.basis), N) : parse_kclass(n, N, h.terms);
    const auto v = parse_symelt(n, N, h.by);
    const auto scaled = kclass_scale(k, v);
    if (o.structured()) {
        auto r = record("kclass");
        r["op"] = op;
        r["class"] = to_json(k);
        r["by"] = to_json(v);
        r["result"] = to_json(scaled);
        r["series"] = to_json(hseries_of_class(scaled, N));
        emit(r);
    } else {
        for (int d = 0; d <= n; ++d)
            if (!scaled[d].is_zero())
                std::cout << "[A_" << d << "] * (" << scaled[d] << ")\n";
        std::cout << "H = " << hseries_of_class(scaled, N) << '\n';
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wfin: weighted FI categories, P-ideals and enhanced Hilbert series"};
    app.require_subcommand(1);

    Options o;
    auto add_int = [&](const char* flag, const char* env, std::optional<int>& slot, int floor, const char* what) {
        app.add_option_function<int>(flag, [&slot](const int& v) { slot = v; }, what)
            ->envname(env)
            ->check(CLI::Range(floor, 1 << 20));
    };
    add_int("--n", "WFIN_N", o.cfg.n, 1, "arity (number of weights)");
    add_int("--k", "WFIN_K", o.cfg.k, 1, "columns of the flag model");
    add_int("--D", "WFIN_D", o.cfg.D, 0, "polynomial degree bound");
    add_int("--N", "WFIN_TRUNC", o.cfg.N, 0, "Hilbert series truncation");
    add_int("--max", "WFIN_MAX", o.cfg.max, 0, "size bound of a suite");
    app.add_option("--seed", o.cfg.seed, "seed for sampled checks")->envname("WFIN_SEED");
    app.add_option("--format", o.format, "text or json (newline-delimited)")
        ->envname("WFIN_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));

    HomsArgs homs;
    auto* homs_cmd = app.add_subcommand("homs", "list or count morphisms b -> a");
    homs_cmd->fallthrough();
    homs_cmd->add_option("--cat", homs.cat, "fi, fb or c")->check(CLI::IsMember({"fi", "fb", "c"}));
    homs_cmd->add_option("--d", homs.d, "d for the category C_d")->check(CLI::PositiveNumber);
    homs_cmd->add_option("--from", homs.from, "source tuple b")->required();
    homs_cmd->add_option("--to", homs.to, "target tuple a")->required();
    homs_cmd->add_flag("--count", homs.count, "print only the number of morphisms");

    std::vector<std::string> suite_names;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites ('all' for every suite)");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite_names, "suite names")->required();

    auto* suites_cmd = app.add_subcommand("suites", "list the verification suites");
    suites_cmd->fallthrough();

    std::string ideal_op;
    auto* ideal_cmd = app.add_subcommand("ideal", "sum, contains, radical, is-prime, chain");
    ideal_cmd->fallthrough();
    ideal_cmd->add_option("op", ideal_op)->required()->check(CLI::IsMember({"sum", "contains", "radical", "is-prime", "chain"}));
    std::vector<std::string> ideal_args;
    ideal_cmd->add_option("ideals", ideal_args, "ideals as [(i,a),...], [] or unit");

    std::string hilbert_op;
    HilbertArgs hargs;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "class, exp, symelt");
    hilbert_cmd->fallthrough();
    hilbert_cmd->add_option("op", hilbert_op)->required()->check(CLI::IsMember({"class", "exp", "symelt"}));
    hilbert_cmd->add_option("--basis", hargs.basis, "d for the class [A_d]")->check(CLI::NonNegativeNumber);
    hilbert_cmd->add_option("terms", hargs.terms, "class terms d=c:tuple, or symmetric function terms c:tuple");

    std::string kclass_op;
    auto* kclass_cmd = app.add_subcommand("kclass", "scale");
    kclass_cmd->fallthrough();
    kclass_cmd->add_option("op", kclass_op)->required()->check(CLI::IsMember({"scale"}));
    kclass_cmd->add_option("--basis", hargs.basis, "d for the class [A_d]")->check(CLI::NonNegativeNumber);
    kclass_cmd->add_option("--class", hargs.terms, "class terms d=c:tuple");
    kclass_cmd->add_option("--by", hargs.by, "scalar terms c:tuple")->required();

    // CLI11 splits "[x,y]" into a list; a leading space keeps an ideal whole
    std::vector<std::string> args(argv + 1, argv + argc);
    for (auto& a : args)
        if (!a.empty() && a.front() == '[')
            a.insert(a.begin(), ' ');
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*homs_cmd)
            return run_homs(o, homs);
        if (*verify_cmd)
            return run_verify(o, suite_names);
        if (*suites_cmd)
            return run_suites(o);
        if (*ideal_cmd)
            return run_ideal(o, ideal_op, ideal_args);
        if (*hilbert_cmd)
            return run_hilbert(o, hilbert_op, hargs);
        if (*kclass_cmd)
            return run_kclass(o, kclass_op, hargs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
