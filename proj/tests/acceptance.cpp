// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Each criterion combines the library's verification suite with the
// independent reference computations in oracles.cpp.

#include "oracles.hpp"

#include "wfin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace wfin;

namespace {

struct Tally {
    std::int64_t checks = 0;
    std::int64_t failed = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            ++failed;
            if (notes.size() < 5)
                notes.push_back(what);
        }
    }
    void absorb(const SuiteReport& r)
    {
        checks += r.checks;
        failed += r.failed + (r.checks == 0 ? 1 : 0);
        for (const auto& f : r.failures)
            if (notes.size() < 5)
                notes.push_back(r.suite + ": " + f);
    }
};

template <class... Ts>
std::string cat(const Ts&... xs)
{
    std::ostringstream os;
    (os << ... << xs);
    return os.str();
}

// ------------------------------------------------------------- extras

void ac1_oracle(Tally& t)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : compositions_up_to(n, 3))
            for (const auto& b : compositions_up_to(n, 3)) {
                const auto want = static_cast<std::int64_t>(oracle::morphisms(oracle::Cat::FI, 1, b, a).size());
                t.check(hom_dim_Q(a, b, std::max(a.max_entry(), b.max_entry()) + 1, a.total()) == want,
                        cat("hom_dim_Q vs brute-force maps at a=", a, " b=", b));
            }
}

void ac2_oracle(Tally& t)
{
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= n; ++d) {
            const auto reference = oracle::exp_product(n, d, 6);
            t.check(oracle::same(reference, hseries_of_class(KClass::basis(n, d, 6), 6)), cat("H([A_", d, "]) vs product of exponentials, n=", n));
            // the class of A_d term by term, with tabloid characters
            oracle::Series direct{n, 6, {}};
            const auto cls = ad_lclass(n, d, 6);
            for (const auto& [lambda, c] : cls.terms())
                for (const auto& [e, v] : oracle::schur_series(lambda, 6).terms)
                    direct.add(e, c * v);
            t.check(direct.terms == reference.terms, cat("Sym(rows) series vs product of exponentials, n=", n, " d=", d));
        }
}

void ac5_oracle(Tally& t)
{
    for (int n = 1; n <= 3; ++n) {
        const auto objects = compositions_up_to(n, 4);
        for (const auto& a : objects)
            for (const auto& b : objects) {
                if (a.total() + b.total() > 4)
                    continue;
                for (const auto& c : objects)
                    t.check(day_tensor_dim(ModuleSpec::principal(a), ModuleSpec::principal(b), c) == oracle::fi_count(a + b, c),
                            cat("Day convolution vs closed-form count, a=", a, " b=", b, " c=", c));
            }
    }
}

void ac7_oracle(Tally& t)
{
    for (int m = 0; m <= 6; ++m) {
        for (const auto& lambda : partitions_of(m))
            for (const auto& mu : partitions_of(m))
                t.check(mn_character(lambda, mu) == oracle::character(lambda, mu), cat("chi^", lambda, "(", mu, ") vs tabloids"));
        for (int p = 0; p <= m; ++p)
            for (const auto& lambda : partitions_of(p))
                for (const auto& mu : partitions_of(m - p))
                    for (const auto& nu : partitions_of(m))
                        t.check(lr_coefficient(lambda, mu, nu) == oracle::lr(lambda, mu, nu), cat("c^", nu, "_{", lambda, ",", mu, "} vs tableaux"));
    }
}

void ac9_oracle(Tally& t)
{
    // the products themselves against lattice-word counts
    for (int n = 1; n <= 2; ++n)
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                for (const auto& x : partition_tuples_of_total(n, p))
                    for (const auto& y : partition_tuples_of_total(n, q)) {
                        const auto prod = multiply(TensorSymElt::schur(x, 6), TensorSymElt::schur(y, 6));
                        bool ok = true;
                        for (const auto& [z, c] : prod.terms()) {
                            Rational want = 1;
                            for (int i = 0; i < n; ++i)
                                want *= oracle::lr(x[i], y[i], z[i]);
                            ok = ok && c == want;
                        }
                        // and the series of the product with tabloid characters
                        oracle::Series direct{n, 6, {}};
                        for (const auto& [z, c] : prod.terms())
                            for (const auto& [e, v] : oracle::schur_series(z, 6).terms)
                                direct.add(e, c * v);
                        const auto lhs = oracle::schur_series(x, 6).times(oracle::schur_series(y, 6));
                        t.check(ok && direct.terms == lhs.terms, cat("s", x, " s", y, " vs oracle series"));
                    }
}

void ac10_oracle(Tally& t)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : compositions_up_to(n, 4))
            for (const auto& b : compositions_up_to(n, 4)) {
                const bool brute = !oracle::morphisms(oracle::Cat::FI, 1, b, a).empty();
                t.check(hom_exists(CategoryFlavor::fi(), b, a) == brute, cat("existence vs brute force, b=", b, " a=", a));
                t.check(dominance_leq(b.reversed(), a.reversed()) == brute, cat("dominance vs brute force, b=", b, " a=", a));
            }
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::vector<const char*> suites;
    void (*extra)(Tally&);
};

}  // namespace

// With arguments, only the named criteria run (e.g. "acceptance AC3 AC4").
int main(int argc, char** argv)
{
    const std::vector<std::string> only(argv + 1, argv + argc);
    const std::vector<Criterion> criteria = {
        {"AC1", "Hom-space equivalence", 60, {"hom-equivalence"}, ac1_oracle},
        {"AC2", "Hilbert series of A_d", 10, {"hilbert-ad"}, ac2_oracle},
        {"AC3", "kernel formula", 120, {"kernel"}, nullptr},
        {"AC4", "f_sigma functorial, monoidal, equivariant", 120, {"fsigma"}, nullptr},
        {"AC5", "Day convolution", 30, {"day"}, ac5_oracle},
        {"AC6", "ideal lattice and prime chain", 30, {"ideal-lattice", "prime-chain"}, nullptr},
        {"AC7", "characters and LR coefficients", 60, {"characters"}, ac7_oracle},
        {"AC8", "free rank n+1", 30, {"free-rank"}, nullptr},
        {"AC9", "multiplicativity", 60, {"multiplicativity"}, ac9_oracle},
        {"AC10", "dominance and inwards finiteness", 30, {"dominance"}, ac10_oracle},
        {"AC11", "Phi_d on presentations", 30, {"phi"}, nullptr},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            for (const char* name : c.suites)
                t.absorb(find_suite(name)->run(RunConfig{}));
            if (c.extra)
                c.extra(t);
        } catch (const std::exception& e) {
            t.check(false, cat("exception: ", e.what()));
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.check(secs < c.budget_seconds, cat("took ", secs, " s, budget ", c.budget_seconds, " s"));
        const bool ok = t.failed == 0;
        failures += !ok;
        std::printf("%-5s %s  %s (%lld checks, %.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, static_cast<long long>(t.checks), secs);
        for (const auto& n : t.notes)
            std::printf("      %s\n", n.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
