#include "unidescent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "unidescent/dlmult.hpp"
#include "unidescent/errors.hpp"
#include "unidescent/ggp.hpp"

namespace unidescent {

namespace {

struct SuiteContext {
    TableStore& store;
    std::string counterexample;

    bool fail(const std::string& what) {
        if (counterexample.empty()) counterexample = what;
        return false;
    }
};

int effective_bound(int spec_bound, int max_n) {
    return max_n > 0 ? std::min(spec_bound, max_n) : spec_bound;
}

// ---- criterion 1: mn_character agrees with the Kostka/power-sum oracle ----

bool suite_oracle(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(7, max_n);
    for (int n = 0; n <= bound; ++n) {
        auto table = ctx.store.get(n);
        for (const Partition& lam : table->partitions())
            for (const Partition& mu : table->partitions()) {
                Int mn = table->value(lam, mu);
                Int oracle = oracle_character(lam, mu, bound);
                if (mn != oracle)
                    return ctx.fail("lambda=" + lam.str() + " mu=" + mu.str() + ": mn=" +
                                    mn.str() + " oracle=" + oracle.str());
            }
    }
    return true;
}

// ---- criterion 2: first and second orthogonality ----

bool suite_orthogonality(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(8, max_n);
    for (int n = 0; n <= bound; ++n) {
        auto table = ctx.store.get(n);
        const int p = table->classes();
        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                Rat first = 0;
                for (int j = 0; j < p; ++j)
                    first += Rat(table->value(a, j) * table->value(b, j)) /
                             Rat(table->centralizer(j));
                if (first != Rat(a == b ? 1 : 0))
                    return ctx.fail("first orthogonality, n=" + std::to_string(n) + " rows " +
                                    table->partitions()[a].str() + ", " +
                                    table->partitions()[b].str());
            }
        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                Int second = 0;
                for (int l = 0; l < p; ++l) second += table->value(l, a) * table->value(l, b);
                Int want = (a == b) ? table->centralizer(a) : Int(0);
                if (second != want)
                    return ctx.fail("second orthogonality, n=" + std::to_string(n) +
                                    " columns " + table->partitions()[a].str() + ", " +
                                    table->partitions()[b].str());
            }
    }
    return true;
}

// ---- criterion 3: branching lemma ----

bool suite_branching(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(8, max_n);
    for (int n = 0; n <= bound; ++n) {
        auto table = ctx.store.get(n);
        for (const Partition& lam : table->partitions()) {
            const Partition expected = remove_first_row(lam);
            bool ok = true;
            for_each_partition(n - lam.part(0), [&](const Partition& nu) {
                if (!ok) return;
                Int got = restriction_multiplicity(ctx.store, lam, nu, lam.part(0));
                Int want = (nu == expected) ? 1 : 0;
                if (got != want) {
                    ctx.fail("restriction lambda=" + lam.str() + " nu=" + nu.str() + " m=" +
                             std::to_string(lam.part(0)) + ": got " + got.str() + ", want " +
                             want.str());
                    ok = false;
                }
            });
            if (!ok) return false;
            // <sigma_lambda, 1>_{S_m} = 0 whenever m exceeds the first row
            const int lam_row = table->index_of(lam);
            for (int m = lam.part(0) + 1; m <= n; ++m) {
                Rat pairing = 0;
                for_each_partition(m, [&](const Partition& tau) {
                    Partition cls = tau;
                    for (int i = 0; i < n - m; ++i) cls = union_parts(cls, Partition({1}));
                    pairing += Rat(table->value(lam_row, table->index_of(cls))) /
                               Rat(centralizer_order(tau));
                });
                if (pairing != 0)
                    return ctx.fail("<sigma_" + lam.str() + ", 1>_{S_" + std::to_string(m) +
                                    "} != 0");
            }
        }
    }
    return true;
}

// ---- criterion 4: vanishing identity below the boundary stratum ----

bool suite_vanishing(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(8, max_n);
    for (int n = 0; n <= bound; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int s = 0; s < n - lam.rows(); ++s) {
                bool ok = true;
                for_each_partition(s, [&](const Partition& mu_prime) {
                    if (!ok) return;
                    Int value = inner_sum(ctx.store, lam, mu_prime);
                    if (value != 0) {
                        ctx.fail("inner_sum(" + lam.str() + ", " + mu_prime.str() + ") = " +
                                 value.str());
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
    return true;
}

// ---- criterion 5: closed form on |mu2| = n - k, one sign per (n, k) ----

bool suite_closed_form(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(8, max_n);
    for (int n = 0; n <= bound; ++n) {
        std::map<int, int> stratum_sign;  // k -> sign of dl/closed_form
        for (const Partition& lam : partitions_of(n)) {
            const int k = lam.rows();
            bool ok = true;
            for_each_partition(n - k, [&](const Partition& mu2) {
                if (!ok) return;
                Int s = dl_multiplicity(ctx.store, lam, mu2);
                Int cf = closed_form(ctx.store, lam, mu2);
                if (abs(s) != abs(cf)) {
                    ctx.fail("lambda=" + lam.str() + " mu2=" + mu2.str() + ": |dl|=" +
                             Int(abs(s)).str() + " but |closed_form|=" + Int(abs(cf)).str());
                    ok = false;
                    return;
                }
                if (cf == 0) return;
                int sign = (s == cf) ? 1 : -1;
                auto [it, inserted] = stratum_sign.emplace(k, sign);
                if (!inserted && it->second != sign) {
                    ctx.fail("inconsistent sign at n=" + std::to_string(n) + " k=" +
                             std::to_string(k) + " (lambda=" + lam.str() + " mu2=" + mu2.str() +
                             ")");
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

// ---- criterion 6: Bessel theorem ----

bool suite_bessel(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(8, max_n);
    for (int n = 1; n <= bound; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const int k = lam.rows();
            if (k % 2 == 1 && n - k < n) {
                const Partition expected = remove_first_column(lam);
                bool ok = true;
                for_each_partition(n - k, [&](const Partition& nu) {
                    if (!ok) return;
                    MultiplicityResult r = bessel_multiplicity(ctx.store, lam, nu);
                    Int want = (nu == expected) ? 1 : 0;
                    if (r.value != want || !r.covered) {
                        ctx.fail("bessel(" + lam.str() + ", " + nu.str() + ") = " +
                                 r.value.str() + " (covered=" + (r.covered ? "1" : "0") +
                                 "), want " + want.str());
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
            for (int m = n - k - 1; m >= 0; --m) {
                if ((n - m) % 2 == 0) continue;
                bool ok = true;
                for_each_partition(m, [&](const Partition& nu) {
                    if (!ok) return;
                    MultiplicityResult r = bessel_multiplicity(ctx.store, lam, nu);
                    if (r.value != 0 || !r.covered ||
                        r.case_tag != CaseTag::vanishing_below) {
                        ctx.fail("bessel(" + lam.str() + ", " + nu.str() +
                                 ") below n-k: value " + r.value.str());
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
        }
    return true;
}

// ---- criterion 7: theta against brute-force predicate; uniqueness ----

// Literal re-evaluation of the 2-transversality of the transposed diagrams,
// sharing no code with the partitions module.
bool brute_theta(const Partition& lam, const Partition& lam_prime) {
    auto transpose_raw = [](const Partition& p) {
        std::vector<int> cols;
        for (int j = 1; j <= (p.rows() ? p.parts()[0] : 0); ++j) {
            int c = 0;
            for (int part : p.parts())
                if (part >= j) ++c;
            cols.push_back(c);
        }
        return cols;
    };
    std::vector<int> a = transpose_raw(lam), b = transpose_raw(lam_prime);
    const size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    std::map<int, int> common_counts;
    for (size_t i = 0; i < len; ++i) {
        if (std::abs(a[i] - b[i]) > 1) return false;
        if (a[i] == b[i] && a[i] > 0) ++common_counts[a[i]];
    }
    for (const auto& [value, count] : common_counts)
        if (count % 2 != 0) return false;
    return true;
}

bool suite_theta(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(10, max_n);
    for (int n = 0; n <= bound; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int np = 0; np <= bound; ++np)
                for (const Partition& lp : partitions_of(np)) {
                    int got = theta_multiplicity(lam, lp);
                    int want = brute_theta(lam, lp) ? 1 : 0;
                    if (got != want)
                        return ctx.fail("theta_multiplicity(" + lam.str() + ", " + lp.str() +
                                        ") = " + std::to_string(got) + ", brute force says " +
                                        std::to_string(want));
                }
    for (int n = 0; n <= bound; ++n)
        for (const Partition& lam : partitions_of(n)) {
            ThetaLift at_boundary = theta_lift(lam, n - lam.part(0));
            if (at_boundary.components.size() != 1 ||
                at_boundary.components[0] != remove_first_row(lam))
                return ctx.fail("theta_lift(" + lam.str() + ", " +
                                std::to_string(n - lam.part(0)) + ") is not exactly {" +
                                remove_first_row(lam).str() + "}");
            for (int np = 0; np < n - lam.part(0); ++np)
                if (!theta_lift(lam, np).components.empty())
                    return ctx.fail("theta_lift(" + lam.str() + ", " + std::to_string(np) +
                                    ") should vanish");
        }
    return true;
}

// ---- criterion 8: see-saw agreement and mu0 independence ----

bool suite_seesaw(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(6, max_n);
    for (int n = 1; n <= bound; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const int k = lam.rows();
            for (int m = n - 2; m >= 0; m -= 2) {
                if (!(m < n - k || (k % 2 == 0 && m == n - k))) continue;  // covered cases only
                bool ok = true;
                for_each_partition(m, [&](const Partition& nu) {
                    if (!ok) return;
                    MultiplicityResult decl = fj_multiplicity(ctx.store, lam, nu,
                                                              FjMode::declarative);
                    if (!decl.covered) {
                        ctx.fail("fj declarative not covered at lambda=" + lam.str() + " nu=" +
                                 nu.str());
                        ok = false;
                        return;
                    }
                    const int base = std::max(lam.part(0), nu.part(0));
                    for (int shift = 0; shift <= 2; ++shift) {
                        MultiplicityResult ss = fj_multiplicity(ctx.store, lam, nu,
                                                                FjMode::seesaw, base + shift);
                        if (ss.value != decl.value) {
                            ctx.fail("fj(" + lam.str() + ", " + nu.str() + "): declarative " +
                                     decl.value.str() + " vs seesaw(mu0=" +
                                     std::to_string(base + shift) + ") " + ss.value.str());
                            ok = false;
                            return;
                        }
                    }
                });
                if (!ok) return false;
            }
        }
    return true;
}

// ---- criterion 9: cuspidal chain on staircase partitions ----

bool suite_cuspidal(SuiteContext& ctx, int max_n) {
    auto staircase = [](int k) {
        std::vector<int> parts;
        for (int i = k; i >= 1; --i) parts.push_back(i);
        return Partition(parts);
    };
    for (int k = 1; k <= 4; ++k) {
        const int n = k * (k + 1) / 2;
        if (max_n > 0 && n > max_n) break;
        const Partition lam = staircase(k);
        FirstOccurrence fo = first_occurrence_pair(ctx.store, lam);
        const DescentResult& det = (k % 2 == 1) ? fo.bessel : fo.fourier_jacobi;
        const DescentResult& other = (k % 2 == 1) ? fo.fourier_jacobi : fo.bessel;
        const int want_ell0 = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
        if (!det.determined || !det.ell0 || *det.ell0 != want_ell0)
            return ctx.fail("staircase k=" + std::to_string(k) + ": ell0 not " +
                            std::to_string(want_ell0));
        if (!det.descent || *det.descent != staircase(k - 1))
            return ctx.fail("staircase k=" + std::to_string(k) + ": descent is not pi_" +
                            std::to_string(k - 1));
        if (other.determined)
            return ctx.fail("staircase k=" + std::to_string(k) +
                            ": wrong-parity model claims determination");
        if (!det.verified)
            return ctx.fail("staircase k=" + std::to_string(k) + ": engine sweep did not run");
        if (fo.k_reconstructed != k)
            return ctx.fail("staircase k=" + std::to_string(k) + ": reconstruction gave " +
                            std::to_string(fo.k_reconstructed));
    }
    return true;
}

// ---- criterion 10: inner_sum against the literal group-element sum ----

bool suite_inner_sum_oracle(SuiteContext& ctx, int max_n) {
    const int bound = effective_bound(6, max_n);
    for (int n = 0; n <= bound; ++n) {
        auto table = ctx.store.get(n);
        for (const Partition& lam : partitions_of(n)) {
            const int lam_t_row = table->index_of(transpose(lam));
            for (int s = 0; s <= n; ++s) {
                bool ok = true;
                for_each_partition(s, [&](const Partition& mu_prime) {
                    if (!ok) return;
                    const int j = n - s;
                    // literal sum over all j! permutations
                    std::vector<int> perm(static_cast<size_t>(j));
                    std::iota(perm.begin(), perm.end(), 0);
                    Int group_sum = 0;
                    do {
                        std::vector<bool> seen(static_cast<size_t>(j), false);
                        std::vector<int> cycles;
                        for (int start = 0; start < j; ++start) {
                            if (seen[static_cast<size_t>(start)]) continue;
                            int len = 0, at = start;
                            while (!seen[static_cast<size_t>(at)]) {
                                seen[static_cast<size_t>(at)] = true;
                                at = perm[static_cast<size_t>(at)];
                                ++len;
                            }
                            cycles.push_back(len);
                        }
                        Partition type =
                            union_parts(mu_prime, Partition::from_unsorted(cycles));
                        group_sum += table->value(lam_t_row, table->index_of(type));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    Int factor = exact_div(factorial(n),
                                           centralizer_order(mu_prime) * factorial(j));
                    Int brute = factor * group_sum;
                    Int fast = inner_sum(ctx.store, lam, mu_prime);
                    if (brute != fast) {
                        ctx.fail("inner_sum(" + lam.str() + ", " + mu_prime.str() +
                                 ") = " + fast.str() + " but the S_" + std::to_string(j) +
                                 " sum gives " + brute.str());
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
        }
    }
    return true;
}

struct Suite {
    int criterion;
    const char* name;
    const char* description;
    bool (*run)(SuiteContext&, int);
};

const Suite kSuites[] = {
    {1, "oracle", "character oracle: Murnaghan-Nakayama vs Kostka/power-sum (n <= 7)",
     suite_oracle},
    {2, "orthogonality", "first and second orthogonality relations (n <= 8)",
     suite_orthogonality},
    {3, "branching", "branching lemma: first-row restriction and trivial pairings (n <= 8)",
     suite_branching},
    {4, "vanishing", "inner_sum vanishes below the n-k stratum (n <= 8)", suite_vanishing},
    {5, "closedform", "closed form |dl| = |sigma| with one sign per (n,k) (n <= 8)",
     suite_closed_form},
    {6, "bessel", "Bessel theorem: descent indicator and vanishing (n <= 8)", suite_bessel},
    {7, "theta", "theta lifts: brute-force predicate, uniqueness, vanishing (n <= 10)",
     suite_theta},
    {8, "seesaw", "Fourier-Jacobi declarative vs see-saw, mu0 window (n <= 6)", suite_seesaw},
    {9, "cuspidal", "cuspidal chain on staircase partitions (k <= 4)", suite_cuspidal},
    {10, "innersum", "inner_sum against the literal S_j group sum (n <= 6)",
     suite_inner_sum_oracle},
};

}  // namespace

std::vector<std::string> verification_suite_names() {
    std::vector<std::string> names;
    for (const Suite& s : kSuites) names.emplace_back(s.name);
    return names;
}

int run_verification(TableStore& store, const VerifyOptions& options, std::ostream& out) {
    std::vector<const Suite*> selected;
    if (options.suites.empty()) {
        for (const Suite& s : kSuites) selected.push_back(&s);
    } else {
        for (const std::string& name : options.suites) {
            const Suite* found = nullptr;
            for (const Suite& s : kSuites)
                if (name == s.name) found = &s;
            if (!found) throw parse_error("unknown verification suite: " + name);
            selected.push_back(found);
        }
    }
    int failures = 0;
    for (const Suite* suite : selected) {
        SuiteContext ctx{store, {}};
        auto start = std::chrono::steady_clock::now();
        bool passed = false;
        try {
            passed = suite->run(ctx, options.max_n);
        } catch (const std::exception& e) {
            ctx.counterexample = std::string("exception: ") + e.what();
        }
        auto seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "[" << std::setw(2) << suite->criterion << "/" << std::size(kSuites) << "] "
             << suite->description << " ... " << (passed ? "PASS" : "FAIL") << " ("
             << std::fixed << std::setprecision(2) << seconds << "s)";
        out << line.str() << "\n";
        if (!passed) {
            ++failures;
            out << "        first counterexample: " << ctx.counterexample << "\n";
        }
    }
    if (failures == 0)
        out << "all " << selected.size() << " suite(s) passed\n";
    else
        out << failures << " of " << selected.size() << " suite(s) FAILED\n";
    return failures;
}

}  // namespace unidescent
