#include <doctest.h>

#include <numeric>

#include "test_oracles.hpp"
#include "unidescent/dlmult.hpp"
#include "unidescent/errors.hpp"

using namespace unidescent;

namespace {
TableStore& shared_store() {
    static TableStore store;
    return store;
}

// inner_sum as the literal group sum over S_{n-|mu'|} (proof re-indexing).
Int brute_inner_sum(TableStore& store, const Partition& lam, const Partition& mu_prime) {
    const int n = lam.size();
    const int j = n - mu_prime.size();
    auto table = store.get(n);
    const int row = table->index_of(transpose(lam));
    std::vector<int> perm(static_cast<size_t>(j));
    std::iota(perm.begin(), perm.end(), 0);
    Int sum = 0;
    do {
        std::vector<bool> seen(static_cast<size_t>(j), false);
        std::vector<int> cycles;
        for (int s = 0; s < j; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            int len = 0, at = s;
            while (!seen[static_cast<size_t>(at)]) {
                seen[static_cast<size_t>(at)] = true;
                at = perm[static_cast<size_t>(at)];
                ++len;
            }
            cycles.push_back(len);
        }
        sum += table->value(row,
                            table->index_of(union_parts(mu_prime, Partition::from_unsorted(cycles))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return exact_div(factorial(n), centralizer_order(mu_prime) * factorial(j)) * sum;
}
}  // namespace

TEST_CASE("unipotent decomposition coefficients") {
    TableStore& store = shared_store();
    auto d1 = unipotent_decomposition(store, Partition({1}));
    CHECK(d1.coeff.at(Partition({1})) == 1);

    auto d2 = unipotent_decomposition(store, Partition({2}));
    CHECK(d2.coeff.at(Partition({1, 1})) == Rat(1, 2));
    CHECK(d2.coeff.at(Partition({2})) == Rat(1, 2));

    auto d11 = unipotent_decomposition(store, Partition({1, 1}));
    CHECK(d11.coeff.at(Partition({1, 1})) == Rat(1, 2));
    CHECK(d11.coeff.at(Partition({2})) == Rat(-1, 2));

    // orthonormality pullback: sum of z_mu coeff^2 = 1
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            auto dec = unipotent_decomposition(store, lam);
            Rat total = 0;
            for (const auto& [mu, c] : dec.coeff) total += Rat(centralizer_order(mu)) * c * c;
            CHECK(total == 1);
        }
}

TEST_CASE("inner_sum examples") {
    TableStore& store = shared_store();
    CHECK(inner_sum(store, Partition({2, 1}), Partition()) == 0);
    for (int n = 2; n <= 5; ++n) CHECK(inner_sum(store, Partition({n}), Partition()) == 0);

    // |mu'| = n leaves the single mu* = [] term
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                Int expected = exact_div(factorial(n), centralizer_order(mu)) *
                               mn_character(transpose(lam), mu);
                CHECK(inner_sum(store, lam, mu) == expected);
            }

    CHECK_THROWS_AS(inner_sum(store, Partition({2}), Partition({2, 1})), constraint_error);
}

TEST_CASE("inner_sum equals the literal S_j sum (n <= 7)") {
    TableStore& store = shared_store();
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int s = 0; s <= n; ++s)
                for (const Partition& mu_prime : partitions_of(s))
                    CHECK(inner_sum(store, lam, mu_prime) ==
                          brute_inner_sum(store, lam, mu_prime));
}

TEST_CASE("inner_sum vanishes below the stratum (n <= 6 here)") {
    TableStore& store = shared_store();
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int s = 0; s < n - lam.rows(); ++s)
                for (const Partition& mu_prime : partitions_of(s))
                    CHECK(inner_sum(store, lam, mu_prime) == 0);
}

TEST_CASE("dl_multiplicity hand example and closed form") {
    TableStore& store = shared_store();
    CHECK(dl_multiplicity(store, Partition({1}), Partition()) == -1);

    CHECK(closed_form(store, Partition({3, 2, 1}), Partition({2, 1})) == 0);
    CHECK(closed_form(store, Partition({2, 1}), Partition({1})) == 1);
    CHECK(closed_form(store, Partition({1, 1}), Partition()) == 1);
    CHECK_THROWS_AS(closed_form(store, Partition({3, 1}), Partition({1})), constraint_error);

    // On the boundary stratum the ratio to the closed form is (-1)^k.
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const int k = lam.rows();
            int sign = (k % 2 == 0) ? 1 : -1;
            for (const Partition& mu2 : partitions_of(n - k))
                CHECK(dl_multiplicity(store, lam, mu2) == sign * closed_form(store, lam, mu2));
        }

    // Below the stratum everything vanishes.
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int s = 0; s < n - lam.rows(); ++s)
                for (const Partition& mu2 : partitions_of(s))
                    CHECK(dl_multiplicity(store, lam, mu2) == 0);
}

TEST_CASE("induced multiplicities: covered regimes") {
    TableStore& store = shared_store();

    MultiplicityResult hit = induced_multiplicity(store, Partition({3, 2, 1}),
                                                  InducedDatum{2, Partition({2, 1})});
    CHECK(hit.value == 1);
    CHECK(hit.covered);
    CHECK(hit.case_tag == CaseTag::first_descent);

    MultiplicityResult miss = induced_multiplicity(store, Partition({3, 2, 1}),
                                                   InducedDatum{2, Partition({3})});
    CHECK(miss.value == 0);
    CHECK(miss.covered);

    MultiplicityResult below = induced_multiplicity(store, Partition({4, 3, 2}),
                                                    InducedDatum{4, Partition({2})});
    CHECK(below.value == 0);
    CHECK(below.covered);
    CHECK(below.case_tag == CaseTag::vanishing_below);

    CHECK_THROWS_AS(induced_multiplicity(store, Partition({3, 2, 1}),
                                         InducedDatum{0, Partition({3, 2, 1, 1})}),
                    constraint_error);
    CHECK_THROWS_AS(induced_multiplicity(store, Partition({3, 2, 1}),
                                         InducedDatum{2, Partition({2})}),
                    constraint_error);
}

TEST_CASE("induced raw equals the signed descent indicator on the stratum") {
    TableStore& store = shared_store();
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const int k = lam.rows();
            if (k % 2 == 0) continue;  // Bessel parity forces k odd on the stratum
            const int m = n - k;
            const Partition expected = remove_first_column(lam);
            for (const Partition& nu : partitions_of(m)) {
                MultiplicityResult r =
                    induced_multiplicity(store, lam, InducedDatum{(n - m + 1) / 2, nu});
                Int want = (nu == expected) ? 1 : 0;
                CHECK(r.raw == -want);  // (-1)^k with k odd
                CHECK(r.value == want);
                CHECK(r.covered);
            }
        }
}
