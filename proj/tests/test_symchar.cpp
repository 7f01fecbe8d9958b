#include <doctest.h>

#include "test_oracles.hpp"
#include "unidescent/errors.hpp"
#include "unidescent/symchar.hpp"

using namespace unidescent;

TEST_CASE("mn_character small values") {
    CHECK(mn_character(Partition(), Partition()) == 1);
    CHECK(mn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), constraint_error);

    // trivial character is 1 on every class
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(mn_character(Partition({n}), mu) == 1);

    // sign character equals perm_sign
    for (int n = 1; n <= 6; ++n) {
        Partition sign_label(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& mu : partitions_of(n))
            CHECK(mn_character(sign_label, mu) == perm_sign(mu));
    }

    // standard character: fixed points minus one
    for (int n = 2; n <= 7; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(mn_character(Partition({n - 1, 1}), mu) == mu.multiplicity(1) - 1);
}

TEST_CASE("oracle_character basics and bound") {
    CHECK(oracle_character(Partition({2}), Partition({1, 1})) == 1);
    CHECK(oracle_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK_THROWS_AS(oracle_character(Partition({8, 1}), Partition({9})), oracle_bound_error);
    CHECK(oracle_character(Partition({8, 1}), Partition({9}), 9) ==
          mn_character(Partition({8, 1}), Partition({9})));
}

TEST_CASE("oracle agrees with Murnaghan-Nakayama through n = 6") {
    // the full n = 7 sweep is acceptance criterion 1
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(oracle_character(lam, mu) == mn_character(lam, mu));
}

TEST_CASE("table lookups, transpose-sign identity, degrees") {
    TableStore store;
    for (int n = 0; n <= 8; ++n) {
        auto table = store.get(n);
        CHECK(table->classes() == static_cast<int>(partitions_of(n).size()));
        const int id_class = table->index_of(
            n == 0 ? Partition() : Partition(std::vector<int>(static_cast<size_t>(n), 1)));
        for (const Partition& lam : table->partitions()) {
            const int row = table->index_of(lam);
            const int row_t = table->index_of(transpose(lam));
            for (int j = 0; j < table->classes(); ++j) {
                int sign = perm_sign(table->partitions()[static_cast<size_t>(j)]);
                CHECK(table->value(row_t, j) == sign * table->value(row, j));
            }
            CHECK(table->value(row, id_class) == test_oracles::hook_length_degree(lam));
        }
    }
    CHECK_THROWS_AS(store.get(3)->index_of(Partition({4})), constraint_error);
}

TEST_CASE("inner products of class functions") {
    TableStore store;
    auto table = store.get(3);
    ClassFunction triv = irreducible_class_function(*table, Partition({3}));
    ClassFunction stdchar = irreducible_class_function(*table, Partition({2, 1}));
    ClassFunction sign = irreducible_class_function(*table, Partition({1, 1, 1}));
    CHECK(inner_product(stdchar, triv) == 0);
    CHECK(inner_product(sign, sign) == 1);
    CHECK(inner_product(triv, triv) == 1);

    for (int n = 0; n <= 8; ++n) {
        auto t = store.get(n);
        for (const Partition& lam : t->partitions()) {
            ClassFunction f = irreducible_class_function(*t, lam);
            CHECK(inner_product(f, f) == 1);
        }
    }

    ClassFunction wrong(4);
    CHECK_THROWS_AS(inner_product(triv, wrong), constraint_error);
    CHECK_THROWS_AS(wrong.set(Partition({3}), Rat(1)), constraint_error);
}

TEST_CASE("restriction multiplicities") {
    TableStore store;
    // removing the first row is the unique trivial-on-S_{lambda_1} component
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const Partition expected = remove_first_row(lam);
            for (const Partition& nu : partitions_of(n - lam.part(0)))
                CHECK(restriction_multiplicity(store, lam, nu, lam.part(0)) ==
                      (nu == expected ? 1 : 0));
        }
    // m = 0 restriction is plain irreducibility
    for (const Partition& lam : partitions_of(5))
        for (const Partition& nu : partitions_of(5))
            CHECK(restriction_multiplicity(store, lam, nu, 0) == (nu == lam ? 1 : 0));
    // above the first row everything pairs to zero against the trivial
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int m = lam.part(0) + 1; m <= n; ++m)
                for (const Partition& nu : partitions_of(n - m))
                    CHECK(restriction_multiplicity(store, lam, nu, m) == 0);

    CHECK_THROWS_AS(restriction_multiplicity(store, Partition({3, 1}), Partition({1}), 2),
                    constraint_error);
    CHECK_THROWS_AS(restriction_multiplicity(store, Partition({3, 1}), Partition({1}), 5),
                    constraint_error);
}

TEST_CASE("table store preload and dirty tracking") {
    TableStore store;
    CHECK_FALSE(store.dirty());
    store.preload(CharacterTable::build(3));
    CHECK_FALSE(store.dirty());
    auto t3 = store.get(3);
    CHECK_FALSE(store.dirty());  // served from the preload
    auto t4 = store.get(4);
    CHECK(store.dirty());
    CHECK(store.levels() == std::vector<int>{3, 4});
    CHECK(t3->value(Partition({2, 1}), Partition({3})) == -1);
    CHECK(t4->level() == 4);
}
