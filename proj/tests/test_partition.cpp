#include <doctest.h>

#include <set>

#include "test_oracles.hpp"
#include "unidescent/errors.hpp"
#include "unidescent/partition.hpp"

using namespace unidescent;

TEST_CASE("construction validates shape") {
    CHECK(Partition().empty());
    CHECK(Partition({3, 2, 1}).size() == 6);
    CHECK(Partition({3, 2, 1}).rows() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), constraint_error);
    CHECK_THROWS_AS(Partition({2, 0}), constraint_error);
    CHECK(Partition::from_unsorted({0, 2, 1, 2}) == Partition({2, 2, 1}));
}

TEST_CASE("text round trip") {
    CHECK(Partition::parse("3,2,1").str() == "3,2,1");
    CHECK(Partition::parse("[]").str() == "[]");
    CHECK(Partition::parse(" 4, 2 ,2") == Partition({4, 2, 2}));
    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,3"), parse_error);
    CHECK_THROWS_AS(Partition::parse("a,1"), parse_error);
    CHECK_THROWS_AS(Partition::parse("3,,1"), parse_error);
}

TEST_CASE("transpose examples and involution") {
    CHECK(transpose(Partition()) == Partition());
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(transpose(Partition({3, 2, 1})) == Partition({3, 2, 1}));
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(transpose(transpose(lam)) == lam);
}

TEST_CASE("row and column removal") {
    CHECK(remove_first_column(Partition({3, 2, 1})) == Partition({2, 1}));
    CHECK(remove_first_column(Partition({1, 1, 1})) == Partition());
    CHECK(remove_first_column(Partition({4, 2, 2, 1})) == Partition({3, 1, 1}));
    CHECK(remove_first_row(Partition({3, 2, 1})) == Partition({2, 1}));
    CHECK(remove_first_row(Partition({5})) == Partition());
    CHECK(remove_first_row(Partition({2, 2})) == Partition({2}));

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CHECK(remove_first_column(lam).size() == lam.size() - lam.rows());
            CHECK(remove_first_row(lam).size() == lam.size() - lam.part(0));
            CHECK(remove_first_row(transpose(lam)) == transpose(remove_first_column(lam)));
        }
}

TEST_CASE("union and containment") {
    CHECK(union_parts(Partition({2, 1}), Partition({2})) == Partition({2, 2, 1}));
    CHECK(union_parts(Partition(), Partition({4, 1})) == Partition({4, 1}));
    CHECK(union_parts(Partition({3}), Partition({1, 1})) == Partition({3, 1, 1}));
    CHECK(is_submultiset(Partition({2, 1}), Partition({2, 1, 1})));
    CHECK_FALSE(is_submultiset(Partition({2, 2}), Partition({2, 1, 1})));
    CHECK(is_submultiset(Partition(), Partition({5, 5})));
}

TEST_CASE("sub_multisets enumerates each sub-multiset once, graded") {
    auto subs = sub_multisets(Partition({1, 1}));
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == Partition());
    CHECK(subs[1] == Partition({1}));
    CHECK(subs[2] == Partition({1, 1}));

    subs = sub_multisets(Partition({2, 1}));
    REQUIRE(subs.size() == 4);
    CHECK(subs[1] == Partition({1}));
    CHECK(subs[2] == Partition({2}));

    CHECK(sub_multisets(Partition({2, 1, 1})).size() == 6);  // (1+1)(2+1)

    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : partitions_of(n)) {
            auto all = sub_multisets(mu);
            std::set<Partition> dedup(all.begin(), all.end());
            CHECK(dedup.size() == all.size());
            size_t expected = 1;
            int i = 0;
            while (i < mu.rows()) {
                int j = i;
                while (j < mu.rows() && mu.parts()[j] == mu.parts()[i]) ++j;
                expected *= static_cast<size_t>(j - i + 1);
                i = j;
            }
            CHECK(all.size() == expected);
            for (size_t t = 1; t < all.size(); ++t) {
                bool graded = all[t - 1].size() < all[t].size() ||
                              (all[t - 1].size() == all[t].size() && all[t] < all[t - 1]);
                CHECK(graded);
            }
        }
}

TEST_CASE("binom_embeddings") {
    CHECK(binom_embeddings(Partition({2, 1, 1}), Partition({2, 1})) == 2);
    CHECK(binom_embeddings(Partition({3, 3, 1}), Partition({3})) == 2);
    CHECK(binom_embeddings(Partition({4, 2, 2}), Partition({4, 2, 2})) == 1);
    CHECK(binom_embeddings(Partition(), Partition()) == 1);
    CHECK_THROWS_AS(binom_embeddings(Partition({2, 1}), Partition({1, 1})), constraint_error);
}

TEST_CASE("centralizer orders and class sizes") {
    CHECK(centralizer_order(Partition({1, 1, 1})) == 6);
    CHECK(centralizer_order(Partition({3})) == 3);
    CHECK(centralizer_order(Partition({2, 1})) == 2);
    CHECK(centralizer_order(Partition()) == 1);

    // classes partition S_n
    for (int n = 0; n <= 10; ++n) {
        Int total = 0;
        for_each_partition(n, [&](const Partition& mu) { total += conjugacy_class_size(mu); });
        CHECK(total == factorial(n));
    }

    // multiplicativity against embeddings, all pairs with |alpha|+|beta| <= 10
    for (int a = 0; a <= 10; ++a)
        for (const Partition& alpha : partitions_of(a))
            for (int b = 0; a + b <= 10; ++b)
                for (const Partition& beta : partitions_of(b)) {
                    Partition u = union_parts(alpha, beta);
                    CHECK(centralizer_order(u) == centralizer_order(alpha) *
                                                      centralizer_order(beta) *
                                                      binom_embeddings(u, alpha));
                }
}

TEST_CASE("perm_sign") {
    CHECK(perm_sign(Partition({1, 1, 1})) == 1);
    CHECK(perm_sign(Partition({2})) == -1);
    CHECK(perm_sign(Partition({3, 2})) == -1);  // (-1)^(5-2)
    CHECK(perm_sign(Partition()) == 1);
    // product of per-cycle signs
    for (int n = 0; n <= 9; ++n)
        for (const Partition& mu : partitions_of(n)) {
            int prod = 1;
            for (int part : mu.parts())
                if (part % 2 == 0) prod = -prod;
            CHECK(perm_sign(mu) == prod);
        }
}

TEST_CASE("close, even, meet, transversality") {
    CHECK(is_close(Partition({2, 2}), Partition({2, 1})));
    CHECK_FALSE(is_close(Partition({3}), Partition({1})));
    CHECK(is_close(Partition(), Partition()));
    CHECK(is_close(Partition({1}), Partition()));

    CHECK(is_even(Partition()));
    CHECK(is_even(Partition({3, 3, 1, 1})));
    CHECK_FALSE(is_even(Partition({2, 1, 1})));

    CHECK(meet(Partition({3, 2, 1}), Partition({3, 1, 1})) == Partition({3, 1}));
    CHECK(meet(Partition({2, 1}), Partition({1})) == Partition());

    CHECK(is_2transverse(Partition({1, 1}), Partition({1, 1})));
    CHECK(is_2transverse(Partition({2, 1}), Partition({1})));
    CHECK_FALSE(is_2transverse(Partition({2}), Partition({2})));  // meet [2] is odd

    // transverse implies 2-transverse
    for (int a = 0; a <= 7; ++a)
        for (const Partition& p : partitions_of(a))
            for (int b = 0; b <= 7; ++b)
                for (const Partition& q : partitions_of(b))
                    if (is_transverse(p, q)) CHECK(is_2transverse(p, q));
}

TEST_CASE("transpose pairs under row removal are transverse, uniquely 2-transverse") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const Partition target = remove_first_row(lam);
            CHECK(is_transverse(transpose(lam), transpose(target)));
            int hits = 0;
            for (const Partition& nu : partitions_of(n - lam.part(0))) {
                if (is_2transverse(transpose(lam), transpose(nu))) {
                    ++hits;
                    CHECK(nu == target);
                }
            }
            CHECK(hits == 1);
        }
}

TEST_CASE("partitions_of: counts and canonical order") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 12; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(test_oracles::partition_count(n)));

    auto list = partitions_of(4);
    CHECK(list.front() == Partition({4}));
    CHECK(list[1] == Partition({3, 1}));
    CHECK(list[2] == Partition({2, 2}));
    CHECK(list[3] == Partition({2, 1, 1}));
    CHECK(list.back() == Partition({1, 1, 1, 1}));

    // strictly decreasing lexicographically, no repeats
    for (int n = 0; n <= 12; ++n) {
        auto ps = partitions_of(n);
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);
        for (const Partition& p : ps) CHECK(p.size() == n);
    }
}
