#include "unidescent/dlmult.hpp"

#include <mutex>

#include "unidescent/errors.hpp"

namespace unidescent {

namespace {

using PairKey = std::pair<std::vector<int>, std::vector<int>>;

struct PairCache {
    std::map<PairKey, Int> memo;
    std::mutex mutex;

    bool lookup(const PairKey& key, Int& out) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(key);
        if (it == memo.end()) return false;
        out = it->second;
        return true;
    }
    void store(PairKey key, const Int& value) {
        std::lock_guard<std::mutex> lock(mutex);
        memo.emplace(std::move(key), value);
    }
};

PairCache& inner_sum_cache() {
    static PairCache c;
    return c;
}

PairCache& dl_cache() {
    static PairCache c;
    return c;
}

}  // namespace

VirtualUnipotentChar unipotent_decomposition(TableStore& store, const Partition& lam) {
    auto table = store.get(lam.size());
    VirtualUnipotentChar out;
    out.n = lam.size();
    const int row = table->index_of(lam);
    for (int j = 0; j < table->classes(); ++j)
        out.coeff[table->partitions()[static_cast<size_t>(j)]] =
            Rat(table->value(row, j)) / Rat(table->centralizer(j));
    return out;
}

Int inner_sum(TableStore& store, const Partition& lam, const Partition& mu_prime) {
    const int n = lam.size();
    if (mu_prime.size() > n)
        throw constraint_error("inner_sum: |mu'| = " + std::to_string(mu_prime.size()) +
                               " exceeds n = " + std::to_string(n));
    PairKey key{lam.parts(), mu_prime.parts()};
    Int cached;
    if (inner_sum_cache().lookup(key, cached)) return cached;

    auto table = store.get(n);
    const int lam_t_row = table->index_of(transpose(lam));
    const Int n_fact = factorial(n);
    const Int z_prime = centralizer_order(mu_prime);
    Int total = 0;
    for_each_partition(n - mu_prime.size(), [&](const Partition& mu_star) {
        const Int& sigma = table->value(lam_t_row, table->index_of(union_parts(mu_prime, mu_star)));
        if (sigma == 0) return;
        total += exact_div(n_fact, z_prime * centralizer_order(mu_star)) * sigma;
    });
    inner_sum_cache().store(std::move(key), total);
    return total;
}

Int dl_multiplicity(TableStore& store, const Partition& lam, const Partition& mu2) {
    const int n = lam.size();
    if (mu2.size() > n)
        throw constraint_error("dl_multiplicity: |mu2| = " + std::to_string(mu2.size()) +
                               " exceeds n = " + std::to_string(n));
    PairKey key{lam.parts(), mu2.parts()};
    Int cached;
    if (dl_cache().lookup(key, cached)) return cached;

    Int numerator = 0;
    for (const Partition& mu_prime : sub_multisets(mu2)) {
        Int term = binom_embeddings(mu2, mu_prime) * centralizer_order(mu_prime) *
                   inner_sum(store, lam, mu_prime);
        if ((n - mu_prime.size()) % 2 != 0) term = -term;
        numerator += term;
    }
    Int result = exact_div(numerator, factorial(n));
    dl_cache().store(std::move(key), result);
    return result;
}

Int closed_form(TableStore& store, const Partition& lam, const Partition& mu2) {
    const int expected = lam.size() - lam.rows();
    if (mu2.size() != expected)
        throw constraint_error("closed_form: |mu2| = " + std::to_string(mu2.size()) +
                               " but n - k = " + std::to_string(expected));
    auto table = store.get(expected);
    return table->value(transpose(remove_first_column(lam)), mu2);
}

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::vanishing_below: return "vanishing_below";
        case CaseTag::first_descent: return "first_descent";
        case CaseTag::formula_only: return "formula_only";
    }
    return "unknown";
}

MultiplicityResult induced_multiplicity(TableStore& store, const Partition& lam,
                                        const InducedDatum& datum) {
    const int n = lam.size();
    const int m = datum.nu.size();
    if (datum.ell < 1)
        throw constraint_error("induced_multiplicity: ell must be >= 1");
    if (n + 1 != m + 2 * datum.ell)
        throw constraint_error("induced_multiplicity: need n + 1 = m + 2 ell, got n = " +
                               std::to_string(n) + ", m = " + std::to_string(m) +
                               ", ell = " + std::to_string(datum.ell));

    auto table_m = store.get(m);
    const int nu_t_row = table_m->index_of(transpose(datum.nu));
    Rat total = 0;
    for (int j = 0; j < table_m->classes(); ++j) {
        const Int& sigma = table_m->value(nu_t_row, j);
        if (sigma == 0) continue;
        Int s = dl_multiplicity(store, lam, table_m->partitions()[static_cast<size_t>(j)]);
        if (s == 0) continue;
        total += Rat(sigma * s) / Rat(table_m->centralizer(j));
    }
    if (denominator(total) != 1)
        throw error("induced_multiplicity: non-integral raw value");

    MultiplicityResult result;
    result.raw = numerator(total);
    result.value = abs(result.raw);
    const int k = lam.rows();
    if (m < n - k) {
        result.covered = true;
        result.case_tag = CaseTag::vanishing_below;
    } else if (k % 2 == 1 && m == n - k) {
        result.covered = true;
        result.case_tag = CaseTag::first_descent;
    } else {
        result.covered = false;
        result.case_tag = CaseTag::formula_only;
    }
    return result;
}

}  // namespace unidescent
