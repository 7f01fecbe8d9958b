#include "unidescent/symchar.hpp"

#include <algorithm>

#include "unidescent/errors.hpp"

namespace unidescent {

namespace {

/*
 * Murnaghan-Nakayama evaluation on beta-numbers. A border strip of length r
 * is removable from lambda exactly when some beta-number b satisfies
 * b - r >= 0 and b - r is not itself a beta-number; the strip's leg length
 * is the count of beta-numbers strictly between b - r and b.
 */
struct MnEvaluator {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    std::mutex mutex;

    Int eval(const std::vector<int>& lam, const std::vector<int>& mu, size_t mu_from) {
        if (mu_from == mu.size()) return 1;  // empty diagram, sizes matched by induction
        std::vector<int> mu_rest(mu.begin() + static_cast<long>(mu_from), mu.end());
        auto key = std::make_pair(lam, mu_rest);
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        const int r = mu[mu_from];
        const int k = static_cast<int>(lam.size());
        std::vector<int> beta(lam.size());
        for (int i = 0; i < k; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (k - 1 - i);
        Int total = 0;
        for (int i = 0; i < k; ++i) {
            const int target = beta[static_cast<size_t>(i)] - r;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[static_cast<size_t>(i)]) ++between;
            std::vector<int> nb = beta;
            nb[static_cast<size_t>(i)] = target;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            std::vector<int> next;
            next.reserve(nb.size());
            for (int j = 0; j < k; ++j) {
                int part = nb[static_cast<size_t>(j)] - (k - 1 - j);
                if (part > 0) next.push_back(part);
            }
            Int sub = eval(next, mu, mu_from + 1);
            if (between % 2 != 0) sub = -sub;
            total += sub;
        }
        std::lock_guard<std::mutex> lock(mutex);
        memo.emplace(std::move(key), total);
        return total;
    }
};

MnEvaluator& mn_evaluator() {
    static MnEvaluator ev;
    return ev;
}

// ---- oracle: Kostka numbers and power sums in the monomial basis ----

using Coeffs = std::map<std::vector<int>, Int>;  // monomial-basis expansion

// Number of semistandard tableaux of shape lam and content mu, by peeling
// the largest content letter off as a horizontal strip.
Int kostka(const std::vector<int>& lam, const std::vector<int>& mu,
           std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (mu.empty()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int strip = mu.back();
    std::vector<int> mu_rest(mu.begin(), mu.end() - 1);
    Int total = 0;
    // Enumerate nu with lam/nu a horizontal strip of size `strip`:
    // interlacing lam_{i+1} <= nu_i <= lam_i.
    std::vector<int> nu(lam.size());
    std::function<void(size_t, int)> rec = [&](size_t row, int removed) {
        if (removed > strip) return;
        if (row == lam.size()) {
            if (removed != strip) return;
            std::vector<int> trimmed;
            for (int part : nu)
                if (part > 0) trimmed.push_back(part);
            total += kostka(trimmed, mu_rest, memo);
            return;
        }
        int lo = row + 1 < lam.size() ? lam[row + 1] : 0;
        for (int v = lam[row]; v >= lo; --v) {
            nu[row] = v;
            rec(row + 1, removed + lam[row] - v);
        }
    };
    rec(0, 0);
    memo.emplace(std::move(key), total);
    return total;
}

// p_r * (expansion in monomial basis): for every target monomial type, the
// coefficient counts the positions whose exponent the extra p_r could have
// raised.
Coeffs multiply_power_sum(const Coeffs& f, int r) {
    Coeffs out;
    for (const auto& [nu, c] : f) {
        // new part r
        {
            std::vector<int> target = nu;
            target.insert(std::upper_bound(target.begin(), target.end(), r, std::greater<int>()), r);
            Int positions = std::count(target.begin(), target.end(), r);
            out[target] += c * positions;
        }
        // raise one existing part v to v + r (distinct values once each)
        for (size_t i = 0; i < nu.size(); ++i) {
            if (i > 0 && nu[i] == nu[i - 1]) continue;
            std::vector<int> target = nu;
            target.erase(target.begin() + static_cast<long>(i));
            int raised = nu[i] + r;
            target.insert(std::upper_bound(target.begin(), target.end(), raised, std::greater<int>()),
                          raised);
            Int positions = std::count(target.begin(), target.end(), raised);
            out[target] += c * positions;
        }
    }
    return out;
}

Coeffs power_sum_monomial(const Partition& mu) {
    Coeffs f;
    f[{}] = 1;
    for (int r : mu.parts()) f = multiply_power_sum(f, r);
    return f;
}

}  // namespace

Int mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw constraint_error("mn_character: |lambda| = " + std::to_string(lam.size()) +
                               " but |mu| = " + std::to_string(mu.size()));
    return mn_evaluator().eval(lam.parts(), mu.parts(), 0);
}

Int oracle_character(const Partition& lam, const Partition& mu, int bound) {
    if (lam.size() != mu.size())
        throw constraint_error("oracle_character: size mismatch");
    const int n = lam.size();
    if (n > bound)
        throw oracle_bound_error("oracle_character: n = " + std::to_string(n) +
                                 " exceeds bound " + std::to_string(bound));

    const std::vector<Partition> parts = partitions_of(n);
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> kostka_memo;
    const Coeffs pm = power_sum_monomial(mu);
    auto pm_coeff = [&](const std::vector<int>& key) -> Int {
        auto it = pm.find(key);
        return it == pm.end() ? Int(0) : it->second;
    };
    // Back-substitute p_mu = sum_lam chi_lam(mu) s_lam against the
    // unitriangular Kostka matrix; canonical order refines dominance.
    std::map<std::vector<int>, Int> chi;
    for (const Partition& row : parts) {
        Int x = pm_coeff(row.parts());
        for (const Partition& prev : parts) {
            if (prev == row) break;
            Int k = kostka(prev.parts(), row.parts(), kostka_memo);
            if (k != 0) x -= chi[prev.parts()] * k;
        }
        chi[row.parts()] = x;
    }
    return chi[lam.parts()];
}

CharacterTable::CharacterTable(int n, std::vector<Int> values)
    : n_(n), parts_(partitions_of(n)), values_(std::move(values)) {
    for (int i = 0; i < classes(); ++i) index_[parts_[static_cast<size_t>(i)].parts()] = i;
    z_.reserve(parts_.size());
    for (const Partition& mu : parts_) z_.push_back(centralizer_order(mu));
}

CharacterTable CharacterTable::build(int n) {
    const std::vector<Partition> parts = partitions_of(n);
    std::vector<Int> values;
    values.reserve(parts.size() * parts.size());
    for (const Partition& lam : parts)
        for (const Partition& mu : parts) values.push_back(mn_character(lam, mu));
    return CharacterTable(n, std::move(values));
}

CharacterTable CharacterTable::from_values(int n, std::vector<Int> values) {
    const size_t p = partitions_of(n).size();
    if (values.size() != p * p)
        throw cache_error("character table for n = " + std::to_string(n) +
                          " has wrong entry count");
    return CharacterTable(n, std::move(values));
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p.parts());
    if (it == index_.end())
        throw constraint_error("partition " + p.str() + " is not a partition of " +
                               std::to_string(n_));
    return it->second;
}

std::shared_ptr<const CharacterTable> TableStore::get(int n) {
    if (n < 0) throw constraint_error("TableStore::get: negative n");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
    auto table = std::make_shared<const CharacterTable>(CharacterTable::build(n));
    tables_.emplace(n, table);
    dirty_ = true;
    return table;
}

void TableStore::preload(CharacterTable table) {
    std::lock_guard<std::mutex> lock(mutex_);
    int n = table.level();
    tables_.emplace(n, std::make_shared<const CharacterTable>(std::move(table)));
}

std::vector<int> TableStore::levels() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<int> out;
    out.reserve(tables_.size());
    for (const auto& [n, _] : tables_) out.push_back(n);
    return out;
}

std::vector<std::shared_ptr<const CharacterTable>> TableStore::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::shared_ptr<const CharacterTable>> out;
    out.reserve(tables_.size());
    for (const auto& [_, table] : tables_) out.push_back(table);
    return out;
}

bool TableStore::dirty() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return dirty_;
}

void ClassFunction::set(const Partition& mu, Rat value) {
    if (mu.size() != n_)
        throw constraint_error("ClassFunction::set: " + mu.str() + " is not a partition of " +
                               std::to_string(n_));
    if (value == 0)
        coeff_.erase(mu);
    else
        coeff_[mu] = std::move(value);
}

Rat ClassFunction::value(const Partition& mu) const {
    auto it = coeff_.find(mu);
    return it == coeff_.end() ? Rat(0) : it->second;
}

ClassFunction irreducible_class_function(const CharacterTable& table, const Partition& lam) {
    ClassFunction f(table.level());
    int row = table.index_of(lam);
    for (int j = 0; j < table.classes(); ++j)
        f.set(table.partitions()[static_cast<size_t>(j)], Rat(table.value(row, j)));
    return f;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.level() != g.level())
        throw constraint_error("inner_product: class functions live on different levels");
    Rat total = 0;
    for_each_partition(f.level(), [&](const Partition& mu) {
        Rat fv = f.value(mu);
        if (fv == 0) return;
        Rat gv = g.value(mu);
        if (gv == 0) return;
        total += fv * gv / Rat(centralizer_order(mu));
    });
    return total;
}

Int restriction_multiplicity(TableStore& store, const Partition& lam, const Partition& nu,
                             int m) {
    const int n = lam.size();
    if (m < 0 || m > n)
        throw constraint_error("restriction_multiplicity: m out of range");
    if (nu.size() != n - m)
        throw constraint_error("restriction_multiplicity: |nu| = " + std::to_string(nu.size()) +
                               " but n - m = " + std::to_string(n - m));
    auto table_n = store.get(n);
    auto table_rest = store.get(n - m);
    const int lam_row = table_n->index_of(lam);
    const int nu_row = table_rest->index_of(nu);
    Rat total = 0;
    for (int ri = 0; ri < table_rest->classes(); ++ri) {
        const Partition& rho = table_rest->partitions()[static_cast<size_t>(ri)];
        const Int& sigma_nu = table_rest->value(nu_row, ri);
        if (sigma_nu == 0) continue;
        for_each_partition(m, [&](const Partition& tau) {
            const Int& sigma_lam = table_n->value(lam_row, table_n->index_of(union_parts(rho, tau)));
            if (sigma_lam == 0) return;
            total += Rat(sigma_lam * sigma_nu) /
                     Rat(table_rest->centralizer(ri) * centralizer_order(tau));
        });
    }
    if (denominator(total) != 1)
        throw error("restriction_multiplicity: non-integral result");
    return numerator(total);
}

}  // namespace unidescent
