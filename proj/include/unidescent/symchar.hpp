#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "unidescent/partition.hpp"

namespace unidescent {

/*
 * Exact character table of S_n: values sigma_lambda(w_mu) for all lambda,
 * mu |- n, indexed in the canonical partition order. Immutable once built.
 */
class CharacterTable {
public:
    static CharacterTable build(int n);
    // Reassembles a table from row-major values (cache deserialization).
    // Validates the count against p(n)^2; values themselves are trusted.
    static CharacterTable from_values(int n, std::vector<Int> values);

    int level() const { return n_; }
    int classes() const { return static_cast<int>(parts_.size()); }
    const std::vector<Partition>& partitions() const { return parts_; }
    int index_of(const Partition& p) const;  // throws constraint_error on wrong level

    const Int& value(int lam_index, int mu_index) const {
        return values_[static_cast<size_t>(lam_index) * parts_.size() +
                       static_cast<size_t>(mu_index)];
    }
    const Int& value(const Partition& lam, const Partition& mu) const {
        return value(index_of(lam), index_of(mu));
    }
    const Int& centralizer(int mu_index) const {
        return z_[static_cast<size_t>(mu_index)];
    }
    const std::vector<Int>& values() const { return values_; }

private:
    CharacterTable(int n, std::vector<Int> values);

    int n_ = 0;
    std::vector<Partition> parts_;
    std::map<std::vector<int>, int> index_;
    std::vector<Int> values_;  // row-major, row = lambda, column = mu
    std::vector<Int> z_;
};

/*
 * Demand-driven store of character tables keyed by n. Building is
 * single-writer; published tables are immutable shared_ptrs, so readers may
 * use them concurrently without synchronization.
 */
class TableStore {
public:
    std::shared_ptr<const CharacterTable> get(int n);
    void preload(CharacterTable table);
    std::vector<int> levels() const;
    std::vector<std::shared_ptr<const CharacterTable>> snapshot() const;
    // True once any table has been built here rather than preloaded.
    bool dirty() const;

private:
    mutable std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
    bool dirty_ = false;
};

// sigma_lambda(w_mu) by the Murnaghan-Nakayama rule, processing cycle
// lengths in decreasing order with global memoization on
// (remaining diagram, remaining cycles). Throws on |lambda| != |mu|.
Int mn_character(const Partition& lam, const Partition& mu);

// Independent verification oracle for sigma_lambda(w_mu): expands Schur
// functions in the monomial basis via semistandard-tableau counts (Kostka
// numbers), expands p_mu in the monomial basis by direct multiplication,
// and solves the unitriangular system p_mu = sum_lambda chi_lambda(mu) s_lambda.
// Shares no code with mn_character. Throws oracle_bound_error above `bound`.
Int oracle_character(const Partition& lam, const Partition& mu, int bound = 7);

/*
 * Exact class function on S_n: a map from partitions of n to rationals.
 * Missing keys are zero.
 */
class ClassFunction {
public:
    explicit ClassFunction(int n) : n_(n) {}
    int level() const { return n_; }
    void set(const Partition& mu, Rat value);
    Rat value(const Partition& mu) const;
    const std::map<Partition, Rat>& coefficients() const { return coeff_; }

private:
    int n_;
    std::map<Partition, Rat> coeff_;
};

ClassFunction irreducible_class_function(const CharacterTable& table, const Partition& lam);

// <f, g> = sum_mu f(mu) g(mu) / z_mu. Throws on level mismatch.
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

// <Res_{S_{n-m} x S_m} sigma_lambda, sigma_nu (x) 1>, a nonnegative integer:
// sum over rho |- n-m, tau |- m of
// sigma_lambda(w_{[rho,tau]}) sigma_nu(w_rho) / (z_rho z_tau).
Int restriction_multiplicity(TableStore& store, const Partition& lam, const Partition& nu, int m);

}  // namespace unidescent
