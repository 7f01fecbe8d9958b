#pragma once

#include <map>
#include <string>

#include "unidescent/symchar.hpp"

namespace unidescent {

/*
 * Decomposition of the unipotent label pi_lambda of U_n(F_q) over
 * class-indexed Deligne-Lusztig terms: coeff(mu) = sigma_lambda(w_mu) / z_mu.
 * The longest-element twist is already absorbed: re-indexing the defining
 * average by v = w w_0 turns F-conjugacy classes into ordinary cycle types,
 * so no w_0 appears anywhere in the engine.
 */
struct VirtualUnipotentChar {
    int n = 0;
    std::map<Partition, Rat> coeff;
};

VirtualUnipotentChar unipotent_decomposition(TableStore& store, const Partition& lam);

// Inner double sum of the multiplicity formula:
//   sum over mu* |- n - |mu'| of (n! / (z_{mu'} z_{mu*})) sigma_{t(lambda)}(w_{[mu',mu*]}).
// Always an integer (each summand is class size x embedding count x character
// value). Vanishes whenever |mu'| < n - rows(lambda). Memoized globally.
Int inner_sum(TableStore& store, const Partition& lam, const Partition& mu_prime);

// Sign-stripped multiplicity of the class-mu2 Deligne-Lusztig term pairing:
//   S(lambda, mu2) = (1/n!) sum over mu' contained in mu2 of
//     (-1)^(n-|mu'|) C_{mu2,mu'} z_{mu'} inner_sum(lambda, mu').
// The bracket <R_{T1 x T2, theta (x) 1}, R_lambda> equals S up to a torus-rank
// sign that is never evaluated here; sign consistency is asserted by tests.
// Division by n! is performed last and checked exact. Memoized globally.
Int dl_multiplicity(TableStore& store, const Partition& lam, const Partition& mu2);

// Closed form on the boundary stratum |mu2| = n - rows(lambda):
// sigma_{t(lambda')}(w_{mu2}) with lambda' = remove_first_column(lambda).
// |dl_multiplicity| equals |closed_form| there, with one consistent sign per
// (n, k). Throws constraint_error off the stratum.
Int closed_form(TableStore& store, const Partition& lam, const Partition& mu2);

enum class CaseTag { vanishing_below, first_descent, formula_only };

std::string case_tag_name(CaseTag tag);

/*
 * Formula output plus theorem metadata. `raw` is the signed formula value,
 * `value` = |raw| is the normalized multiplicity, and `covered` marks input
 * regimes where a theorem pins the answer (the tests check that the formula
 * reproduces it; the engine does not substitute the pinned value).
 */
struct MultiplicityResult {
    Int raw;
    Int value;
    bool covered = false;
    CaseTag case_tag = CaseTag::formula_only;
};

/*
 * Parabolic datum for the Bessel chain: a cuspidal block of size ell on
 * GL_ell(F_{q^2}) and a unipotent label nu on U_m, with n + 1 = m + 2 ell.
 * The cuspidal representation itself enters the formula only through ell:
 * its torus block and character sit entirely inside the discarded global
 * sign, so no further datum is carried.
 */
struct InducedDatum {
    int ell = 0;
    Partition nu;
};

// <I_P(tau (x) pi_nu), pi_lambda> up to the normalized global sign:
//   raw = sum over mu2 |- m of sigma_{t(nu)}(w_mu2) / z_mu2 * S(lambda, mu2).
// The transpose on nu carries the per-class torus-rank sign (the sign of
// w_mu2), which varies inside the sum and is therefore not part of the
// discarded global sign. Integrality of raw is checked.
MultiplicityResult induced_multiplicity(TableStore& store, const Partition& lam,
                                        const InducedDatum& datum);

}  // namespace unidescent
