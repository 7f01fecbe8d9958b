#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unidescent/dlmult.hpp"

namespace unidescent {

enum class Model { bessel, fourier_jacobi };

std::string model_name(Model model);

// Multiplicity of pi_{lam'} in the theta lift of pi_lam between unitary
// groups: 1 iff the transposed diagrams are 2-transverse, else 0.
int theta_multiplicity(const Partition& lam, const Partition& lam_prime);

struct ThetaLift {
    Partition source;
    int target_size = 0;
    std::vector<Partition> components;  // canonical order
};

// All lam' |- target_size with theta_multiplicity(lam, lam') = 1. Empty
// whenever target_size < n - lam_1.
ThetaLift theta_lift(const Partition& lam, int target_size);

// Bessel multiplicity m(pi_lambda, pi_nu), n > m with n - m odd, evaluated
// through parabolic induction from the U_{n+1} Levi GL_ell x U_m with
// ell = (n - m + 1) / 2. Covered regimes: value 0 for m < n - k, and the
// indicator of nu = remove_first_column(lambda) for m = n - k (k is odd
// there by parity). Throws constraint_error on parity/size violations.
MultiplicityResult bessel_multiplicity(TableStore& store, const Partition& lam,
                                       const Partition& nu);

enum class FjMode { declarative, seesaw };

// Fourier-Jacobi multiplicity m(pi_lambda, pi_nu), n > m with n - m even.
//
// declarative: the theorem's values on covered regimes (0 below n - k; the
// indicator of nu = remove_first_column(lambda) at m = n - k, where k is
// even by parity). Outside them the theorem says nothing, so this mode
// falls through to the seesaw computation with covered = false.
//
// seesaw: picks mu0 >= max(lambda_1, nu_1) (that maximum by default), sets
// mu* = [mu0] union nu, and sums bessel_multiplicity(tlam, mu*).value over
// all tlam |- n + mu0 + 1 whose transpose is 2-transverse with that of
// lambda. The result is independent of the choice of mu0.
MultiplicityResult fj_multiplicity(TableStore& store, const Partition& lam, const Partition& nu,
                                   FjMode mode = FjMode::declarative,
                                   std::optional<int> mu0 = std::nullopt);

/*
 * First-occurrence data for one restriction model. ell0_bound is the
 * theorem's upper bound for the first occurrence index ((k-1)/2 for Bessel,
 * k/2 for Fourier-Jacobi, floored; -1 when no level exists at all). The
 * index and descent are filled only when the theorem determines them
 * (k odd for Bessel, k even for Fourier-Jacobi), in which case the descent
 * is remove_first_column(lambda).
 */
struct DescentResult {
    Model model = Model::bessel;
    int ell0_bound = 0;
    bool determined = false;
    std::optional<int> ell0;
    std::optional<Partition> descent;
    bool verified = false;  // engine sweep ran and confirmed the descent
};

struct DescendOptions {
    bool verify = true;     // sweep all nu at the descent level through the engine
    int verify_max_n = 10;  // skip the sweep above this size
};

DescentResult descend(TableStore& store, const Partition& lam, Model model,
                      const DescendOptions& options = {});

struct FirstOccurrence {
    DescentResult bessel;
    DescentResult fourier_jacobi;
    // max(2 ell0_B + 1, 2 ell0_FJ) over the determined sides; equals the row
    // count of lambda.
    int k_reconstructed = 0;
};

FirstOccurrence first_occurrence_pair(TableStore& store, const Partition& lam,
                                      const DescendOptions& options = {});

}  // namespace unidescent
