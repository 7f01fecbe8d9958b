#include "unidescent/ggp.hpp"

#include <algorithm>

#include "unidescent/errors.hpp"

namespace unidescent {

std::string model_name(Model model) {
    return model == Model::bessel ? "bessel" : "fourier-jacobi";
}

int theta_multiplicity(const Partition& lam, const Partition& lam_prime) {
    return is_2transverse(transpose(lam), transpose(lam_prime)) ? 1 : 0;
}

ThetaLift theta_lift(const Partition& lam, int target_size) {
    if (target_size < 0) throw constraint_error("theta_lift: negative target size");
    ThetaLift lift;
    lift.source = lam;
    lift.target_size = target_size;
    const Partition lam_t = transpose(lam);
    for_each_partition(target_size, [&](const Partition& cand) {
        if (is_2transverse(lam_t, transpose(cand))) lift.components.push_back(cand);
    });
    return lift;
}

MultiplicityResult bessel_multiplicity(TableStore& store, const Partition& lam,
                                       const Partition& nu) {
    const int n = lam.size();
    const int m = nu.size();
    if (n <= m)
        throw constraint_error("bessel_multiplicity: need n > m, got n = " + std::to_string(n) +
                               ", m = " + std::to_string(m));
    if ((n - m) % 2 == 0)
        throw constraint_error("bessel_multiplicity: n - m must be odd, got " +
                               std::to_string(n - m));
    return induced_multiplicity(store, lam, InducedDatum{(n - m + 1) / 2, nu});
}

namespace {

MultiplicityResult fj_seesaw(TableStore& store, const Partition& lam, const Partition& nu,
                             std::optional<int> mu0_choice) {
    const int n = lam.size();
    const int m = nu.size();
    const int mu0_min = std::max(lam.part(0), nu.part(0));
    const int mu0 = mu0_choice.value_or(mu0_min);
    if (mu0 < mu0_min)
        throw constraint_error("fj_multiplicity: mu0 = " + std::to_string(mu0) +
                               " must be at least max(lambda_1, nu_1) = " +
                               std::to_string(mu0_min));
    const Partition mu_star = union_parts(Partition({mu0}), nu);
    const Partition lam_t = transpose(lam);
    Int total = 0;
    for_each_partition(n + mu0 + 1, [&](const Partition& cand) {
        if (!is_2transverse(lam_t, transpose(cand))) return;
        total += bessel_multiplicity(store, cand, mu_star).value;
    });
    MultiplicityResult result;
    result.raw = total;
    result.value = total;
    const int k = lam.rows();
    if (m < n - k) {
        result.covered = true;
        result.case_tag = CaseTag::vanishing_below;
    } else if (k % 2 == 0 && m == n - k) {
        result.covered = true;
        result.case_tag = CaseTag::first_descent;
    } else {
        result.covered = false;
        result.case_tag = CaseTag::formula_only;
    }
    return result;
}

}  // namespace

MultiplicityResult fj_multiplicity(TableStore& store, const Partition& lam, const Partition& nu,
                                   FjMode mode, std::optional<int> mu0) {
    const int n = lam.size();
    const int m = nu.size();
    if (n <= m)
        throw constraint_error("fj_multiplicity: need n > m, got n = " + std::to_string(n) +
                               ", m = " + std::to_string(m));
    if ((n - m) % 2 != 0)
        throw constraint_error("fj_multiplicity: n - m must be even, got " +
                               std::to_string(n - m));
    if (mode == FjMode::seesaw) return fj_seesaw(store, lam, nu, mu0);

    const int k = lam.rows();
    MultiplicityResult result;
    if (m < n - k) {
        result.raw = 0;
        result.value = 0;
        result.covered = true;
        result.case_tag = CaseTag::vanishing_below;
        return result;
    }
    if (k % 2 == 0 && m == n - k) {
        const int hit = (nu == remove_first_column(lam)) ? 1 : 0;
        result.raw = hit;
        result.value = hit;
        result.covered = true;
        result.case_tag = CaseTag::first_descent;
        return result;
    }
    // The theorem says nothing here; report the seesaw formula value,
    // flagged as uncovered.
    return fj_seesaw(store, lam, nu, mu0);
}

namespace {

void verify_descent(TableStore& store, const Partition& lam, Model model, int descent_level,
                    const Partition& expected) {
    for_each_partition(descent_level, [&](const Partition& nu) {
        const Int got = model == Model::bessel
                            ? bessel_multiplicity(store, lam, nu).value
                            : fj_multiplicity(store, lam, nu, FjMode::seesaw).value;
        const Int want = (nu == expected) ? 1 : 0;
        if (got != want)
            throw error("descent verification failed for lambda = " + lam.str() + ", " +
                        model_name(model) + ", nu = " + nu.str() + ": engine value " + got.str() +
                        ", expected " + want.str());
    });
}

}  // namespace

DescentResult descend(TableStore& store, const Partition& lam, Model model,
                      const DescendOptions& options) {
    const int n = lam.size();
    const int k = lam.rows();
    DescentResult result;
    result.model = model;
    if (model == Model::bessel) {
        // floor((k-1)/2); -1 for the empty partition, where no Bessel level
        // exists at all (the index must satisfy 0 <= ell < n/2).
        result.ell0_bound = k == 0 ? -1 : (k - 1) / 2;
        result.determined = (k % 2 == 1);
    } else {
        result.ell0_bound = k / 2;
        result.determined = (k % 2 == 0);
    }
    if (!result.determined) return result;

    result.ell0 = result.ell0_bound;
    result.descent = remove_first_column(lam);
    if (options.verify && n > 0 && n <= options.verify_max_n) {
        const int descent_level =
            model == Model::bessel ? n - 2 * *result.ell0 - 1 : n - 2 * *result.ell0;
        verify_descent(store, lam, model, descent_level, *result.descent);
        result.verified = true;
    }
    return result;
}

FirstOccurrence first_occurrence_pair(TableStore& store, const Partition& lam,
                                      const DescendOptions& options) {
    FirstOccurrence out;
    out.bessel = descend(store, lam, Model::bessel, options);
    out.fourier_jacobi = descend(store, lam, Model::fourier_jacobi, options);
    int k = 0;
    if (out.bessel.determined) k = std::max(k, 2 * *out.bessel.ell0 + 1);
    if (out.fourier_jacobi.determined) k = std::max(k, 2 * *out.fourier_jacobi.ell0);
    out.k_reconstructed = k;
    if (out.k_reconstructed != lam.rows())
        throw error("first_occurrence_pair: reconstructed k = " +
                    std::to_string(out.k_reconstructed) + " does not match rows(lambda) = " +
                    std::to_string(lam.rows()));
    return out;
}

}  // namespace unidescent
