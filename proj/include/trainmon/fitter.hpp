#pragma once

#include "trainmon/potentials.hpp"

#include <map>
#include <optional>

namespace trainmon {

/// Rank-deficient least-squares basis; message names the colliding columns.
struct DegenerateFitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitProblem {
    std::vector<PhiU> samples;              // fit window samples
    std::vector<int> branch_set;            // ascending unique positive n
    bool include_offset = true;
    double drop_tolerance = 1e-9;           // GHz; |c_n| below this is pruned before flux assignment
    std::vector<PhiU> correlation_samples;  // optional wider window; empty -> fit samples
};

struct FluxAssignment {
    std::map<int, double> branch_phases;  // n -> phi_n in {0, n*pi}
    std::vector<double> loop_fluxes;      // canonical z = 0, one per consecutive branch pair
    std::vector<long> fluxoid_ints;       // recorded z per loop (all zero)
};

struct FitMetrics {
    double max_rel_error = 0.0;           // max |dU| / peak-to-peak of target over the fit window
    double rmse = 0.0;                    // GHz
    std::optional<double> correlation;    // Pearson over the correlation window; nullopt if undefined
};

struct FitResult {
    std::map<int, double> coefficients;   // n -> signed c_n, the fitted Josephson energies in GHz
    double offset = 0.0;                  // GHz
    FluxAssignment assignment;            // over branches surviving the drop tolerance
    FitMetrics metrics;
};

/// Linear least squares for U(phi) ~ offset - sum_n n*c_n*cos(phi/n), solved by
/// column-pivoted QR. Throws DegenerateFitError when the design matrix is
/// rank-deficient.
FitResult fit_coefficients(const FitProblem& p);

/// Sign extraction: phi_n = n*pi where c_n < 0, else 0, so that
/// sum n*|c_n|*cos(phi/n + phi_n/n) = sum n*c_n*cos(phi/n) pointwise.
/// Loop fluxes use the canonical fluxoid integers z = 0.
FluxAssignment assign_fluxes(const std::map<int, double>& coefficients);

/// Metrics over matching grids; correlation is evaluated on the (possibly
/// wider) correlation window and is nullopt for a constant target.
FitMetrics compute_metrics(const std::vector<double>& target, const std::vector<double>& recon,
                           const std::vector<double>& corr_target,
                           const std::vector<double>& corr_recon);

/// Fitted potential offset - sum_n n*c_n*cos(phi/n).
double eval_fit(const std::map<int, double>& coefficients, double offset, double phi);

/// Realized circuit: branch magnitudes |c_n| with the assignment's phases.
/// Branches pruned by the drop tolerance are absent.
TrainmonCircuit to_circuit(const FitResult& fit, double e_c, double n_g = 0.0);

/// Reduce an angle to (-pi, pi].
double reduce_to_pi(double phi);

} // namespace trainmon
