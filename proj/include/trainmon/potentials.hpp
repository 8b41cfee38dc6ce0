#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

// trainmon: reverse-engineering of 1D superconducting-qubit potentials with
// parallel branches of identical Josephson junctions.
//
// Conventions used throughout the library:
//   - all energies are E/h in GHz,
//   - phases and reduced fluxes are in radians, phi_e = 2*pi*Phi/Phi_0,
//   - a branch of n junctions with Josephson energy E_J and total branch
//     phase offset phi_n contributes -n*E_J*cos(phi/n + phi_n/n).

namespace trainmon {

struct QuartonParams {
    double gamma = 0.0;  // array-to-black-sheep Josephson energy ratio
    int n_array = 1;     // junction count of the array branch
    double e_j = 1.0;    // GHz
    double phi_e = 0.0;  // reduced external phase, radians
};

struct FluxoniumParams {
    double e_j = 1.0;     // GHz
    double e_c = 1.0;     // GHz
    double e_l = 0.0;     // GHz
    double phi_ext = 0.0; // radians
    double n_g = 0.0;     // gate charge offset
};

/// Piecewise-linear potential over a fixed table of (phi, u) samples.
/// Evaluation outside the tabulated range throws; no extrapolation.
class TabulatedPotential {
public:
    explicit TabulatedPotential(std::vector<std::pair<double, double>> samples);

    double operator()(double phi) const;

    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

private:
    std::vector<std::pair<double, double>> samples_;
};

struct Branch {
    int n = 1;                // junctions in series, >= 1
    double e_j = 1.0;         // GHz, magnitude, > 0
    double phi_branch = 0.0;  // total branch phase offset, radians
};

struct TrainmonCircuit {
    double e_c = 0.0;                 // shunt charging energy, GHz
    std::vector<Branch> branches;     // strictly ascending unique n
    double n_g = 0.0;                 // gate charge offset
    std::vector<double> loop_fluxes;  // reduced loop phases, one per consecutive branch pair
};

void validate(const QuartonParams& p);
void validate(const FluxoniumParams& p);
void validate(const TrainmonCircuit& c);

/// Circuit with loop fluxes derived from the branch phases by fluxoid
/// quantization with all fluxoid integers zero.
TrainmonCircuit make_circuit(double e_c, std::vector<Branch> branches, double n_g = 0.0);

// U(phi) = -gamma*E_J*N*cos(phi/N) - E_J*cos(phi + phi_e)
double eval_quarton(const QuartonParams& p, double phi);

// U(phi) = -E_J*cos(phi - phi_ext) + E_L*phi^2/2
double eval_fluxonium(const FluxoniumParams& p, double phi);

// U(phi) = -sum_i n_i*E_J^i*cos(phi/n_i + phi_i/n_i)
double eval_trainmon(const TrainmonCircuit& c, double phi);

struct PhiU {
    double phi = 0.0;
    double u = 0.0;
};

using PotentialFn = std::function<double(double)>;

/// Uniform sampling with inclusive endpoints; count >= 2.
std::vector<PhiU> sample_potential(const PotentialFn& target, double phi_min, double phi_max,
                                   int count);

/// Least common multiple of a set of positive integers.
long lcm_of(const std::vector<int>& values);

} // namespace trainmon
