#include "trainmon/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace trainmon {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFluxoidTol = 1e-9;
} // namespace

TabulatedPotential::TabulatedPotential(std::vector<std::pair<double, double>> samples)
    : samples_(std::move(samples)) {
    if (samples_.size() < 2) {
        throw std::invalid_argument("tabulated potential needs at least 2 samples");
    }
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i - 1].first < samples_[i].first)) {
            throw std::invalid_argument("tabulated potential phases must be strictly increasing");
        }
    }
}

double TabulatedPotential::operator()(double phi) const {
    if (phi < samples_.front().first || phi > samples_.back().first) {
        throw std::out_of_range("tabulated potential evaluated at phi=" + std::to_string(phi) +
                                " outside [" + std::to_string(samples_.front().first) + ", " +
                                std::to_string(samples_.back().first) + "]");
    }
    auto hi = std::lower_bound(samples_.begin(), samples_.end(), phi,
                               [](const auto& s, double x) { return s.first < x; });
    if (hi == samples_.begin()) {
        return hi->second;
    }
    auto lo = std::prev(hi);
    if (hi == samples_.end()) {
        return lo->second; // phi == last node
    }
    const double t = (phi - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

void validate(const QuartonParams& p) {
    if (p.n_array < 1) throw std::invalid_argument("quarton: n_array must be >= 1");
    if (!(p.e_j > 0.0)) throw std::invalid_argument("quarton: e_j must be > 0");
    if (p.gamma < 0.0) throw std::invalid_argument("quarton: gamma must be >= 0");
}

void validate(const FluxoniumParams& p) {
    if (!(p.e_j > 0.0)) throw std::invalid_argument("fluxonium: e_j must be > 0");
    if (!(p.e_c > 0.0)) throw std::invalid_argument("fluxonium: e_c must be > 0");
    if (p.e_l < 0.0) throw std::invalid_argument("fluxonium: e_l must be >= 0");
}

void validate(const TrainmonCircuit& c) {
    if (c.branches.empty()) throw std::invalid_argument("circuit: at least one branch required");
    for (std::size_t i = 0; i < c.branches.size(); ++i) {
        const Branch& b = c.branches[i];
        if (b.n < 1) throw std::invalid_argument("circuit: branch n must be >= 1");
        if (!(b.e_j > 0.0)) throw std::invalid_argument("circuit: branch e_j must be > 0");
        if (i > 0 && c.branches[i - 1].n >= b.n) {
            throw std::invalid_argument("circuit: branch n values must be strictly ascending");
        }
    }
    if (c.loop_fluxes.size() + 1 != c.branches.size()) {
        throw std::invalid_argument("circuit: loop flux count must be branch count - 1");
    }
    // Fluxoid quantization per loop: phi_i - phi_{i+1} + phi_e^l = 2*pi*z.
    for (std::size_t l = 0; l < c.loop_fluxes.size(); ++l) {
        const double lhs =
            c.branches[l].phi_branch - c.branches[l + 1].phi_branch + c.loop_fluxes[l];
        const double z = lhs / kTwoPi;
        if (std::abs(z - std::round(z)) > kFluxoidTol) {
            throw std::invalid_argument("circuit: loop " + std::to_string(l) +
                                        " violates fluxoid quantization");
        }
    }
}

TrainmonCircuit make_circuit(double e_c, std::vector<Branch> branches, double n_g) {
    TrainmonCircuit c;
    c.e_c = e_c;
    c.branches = std::move(branches);
    c.n_g = n_g;
    for (std::size_t l = 0; l + 1 < c.branches.size(); ++l) {
        c.loop_fluxes.push_back(c.branches[l + 1].phi_branch - c.branches[l].phi_branch);
    }
    validate(c);
    return c;
}

double eval_quarton(const QuartonParams& p, double phi) {
    return -p.gamma * p.e_j * p.n_array * std::cos(phi / p.n_array) -
           p.e_j * std::cos(phi + p.phi_e);
}

double eval_fluxonium(const FluxoniumParams& p, double phi) {
    return -p.e_j * std::cos(phi - p.phi_ext) + 0.5 * p.e_l * phi * phi;
}

double eval_trainmon(const TrainmonCircuit& c, double phi) {
    double u = 0.0;
    for (const Branch& b : c.branches) {
        u -= b.n * b.e_j * std::cos((phi + b.phi_branch) / b.n);
    }
    return u;
}

std::vector<PhiU> sample_potential(const PotentialFn& target, double phi_min, double phi_max,
                                   int count) {
    if (count < 2) throw std::invalid_argument("sample_potential: count must be >= 2");
    if (!(phi_min < phi_max)) throw std::invalid_argument("sample_potential: phi_min < phi_max required");
    std::vector<PhiU> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const double t = static_cast<double>(j) / (count - 1);
        // exact inclusive endpoints; interior nodes uniform
        const double phi = (j == count - 1) ? phi_max : phi_min + t * (phi_max - phi_min);
        out[static_cast<std::size_t>(j)] = {phi, target(phi)};
    }
    return out;
}

long lcm_of(const std::vector<int>& values) {
    if (values.empty()) throw std::invalid_argument("lcm_of: empty set");
    long acc = 1;
    for (int v : values) {
        if (v < 1) throw std::invalid_argument("lcm_of: values must be positive");
        acc = std::lcm(acc, static_cast<long>(v));
    }
    return acc;
}

} // namespace trainmon
