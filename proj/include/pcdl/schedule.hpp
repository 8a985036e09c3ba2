#pragma once

#include "pcdl/math.hpp"

namespace pcdl {

// Discrete variance-preserving noise schedule over indices 0..N.
// Index 0 is the clean-data convention (alpha=1, sigma=0, log-SNR=+inf);
// the smallest usable diffusion index is 1.
struct NoiseSchedule {
    int n_steps = 0;  // N
    double beta_min = 0, beta_max = 0;
    Vec betas;    // size N, betas[i-1] is the step-i beta
    Vec alpha;    // size N+1, drift coefficient sqrt(prod(1-beta))
    Vec sigma;    // size N+1, diffusion coefficient sqrt(1-prod(1-beta))
    Vec log_snr;  // size N+1, ln(alpha/sigma)
};

inline NoiseSchedule build_schedule(int n_steps, double beta_min, double beta_max) {
    if (n_steps < 2) throw std::invalid_argument("build_schedule: need at least 2 steps");
    if (!(beta_min > 0.0) || !(beta_max < 1.0) || beta_min > beta_max)
        throw std::invalid_argument("build_schedule: beta bounds must satisfy 0 < beta_min <= beta_max < 1");

    NoiseSchedule s;
    s.n_steps = n_steps;
    s.beta_min = beta_min;
    s.beta_max = beta_max;
    s.betas.resize(n_steps);
    s.alpha.resize(n_steps + 1);
    s.sigma.resize(n_steps + 1);
    s.log_snr.resize(n_steps + 1);

    s.alpha[0] = 1.0;
    s.sigma[0] = 0.0;
    s.log_snr[0] = std::numeric_limits<double>::infinity();

    double alpha_bar = 1.0;
    for (int i = 1; i <= n_steps; ++i) {
        const double beta = beta_min + (beta_max - beta_min) * (i - 1) / double(n_steps - 1);
        s.betas[i - 1] = beta;
        alpha_bar *= 1.0 - beta;
        s.alpha[i] = std::sqrt(alpha_bar);
        s.sigma[i] = std::sqrt(1.0 - alpha_bar);
        s.log_snr[i] = std::log(s.alpha[i] / s.sigma[i]);
    }
    return s;
}

struct LatentState {
    Vec z;
    int index = 0;
};

// z_i = alpha_i * z0 + sigma_i * eps
inline LatentState forward_diffuse(const NoiseSchedule& s, const Vec& z0, int index, const Vec& eps) {
    if (index < 1 || index > s.n_steps) throw std::out_of_range("forward_diffuse: index out of range");
    if (eps.size() != z0.size()) throw std::invalid_argument("forward_diffuse: eps dimension mismatch");
    LatentState out;
    out.index = index;
    out.z.resize(z0.size());
    const double a = s.alpha[index], g = s.sigma[index];
    for (size_t k = 0; k < z0.size(); ++k) out.z[k] = a * z0[k] + g * eps[k];
    return out;
}

}  // namespace pcdl
