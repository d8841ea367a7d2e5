// transform.hpp — desk-scale hypergeometric Fourier transform: the sinh-product
// measure, forward transform on the tube, inverse transform, Plancherel check,
// and a tube-decay probe.  Space integrals run over the truncated chamber (|W|
// times the chamber integral); spectral integrals over a tensor box in i a*.

#pragma once

#include "hypergeo/cfunc.hpp"
#include "hypergeo/hyper.hpp"
#include "hypergeo/root_system.hpp"
#include "hypergeo/types.hpp"

#include <functional>
#include <vector>

namespace hypergeo::transform {

struct SampledFunction {
    std::vector<Vec> grid;        // points: x in closure(a+), or tau for lambda = i tau
    std::vector<Complex> values;
    std::vector<double> weights;  // quadrature weights (cone Jacobian included)
    double truncation_radius = 0.0;
};

struct TransformConfig {
    double space_radius = 10.0;      // R_x, in the cone coordinates
    double spectral_radius = 12.0;   // R_lambda per dimension
    int space_cells = 40;
    int spectral_cells = 32;
    int quad_order = 8;
    double space_inner_cut = 0.0;    // skip the cone sliver u < cut (rank >= 2 speedup)
    double plancherel_constant = -1.0;  // <= 0 means "not calibrated yet"
    hyper::PhiConfig phi = near_wall_phi_config();

    static hyper::PhiConfig near_wall_phi_config() {
        hyper::PhiConfig p;
        p.series.beta_min = 1e-9;  // quadrature nodes approach the walls
        return p;
    }
};

double mu_density(const RootSystem& rs, const Vec& x);

// Quadrature skeleton over the truncated chamber; values are zero-initialized.
SampledFunction make_space_grid(const RootSystem& rs, const TransformConfig& cfg);

// Tensor-product grid on i a* (tau coordinates).  Per-dimension orders are
// staggered in rank >= 2 so nodes avoid exact chamber walls.
SampledFunction make_spectral_grid(const RootSystem& rs, const TransformConfig& cfg);

SampledFunction sample_on_grid(const SampledFunction& skeleton,
                               const std::function<Complex(const Vec&)>& f);

// f-hat(lambda) = int f phi_lambda dmu at arbitrary tube points.
std::vector<Complex> forward_at(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                const SampledFunction& f, const std::vector<CVec>& lambdas,
                                const TransformConfig& cfg, double* tail_estimate = nullptr);

// Forward transform onto a spectral grid (lambda_j = i tau_j).
SampledFunction forward(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                        const SampledFunction& f, const SampledFunction& spectral_skeleton,
                        const TransformConfig& cfg, double* tail_estimate = nullptr);

// f(x) = plancherel_constant * int F(lambda) phi_{-lambda}(x) |c|^{-2} dlambda.
SampledFunction inverse(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                        const SampledFunction& F, const std::vector<Vec>& x_list,
                        const TransformConfig& cfg);

struct PlancherelReport {
    double lhs = 0.0;    // ||f||^2_{L^2(dmu)}
    double rhs = 0.0;    // int |f-hat|^2 |c|^{-2} dlambda (raw dtau normalization)
    double ratio = 0.0;  // rhs / lhs = 1 / plancherel_constant
};

PlancherelReport plancherel_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                  const SampledFunction& f, const TransformConfig& cfg);

// One-time constant from a reference bump; freeze the result into the config.
double calibrate_plancherel(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                            const TransformConfig& cfg);

struct DecayReport {
    std::vector<double> offsets;      // |tau| samples along the ray
    std::vector<double> magnitudes;   // |f-hat(sigma + i tau)|
    double peak = 0.0;
    double final_envelope = 0.0;      // max |f-hat| over the outer quarter
    bool decayed = false;             // final envelope below 1e-3 * peak
};

// Decay of |f-hat| along sigma + i t tau_hat for sigma inside C(eps_p rho).
DecayReport tube_decay_probe(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                             const SampledFunction& f, const Vec& sigma, double p,
                             const TransformConfig& cfg);

}  // namespace hypergeo::transform
