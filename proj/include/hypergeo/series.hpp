// series.hpp — coefficients Gamma_mu(lambda) of the Harish-Chandra series via
// the level-by-level recursion, and evaluation of Phi_lambda(x) on the chamber
// with a truncation-tail estimate.

#pragma once

#include "hypergeo/root_system.hpp"
#include "hypergeo/types.hpp"

#include <vector>

namespace hypergeo::series {

struct SeriesConfig {
    int max_level = 40;              // levels ell(mu) kept in the table
    double denom_threshold = 1e-10;  // |<mu,mu-2 lambda>| below this marks the table singular
    double tail_tol = 1e-12;         // relative tail accepted without an "unconverged" flag
    double beta_min = 0.1;           // smallest beta(x) served without a warning
    int level_cap = 400;             // hard cap when levels are raised adaptively
};

struct GammaTable {
    CVec lambda;
    int max_level = 0;
    std::vector<LatticePoint> points;   // even lattice points, level-then-lex order
    std::vector<Complex> entries;       // parallel: Gamma_mu(lambda)
    bool singular_flag = false;
    std::vector<LatticePoint> offending;  // mu with near-vanishing denominator
    // cached per-point pairings used by the series evaluation
    std::vector<double> level_of;
};

// Gamma_mu(lambda) for even mu up to cfg.max_level.  Any complex lambda is
// accepted; near-singular denominators mark the table but do not abort.
GammaTable gamma_coefficients(const RootSystem& rs, const CVec& lambda,
                              const SeriesConfig& cfg);

// Same recursion run over all of Lambda, odd-parity points included (their
// entries must come out exactly zero).  Test hook for the parity property.
GammaTable gamma_coefficients_full_lattice(const RootSystem& rs, const CVec& lambda,
                                           const SeriesConfig& cfg);

struct SeriesValue {
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;
    bool converged = true;
    std::vector<std::string> warnings;
};

// Phi_lambda(x) = e^{(lambda-rho)(x)} sum Gamma_mu e^{-mu(x)} over the table,
// plus the counting-based tail estimate.  x must be strictly inside a^+.
SeriesValue hc_series(const RootSystem& rs, const GammaTable& table, const Vec& x,
                      const SeriesConfig& cfg);

// lambda generic iff lambda_alpha stays at distance >= tol from Z for every
// indivisible root.
bool is_generic(const RootSystem& rs, const CVec& lambda, double tol = 1e-9);

// Level needed for the prefactor-free tail e^{-L beta} to undercut tol.
int level_for_beta(double beta_x, double tol, int at_least, int cap);

}  // namespace hypergeo::series
