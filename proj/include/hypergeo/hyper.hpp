// hyper.hpp — evaluation of the hypergeometric function phi_lambda(x) for all
// spectral parameters.  Generic lambda uses the c-weighted sum of
// Harish-Chandra series; non-generic lambda uses the regularized derivative
// formula c0 phi_{lambda0} = d(pi)(p(lambda) phi_lambda)|_{lambda0} realized by
// iterated Cauchy quadrature on product contours.  Also: boundedness
// classification, leading-term asymptotics, and the estimate checkers.

#pragma once

#include "hypergeo/cfunc.hpp"
#include "hypergeo/root_system.hpp"
#include "hypergeo/series.hpp"
#include "hypergeo/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hypergeo::hyper {

// Product of affine forms <lambda,alpha> - s; empty product = 1.
struct FactoredPolynomial {
    struct Factor {
        Vec root;
        double shift;
    };
    std::vector<Factor> factors;

    Complex eval(const CVec& lambda) const {
        Complex v(1.0, 0.0);
        for (const auto& f : factors) v *= bilinear(lambda, f.root) - f.shift;
        return v;
    }
    double eval(const Vec& x) const {
        double v = 1.0;
        for (const auto& f : factors) v *= x.dot(f.root) - f.shift;
        return v;
    }
    int degree() const { return static_cast<int>(factors.size()); }
};

struct PhiConfig {
    series::SeriesConfig series;
    double integer_tol = 1e-9;      // Sigma_lambda detection
    double generic_margin = 1e-6;   // below this, phi routes to the regularized path
    int nodes_per_circle = 16;
    double radius_cap = 0.25;
    std::size_t max_contour_nodes = 400000;
    double hyperplane_search_radius = 2.0;
};

struct RegularizerBundle {
    CVec lambda0;
    std::vector<std::size_t> singular_roots;  // indices into Sigma_0^+
    std::vector<int> n_alpha;                 // parallel
    FactoredPolynomial pi0, pi1, pi, p;
    double c0 = 1.0;
    Vec rho0;
    std::vector<double> contour_radii;  // per factor of pi
    int nodes_per_circle = 16;
};

RegularizerBundle build_regularizers(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                     const CVec& lambda0, const PhiConfig& cfg);

// Permanent of the Gram matrix [<alpha_i,alpha_j>]; equals d(pi)(pi).
double gram_permanent(const std::vector<Vec>& roots);

enum class PhiBranch { generic, regularized };

struct EvaluationReport {
    Complex value{0.0, 0.0};
    PhiBranch branch = PhiBranch::generic;
    double tail_bound = 0.0;
    int node_count = 0;         // contour nodes used (0 on the generic branch)
    double max_integrand = 0.0; // contour diagnostic
    std::vector<std::string> warnings;
};

struct NearWallError : std::domain_error {
    double beta_x;
    explicit NearWallError(double b)
        : std::domain_error("x too close to the chamber walls for series evaluation"),
          beta_x(b) {}
};

// Generic branch only; throws std::invalid_argument off the generic set.
EvaluationReport phi_generic(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                             const CVec& lambda, const Vec& x, const PhiConfig& cfg);

// Any lambda: dominantize, then dispatch generic/regularized.
EvaluationReport phi(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                     const CVec& lambda, const Vec& x, const PhiConfig& cfg);

// Same lambda, many x: tables and contours are shared across the batch.
std::vector<EvaluationReport> phi_many(const RootSystem& rs,
                                       const cfunc::CFunctionContext& ctx, const CVec& lambda,
                                       const std::vector<Vec>& xs, const PhiConfig& cfg);

// Bracketing value near the walls for real lambda (subadditivity bridge).
struct BridgedValue {
    double value;  // geometric mean of the bracket
    double lower, upper;
};
BridgedValue phi_near_wall_bracket(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                   const Vec& lambda, const Vec& x, const PhiConfig& cfg);

struct BoundednessCertificate {
    bool bounded = false;
    Vec hull_coefficients;  // rho - dominant(Re lambda) in the simple-root basis
};

// Re lambda in C(rho) iff rho - dominant(Re lambda) is a nonnegative
// combination of simple roots.
BoundednessCertificate is_bounded(const RootSystem& rs, const CVec& lambda,
                                  double tol = 1e-9);

// b0(lambda0) = lim pi0(lambda) c(lambda), by contour average (holomorphic).
Complex b0_constant(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                    const RegularizerBundle& bundle);

struct AsymptoticReport {
    std::vector<double> t;
    std::vector<Complex> ratio;      // phi(t x1) / [pi0(t x1) e^{(lambda0-rho)(t x1)}]
    Complex predicted_limit{0.0, 0.0};
    std::vector<double> deviation;   // |ratio - predicted|
};

AsymptoticReport leading_asymptotic(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                    const CVec& lambda0, const Vec& x1,
                                    const std::vector<double>& t_list, const PhiConfig& cfg);

// |L phi - (<lambda,lambda> - <rho,rho>) phi| with L applied by central
// differences.
double eigen_residual(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                      const CVec& lambda, const Vec& x, double h, const PhiConfig& cfg);

// phi_lambda(x+x1) e^{-max_w (lambda-rho)(w x1)} <= phi_lambda(x)
//   <= phi_lambda(x+x1) e^{max_w (rho-lambda)(w x1)}   (real lambda)
bool subadditivity_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                         const Vec& lambda, const Vec& x, const Vec& x1,
                         const PhiConfig& cfg);

// |phi_lambda(x)| <= phi_{Re lambda}(x) (1 + 1e-8)
bool schapira_bound_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                          const CVec& lambda, const Vec& x, const PhiConfig& cfg);

// Time average (1/T) int_0^T |sum c_j e^{i u_j t}|^2 dt, in closed form.
// Validates the mean-square device behind the unboundedness monitor.
double mean_square_time_average(const std::vector<Complex>& coeffs,
                                const std::vector<double>& freqs, double T);

// max |phi_lambda| over a deterministic chamber mesh at the given radius.
double chamber_max_abs_phi(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                           const CVec& lambda, double radius, int mesh,
                           const PhiConfig& cfg);

// Interior direction with alpha_j(d) = 1 for every simple root.
Vec chamber_interior_direction(const RootSystem& rs);

}  // namespace hypergeo::hyper
