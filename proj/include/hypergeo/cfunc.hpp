// cfunc.hpp — Harish-Chandra c-function: complex log-gamma, per-root factors
// c_alpha, normalized product with c(rho) = 1, Plancherel density, and
// singular-hyperplane reporting.

#pragma once

#include "hypergeo/root_system.hpp"
#include "hypergeo/types.hpp"

#include <stdexcept>
#include <vector>

namespace hypergeo::cfunc {

// Thrown when log_gamma is evaluated at a nonpositive integer.
struct GammaPoleError : std::domain_error {
    int pole_n;  // z = -pole_n
    explicit GammaPoleError(int n)
        : std::domain_error("gamma pole at z = " + std::to_string(-n)), pole_n(n) {}
};

// Principal-branch log Gamma (Lanczos g = 7, reflection for Re z < 1/2).
Complex log_gamma(Complex z);

enum class HyperplaneKind { pole, zero };

struct HyperplaneDescriptor {
    std::size_t root_index;  // index into Sigma_0^+ (rs.indivisible_positive order)
    double level;            // r in H_{alpha,r}
    HyperplaneKind kind;
    double distance;         // dist(lambda0, H) when produced by a proximity query
};

// Value of c_alpha or c at a point.  order > 0 marks a pole (of that order),
// order < 0 a zero; the value field is the finite directional limit of
// (lambda_alpha - r)^order * c when order != 0 would require direction data,
// so for poles value is unspecified and `singular` carries the hyperplanes.
struct CValue {
    Complex value{0.0, 0.0};
    int order = 0;
    std::vector<HyperplaneDescriptor> singular;

    bool is_pole() const { return order > 0; }
    bool finite() const { return order <= 0; }
};

struct CFunctionContext {
    struct RootParams {
        Vec alpha;
        double alpha_sq;
        double denom_a;  // m_alpha/4 + 1/2
        double denom_b;  // m_alpha/4 + m_{2alpha}/2
        std::size_t root_index;
    };
    std::vector<RootParams> params;  // one per indivisible positive root
    Complex log_c_hc{0.0, 0.0};
    int rank = 0;

    explicit CFunctionContext(const RootSystem& rs);
};

// c_alpha(lambda) = 2^{-la} Gamma(la) / [Gamma(la/2 + m/4 + 1/2) Gamma(la/2 + m/4 + m2/2)].
CValue c_alpha(const CFunctionContext& ctx, std::size_t root_index, const CVec& lambda);

// Normalized c(lambda) = c_HC * prod c_alpha(lambda); c(rho) = 1.
CValue c_function(const CFunctionContext& ctx, const CVec& lambda);

// |c(lambda)|^{-2} for purely imaginary lambda; 0 where c has a pole.
double plancherel_density(const CFunctionContext& ctx, const CVec& lambda);

// All integer-level hyperplanes H_{alpha,n} (alpha in Sigma_0^+, n in Z) meeting
// the closed ball B(lambda0, radius); candidates for singularities of the
// Harish-Chandra expansion coefficients c(w lambda) Gamma_mu(w lambda).
std::vector<HyperplaneDescriptor> singular_hyperplanes_near(const CFunctionContext& ctx,
                                                            const CVec& lambda0,
                                                            double radius);

// Poles and zeros of c itself near lambda0 (Lemma-level pole/zero loci).
std::vector<HyperplaneDescriptor> c_singularities_near(const CFunctionContext& ctx,
                                                       const RootSystem& rs,
                                                       const CVec& lambda0, double radius);

}  // namespace hypergeo::cfunc
