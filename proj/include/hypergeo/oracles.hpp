// oracles.hpp — independent closed-form references used to check the main
// evaluation paths: Gauss 2F1 for z <= 0, rank-one Jacobi functions of first
// and second kind, the complex-case closed form, brute-force convex-hull
// membership, and brute-force directional differentiation.

#pragma once

#include "hypergeo/root_system.hpp"
#include "hypergeo/types.hpp"

#include <functional>
#include <vector>

namespace hypergeo::oracles {

// 2F1(a,b;c;z) for z <= 0 via the Pfaff transform w = z/(z-1) in [0,1).
Complex gauss_2f1(Complex a, Complex b, Complex c, double z);

struct JacobiParams {
    double m_alpha;
    double m_2alpha;

    double rho() const { return m_alpha / 2.0 + m_2alpha; }
};

// Jacobi function of the first kind = rank-one hypergeometric function.
Complex jacobi_phi_first(const JacobiParams& p, Complex lambda, double t);

// Jacobi function of the second kind = rank-one Harish-Chandra series.
Complex jacobi_Phi_second(const JacobiParams& p, Complex lambda, double t);

// Closed form for reduced root systems with all multiplicities equal to 2.
// Non-generic lambda is handled by Richardson extrapolation along a generic
// line.
Complex complex_case_phi(const RootSystem& rs, const CVec& lambda, const Vec& x);

// mu in conv{w rho}: exhaustive Caratheodory search over vertex subsets of
// size <= rank+1.
bool hull_membership_bruteforce(const RootSystem& rs, const Vec& mu, double tol = 1e-10);

// Mixed first-order directional derivative by iterated central differences.
Complex derivative_bruteforce(const std::function<Complex(const CVec&)>& f,
                              const CVec& lambda0, const std::vector<Vec>& directions,
                              double h);

// Polynomial extrapolation of f(eps) to eps = 0 through the given nodes
// (Neville's scheme).  Used for limits along generic lines.
Complex richardson_limit(const std::function<Complex(double)>& f,
                         const std::vector<double>& eps);

}  // namespace hypergeo::oracles
