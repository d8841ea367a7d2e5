// root_system.hpp — root systems with multiplicities, Weyl groups, lattice and
// chamber geometry.
//
// Roots are stored in explicit orthonormal coordinates of a*.  Normalization:
//   * rank one (A1, BC1): alpha = (1), so <alpha,alpha> = 1 and the classical
//     rank-one identification a ~ a* ~ R applies verbatim;
//   * A_l, D_l (l >= 2): simply laced, all roots of squared length 2;
//   * B_l, BC_l: short roots e_i of squared length 1, long roots e_i +- e_j of
//     squared length 2 (BC adds the doubles 2 e_i);
//   * C_l: short roots (e_i +- e_j)/sqrt(2) of squared length 1, long roots
//     sqrt(2) e_i of squared length 2;
//   * G2: alpha1 = (1,0) short, alpha2 = (-3/2, sqrt(3)/2) long.
// All formulas downstream depend only on the ratios lambda_alpha, so any
// consistent Gram matrix would do; this one is fixed so tests can pin values.

#pragma once

#include "hypergeo/types.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypergeo {

enum class Family { A, B, C, D, BC, G2 };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct WeylGroup {
    std::vector<Mat> elements;   // orthogonal matrices acting on a* (and on a)
    std::vector<int> dets;       // parallel list of +-1
    std::size_t identity_index = 0;

    std::size_t size() const { return elements.size(); }
    Vec apply(std::size_t w, const Vec& v) const { return elements[w] * v; }
    CVec apply(std::size_t w, const CVec& v) const;
    // Inverse as an index into `elements` (orthogonal => transpose).
    std::size_t inverse_index(std::size_t w) const;
    std::size_t product_index(std::size_t w1, std::size_t w2) const;
};

struct RootSystem {
    Family family;
    int rank = 0;                          // l = dim a
    std::vector<Vec> roots;                // all of Sigma
    std::vector<Vec> positive_roots;       // Sigma^+
    std::vector<Vec> simple_roots;         // Pi
    std::vector<std::size_t> indivisible_positive;  // indices into positive_roots (Sigma_0^+)
    std::vector<double> multiplicities;    // parallel to positive_roots
    std::vector<std::string> orbit_names;  // parallel to positive_roots
    std::vector<std::vector<int>> positive_in_simple;  // expansion of Sigma^+ in Pi
    Vec rho;                               // (1/2) sum m_alpha alpha
    WeylGroup weyl;

    double multiplicity_of(const Vec& root) const;  // 0 if not a root
    const Vec& indivisible_root(std::size_t i) const {
        return positive_roots[indivisible_positive[i]];
    }
    double indivisible_multiplicity(std::size_t i) const {
        return multiplicities[indivisible_positive[i]];
    }
    // m_{2 alpha} for alpha = i-th indivisible positive root (0 unless BC).
    double double_multiplicity(std::size_t i) const;
};

// family/rank/multiplicity-orbit construction.  Orbit names: "short" (always),
// "long" (B/C/G2 and BC with rank >= 2), "double" (BC).  A and D use the single
// orbit "short".
RootSystem build_root_system(Family family, int rank,
                             const std::map<std::string, double>& multiplicities);

// lambda_alpha = <lambda,alpha>/<alpha,alpha>, bilinear extension.
Complex lambda_alpha(const CVec& lambda, const Vec& alpha);
double lambda_alpha(const Vec& lambda, const Vec& alpha);

// beta(x) = min over simple roots of alpha(x); measures distance to the walls.
double beta(const RootSystem& rs, const Vec& x);

struct LatticePoint {
    std::vector<int> coeffs;  // mu = sum n_j alpha_j
    int level = 0;            // sum n_j

    bool even() const {
        for (int n : coeffs)
            if (n % 2 != 0) return false;
        return true;
    }
};

// All mu with level <= max_level, ordered by level then lexicographically.
std::vector<LatticePoint> enumerate_lattice(const RootSystem& rs, int max_level,
                                            bool even_only);

Vec lattice_point_covector(const RootSystem& rs, const LatticePoint& mu);

// Classification of a spectral parameter with dominant real part (the sets
// Sigma_lambda, Sigma_lambda^0, Sigma_lambda^> and the centralizers).
struct SpectralClassification {
    std::vector<std::size_t> sigma_lambda;    // indices into Sigma_0^+ (via rs.indivisible_positive order)
    std::vector<std::size_t> sigma_lambda_0;  // nearest integer 0
    std::vector<std::size_t> sigma_lambda_gt; // nearest integer >= 1
    std::vector<int> n_alpha;                 // parallel to sigma_lambda
    std::vector<std::size_t> w_lambda;        // stabilizer of lambda in W (indices)
    std::vector<std::size_t> w_re_lambda;     // stabilizer of Re lambda
    bool generic = false;
    bool near_singular = false;  // some lambda_alpha within (tol, 1e-6] of Z
};

SpectralClassification classify_spectral(const RootSystem& rs, const CVec& lambda,
                                         double integer_tol = 1e-9);

// Smallest |lambda_alpha - round(Re lambda_alpha)| over indivisible roots.
double genericity_margin(const RootSystem& rs, const CVec& lambda);

struct DominantRepresentative {
    CVec lambda;          // w lambda, Re part dominant
    std::size_t weyl_index;
};

DominantRepresentative dominant_representative(const RootSystem& rs, const CVec& lambda);

bool is_dominant(const RootSystem& rs, const Vec& lambda, double tol = 1e-12);

// Solve for the coefficients of v in the simple-root basis.
Vec simple_root_coefficients(const RootSystem& rs, const Vec& v);

}  // namespace hypergeo
