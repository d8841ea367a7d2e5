#include "hypergeo/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace hypergeo::series {

namespace {

std::uint64_t pack_coeffs(const std::vector<int>& n) {
    std::uint64_t key = 0;
    for (int v : n) key = (key << 16) | static_cast<std::uint64_t>(v & 0xffff);
    return key;
}

GammaTable run_recursion(const RootSystem& rs, const CVec& lambda, const SeriesConfig& cfg,
                         bool even_only) {
    GammaTable table;
    table.lambda = lambda;
    table.max_level = cfg.max_level;
    table.points = enumerate_lattice(rs, cfg.max_level, even_only);
    table.entries.assign(table.points.size(), Complex(0.0, 0.0));
    table.level_of.resize(table.points.size());

    const int l = rs.rank;
    const std::size_t nroots = rs.positive_roots.size();

    // Pairings that the recursion reuses per mu.
    std::vector<Complex> lambda_dot_alpha(nroots);     // <lambda, alpha>
    std::vector<double> rho_dot_alpha(nroots);         // <rho, alpha>
    std::vector<double> alpha_sq(nroots);
    std::vector<std::vector<double>> simple_dot_alpha(nroots, std::vector<double>(l));
    for (std::size_t a = 0; a < nroots; ++a) {
        const Vec& av = rs.positive_roots[a];
        lambda_dot_alpha[a] = bilinear(lambda, av);
        rho_dot_alpha[a] = rs.rho.dot(av);
        alpha_sq[a] = av.squaredNorm();
        for (int j = 0; j < l; ++j) simple_dot_alpha[a][j] = rs.simple_roots[j].dot(av);
    }
    Mat simple_gram(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) simple_gram(i, j) = rs.simple_roots[i].dot(rs.simple_roots[j]);
    CVec lambda_dot_simple(l);
    for (int j = 0; j < l; ++j) lambda_dot_simple[j] = bilinear(lambda, rs.simple_roots[j]);

    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(table.points.size() * 2);
    for (std::size_t i = 0; i < table.points.size(); ++i)
        index.emplace(pack_coeffs(table.points[i].coeffs), i);

    double scale = 1.0 + cnorm(lambda);
    double denom_floor = cfg.denom_threshold * scale * scale;

    std::vector<int> reduced(l);
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        const LatticePoint& mu = table.points[i];
        table.level_of[i] = mu.level;
        if (mu.level == 0) {
            table.entries[i] = Complex(1.0, 0.0);  // Gamma_0 = 1
            continue;
        }
        // <mu,mu> and <mu,lambda> from the simple-root expansion.
        double mu_sq = 0.0;
        Complex mu_lambda(0.0, 0.0);
        for (int a = 0; a < l; ++a) {
            mu_lambda += static_cast<double>(mu.coeffs[a]) * lambda_dot_simple[a];
            for (int b = 0; b < l; ++b)
                mu_sq += mu.coeffs[a] * mu.coeffs[b] * simple_gram(a, b);
        }
        Complex denom = mu_sq - 2.0 * mu_lambda;

        Complex rhs(0.0, 0.0);
        for (std::size_t a = 0; a < nroots; ++a) {
            const auto& ic = rs.positive_in_simple[a];
            double mu_dot_a = 0.0;
            for (int j = 0; j < l; ++j) mu_dot_a += mu.coeffs[j] * simple_dot_alpha[a][j];
            Complex inner_sum(0.0, 0.0);
            for (int k = 1;; ++k) {
                bool ok = true;
                for (int j = 0; j < l; ++j) {
                    reduced[j] = mu.coeffs[j] - 2 * k * ic[j];
                    if (reduced[j] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                auto it = index.find(pack_coeffs(reduced));
                if (it == index.end()) continue;  // odd-parity point outside an even table
                Complex g = table.entries[it->second];
                if (g == Complex(0.0, 0.0)) continue;
                // <mu + rho - 2k alpha - lambda, alpha>
                Complex factor = mu_dot_a + rho_dot_alpha[a] - 2.0 * k * alpha_sq[a] -
                                 lambda_dot_alpha[a];
                inner_sum += g * factor;
            }
            rhs += rs.multiplicities[a] * inner_sum;
        }
        rhs *= 2.0;

        if (std::abs(denom) < denom_floor) {
            table.singular_flag = true;
            table.offending.push_back(mu);
        }
        table.entries[i] = (rhs == Complex(0.0, 0.0)) ? Complex(0.0, 0.0) : rhs / denom;
    }
    return table;
}

}  // namespace

GammaTable gamma_coefficients(const RootSystem& rs, const CVec& lambda,
                              const SeriesConfig& cfg) {
    return run_recursion(rs, lambda, cfg, /*even_only=*/true);
}

GammaTable gamma_coefficients_full_lattice(const RootSystem& rs, const CVec& lambda,
                                           const SeriesConfig& cfg) {
    return run_recursion(rs, lambda, cfg, /*even_only=*/false);
}

SeriesValue hc_series(const RootSystem& rs, const GammaTable& table, const Vec& x,
                      const SeriesConfig& cfg) {
    SeriesValue out;
    double bx = beta(rs, x);
    if (bx <= 0.0)
        throw std::invalid_argument("hc_series requires x strictly inside the chamber");
    if (bx < cfg.beta_min)
        out.warnings.push_back("beta(x) below beta_min: series valid but slowly convergent");
    if (table.singular_flag)
        out.warnings.push_back("gamma table flagged singular: value may be inaccurate");

    const int l = rs.rank;
    std::vector<double> simple_x(l);
    for (int j = 0; j < l; ++j) simple_x[j] = rs.simple_roots[j].dot(x);

    Complex sum(0.0, 0.0);
    double frontier = 0.0;  // max |Gamma_mu e^{-mu(x)}| over the last two levels
    int max_lvl = table.max_level;
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        const LatticePoint& mu = table.points[i];
        double mu_x = 0.0;
        for (int j = 0; j < l; ++j) mu_x += mu.coeffs[j] * simple_x[j];
        Complex term = table.entries[i] * std::exp(-mu_x);
        sum += term;
        if (mu.level >= max_lvl - 1) frontier = std::max(frontier, std::abs(term));
    }

    // lambda(x) - rho(x), bilinear.
    Complex exponent(0.0, 0.0);
    for (int j = 0; j < l; ++j) exponent += table.lambda[j] * x[j];
    exponent -= rs.rho.dot(x);
    Complex prefactor = std::exp(exponent);
    out.value = prefactor * sum;

    // Tail: at most m^{l-1} lattice points at level m, each term below
    // frontier * e^{-j beta(x)} for j levels past the frontier.
    double tail_sum = 0.0;
    for (int j = 1; j <= 200000; ++j) {
        double t = std::pow(static_cast<double>(max_lvl + j), l - 1) * std::exp(-j * bx);
        tail_sum += t;
        if (t < 1e-18 * (tail_sum + 1e-300) && j > 4) break;
    }
    out.tail_bound = std::abs(prefactor) * frontier * tail_sum;
    out.converged = out.tail_bound <= cfg.tail_tol * std::max(std::abs(out.value), 1e-300);
    if (!out.converged) out.warnings.push_back("series tail above tolerance at this level");
    return out;
}

bool is_generic(const RootSystem& rs, const CVec& lambda, double tol) {
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        Complex la = lambda_alpha(lambda, rs.indivisible_root(i));
        double n = std::round(la.real());
        if (std::abs(la.real() - n) < tol && std::abs(la.imag()) < tol) return false;
    }
    return true;
}

int level_for_beta(double beta_x, double tol, int at_least, int cap) {
    if (beta_x <= 0.0) return cap;
    int needed = static_cast<int>(std::ceil(-std::log(std::max(tol, 1e-300)) / beta_x)) + 6;
    return std::clamp(std::max(needed, at_least), at_least, cap);
}

}  // namespace hypergeo::series
