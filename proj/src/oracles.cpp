#include "hypergeo/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypergeo::oracles {

namespace {

bool near_nonpositive_integer(Complex z, double tol = 1e-12) {
    double n = std::round(z.real());
    return n <= 0.5 && std::abs(z - Complex(n, 0.0)) < tol;
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, double z) {
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c at a pole of the series");
    if (z > 0.0) throw std::invalid_argument("gauss_2f1: only z <= 0 supported");
    if (z == 0.0) return Complex(1.0, 0.0);

    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
    double w = z / (z - 1.0);
    if (w > 0.999)
        throw std::domain_error("gauss_2f1: transformed argument too close to 1");
    Complex a2 = a, b2 = c - b;
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    const double tol = 1e-14;
    for (int n = 0; n < 2000000; ++n) {
        term *= (a2 + static_cast<double>(n)) * (b2 + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * w;
        sum += term;
        if (std::abs(term) < tol * std::max(1.0, std::abs(sum))) {
            // require two consecutive small terms: parameters can make single
            // terms vanish accidentally
            Complex next = term * (a2 + static_cast<double>(n + 1)) *
                           (b2 + static_cast<double>(n + 1)) /
                           ((c + static_cast<double>(n + 1)) * static_cast<double>(n + 2)) * w;
            if (std::abs(next) < tol * std::max(1.0, std::abs(sum))) break;
        }
    }
    return std::exp(-a * std::log(Complex(1.0 - z, 0.0))) * sum;
}

Complex jacobi_phi_first(const JacobiParams& p, Complex lambda, double t) {
    if (t <= 0.0) throw std::invalid_argument("jacobi_phi_first: t must be positive");
    double rho = p.rho();
    double sh = std::sinh(t);
    return gauss_2f1((rho + lambda) / 2.0, (rho - lambda) / 2.0,
                     Complex((p.m_alpha + p.m_2alpha + 1.0) / 2.0, 0.0), -sh * sh);
}

Complex jacobi_Phi_second(const JacobiParams& p, Complex lambda, double t) {
    if (t <= 0.0) throw std::invalid_argument("jacobi_Phi_second: t must be positive");
    double n = std::round(lambda.real());
    if (n >= 0.5 && std::abs(lambda - Complex(n, 0.0)) < 1e-12)
        throw std::domain_error("jacobi_Phi_second: lambda in N hits a 2F1 parameter pole");
    double rho = p.rho();
    double sh = std::sinh(t);
    Complex pre = std::exp((lambda - rho) * std::log(2.0 * sh));
    return pre * gauss_2f1((rho - lambda) / 2.0, (-p.m_alpha / 2.0 + 1.0 - lambda) / 2.0,
                           1.0 - lambda, -1.0 / (sh * sh));
}

namespace {

Complex complex_case_phi_generic(const RootSystem& rs, const CVec& lambda, const Vec& x) {
    // pi(rho)/pi(lambda) * sum det(w) e^{w lambda(x)} / Delta(x)
    Complex pi_lambda(1.0, 0.0);
    double pi_rho = 1.0;
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        const Vec& a = rs.indivisible_root(i);
        pi_lambda *= bilinear(lambda, a);
        pi_rho *= rs.rho.dot(a);
    }
    Complex weyl_sum(0.0, 0.0);
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        CVec wl = rs.weyl.apply(w, lambda);
        weyl_sum += static_cast<double>(rs.weyl.dets[w]) * std::exp(bilinear(wl, x));
    }
    double delta = 1.0;
    for (const auto& a : rs.positive_roots) {
        double ax = a.dot(x);
        delta *= std::exp(ax) - std::exp(-ax);
    }
    return pi_rho / pi_lambda * weyl_sum / delta;
}

}  // namespace

Complex complex_case_phi(const RootSystem& rs, const CVec& lambda, const Vec& x) {
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        if (std::abs(rs.multiplicities[i] - 2.0) > 1e-12)
            throw std::invalid_argument("complex_case_phi requires all multiplicities = 2");
    }
    double scale = 1.0 + cnorm(lambda);
    double min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i)
        min_pair = std::min(min_pair, std::abs(bilinear(lambda, rs.indivisible_root(i))));
    if (min_pair > 1e-6 * scale) return complex_case_phi_generic(rs, lambda, x);

    // l'Hopital along a generic line: phi(lambda + eps nu) extrapolated to 0.
    Vec nu = Vec::Zero(rs.rank);
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i)
        nu += (1.0 + 0.37 * static_cast<double>(i)) * rs.indivisible_root(i);
    nu.normalize();
    CVec nu_c = to_complex(nu);
    std::vector<double> eps = {4e-2, 2e-2, 1e-2, 5e-3, 2.5e-3};
    return richardson_limit(
        [&](double e) {
            CVec shifted = lambda + Complex(e, 0.0) * nu_c;
            return complex_case_phi_generic(rs, shifted, x);
        },
        eps);
}

bool hull_membership_bruteforce(const RootSystem& rs, const Vec& mu, double tol) {
    // Vertices: the Weyl orbit of rho (deduplicated).
    std::vector<Vec> verts;
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        Vec v = rs.weyl.apply(w, rs.rho);
        bool dup = false;
        for (const auto& u : verts)
            if ((u - v).norm() < 1e-10) dup = true;
        if (!dup) verts.push_back(v);
    }
    const int l = rs.rank;
    const int k = l + 1;  // Caratheodory subset size
    const std::size_t nv = verts.size();
    double scale = 1.0 + mu.norm() + rs.rho.norm();

    // Quick vertex checks.
    for (const auto& v : verts)
        if ((v - mu).norm() < tol * scale) return true;

    // Enumerate subsets of size s for s = 1..k.
    for (int s = 1; s <= k; ++s) {
        std::vector<std::size_t> c(s);
        for (int i = 0; i < s; ++i) c[i] = i;
        if (static_cast<std::size_t>(s) > nv) break;
        while (true) {
            // Solve mu = sum c_w v_w, sum c_w = 1, c_w >= 0 on this subset.
            Mat A(l + 1, s);
            Vec b(l + 1);
            for (int j = 0; j < s; ++j) {
                A.block(0, j, l, 1) = verts[c[j]];
                A(l, j) = 1.0;
            }
            b.head(l) = mu;
            b[l] = 1.0;
            Vec coeff = A.colPivHouseholderQr().solve(b);
            double resid = (A * coeff - b).norm();
            bool feasible = resid < tol * scale;
            for (int j = 0; j < s && feasible; ++j)
                if (coeff[j] < -tol) feasible = false;
            if (feasible) return true;

            // next combination
            int pos = s - 1;
            while (pos >= 0 && c[pos] == nv - static_cast<std::size_t>(s - pos)) --pos;
            if (pos < 0) break;
            ++c[pos];
            for (int j = pos + 1; j < s; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return false;
}

Complex derivative_bruteforce(const std::function<Complex(const CVec&)>& f,
                              const CVec& lambda0, const std::vector<Vec>& directions,
                              double h) {
    const std::size_t k = directions.size();
    if (k == 0) return f(lambda0);
    const std::size_t combos = static_cast<std::size_t>(1) << k;
    Complex sum(0.0, 0.0);
    for (std::size_t mask = 0; mask < combos; ++mask) {
        CVec point = lambda0;
        int sign = 1;
        for (std::size_t j = 0; j < k; ++j) {
            double s = (mask >> j) & 1 ? 1.0 : -1.0;
            if (s < 0) sign = -sign;
            point += Complex(s * h, 0.0) * to_complex(directions[j]);
        }
        sum += static_cast<double>(sign) * f(point);
    }
    return sum / std::pow(2.0 * h, static_cast<double>(k));
}

Complex richardson_limit(const std::function<Complex(double)>& f,
                         const std::vector<double>& eps) {
    const std::size_t n = eps.size();
    std::vector<Complex> tab(n);
    for (std::size_t i = 0; i < n; ++i) tab[i] = f(eps[i]);
    // Neville to eps = 0.
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i + j < n; ++i) {
            double e0 = eps[i], e1 = eps[i + j];
            tab[i] = (Complex(-e1, 0.0) * tab[i] + Complex(e0, 0.0) * tab[i + 1]) /
                     Complex(e0 - e1, 0.0);
        }
    }
    return tab[0];
}

}  // namespace hypergeo::oracles
