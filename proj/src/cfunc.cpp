#include "hypergeo/cfunc.hpp"

#include <algorithm>
#include <cmath>

namespace hypergeo::cfunc {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2 pi)
constexpr double kPoleTol = 1e-13;

Complex log_gamma_core(Complex z) {
    // Requires Re z >= 0.5.
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + kLanczosG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
    Complex w = kPi * z;
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    // sin w = (e^{iw} - e^{-iw}) / (2i); factor out the dominant exponential:
    //   Im w > 0:  sin w = (i/2)  e^{-iw} (1 - e^{ 2iw})
    //   Im w < 0:  sin w = (-i/2) e^{ iw} (1 - e^{-2iw})
    const Complex I(0.0, 1.0);
    if (w.imag() > 0.0)
        return -I * w + std::log(Complex(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * I * w));
    return I * w + std::log(Complex(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * I * w));
}

// Nearest nonpositive-integer pole of Gamma, or -1 if z is not within tol.
int gamma_pole_index(Complex z, double tol) {
    double n = std::round(z.real());
    if (n > 0.5) return -1;
    if (std::abs(z - Complex(n, 0.0)) < tol) return static_cast<int>(-n);
    return -1;
}

double log_factorial(int n) {
    double s = 0.0;
    for (int k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
    return s;
}

// One gamma factor whose argument moves along lambda_alpha with a fixed slope.
// At a pole -n the "value" is log of lim (arg + n) Gamma(arg) / slope, i.e. the
// coefficient of the simple pole in the lambda_alpha variable.
struct GammaFactor {
    int order;       // 1 at a pole, 0 otherwise
    Complex logval;  // log Gamma, or log of the pole coefficient
    int pole_n;
};

GammaFactor gamma_factor(Complex arg, double slope) {
    int n = gamma_pole_index(arg, kPoleTol);
    if (n >= 0) {
        // Gamma(-n + e) ~ (-1)^n / (n! e); with arg = a + slope * la the
        // coefficient in la is (-1)^n / (n! slope).
        Complex logc = -log_factorial(n) - std::log(Complex(slope, 0.0));
        if (n % 2 != 0) logc += Complex(0.0, kPi);
        return {1, logc, n};
    }
    return {0, log_gamma(arg), -1};
}

}  // namespace

Complex log_gamma(Complex z) {
    int n = gamma_pole_index(z, kPoleTol);
    if (n >= 0) throw GammaPoleError(n);
    if (z.real() >= 0.5) return log_gamma_core(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

CFunctionContext::CFunctionContext(const RootSystem& rs) : rank(rs.rank) {
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        const Vec& a = rs.indivisible_root(i);
        double m = rs.indivisible_multiplicity(i);
        double m2 = rs.double_multiplicity(i);
        params.push_back({a, a.squaredNorm(), m / 4.0 + 0.5, m / 4.0 + m2 / 2.0, i});
    }
    // c_HC = 1 / prod c_alpha(rho); rho_alpha > 0 for positive multiplicities,
    // so no factor is singular here.
    log_c_hc = Complex(0.0, 0.0);
    CVec rho_c = to_complex(rs.rho);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& p = params[i];
        Complex la = bilinear(rho_c, p.alpha) / p.alpha_sq;
        Complex lg = -la * std::log(2.0) + log_gamma(la) -
                     log_gamma(la / 2.0 + p.denom_a) - log_gamma(la / 2.0 + p.denom_b);
        acc += lg;
    }
    log_c_hc = -acc;
}

CValue c_alpha(const CFunctionContext& ctx, std::size_t root_index, const CVec& lambda) {
    const auto& p = ctx.params.at(root_index);
    Complex la = bilinear(lambda, p.alpha) / p.alpha_sq;

    GammaFactor num = gamma_factor(la, 1.0);
    GammaFactor d1 = gamma_factor(la / 2.0 + p.denom_a, 0.5);
    GammaFactor d2 = gamma_factor(la / 2.0 + p.denom_b, 0.5);

    CValue out;
    out.order = num.order - d1.order - d2.order;
    Complex log_total = -la * std::log(2.0) + num.logval - d1.logval - d2.logval;
    if (out.order > 0) {
        out.singular.push_back(
            {root_index, -static_cast<double>(num.pole_n), HyperplaneKind::pole, 0.0});
        out.value = std::exp(log_total);  // pole coefficient, informational
    } else if (out.order < 0) {
        out.value = Complex(0.0, 0.0);
    } else {
        out.value = std::exp(log_total);
    }
    return out;
}

CValue c_function(const CFunctionContext& ctx, const CVec& lambda) {
    CValue out;
    Complex log_acc = ctx.log_c_hc;
    int order = 0;
    double zero_sign = 1.0;  // unused; zeros collapse the value to 0
    (void)zero_sign;
    Complex pole_coeff_log(0.0, 0.0);
    bool any_zero = false;
    for (std::size_t i = 0; i < ctx.params.size(); ++i) {
        CValue f = c_alpha(ctx, i, lambda);
        order += f.order;
        for (const auto& h : f.singular) out.singular.push_back(h);
        if (f.order == 0) {
            if (f.value == Complex(0.0, 0.0)) {
                any_zero = true;
            } else {
                log_acc += std::log(f.value);
            }
        } else {
            pole_coeff_log += std::log(f.value);
        }
        if (f.order < 0) any_zero = true;
    }
    out.order = order;
    if (order > 0) {
        out.value = std::exp(log_acc + pole_coeff_log);
    } else if (order < 0 || any_zero) {
        out.value = Complex(0.0, 0.0);
        out.order = std::min(order, -1);
    } else {
        out.value = std::exp(log_acc);
    }
    return out;
}

double plancherel_density(const CFunctionContext& ctx, const CVec& lambda) {
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (std::abs(lambda[i].real()) > 1e-10 * (1.0 + cnorm(lambda)))
            throw std::invalid_argument("plancherel_density requires lambda in i a*");
    CValue c = c_function(ctx, lambda);
    if (c.is_pole()) return 0.0;  // density vanishes to the order of pi_0^2
    double mod = std::abs(c.value);
    if (mod == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (mod * mod);
}

std::vector<HyperplaneDescriptor> singular_hyperplanes_near(const CFunctionContext& ctx,
                                                            const CVec& lambda0,
                                                            double radius) {
    if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
    std::vector<HyperplaneDescriptor> out;
    for (const auto& p : ctx.params) {
        double len = std::sqrt(p.alpha_sq);
        Complex la = bilinear(lambda0, p.alpha) / p.alpha_sq;
        // dist(lambda0, H_{alpha,n}) = |la - n| * |alpha|
        double imag_off = std::abs(la.imag()) * len;
        if (imag_off > radius) continue;
        double span = radius / len;
        int lo = static_cast<int>(std::ceil(la.real() - span)) - 1;
        int hi = static_cast<int>(std::floor(la.real() + span)) + 1;
        for (int n = lo; n <= hi; ++n) {
            double dist = std::abs(la - Complex(n, 0.0)) * len;
            if (dist <= radius)
                out.push_back({p.root_index, static_cast<double>(n), HyperplaneKind::pole, dist});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const HyperplaneDescriptor& a, const HyperplaneDescriptor& b) {
                  return a.distance < b.distance;
              });
    return out;
}

std::vector<HyperplaneDescriptor> c_singularities_near(const CFunctionContext& ctx,
                                                       const RootSystem& rs,
                                                       const CVec& lambda0, double radius) {
    std::vector<HyperplaneDescriptor> out;
    for (std::size_t i = 0; i < ctx.params.size(); ++i) {
        const auto& p = ctx.params[i];
        double len = std::sqrt(p.alpha_sq);
        Complex la = bilinear(lambda0, p.alpha) / p.alpha_sq;
        double span = radius / len;
        auto consider = [&](double r, HyperplaneKind kind) {
            double dist = std::abs(la - Complex(r, 0.0)) * len;
            if (dist <= radius) out.push_back({i, r, kind, dist});
        };
        // poles: H_{alpha,-n}, n in N_0; candidates need -n within span of Re la
        int n_lo = std::max(0, static_cast<int>(std::ceil(-la.real() - span)) - 1);
        int n_hi = std::max(n_lo, static_cast<int>(std::floor(-la.real() + span)) + 1);
        for (int n = n_lo; n <= n_hi; ++n)
            consider(-static_cast<double>(n), HyperplaneKind::pole);
        double m = rs.indivisible_multiplicity(i);
        double m2 = rs.double_multiplicity(i);
        for (int n = 0; n <= 100000; ++n) {
            double r1 = -(m / 2.0 + m2) - 2.0 * n;
            double r2 = -m / 2.0 - 1.0 - 2.0 * n;
            consider(r1, HyperplaneKind::zero);
            consider(r2, HyperplaneKind::zero);
            if (r1 < la.real() - span && r2 < la.real() - span) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const HyperplaneDescriptor& a, const HyperplaneDescriptor& b) {
                  return a.distance < b.distance;
              });
    return out;
}

}  // namespace hypergeo::cfunc
