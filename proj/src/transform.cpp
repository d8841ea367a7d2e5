#include "hypergeo/transform.hpp"

#include "hypergeo/parallel.hpp"
#include "hypergeo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypergeo::transform {

namespace {

// Extreme rays of the chamber cone: alpha_j(c_i) = delta_ij.
Mat chamber_rays(const RootSystem& rs) {
    const int l = rs.rank;
    Mat a(l, l);
    for (int j = 0; j < l; ++j) a.row(j) = rs.simple_roots[j].transpose();
    return a.colPivHouseholderQr().solve(Mat::Identity(l, l));
}

}  // namespace

double mu_density(const RootSystem& rs, const Vec& x) {
    double out = 1.0;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        double ax = rs.positive_roots[i].dot(x);
        out *= std::pow(std::abs(std::exp(ax) - std::exp(-ax)), rs.multiplicities[i]);
    }
    return out;
}

SampledFunction make_space_grid(const RootSystem& rs, const TransformConfig& cfg) {
    const int l = rs.rank;
    Mat rays = chamber_rays(rs);
    double jac = std::abs(rays.determinant());

    double lo = std::max(0.0, cfg.space_inner_cut);
    quadrature::Grid1D g1 =
        quadrature::composite_gauss(lo, cfg.space_radius, cfg.space_cells, cfg.quad_order);

    SampledFunction out;
    out.truncation_radius = cfg.space_radius;
    std::vector<std::size_t> idx(l, 0);
    const std::size_t n1 = g1.nodes.size();
    std::size_t total = 1;
    for (int d = 0; d < l; ++d) total *= n1;
    out.grid.reserve(total);
    out.weights.reserve(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        Vec u(l);
        double w = jac;
        for (int d = 0; d < l; ++d) {
            std::size_t i = rest % n1;
            rest /= n1;
            u[d] = g1.nodes[i];
            w *= g1.weights[i];
        }
        Vec x = Vec::Zero(l);
        for (int d = 0; d < l; ++d) x += u[d] * rays.col(d);
        out.grid.push_back(x);
        out.weights.push_back(w);
    }
    out.values.assign(out.grid.size(), Complex(0.0, 0.0));
    return out;
}

SampledFunction make_spectral_grid(const RootSystem& rs, const TransformConfig& cfg) {
    const int l = rs.rank;
    SampledFunction out;
    out.truncation_radius = cfg.spectral_radius;
    std::vector<quadrature::Grid1D> axes;
    for (int d = 0; d < l; ++d) {
        // stagger per-dimension cell counts so tensor nodes miss the walls
        int cells = cfg.spectral_cells + (l > 1 ? d : 0);
        axes.push_back(quadrature::composite_gauss(-cfg.spectral_radius, cfg.spectral_radius,
                                                   cells, cfg.quad_order));
    }
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.nodes.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        Vec tau(l);
        double w = 1.0;
        for (int d = 0; d < l; ++d) {
            std::size_t i = rest % axes[d].nodes.size();
            rest /= axes[d].nodes.size();
            tau[d] = axes[d].nodes[i];
            w *= axes[d].weights[i];
        }
        out.grid.push_back(tau);
        out.weights.push_back(w);
    }
    out.values.assign(out.grid.size(), Complex(0.0, 0.0));
    return out;
}

SampledFunction sample_on_grid(const SampledFunction& skeleton,
                               const std::function<Complex(const Vec&)>& f) {
    SampledFunction out = skeleton;
    for (std::size_t i = 0; i < out.grid.size(); ++i) out.values[i] = f(out.grid[i]);
    return out;
}

std::vector<Complex> forward_at(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                const SampledFunction& f, const std::vector<CVec>& lambdas,
                                const TransformConfig& cfg, double* tail_estimate) {
    if (f.grid.size() != f.values.size() || f.grid.size() != f.weights.size())
        throw std::invalid_argument("forward: sampled function grid/values/weights mismatch");
    for (const auto& lam : lambdas) {
        auto cert = hyper::is_bounded(rs, lam);
        if (!cert.bounded)
            throw std::domain_error(
                "forward: lambda outside the tube C(rho)+i a*; transform undefined for L1 data");
    }
    const double order = static_cast<double>(rs.weyl.size());
    std::vector<double> mu_w(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        mu_w[i] = mu_density(rs, f.grid[i]) * f.weights[i];

    std::vector<Complex> out(lambdas.size());
    std::vector<double> tails(lambdas.size(), 0.0);
    util::parallel_for(lambdas.size(), [&](std::size_t j) {
        auto reps = hyper::phi_many(rs, ctx, lambdas[j], f.grid, cfg.phi);
        Complex acc(0.0, 0.0);
        double tail = 0.0;
        for (std::size_t i = 0; i < f.grid.size(); ++i) {
            acc += mu_w[i] * f.values[i] * reps[i].value;
            tail += std::abs(mu_w[i]) * std::abs(f.values[i]) * reps[i].tail_bound;
        }
        out[j] = order * acc;
        tails[j] = order * tail;
    });
    if (tail_estimate) {
        double t = 0.0;
        for (double v : tails) t = std::max(t, v);
        *tail_estimate = t;
    }
    return out;
}

SampledFunction forward(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                        const SampledFunction& f, const SampledFunction& spectral_skeleton,
                        const TransformConfig& cfg, double* tail_estimate) {
    std::vector<CVec> lambdas;
    lambdas.reserve(spectral_skeleton.grid.size());
    for (const auto& tau : spectral_skeleton.grid) {
        CVec lam(tau.size());
        for (Eigen::Index i = 0; i < tau.size(); ++i) lam[i] = Complex(0.0, tau[i]);
        lambdas.push_back(lam);
    }
    SampledFunction out = spectral_skeleton;
    out.values = forward_at(rs, ctx, f, lambdas, cfg, tail_estimate);
    return out;
}

SampledFunction inverse(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                        const SampledFunction& F, const std::vector<Vec>& x_list,
                        const TransformConfig& cfg) {
    if (cfg.plancherel_constant <= 0.0)
        throw std::invalid_argument("inverse: plancherel_constant not calibrated");
    // Spectral decay check: the outer shell must be negligible.
    double peak = 0.0, outer = 0.0;
    for (std::size_t j = 0; j < F.grid.size(); ++j) {
        double m = std::abs(F.values[j]);
        peak = std::max(peak, m);
        if (F.grid[j].norm() > 0.85 * F.truncation_radius) outer = std::max(outer, m);
    }
    if (peak > 0.0 && outer > 1e-4 * peak)
        throw std::domain_error("inverse: spectral samples do not decay inside the grid");

    SampledFunction out;
    out.grid = x_list;
    out.values.assign(x_list.size(), Complex(0.0, 0.0));
    out.weights.assign(x_list.size(), 0.0);
    out.truncation_radius = F.truncation_radius;

    std::vector<std::vector<Complex>> contrib(F.grid.size());
    util::parallel_for(F.grid.size(), [&](std::size_t j) {
        const Vec& tau = F.grid[j];
        CVec lam(tau.size());
        for (Eigen::Index i = 0; i < tau.size(); ++i) lam[i] = Complex(0.0, tau[i]);
        double density = cfunc::plancherel_density(ctx, lam);
        contrib[j].assign(x_list.size(), Complex(0.0, 0.0));
        if (density == 0.0 || F.values[j] == Complex(0.0, 0.0)) return;
        auto reps = hyper::phi_many(rs, ctx, lam, x_list, cfg.phi);
        for (std::size_t ix = 0; ix < x_list.size(); ++ix) {
            // phi_{-lambda}(x) = conj(phi_lambda(x)) on i a*
            contrib[j][ix] = F.weights[j] * F.values[j] * std::conj(reps[ix].value) * density;
        }
    });
    for (std::size_t j = 0; j < F.grid.size(); ++j)
        for (std::size_t ix = 0; ix < x_list.size(); ++ix) out.values[ix] += contrib[j][ix];
    for (auto& v : out.values) v *= cfg.plancherel_constant;
    return out;
}

PlancherelReport plancherel_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                  const SampledFunction& f, const TransformConfig& cfg) {
    PlancherelReport rep;
    const double order = static_cast<double>(rs.weyl.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        rep.lhs += order * f.weights[i] * std::norm(f.values[i]) * mu_density(rs, f.grid[i]);

    SampledFunction spec = make_spectral_grid(rs, cfg);
    SampledFunction fh = forward(rs, ctx, f, spec, cfg);
    for (std::size_t j = 0; j < fh.grid.size(); ++j) {
        CVec lam(fh.grid[j].size());
        for (Eigen::Index i = 0; i < fh.grid[j].size(); ++i)
            lam[i] = Complex(0.0, fh.grid[j][i]);
        rep.rhs += fh.weights[j] * std::norm(fh.values[j]) * cfunc::plancherel_density(ctx, lam);
    }
    rep.ratio = rep.rhs / rep.lhs;
    return rep;
}

double calibrate_plancherel(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                            const TransformConfig& cfg) {
    SampledFunction skel = make_space_grid(rs, cfg);
    SampledFunction f0 = sample_on_grid(
        skel, [](const Vec& x) { return Complex(std::exp(-x.squaredNorm()), 0.0); });
    PlancherelReport rep = plancherel_check(rs, ctx, f0, cfg);
    return rep.lhs / rep.rhs;
}

DecayReport tube_decay_probe(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                             const SampledFunction& f, const Vec& sigma, double p,
                             const TransformConfig& cfg) {
    if (!(p > 1.0 && p <= 2.0))
        throw std::invalid_argument("tube_decay_probe: p must lie in (1,2]");
    double eps_p = 2.0 / p - 1.0;
    if (sigma.norm() > 0.0) {
        if (eps_p <= 0.0)
            throw std::invalid_argument("tube_decay_probe: sigma must be 0 when p = 2");
        auto cert = hyper::is_bounded(rs, to_complex(Vec(sigma / eps_p)), 1e-9);
        if (!cert.bounded)
            throw std::invalid_argument("tube_decay_probe: sigma outside C(eps_p rho)");
    }

    Vec dir = hyper::chamber_interior_direction(rs);
    dir.normalize();
    DecayReport rep;
    std::vector<CVec> lambdas;
    const int samples = 24;
    for (int s = 1; s <= samples; ++s) {
        double off = cfg.spectral_radius * static_cast<double>(s) / samples;
        rep.offsets.push_back(off);
        CVec lam = to_complex(sigma);
        for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] += Complex(0.0, off * dir[i]);
        lambdas.push_back(lam);
    }
    auto vals = forward_at(rs, ctx, f, lambdas, cfg);
    for (const auto& v : vals) {
        rep.magnitudes.push_back(std::abs(v));
        rep.peak = std::max(rep.peak, std::abs(v));
    }
    for (int s = 3 * samples / 4; s < samples; ++s)
        rep.final_envelope = std::max(rep.final_envelope, rep.magnitudes[s]);
    rep.decayed = rep.final_envelope <= 1e-3 * rep.peak;
    return rep;
}

}  // namespace hypergeo::transform
