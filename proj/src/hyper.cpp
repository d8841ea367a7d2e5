#include "hypergeo/hyper.hpp"

#include "hypergeo/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace hypergeo::hyper {

namespace {

void merge_warning(std::vector<std::string>& into, const std::string& w) {
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
}

// c-weighted Harish-Chandra series at a fixed generic lambda; tables shared
// across evaluation points.
struct GenericEvaluator {
    const RootSystem* rs;
    series::SeriesConfig scfg;
    std::vector<series::GammaTable> tables;  // one per Weyl element
    std::vector<Complex> c_w;
    bool any_singular = false;

    GenericEvaluator(const RootSystem& rs_, const cfunc::CFunctionContext& ctx,
                     const CVec& lambda, const series::SeriesConfig& scfg_)
        : rs(&rs_), scfg(scfg_) {
        const auto& W = rs_.weyl;
        tables.reserve(W.size());
        c_w.reserve(W.size());
        for (std::size_t w = 0; w < W.size(); ++w) {
            CVec wl = W.apply(w, lambda);
            cfunc::CValue c = cfunc::c_function(ctx, wl);
            if (c.is_pole())
                throw std::invalid_argument("c-function pole inside the generic branch");
            c_w.push_back(c.value);
            tables.push_back(series::gamma_coefficients(rs_, wl, scfg));
            if (tables.back().singular_flag) any_singular = true;
        }
    }

    EvaluationReport eval(const Vec& x) const {
        EvaluationReport out;
        out.branch = PhiBranch::generic;
        for (std::size_t w = 0; w < tables.size(); ++w) {
            if (c_w[w] == Complex(0.0, 0.0)) continue;
            series::SeriesValue sv = series::hc_series(*rs, tables[w], x, scfg);
            out.value += c_w[w] * sv.value;
            out.tail_bound += std::abs(c_w[w]) * sv.tail_bound;
            for (const auto& msg : sv.warnings) merge_warning(out.warnings, msg);
        }
        return out;
    }
};

series::SeriesConfig level_adjusted(const series::SeriesConfig& scfg,
                                    const std::vector<Vec>& xs, const RootSystem& rs) {
    double bmin = std::numeric_limits<double>::infinity();
    for (const auto& x : xs) bmin = std::min(bmin, beta(rs, x));
    series::SeriesConfig out = scfg;
    out.max_level =
        series::level_for_beta(bmin, scfg.tail_tol, scfg.max_level, scfg.level_cap);
    return out;
}

void check_xs(const RootSystem& rs, const std::vector<Vec>& xs, const PhiConfig& cfg) {
    for (const auto& x : xs) {
        double b = beta(rs, x);
        if (b <= 0.0)
            throw std::invalid_argument("phi requires x strictly inside the chamber");
        if (b < cfg.series.beta_min) throw NearWallError(b);
    }
}

struct ContourLayout {
    std::vector<double> radii;
    std::vector<double> offsets;  // angular stagger per circle
    int nodes_per_circle;
    std::size_t total_nodes;
};

ContourLayout make_layout(const RegularizerBundle& bundle, const PhiConfig& cfg,
                          double shrink, double extra_offset) {
    ContourLayout lay;
    lay.radii = bundle.contour_radii;
    for (auto& r : lay.radii) r *= shrink;
    const std::size_t k = lay.radii.size();
    lay.nodes_per_circle = bundle.nodes_per_circle;
    // keep the node count within budget
    while (k > 0 && std::pow(static_cast<double>(lay.nodes_per_circle),
                             static_cast<double>(k)) >
                        static_cast<double>(cfg.max_contour_nodes) &&
           lay.nodes_per_circle > 8)
        --lay.nodes_per_circle;
    lay.total_nodes = 1;
    for (std::size_t j = 0; j < k; ++j) lay.total_nodes *= lay.nodes_per_circle;
    lay.offsets.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        double f = 0.61803398874989485 * static_cast<double>(j + 1) + extra_offset;
        lay.offsets[j] = f - std::floor(f);
    }
    return lay;
}

CVec contour_node(const RegularizerBundle& bundle, const RootSystem& rs,
                  const ContourLayout& lay, std::size_t node_id,
                  std::vector<Complex>* phase_out) {
    const std::size_t k = lay.radii.size();
    CVec lambda = bundle.lambda0;
    std::size_t rest = node_id;
    Complex phase(1.0, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t s = rest % static_cast<std::size_t>(lay.nodes_per_circle);
        rest /= static_cast<std::size_t>(lay.nodes_per_circle);
        double theta = 2.0 * kPi * (static_cast<double>(s) + lay.offsets[j]) /
                       static_cast<double>(lay.nodes_per_circle);
        Complex z = std::polar(lay.radii[j], theta);
        const Vec& dir = rs.indivisible_root(bundle.singular_roots[j]);
        for (int i = 0; i < rs.rank; ++i) lambda[i] += z * dir[i];
        phase *= std::exp(Complex(0.0, -theta));
    }
    if (phase_out) phase_out->push_back(phase);
    return lambda;
}

}  // namespace

double gram_permanent(const std::vector<Vec>& roots) {
    const std::size_t n = roots.size();
    if (n == 0) return 1.0;
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = roots[i].dot(roots[j]);
    // Ryser: perm = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} g_ij
    double sum = 0.0;
    const std::size_t subsets = static_cast<std::size_t>(1) << n;
    for (std::size_t s = 1; s < subsets; ++s) {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double rowsum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (s & (static_cast<std::size_t>(1) << j)) rowsum += g(i, j);
            prod *= rowsum;
        }
        int parity = __builtin_popcountll(s);
        sum += (parity % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    return (n % 2 == 0) ? sum : -sum;
}

RegularizerBundle build_regularizers(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                     const CVec& lambda0, const PhiConfig& cfg) {
    SpectralClassification cls = classify_spectral(rs, lambda0, cfg.integer_tol);

    RegularizerBundle b;
    b.lambda0 = lambda0;
    b.singular_roots = cls.sigma_lambda;
    b.n_alpha = cls.n_alpha;
    b.nodes_per_circle = cfg.nodes_per_circle;

    std::vector<Vec> sing_roots;
    for (std::size_t idx = 0; idx < cls.sigma_lambda.size(); ++idx) {
        const Vec& a = rs.indivisible_root(cls.sigma_lambda[idx]);
        sing_roots.push_back(a);
        int n = cls.n_alpha[idx];
        b.pi.factors.push_back({a, 0.0});
        if (n == 0) {
            b.pi0.factors.push_back({a, 0.0});
            b.p.factors.push_back({a, 0.0});
        } else {
            b.pi1.factors.push_back({a, 0.0});
            b.p.factors.push_back({a, static_cast<double>(n) * a.squaredNorm()});
        }
    }
    b.c0 = gram_permanent(sing_roots);
    b.rho0 = Vec::Zero(rs.rank);
    for (std::size_t i : cls.sigma_lambda_0) b.rho0 += rs.indivisible_root(i);

    // Contour radii: half the gap to the nearest foreign singular hyperplane,
    // split across the k displacement directions, capped.
    const std::size_t k = sing_roots.size();
    if (k > 0) {
        double scale = 1.0 + cnorm(lambda0);
        auto nearby = cfunc::singular_hyperplanes_near(ctx, lambda0,
                                                       cfg.hyperplane_search_radius);
        double gap = cfg.hyperplane_search_radius;
        for (const auto& h : nearby) {
            if (h.distance > 1e-7 * scale) {
                gap = h.distance;
                break;  // sorted by distance
            }
        }
        if (gap < 1e-10)
            throw std::runtime_error("no positive contour radius available near lambda0");
        for (std::size_t j = 0; j < k; ++j) {
            double len = sing_roots[j].norm();
            b.contour_radii.push_back(
                std::min(cfg.radius_cap, gap / (2.0 * static_cast<double>(k) * len)));
        }
    }
    return b;
}

EvaluationReport phi_generic(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                             const CVec& lambda, const Vec& x, const PhiConfig& cfg) {
    check_xs(rs, {x}, cfg);
    if (genericity_margin(rs, lambda) < cfg.generic_margin)
        throw std::invalid_argument(
            "phi_generic called at (near-)singular lambda; use phi instead");
    series::SeriesConfig scfg = level_adjusted(cfg.series, {x}, rs);
    GenericEvaluator ev(rs, ctx, lambda, scfg);
    EvaluationReport rep = ev.eval(x);
    if (ev.any_singular)
        merge_warning(rep.warnings, "gamma table flagged singular at this lambda");
    return rep;
}

namespace {

std::vector<EvaluationReport> eval_regularized_many(const RootSystem& rs,
                                                    const cfunc::CFunctionContext& ctx,
                                                    const RegularizerBundle& bundle,
                                                    const std::vector<Vec>& xs,
                                                    const PhiConfig& cfg) {
    const std::size_t k = bundle.singular_roots.size();
    const std::size_t nx = xs.size();
    series::SeriesConfig scfg = level_adjusted(cfg.series, xs, rs);

    std::vector<std::string> warnings;
    ContourLayout lay;
    bool ok = false;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
        lay = make_layout(bundle, cfg, attempt == 0 ? 1.0 : 0.7,
                          attempt == 0 ? 0.0 : 0.1373);
        ok = true;
        double node_margin = 1e-7 * (1.0 + cnorm(bundle.lambda0));
        for (std::size_t id = 0; id < lay.total_nodes; ++id) {
            CVec ln = contour_node(bundle, rs, lay, id, nullptr);
            if (genericity_margin(rs, ln) < node_margin) {
                ok = false;
                break;
            }
        }
        if (!ok && attempt == 1)
            throw std::runtime_error("contour nodes could not be kept off singular hyperplanes");
    }
    if (static_cast<int>(lay.nodes_per_circle) < cfg.nodes_per_circle)
        merge_warning(warnings, "contour node budget reduced nodes_per_circle");

    // Per-node contributions, reduced sequentially in node order.
    std::vector<std::vector<Complex>> contrib(lay.total_nodes);
    std::vector<std::vector<double>> tails(lay.total_nodes);
    std::vector<double> maxg(lay.total_nodes, 0.0);
    std::vector<char> node_singular(lay.total_nodes, 0);
    std::vector<char> node_unconverged(lay.total_nodes, 0);

    double weight_norm = 1.0;
    for (std::size_t j = 0; j < k; ++j)
        weight_norm *= static_cast<double>(lay.nodes_per_circle) * lay.radii[j];

    util::parallel_for(lay.total_nodes, [&](std::size_t id) {
        std::vector<Complex> phases;
        CVec ln = contour_node(bundle, rs, lay, id, &phases);
        Complex phase = phases.empty() ? Complex(1.0, 0.0) : phases[0];
        Complex weight = phase / weight_norm;
        GenericEvaluator ev(rs, ctx, ln, scfg);
        if (ev.any_singular) node_singular[id] = 1;
        Complex p_val = bundle.p.eval(ln);
        contrib[id].resize(nx);
        tails[id].resize(nx);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            EvaluationReport r = ev.eval(xs[ix]);
            Complex g = p_val * r.value;
            contrib[id][ix] = weight * g;
            tails[id][ix] = std::abs(weight) * std::abs(p_val) * r.tail_bound;
            maxg[id] = std::max(maxg[id], std::abs(g));
            if (r.tail_bound > cfg.series.tail_tol * std::max(1.0, std::abs(r.value)) &&
                !r.warnings.empty())
                node_unconverged[id] = 1;
        }
    });

    std::vector<EvaluationReport> out(nx);
    double mg = 0.0;
    bool any_sing = false, any_unconv = false;
    for (std::size_t id = 0; id < lay.total_nodes; ++id) {
        mg = std::max(mg, maxg[id]);
        any_sing |= node_singular[id] != 0;
        any_unconv |= node_unconverged[id] != 0;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            out[ix].value += contrib[id][ix];
            out[ix].tail_bound += tails[id][ix];
        }
    }
    for (std::size_t ix = 0; ix < nx; ++ix) {
        out[ix].value /= bundle.c0;
        out[ix].tail_bound /= bundle.c0;
        out[ix].branch = PhiBranch::regularized;
        out[ix].node_count = static_cast<int>(lay.total_nodes);
        out[ix].max_integrand = mg;
        out[ix].warnings = warnings;
        if (any_sing)
            merge_warning(out[ix].warnings,
                          "near-singular recursion denominator at a contour node");
        if (any_unconv)
            merge_warning(out[ix].warnings, "inner series tail above tolerance");
    }
    return out;
}

}  // namespace

std::vector<EvaluationReport> phi_many(const RootSystem& rs,
                                       const cfunc::CFunctionContext& ctx, const CVec& lambda,
                                       const std::vector<Vec>& xs, const PhiConfig& cfg) {
    check_xs(rs, xs, cfg);
    DominantRepresentative dom = dominant_representative(rs, lambda);
    double margin = genericity_margin(rs, dom.lambda);
    if (margin >= cfg.generic_margin) {
        series::SeriesConfig scfg = level_adjusted(cfg.series, xs, rs);
        GenericEvaluator ev(rs, ctx, dom.lambda, scfg);
        std::vector<EvaluationReport> out;
        out.reserve(xs.size());
        for (const auto& x : xs) {
            out.push_back(ev.eval(x));
            if (ev.any_singular)
                merge_warning(out.back().warnings,
                              "gamma table flagged singular at this lambda");
        }
        return out;
    }
    RegularizerBundle bundle = build_regularizers(rs, ctx, dom.lambda, cfg);
    return eval_regularized_many(rs, ctx, bundle, xs, cfg);
}

EvaluationReport phi(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                     const CVec& lambda, const Vec& x, const PhiConfig& cfg) {
    return phi_many(rs, ctx, lambda, {x}, cfg)[0];
}

BridgedValue phi_near_wall_bracket(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                   const Vec& lambda, const Vec& x, const PhiConfig& cfg) {
    double b = beta(rs, x);
    if (b <= -1e-12) throw std::invalid_argument("x must lie in the closed chamber");
    Vec d = chamber_interior_direction(rs);
    double shift = cfg.series.beta_min + 0.05 - b;
    if (shift < 0.0) shift = 0.0;
    Vec x1 = shift * d;
    Vec xs = x + x1;
    EvaluationReport rep = phi(rs, ctx, to_complex(lambda), xs, cfg);
    double base = rep.value.real();
    double up = -std::numeric_limits<double>::infinity();
    double dn = -std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        Vec wx1 = rs.weyl.apply(w, x1);
        up = std::max(up, (rs.rho - lambda).dot(wx1));
        dn = std::max(dn, (lambda - rs.rho).dot(wx1));
    }
    BridgedValue out;
    out.lower = base * std::exp(-dn);
    out.upper = base * std::exp(up);
    out.value = std::sqrt(std::max(out.lower, 0.0) * std::max(out.upper, 0.0));
    return out;
}

BoundednessCertificate is_bounded(const RootSystem& rs, const CVec& lambda, double tol) {
    Vec re = real_part(lambda);
    DominantRepresentative dom = dominant_representative(rs, to_complex(re));
    Vec mu = real_part(dom.lambda);
    BoundednessCertificate cert;
    cert.hull_coefficients = simple_root_coefficients(rs, rs.rho - mu);
    cert.bounded = true;
    double scale = 1.0 + mu.norm() + rs.rho.norm();
    for (Eigen::Index i = 0; i < cert.hull_coefficients.size(); ++i)
        if (cert.hull_coefficients[i] < -tol * scale) cert.bounded = false;
    return cert;
}

Complex b0_constant(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                    const RegularizerBundle& bundle) {
    if (bundle.singular_roots.empty()) {
        cfunc::CValue c = cfunc::c_function(ctx, bundle.lambda0);
        if (!c.finite()) throw std::runtime_error("c-function pole at generic lambda0");
        return c.value;
    }
    // Mean-value average of the holomorphic function pi0(lambda) c(lambda)
    // over the product contour.
    PhiConfig cfg;  // node layout only depends on the bundle
    ContourLayout lay = make_layout(bundle, cfg, 1.0, 0.0);
    Complex acc(0.0, 0.0);
    for (std::size_t id = 0; id < lay.total_nodes; ++id) {
        CVec ln = contour_node(bundle, rs, lay, id, nullptr);
        cfunc::CValue c = cfunc::c_function(ctx, ln);
        if (!c.finite()) throw std::runtime_error("c-function pole on the b0 contour");
        acc += bundle.pi0.eval(ln) * c.value;
    }
    return acc / static_cast<double>(lay.total_nodes);
}

AsymptoticReport leading_asymptotic(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                                    const CVec& lambda0, const Vec& x1,
                                    const std::vector<double>& t_list, const PhiConfig& cfg) {
    Vec re = real_part(lambda0);
    if (cnorm(CVec(lambda0 - to_complex(re))) > 1e-12 * (1.0 + cnorm(lambda0)) ||
        !is_dominant(rs, re, 1e-10))
        throw std::invalid_argument("leading_asymptotic requires real dominant lambda0");
    if (beta(rs, x1) <= 0.0)
        throw std::invalid_argument("ray direction must be strictly inside the chamber");

    RegularizerBundle bundle = build_regularizers(rs, ctx, lambda0, cfg);
    Complex b0 = b0_constant(rs, ctx, bundle);
    double pi0_rho0 = bundle.pi0.factors.empty() ? 1.0 : bundle.pi0.eval(bundle.rho0);

    AsymptoticReport rep;
    rep.t = t_list;
    rep.predicted_limit = b0 / pi0_rho0;

    std::vector<Vec> xs;
    xs.reserve(t_list.size());
    for (double t : t_list) xs.push_back(Vec(t * x1));
    auto values = phi_many(rs, ctx, lambda0, xs, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double denom_poly = bundle.pi0.factors.empty() ? 1.0 : bundle.pi0.eval(xs[i]);
        double expo = (re - rs.rho).dot(xs[i]);
        Complex ratio = values[i].value / (denom_poly * std::exp(expo));
        rep.ratio.push_back(ratio);
        rep.deviation.push_back(std::abs(ratio - rep.predicted_limit));
    }
    return rep;
}

double eigen_residual(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                      const CVec& lambda, const Vec& x, double h, const PhiConfig& cfg) {
    if (beta(rs, x) <= 2.0 * h)
        throw std::invalid_argument("eigen_residual: x too close to the walls for step h");
    const int l = rs.rank;
    std::vector<Vec> pts;
    pts.push_back(x);
    for (int i = 0; i < l; ++i) {
        Vec e = Vec::Zero(l);
        e[i] = h;
        pts.push_back(x + e);
        pts.push_back(x - e);
    }
    for (const auto& a : rs.positive_roots) {
        pts.push_back(x + h * a);
        pts.push_back(x - h * a);
    }
    auto vals = phi_many(rs, ctx, lambda, pts, cfg);

    Complex phi0 = vals[0].value;
    Complex lap(0.0, 0.0);
    for (int i = 0; i < l; ++i) {
        Complex fp = vals[1 + 2 * i].value, fm = vals[2 + 2 * i].value;
        lap += (fp - 2.0 * phi0 + fm) / (h * h);
    }
    std::size_t base = 1 + 2 * static_cast<std::size_t>(l);
    for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
        double ax = rs.positive_roots[a].dot(x);
        double coth = (1.0 + std::exp(-2.0 * ax)) / (1.0 - std::exp(-2.0 * ax));
        Complex fp = vals[base + 2 * a].value, fm = vals[base + 2 * a + 1].value;
        lap += rs.multiplicities[a] * coth * (fp - fm) / (2.0 * h);
    }
    Complex eig = bilinear(lambda, lambda) - Complex(rs.rho.squaredNorm(), 0.0);
    return std::abs(lap - eig * phi0);
}

bool subadditivity_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                         const Vec& lambda, const Vec& x, const Vec& x1,
                         const PhiConfig& cfg) {
    auto vals = phi_many(rs, ctx, to_complex(lambda), {x, x + x1}, cfg);
    double phi_x = vals[0].value.real();
    double phi_xx1 = vals[1].value.real();
    double up = -std::numeric_limits<double>::infinity();
    double dn = -std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        Vec wx1 = rs.weyl.apply(w, x1);
        dn = std::max(dn, (lambda - rs.rho).dot(wx1));
        up = std::max(up, (rs.rho - lambda).dot(wx1));
    }
    double lo = phi_xx1 * std::exp(-dn);
    double hi = phi_xx1 * std::exp(up);
    double tol = 1e-9 * (std::abs(lo) + std::abs(hi) + std::abs(phi_x));
    return phi_x >= lo - tol && phi_x <= hi + tol;
}

bool schapira_bound_check(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                          const CVec& lambda, const Vec& x, const PhiConfig& cfg) {
    Complex v = phi(rs, ctx, lambda, x, cfg).value;
    Complex vr = phi(rs, ctx, to_complex(real_part(lambda)), x, cfg).value;
    return std::abs(v) <= vr.real() * (1.0 + 1e-8) + 1e-12;
}

double mean_square_time_average(const std::vector<Complex>& coeffs,
                                const std::vector<double>& freqs, double T) {
    if (coeffs.size() != freqs.size())
        throw std::invalid_argument("mean_square_time_average: size mismatch");
    Complex acc(0.0, 0.0);
    const Complex I(0.0, 1.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            double d = freqs[j] - freqs[k];
            Complex kernel = (std::abs(d) * T < 1e-12)
                                 ? Complex(1.0, 0.0)
                                 : (std::exp(I * d * T) - 1.0) / (I * d * T);
            acc += coeffs[j] * std::conj(coeffs[k]) * kernel;
        }
    }
    return acc.real();
}

Vec chamber_interior_direction(const RootSystem& rs) {
    const int l = rs.rank;
    Mat a(l, l);
    for (int j = 0; j < l; ++j) a.row(j) = rs.simple_roots[j].transpose();
    return a.colPivHouseholderQr().solve(Vec::Ones(l));
}

double chamber_max_abs_phi(const RootSystem& rs, const cfunc::CFunctionContext& ctx,
                           const CVec& lambda, double radius, int mesh,
                           const PhiConfig& cfg) {
    const int l = rs.rank;
    // Extreme rays of the chamber: alpha_j(c_i) = delta_ij.
    Mat a(l, l);
    for (int j = 0; j < l; ++j) a.row(j) = rs.simple_roots[j].transpose();
    Mat rays = a.colPivHouseholderQr().solve(Mat::Identity(l, l));

    std::vector<Vec> xs;
    std::vector<int> comp(l, 0);
    // compositions of `mesh` into l parts; interior shift keeps beta(x) > 0
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == l - 1) {
            comp[pos] = left;
            Vec d = Vec::Zero(l);
            for (int i = 0; i < l; ++i)
                d += (static_cast<double>(comp[i]) + 0.5) /
                     (static_cast<double>(mesh) + 0.5 * l) * rays.col(i);
            d.normalize();
            xs.push_back(Vec(radius * d));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            comp[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, mesh);

    // keep points the series can handle
    std::vector<Vec> usable;
    for (const auto& x : xs)
        if (beta(rs, x) >= cfg.series.beta_min) usable.push_back(x);
    if (usable.empty())
        throw std::runtime_error("chamber mesh has no usable points at this radius");
    auto vals = phi_many(rs, ctx, lambda, usable, cfg);
    double m = 0.0;
    for (const auto& r : vals) m = std::max(m, std::abs(r.value));
    return m;
}

}  // namespace hypergeo::hyper
