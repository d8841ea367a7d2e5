#include "hypergeo/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace hypergeo {

namespace {

constexpr double kCoordTol = 1e-9;
constexpr std::size_t kWeylCap = 200000;

bool same_vec(const Vec& a, const Vec& b, double tol = kCoordTol) {
    return (a - b).lpNorm<Eigen::Infinity>() < tol;
}

// Quantized key for matrix/vector deduplication.
std::string quantize_key(const double* data, std::size_t n) {
    std::string key;
    key.reserve(n * 8);
    for (std::size_t i = 0; i < n; ++i) {
        auto q = static_cast<long long>(std::llround(data[i] * 1e10));
        if (q == 0) q = 0;  // normalize -0
        key.append(reinterpret_cast<const char*>(&q), sizeof(q));
    }
    return key;
}

Mat reflection_matrix(const Vec& alpha) {
    const int l = static_cast<int>(alpha.size());
    return Mat::Identity(l, l) - (2.0 / alpha.squaredNorm()) * (alpha * alpha.transpose());
}

std::vector<Vec> simple_roots_for(Family family, int rank) {
    std::vector<Vec> simple;
    auto e = [&](int i) {
        Vec v = Vec::Zero(rank);
        v[i] = 1.0;
        return v;
    };
    switch (family) {
        case Family::A: {
            if (rank == 1) {
                Vec a(1);
                a << 1.0;  // rank-one identification alpha = 1
                simple.push_back(a);
                break;
            }
            // Cholesky of the A_l Gram matrix (2 on the diagonal, -1 adjacent).
            Mat g = Mat::Zero(rank, rank);
            for (int i = 0; i < rank; ++i) {
                g(i, i) = 2.0;
                if (i + 1 < rank) g(i, i + 1) = g(i + 1, i) = -1.0;
            }
            Eigen::LLT<Mat> llt(g);
            if (llt.info() != Eigen::Success)
                throw std::runtime_error("A-type Gram factorization failed");
            Mat L = llt.matrixL();
            for (int i = 0; i < rank; ++i) simple.push_back(L.row(i).transpose());
            break;
        }
        case Family::B:
        case Family::BC: {
            if (family == Family::BC && rank == 1) {
                Vec a(1);
                a << 1.0;
                simple.push_back(a);
                break;
            }
            if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
            for (int i = 0; i + 1 < rank; ++i) simple.push_back(e(i) - e(i + 1));
            simple.push_back(e(rank - 1));
            break;
        }
        case Family::C: {
            if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
            const double s = 1.0 / std::sqrt(2.0);
            for (int i = 0; i + 1 < rank; ++i) simple.push_back(s * (e(i) - e(i + 1)));
            simple.push_back(std::sqrt(2.0) * e(rank - 1));
            break;
        }
        case Family::D: {
            if (rank < 3) throw std::invalid_argument("D requires rank >= 3");
            for (int i = 0; i + 1 < rank; ++i) simple.push_back(e(i) - e(i + 1));
            simple.push_back(e(rank - 2) + e(rank - 1));
            break;
        }
        case Family::G2: {
            if (rank != 2) throw std::invalid_argument("G2 requires rank 2");
            Vec a1(2), a2(2);
            a1 << 1.0, 0.0;
            a2 << -1.5, std::sqrt(3.0) / 2.0;
            simple.push_back(a1);
            simple.push_back(a2);
            break;
        }
    }
    return simple;
}

// Orbit of the simple roots under the simple reflections = all of Sigma (reduced part).
std::vector<Vec> reduced_roots_by_closure(const std::vector<Vec>& simple) {
    std::vector<Mat> gens;
    gens.reserve(simple.size());
    for (const auto& a : simple) gens.push_back(reflection_matrix(a));

    std::vector<Vec> roots;
    std::unordered_map<std::string, std::size_t> seen;
    auto push = [&](const Vec& v) {
        auto key = quantize_key(v.data(), static_cast<std::size_t>(v.size()));
        if (seen.emplace(key, roots.size()).second) roots.push_back(v);
    };
    for (const auto& a : simple) {
        push(a);
        push(Vec(-a));
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (const auto& g : gens) push(Vec(g * roots[i]));
        if (roots.size() > 10000) throw std::runtime_error("root closure diverged");
    }
    return roots;
}

}  // namespace

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "BC") return Family::BC;
    if (s == "G2") return Family::G2;
    throw std::invalid_argument("unknown root-system family: " + s);
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::G2: return "G2";
    }
    return "?";
}

CVec WeylGroup::apply(std::size_t w, const CVec& v) const {
    const Mat& m = elements[w];
    CVec out = CVec::Zero(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        for (Eigen::Index j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

std::size_t WeylGroup::inverse_index(std::size_t w) const {
    Mat inv = elements[w].transpose();
    for (std::size_t i = 0; i < elements.size(); ++i)
        if ((elements[i] - inv).lpNorm<Eigen::Infinity>() < 1e-9) return i;
    throw std::logic_error("Weyl group not closed under inverse");
}

std::size_t WeylGroup::product_index(std::size_t w1, std::size_t w2) const {
    Mat p = elements[w1] * elements[w2];
    for (std::size_t i = 0; i < elements.size(); ++i)
        if ((elements[i] - p).lpNorm<Eigen::Infinity>() < 1e-9) return i;
    throw std::logic_error("Weyl group not closed under composition");
}

double RootSystem::multiplicity_of(const Vec& root) const {
    for (std::size_t i = 0; i < positive_roots.size(); ++i) {
        if (same_vec(positive_roots[i], root) || same_vec(positive_roots[i], Vec(-root)))
            return multiplicities[i];
    }
    return 0.0;
}

double RootSystem::double_multiplicity(std::size_t i) const {
    Vec twice = 2.0 * indivisible_root(i);
    for (std::size_t j = 0; j < positive_roots.size(); ++j)
        if (same_vec(positive_roots[j], twice)) return multiplicities[j];
    return 0.0;
}

RootSystem build_root_system(Family family, int rank,
                             const std::map<std::string, double>& multiplicities) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if ((family == Family::B || family == Family::C) && rank < 2)
        throw std::invalid_argument("rank-one triples are built as A or BC");
    for (const auto& [name, m] : multiplicities) {
        if (!(m > 0.0))
            throw std::invalid_argument("multiplicity for orbit '" + name + "' must be positive");
    }

    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.simple_roots = simple_roots_for(family, rank);

    std::vector<Vec> all = reduced_roots_by_closure(rs.simple_roots);
    if (family == Family::BC) {
        std::vector<Vec> doubles;
        for (const auto& r : all) {
            double len2 = r.squaredNorm();
            if (std::abs(len2 - 1.0) < kCoordTol) doubles.push_back(Vec(2.0 * r));
        }
        all.insert(all.end(), doubles.begin(), doubles.end());
    }
    rs.roots = all;

    // Gram matrix of the simple roots, used to expand roots in the simple basis.
    const int l = rank;
    Mat basis(l, l);
    for (int j = 0; j < l; ++j) basis.col(j) = rs.simple_roots[j];
    Eigen::ColPivHouseholderQR<Mat> solver(basis);

    for (const auto& r : all) {
        Vec c = solver.solve(r);
        bool nonneg = true, integral = true;
        double sum = 0.0;
        std::vector<int> ic(l);
        for (int j = 0; j < l; ++j) {
            double cj = c[j];
            int n = static_cast<int>(std::llround(cj));
            if (std::abs(cj - n) > 1e-7) integral = false;
            if (n < 0) nonneg = false;
            ic[j] = n;
            sum += cj;
        }
        if (!integral)
            throw std::runtime_error("root with non-integral simple-root expansion");
        if (nonneg && sum > 0.5) {
            rs.positive_roots.push_back(r);
            rs.positive_in_simple.push_back(ic);
        }
    }

    // Indivisible positive roots: alpha with alpha/2 not a root.
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        Vec half = 0.5 * rs.positive_roots[i];
        bool divisible = false;
        for (const auto& r : rs.positive_roots)
            if (same_vec(r, half)) divisible = true;
        if (!divisible) rs.indivisible_positive.push_back(i);
    }

    // Orbit names and multiplicities.
    auto orbit_of = [&](const Vec& r) -> std::string {
        double len2 = r.squaredNorm();
        if (family == Family::A || family == Family::D) return "short";
        if (rank == 1) {  // A1 handled above; BC1 here
            return std::abs(len2 - 1.0) < kCoordTol ? "short" : "double";
        }
        if (family == Family::BC) {
            if (std::abs(len2 - 1.0) < kCoordTol) return "short";
            if (std::abs(len2 - 2.0) < kCoordTol) return "long";
            return "double";
        }
        if (family == Family::G2)
            return std::abs(len2 - 1.0) < kCoordTol ? "short" : "long";
        // B / C
        return std::abs(len2 - 1.0) < kCoordTol ? "short" : "long";
    };

    for (const auto& r : rs.positive_roots) {
        std::string name = orbit_of(r);
        auto it = multiplicities.find(name);
        if (it == multiplicities.end())
            throw std::invalid_argument("missing multiplicity for orbit '" + name + "'");
        rs.orbit_names.push_back(name);
        rs.multiplicities.push_back(it->second);
    }
    for (const auto& [name, m] : multiplicities) {
        (void)m;
        if (std::find(rs.orbit_names.begin(), rs.orbit_names.end(), name) ==
            rs.orbit_names.end())
            throw std::invalid_argument("unknown multiplicity orbit '" + name +
                                        "' for this family/rank");
    }

    rs.rho = Vec::Zero(l);
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        rs.rho += 0.5 * rs.multiplicities[i] * rs.positive_roots[i];

    // Weyl group by breadth-first closure over the simple reflections.
    std::vector<Mat> gens;
    for (const auto& a : rs.simple_roots) gens.push_back(reflection_matrix(a));
    WeylGroup& wg = rs.weyl;
    std::unordered_map<std::string, std::size_t> seen;
    auto push_elem = [&](const Mat& m, int det) {
        auto key = quantize_key(m.data(), static_cast<std::size_t>(m.size()));
        if (seen.emplace(key, wg.elements.size()).second) {
            wg.elements.push_back(m);
            wg.dets.push_back(det);
        }
    };
    push_elem(Mat::Identity(l, l), 1);
    for (std::size_t i = 0; i < wg.elements.size(); ++i) {
        for (const auto& g : gens) push_elem(Mat(g * wg.elements[i]), -wg.dets[i]);
        if (wg.elements.size() > kWeylCap)
            throw std::runtime_error("Weyl group too large for this build");
    }
    wg.identity_index = 0;

    return rs;
}

Complex lambda_alpha(const CVec& lambda, const Vec& alpha) {
    return bilinear(lambda, alpha) / alpha.squaredNorm();
}

double lambda_alpha(const Vec& lambda, const Vec& alpha) {
    return lambda.dot(alpha) / alpha.squaredNorm();
}

double beta(const RootSystem& rs, const Vec& x) {
    double b = std::numeric_limits<double>::infinity();
    for (const auto& a : rs.simple_roots) b = std::min(b, a.dot(x));
    return b;
}

std::vector<LatticePoint> enumerate_lattice(const RootSystem& rs, int max_level,
                                            bool even_only) {
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
    const int l = rs.rank;
    const int step = even_only ? 2 : 1;
    std::vector<LatticePoint> out;
    std::vector<int> n(l, 0);
    while (true) {
        int level = 0;
        for (int v : n) level += v;
        if (level <= max_level) out.push_back({n, level});
        // odometer over coefficients bounded by max_level
        int pos = l - 1;
        while (pos >= 0) {
            n[pos] += step;
            int s = 0;
            for (int v : n) s += v;
            if (s <= max_level) break;
            n[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.coeffs < b.coeffs;
    });
    return out;
}

Vec lattice_point_covector(const RootSystem& rs, const LatticePoint& mu) {
    Vec v = Vec::Zero(rs.rank);
    for (int j = 0; j < rs.rank; ++j) v += static_cast<double>(mu.coeffs[j]) * rs.simple_roots[j];
    return v;
}

bool is_dominant(const RootSystem& rs, const Vec& lambda, double tol) {
    for (const auto& a : rs.simple_roots)
        if (lambda.dot(a) < -tol) return false;
    return true;
}

SpectralClassification classify_spectral(const RootSystem& rs, const CVec& lambda,
                                         double integer_tol) {
    if (integer_tol <= 0.0) throw std::invalid_argument("integer_tol must be positive");
    Vec re = real_part(lambda);
    double scale = 1.0 + cnorm(lambda);
    if (!is_dominant(rs, re, 1e-9 * scale))
        throw std::invalid_argument(
            "classify_spectral requires dominant Re(lambda); apply dominant_representative first");

    SpectralClassification cls;
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        const Vec& a = rs.indivisible_root(i);
        Complex la = lambda_alpha(lambda, a);
        int n = static_cast<int>(std::llround(la.real()));
        double dist = std::abs(la - Complex(n, 0.0));
        if (dist < integer_tol && std::abs(la.imag()) < integer_tol) {
            if (n < 0) n = 0;  // dominant Re rules out negative integers
            cls.sigma_lambda.push_back(i);
            cls.n_alpha.push_back(n);
            if (n == 0)
                cls.sigma_lambda_0.push_back(i);
            else
                cls.sigma_lambda_gt.push_back(i);
        } else if (dist < 1e-6) {
            cls.near_singular = true;
        }
    }
    cls.generic = cls.sigma_lambda.empty();

    double stab_tol = 1e-9 * scale;
    CVec re_c = to_complex(re);
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        if (cnorm(CVec(rs.weyl.apply(w, lambda) - lambda)) < stab_tol)
            cls.w_lambda.push_back(w);
        if ((rs.weyl.apply(w, re) - re).norm() < stab_tol) cls.w_re_lambda.push_back(w);
    }
    return cls;
}

double genericity_margin(const RootSystem& rs, const CVec& lambda) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        Complex la = lambda_alpha(lambda, rs.indivisible_root(i));
        margin = std::min(margin, dist_to_integers(la));
    }
    return margin;
}

DominantRepresentative dominant_representative(const RootSystem& rs, const CVec& lambda) {
    double scale = 1.0 + cnorm(lambda);
    double dom_tol = 1e-10 * scale;
    double cmp_tol = 1e-10 * scale;

    // Candidates: Weyl images with dominant real part.  They all share the same
    // real part; ties broken by lexicographically largest imaginary vector, with
    // the identity preferred so the map is idempotent.
    std::optional<std::size_t> best;
    CVec best_img;
    auto imag_lex_greater = [&](const CVec& a, const CVec& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            double d = a[i].imag() - b[i].imag();
            if (d > cmp_tol) return true;
            if (d < -cmp_tol) return false;
        }
        return false;
    };
    for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
        CVec img = rs.weyl.apply(w, lambda);
        if (!is_dominant(rs, real_part(img), dom_tol)) continue;
        if (!best) {
            best = w;
            best_img = img;
            continue;
        }
        if (imag_lex_greater(img, best_img)) {
            best = w;
            best_img = img;
        } else if (!imag_lex_greater(best_img, img)) {
            // tie: prefer the identity, otherwise the smaller index
            if (w == rs.weyl.identity_index) {
                best = w;
                best_img = img;
            }
        }
    }
    if (!best) throw std::logic_error("no dominant Weyl image found");
    return {best_img, *best};
}

Vec simple_root_coefficients(const RootSystem& rs, const Vec& v) {
    const int l = rs.rank;
    Mat basis(l, l);
    for (int j = 0; j < l; ++j) basis.col(j) = rs.simple_roots[j];
    return basis.colPivHouseholderQr().solve(v);
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex_g17(Complex z) {
    return format_g17(z.real()) + (z.imag() < 0 ? "-" : "+") +
           format_g17(std::abs(z.imag())) + "i";
}

}  // namespace hypergeo
