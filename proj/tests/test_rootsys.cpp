#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

#include "hypergeo/root_system.hpp"

#include <algorithm>
#include <set>

using namespace hypergeo;
using namespace testu;

TEST_CASE("A1 rank-one construction") {
    RootSystem rs = a1(1.0);
    CHECK(rs.positive_roots.size() == 1);
    CHECK(rs.positive_roots[0][0] == doctest::Approx(1.0));
    CHECK(rs.rho[0] == doctest::Approx(0.5));  // rho = alpha/2
    CHECK(rs.weyl.size() == 2);
    CHECK(rs.indivisible_positive.size() == 1);
}

TEST_CASE("BC1 has alpha and 2 alpha with their own multiplicities") {
    RootSystem rs = bc1(2.5, 0.7);
    CHECK(rs.positive_roots.size() == 2);
    CHECK(rs.rho[0] == doctest::Approx(2.5 / 2.0 + 0.7));  // (m/2 + m2) alpha
    CHECK(rs.multiplicity_of(vec1(1.0)) == doctest::Approx(2.5));
    CHECK(rs.multiplicity_of(vec1(2.0)) == doctest::Approx(0.7));
    CHECK(rs.indivisible_positive.size() == 1);
    CHECK(rs.double_multiplicity(0) == doctest::Approx(0.7));
}

TEST_CASE("A2 brute-force closure") {
    RootSystem rs = a2(2.0);
    CHECK(rs.positive_roots.size() == 3);
    CHECK(rs.weyl.size() == 6);
    for (double m : rs.multiplicities) CHECK(m == doctest::Approx(2.0));
    // every reflection image of a root is a root
    for (const auto& r : rs.roots) {
        for (const auto& a : rs.positive_roots) {
            Vec img = r - 2.0 * (r.dot(a) / a.squaredNorm()) * a;
            bool found = false;
            for (const auto& s : rs.roots)
                if ((s - img).norm() < 1e-9) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("classical Weyl group orders") {
    CHECK(b2(1.0, 1.0).weyl.size() == 8);
    CHECK(c2(1.0, 1.0).weyl.size() == 8);
    CHECK(g2(1.0, 1.0).weyl.size() == 12);
    CHECK(bc2(1.0, 1.0, 1.0).weyl.size() == 8);
    CHECK(d3(1.0).weyl.size() == 24);
    CHECK(b3(1.0, 1.0).weyl.size() == 48);
    CHECK(build_root_system(Family::A, 3, {{"short", 1.0}}).weyl.size() == 24);
}

TEST_CASE("structure invariants across the battery") {
    std::vector<RootSystem> battery = {a1(1.0), bc1(2.5, 0.7), a2(1.3),
                                       b2(1.5, 0.9), g2(1.1, 0.7), d3(0.8)};
    for (const auto& rs : battery) {
        // positive roots are nonnegative integer combinations of simple roots
        for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
            Vec rebuilt = Vec::Zero(rs.rank);
            for (int j = 0; j < rs.rank; ++j) {
                CHECK(rs.positive_in_simple[i][j] >= 0);
                rebuilt += rs.positive_in_simple[i][j] * rs.simple_roots[j];
            }
            CHECK((rebuilt - rs.positive_roots[i]).norm() < 1e-9);
        }
        // alpha indivisible iff alpha/2 not a root
        for (std::size_t i : rs.indivisible_positive) {
            Vec half = 0.5 * rs.positive_roots[i];
            CHECK(rs.multiplicity_of(half) == 0.0);
        }
        // rho = (1/2) sum m_alpha alpha
        Vec r = Vec::Zero(rs.rank);
        for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
            r += 0.5 * rs.multiplicities[i] * rs.positive_roots[i];
        CHECK((r - rs.rho).norm() < 1e-12);
        // multiplicities are W-invariant and W permutes Sigma
        for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
            for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
                Vec img = rs.weyl.apply(w, rs.positive_roots[i]);
                double m = rs.multiplicity_of(img);
                CHECK(m == doctest::Approx(rs.multiplicities[i]));
            }
            CHECK((rs.weyl.elements[w] * rs.weyl.elements[w].transpose() -
                   Mat::Identity(rs.rank, rs.rank))
                      .norm() < 1e-9);
        }
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_root_system(Family::G2, 3, {{"short", 1.0}, {"long", 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::A, 1, {{"short", -1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::A, 1, {{"long", 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::B, 1, {{"short", 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("lambda_alpha values") {
    RootSystem rs = a1(1.0);
    CHECK(lambda_alpha(to_complex(rs.rho), rs.positive_roots[0]).real() ==
          doctest::Approx(0.5));
    CHECK(std::abs(lambda_alpha(cvec1(Complex(0, 0)), rs.positive_roots[0])) == 0.0);

    RootSystem rs2 = a2(1.0);  // <alpha,alpha> = 2 here
    const Vec& a = rs2.simple_roots[0];
    CVec two_alpha = to_complex(Vec(2.0 * a));
    CHECK(lambda_alpha(two_alpha, a).real() == doctest::Approx(2.0));
}

TEST_CASE("beta") {
    RootSystem rs = a1(1.0);
    CHECK(beta(rs, vec1(1.7)) == doctest::Approx(1.7));
    CHECK(beta(rs, vec1(0.0)) == doctest::Approx(0.0));
    RootSystem rs2 = a2(1.0);
    // on a chamber wall some simple root vanishes
    Vec wall = rs2.simple_roots[0];  // alpha_2(alpha_1-direction dual)... build explicitly
    // x orthogonal to alpha_1 lies on the alpha_1 wall
    Vec x(2);
    x << -rs2.simple_roots[0][1], rs2.simple_roots[0][0];
    if (rs2.simple_roots[1].dot(x) < 0) x = -x;
    CHECK(std::abs(beta(rs2, x)) < 1e-12);
}

TEST_CASE("classify_spectral examples") {
    RootSystem rs = a1(1.0);
    auto c1 = classify_spectral(rs, to_complex(rs.rho));
    CHECK(c1.generic);
    CHECK(c1.sigma_lambda.empty());

    auto c2 = classify_spectral(rs, cvec1(Complex(0.0, 0.0)));
    CHECK_FALSE(c2.generic);
    CHECK(c2.sigma_lambda_0.size() == rs.indivisible_positive.size());
    CHECK(c2.w_lambda.size() == rs.weyl.size());  // W_0 = W

    auto c3 = classify_spectral(rs, cvec1(Complex(1.0, 0.0)));
    CHECK(c3.sigma_lambda_gt.size() == 1);
    CHECK(c3.sigma_lambda_0.empty());
    CHECK(c3.n_alpha[0] == 1);

    CHECK_THROWS_AS(classify_spectral(rs, cvec1(Complex(-1.0, 0.0))),
                    std::invalid_argument);
}

TEST_CASE("near-singular flag") {
    RootSystem rs = a1(1.0);
    auto c = classify_spectral(rs, cvec1(Complex(1.0 + 1e-8, 0.0)));
    CHECK(c.generic);
    CHECK(c.near_singular);
}

TEST_CASE("dominant_representative") {
    RootSystem rs = a1(1.0);
    auto d1 = dominant_representative(rs, cvec1(Complex(0.7, 0.3)));
    CHECK(d1.weyl_index == rs.weyl.identity_index);
    auto d2 = dominant_representative(rs, cvec1(Complex(-2.0, 0.0)));
    CHECK(d2.lambda[0].real() == doctest::Approx(2.0));
    CHECK(d2.weyl_index != rs.weyl.identity_index);

    // A2: brute force over the 6 images
    RootSystem rs2 = a2(1.0);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Vec mu = random_dominant(rng, rs2, 2.0);
        for (std::size_t w = 0; w < rs2.weyl.size(); ++w) {
            CVec moved = to_complex(rs2.weyl.apply(w, mu));
            auto d = dominant_representative(rs2, moved);
            CHECK((real_part(d.lambda) - mu).norm() < 1e-8);
        }
    }
    // idempotence on complex input
    for (int trial = 0; trial < 30; ++trial) {
        CVec lam = random_cvec(rng, 2, 2.0);
        auto d = dominant_representative(rs2, lam);
        auto d2 = dominant_representative(rs2, d.lambda);
        CHECK(cnorm(CVec(d.lambda - d2.lambda)) < 1e-9);
        CHECK(d2.weyl_index == rs2.weyl.identity_index);
    }
}

TEST_CASE("enumerate_lattice") {
    RootSystem rs = a1(1.0);
    auto pts = enumerate_lattice(rs, 4, true);
    REQUIRE(pts.size() == 3);  // {0, 2 alpha, 4 alpha}
    CHECK(pts[0].coeffs == std::vector<int>{0});
    CHECK(pts[1].coeffs == std::vector<int>{2});
    CHECK(pts[2].coeffs == std::vector<int>{4});

    RootSystem rs2 = a2(1.0);
    auto pts2 = enumerate_lattice(rs2, 2, true);
    REQUIRE(pts2.size() == 3);  // {0, 2 alpha_1, 2 alpha_2}
    CHECK(pts2[0].level == 0);
    CHECK(pts2[1].level == 2);
    CHECK(pts2[2].level == 2);

    // count for rank 2, max_level 2L, even: frozen from direct counting
    for (int L = 0; L <= 6; ++L) {
        std::size_t direct = 0;
        for (int a = 0; a <= L; ++a)
            for (int b = 0; b <= L; ++b)
                if (2 * a + 2 * b <= 2 * L) ++direct;
        CHECK(enumerate_lattice(rs2, 2 * L, true).size() == direct);
    }
}

TEST_CASE("(w lambda)_alpha = lambda_{w^{-1} alpha}") {
    std::mt19937_64 rng(11);
    for (const auto& rs : {a2(1.3), b2(1.5, 0.9), bc1(2.0, 0.5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            CVec lam = random_cvec(rng, rs.rank, 3.0);
            for (std::size_t w = 0; w < rs.weyl.size(); ++w) {
                std::size_t winv = rs.weyl.inverse_index(w);
                CVec wl = rs.weyl.apply(w, lam);
                for (const auto& a : rs.positive_roots) {
                    Complex lhs = lambda_alpha(wl, a);
                    Complex rhs = lambda_alpha(lam, rs.weyl.apply(winv, a));
                    CHECK(std::abs(lhs - rhs) < 1e-9);
                }
            }
        }
    }
}

namespace {

// Sigma_{Theta(lambda),0}^+: indivisible positive roots supported on the simple
// roots orthogonal to Re lambda.
std::vector<std::size_t> sigma_theta0(const RootSystem& rs, const Vec& re) {
    std::vector<bool> in_theta(rs.rank);
    for (int j = 0; j < rs.rank; ++j)
        in_theta[j] = std::abs(re.dot(rs.simple_roots[j])) < 1e-9 * (1.0 + re.norm());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
        const auto& exp = rs.positive_in_simple[rs.indivisible_positive[i]];
        bool ok = true;
        for (int j = 0; j < rs.rank; ++j)
            if (exp[j] != 0 && !in_theta[j]) ok = false;
        if (ok) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_CASE("centralizer lemma properties") {
    std::mt19937_64 rng(13);
    for (const auto& rs : {a2(1.1), b2(1.2, 0.8)}) {
        for (int trial = 0; trial < 40; ++trial) {
            // mix of generic, wall, and integral dominant points
            CVec lam;
            int kind = trial % 3;
            if (kind == 0) {
                lam = to_complex(random_dominant(rng, rs, 2.5));
            } else if (kind == 1) {
                Vec v = random_dominant(rng, rs, 2.5);
                v -= v.dot(rs.simple_roots[0]) / rs.simple_roots[0].squaredNorm() *
                     rs.simple_roots[0];  // land on a wall
                if (!is_dominant(rs, v, 1e-12)) continue;
                lam = to_complex(v);
            } else {
                // integral lambda_alpha on the simple roots
                Vec v = Vec::Zero(rs.rank);
                std::uniform_int_distribution<int> k(0, 2);
                Mat basis(rs.rank, rs.rank);
                for (int j = 0; j < rs.rank; ++j) basis.row(j) = rs.simple_roots[j].transpose();
                Vec target(rs.rank);
                for (int j = 0; j < rs.rank; ++j)
                    target[j] = k(rng) * rs.simple_roots[j].squaredNorm();
                v = basis.colPivHouseholderQr().solve(target);
                if (!is_dominant(rs, v, 1e-12)) continue;
                lam = to_complex(v);
            }
            auto cls = classify_spectral(rs, lam);
            Vec re = real_part(lam);
            auto theta0 = sigma_theta0(rs, re);
            // Sigma_lambda^> and Sigma_{Theta(lambda),0}^+ are disjoint
            for (auto i : cls.sigma_lambda_gt)
                CHECK(std::find(theta0.begin(), theta0.end(), i) == theta0.end());
            // w in W_lambda permutes Sigma_0^+ \ Sigma_lambda^0
            std::set<std::size_t> s0(cls.sigma_lambda_0.begin(), cls.sigma_lambda_0.end());
            for (std::size_t w : cls.w_lambda) {
                for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
                    if (s0.count(i)) continue;
                    Vec img = rs.weyl.apply(w, rs.indivisible_root(i));
                    // img must be some positive indivisible root outside Sigma_lambda^0
                    bool found = false;
                    for (std::size_t j = 0; j < rs.indivisible_positive.size(); ++j) {
                        if (s0.count(j)) continue;
                        if ((rs.indivisible_root(j) - img).norm() < 1e-9) found = true;
                    }
                    CHECK(found);
                }
            }
            // w in W_{Re lambda}: w(-Sigma_0^+) does not meet Sigma_lambda^>
            for (std::size_t w : cls.w_re_lambda) {
                for (std::size_t i = 0; i < rs.indivisible_positive.size(); ++i) {
                    Vec img = -rs.weyl.apply(w, rs.indivisible_root(i));
                    for (auto gt : cls.sigma_lambda_gt)
                        CHECK((rs.indivisible_root(gt) - img).norm() > 1e-9);
                }
            }
            // W_lambda closed under composition
            for (std::size_t w1 : cls.w_lambda)
                for (std::size_t w2 : cls.w_lambda) {
                    std::size_t p = rs.weyl.product_index(w1, w2);
                    CHECK(std::find(cls.w_lambda.begin(), cls.w_lambda.end(), p) !=
                          cls.w_lambda.end());
                }
        }
    }
}
