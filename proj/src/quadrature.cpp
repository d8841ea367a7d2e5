#include "hypergeo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hypergeo::quadrature {

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

Grid1D composite_gauss(double a, double b, int cells, int order) {
    if (cells < 1 || b <= a) throw std::invalid_argument("composite_gauss: bad interval");
    Rule base = gauss_legendre(order);
    Grid1D g;
    double h = (b - a) / cells;
    for (int c = 0; c < cells; ++c) {
        double lo = a + c * h;
        for (int i = 0; i < order; ++i) {
            g.nodes.push_back(lo + 0.5 * h * (base.nodes[i] + 1.0));
            g.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return g;
}

}  // namespace hypergeo::quadrature
