// quadrature.hpp — Gauss–Legendre nodes/weights and composite grids.

#pragma once

#include "hypergeo/types.hpp"

#include <vector>

namespace hypergeo::quadrature {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss–Legendre rule by Newton iteration on P_n.
Rule gauss_legendre(int n);

struct Grid1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Composite rule: [a,b] split into `cells` equal cells, `order` points each.
Grid1D composite_gauss(double a, double b, int cells, int order);

}  // namespace hypergeo::quadrature
