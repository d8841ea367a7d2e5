// types.hpp — shared scalar/vector aliases and small numeric helpers.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hypergeo {

using Complex = std::complex<double>;
using Vec     = Eigen::VectorXd;    // real covector/point in orthonormal coordinates
using CVec    = Eigen::VectorXcd;   // complex covector
using Mat     = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

// Bilinear (not sesquilinear) pairing <u,v> on the complexified space.
inline Complex bilinear(const CVec& u, const CVec& v) {
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline Complex bilinear(const CVec& u, const Vec& v) {
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline CVec to_complex(const Vec& v) {
    CVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Complex(v[i], 0.0);
    return out;
}

inline Vec real_part(const CVec& v) {
    Vec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

inline Vec imag_part(const CVec& v) {
    Vec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].imag();
    return out;
}

inline double cnorm(const CVec& v) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::norm(v[i]);
    return std::sqrt(s);
}

// Distance from a complex number to the nearest real integer.
inline double dist_to_integers(Complex z) {
    double n = std::round(z.real());
    return std::abs(z - Complex(n, 0.0));
}

// Format a double with 17 significant digits (round-trip safe).
std::string format_g17(double x);
std::string format_complex_g17(Complex z);

}  // namespace hypergeo
