// core.hpp — shared aliases, error types, and small numeric helpers

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace harperz2 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// ------------------------------- error types --------------------------------

// Numerical failure inside an eigensolver or a non-finite input.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Band (or band-group) touching detected at a grid point of a torus scan.
// Carries the offending grid point so callers can report it.
struct DegeneracyError : std::runtime_error {
    int grid_i{-1};
    int grid_j{-1};
    double coord_x{0.0};
    double coord_y{0.0};

    DegeneracyError(const std::string& what, int i, int j, double x, double y)
        : std::runtime_error(what), grid_i(i), grid_j(j), coord_x(x), coord_y(y) {}
};

// Link determinant too small for the lattice field-strength method; the grid
// is too coarse for the curvature concentration.
struct GridRefinementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration rejected; `key_path` names the offending entry (e.g. "model.beta").
struct ConfigError : std::runtime_error {
    std::string key_path;

    explicit ConfigError(const std::string& what, std::string key = {})
        : std::runtime_error(what), key_path(std::move(key)) {}
};

// ------------------------------ small helpers -------------------------------

inline std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need at least one point");
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = a;
        return xs;
    }
    const double step = (b - a) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = a + step * i;
    return xs;
}

// Grid of n points covering [0, span) without the right endpoint (torus grids).
inline std::vector<double> periodic_grid(double span, int n) {
    if (n < 1) throw std::invalid_argument("periodic_grid: need at least one point");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = span * i / static_cast<double>(n);
    return xs;
}

inline double hermiticity_residual(const Matrix& h) {
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

inline bool all_finite(const Matrix& h) {
    return h.allFinite();
}

}  // namespace harperz2
