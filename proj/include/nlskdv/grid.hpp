// Uniform symmetric 1-D mesh with trapezoid quadrature and the discrete
// operator -d^2/dx^2 + lambda under homogeneous Dirichlet closure.
#pragma once

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "nlskdv/errors.hpp"

namespace nlskdv {

struct Grid {
    double half_width = 0.0;  // L
    int n_points = 0;         // N, odd so that x = 0 is a node
    double spacing = 0.0;     // h = 2L/(N-1)
    std::vector<double> nodes;

    int center() const { return (n_points - 1) / 2; }
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(double half_width, int n_points) {
    if (!(half_width > 0.0))
        throw invalid_grid("grid half-width must be positive");
    if (n_points < 3 || n_points % 2 == 0)
        throw invalid_grid("grid needs an odd number of points, at least 3");
    auto g = std::make_shared<Grid>();
    g->half_width = half_width;
    g->n_points = n_points;
    g->spacing = 2.0 * half_width / static_cast<double>(n_points - 1);
    g->nodes.resize(static_cast<size_t>(n_points));
    // Nodes are built symmetrically around the center index so that x=0 is
    // exactly representable and x_{c+k} == -x_{c-k} holds bitwise.
    const int c = (n_points - 1) / 2;
    for (int i = 0; i < n_points; ++i)
        g->nodes[static_cast<size_t>(i)] = static_cast<double>(i - c) * g->spacing;
    return g;
}

/// Real-valued samples on a Grid; the function is taken to vanish outside [-L, L].
struct Field {
    GridPtr grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(GridPtr g)
        : grid(std::move(g)), values(static_cast<size_t>(grid->n_points), 0.0) {}
    Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid->n_points)
            throw shape_error("field length does not match grid");
    }

    int size() const { return grid->n_points; }
    double& operator[](int i) { return values[static_cast<size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<size_t>(i)]; }
};

template <class Fn>
Field sample(const GridPtr& g, Fn&& fn) {
    Field f(g);
    for (int i = 0; i < g->n_points; ++i) f[i] = fn(g->nodes[static_cast<size_t>(i)]);
    return f;
}

inline bool all_finite(const Field& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

inline double linf(const Field& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

/// Trapezoid rule: end nodes carry weight h/2, interior nodes weight h.
inline double quadrature(const Field& f) {
    const auto& v = f.values;
    const size_t n = v.size();
    double s = 0.5 * (v[0] + v[n - 1]);
    for (size_t i = 1; i + 1 < n; ++i) s += v[i];
    return s * f.grid->spacing;
}

inline double trapezoid_weight(int i, int n, double h) {
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

/// Quadrature pairing of two fields on the same grid.
inline double dot(const Field& a, const Field& b) {
    const size_t n = a.values.size();
    if (b.values.size() != n) throw shape_error("dot: field sizes differ");
    double s = 0.5 * (a.values[0] * b.values[0] + a.values[n - 1] * b.values[n - 1]);
    for (size_t i = 1; i + 1 < n; ++i) s += a.values[i] * b.values[i];
    return s * a.grid->spacing;
}

/// g_i = -(f_{i+1} - 2 f_i + f_{i-1})/h^2 + lambda f_i with zero ghost values.
inline Field apply_operator(const Field& f, double lambda) {
    Field g(f.grid);
    const auto& v = f.values;
    const int n = f.grid->n_points;
    const double inv_h2 = 1.0 / (f.grid->spacing * f.grid->spacing);
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? v[static_cast<size_t>(i - 1)] : 0.0;
        const double right = i + 1 < n ? v[static_cast<size_t>(i + 1)] : 0.0;
        g.values[static_cast<size_t>(i)] =
            -(right - 2.0 * v[static_cast<size_t>(i)] + left) * inv_h2 +
            lambda * v[static_cast<size_t>(i)];
    }
    return g;
}

/// Squared lambda-weighted Sobolev norm. The derivative part sums forward
/// differences over every cell, including the two ghost cells to the zero
/// closure, so it is exactly the quadratic form of apply_operator for fields
/// that vanish at the boundary nodes.
inline double norm_sq(const Field& f, double lambda) {
    const auto& v = f.values;
    const size_t n = v.size();
    const double h = f.grid->spacing;
    double deriv = v[0] * v[0] + v[n - 1] * v[n - 1];
    for (size_t i = 0; i + 1 < n; ++i) {
        const double d = v[i + 1] - v[i];
        deriv += d * d;
    }
    double mass = 0.5 * (v[0] * v[0] + v[n - 1] * v[n - 1]);
    for (size_t i = 1; i + 1 < n; ++i) mass += v[i] * v[i];
    return deriv / h + lambda * mass * h;
}

// Elementwise helpers used throughout the solvers.

inline Field operator+(const Field& a, const Field& b) {
    Field r(a.grid, a.values);
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

inline Field operator-(const Field& a, const Field& b) {
    Field r(a.grid, a.values);
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

inline Field operator*(double c, const Field& a) {
    Field r(a.grid, a.values);
    for (double& v : r.values) v *= c;
    return r;
}

inline void axpy(double alpha, const Field& x, Field& y) {
    for (size_t i = 0; i < y.values.size(); ++i) y.values[i] += alpha * x.values[i];
}

inline Field abs(const Field& f) {
    Field r(f.grid, f.values);
    for (double& v : r.values) v = std::abs(v);
    return r;
}

}  // namespace nlskdv
