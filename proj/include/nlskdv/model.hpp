// Model coefficients and the variational calculus: energy, Nehari value,
// strong-form gradients, and the N-equation extension.
//
// Two-component system (u, v):
//   -u'' + lambda1 u = mu1 |u|^{q-1} u + beta u v
//   -v'' + lambda2 v = mu2 |v|^{p-1} v + (beta/2) u^2
// The cubic-quadratic short/long-wave system is the instance
// (q, p, mu1, mu2) = (3, 2, 1, 1/2).
//
// N-component system (u, v_1, ..., v_{N-1}):
//   -u''   + lambda0 u   = u^3 + sum_j beta_j u v_j
//   -v_j'' + lambda_j v_j = v_j^2 / 2 + beta_j u^2 / 2
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "nlskdv/grid.hpp"

namespace nlskdv {

struct Params {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double mu1 = 1.0;
    double mu2 = 0.5;
    double beta = 0.0;
    double q = 3.0;
    double p = 2.0;

    static Params cubic_quadratic(double l1, double l2, double beta) {
        Params P;
        P.lambda1 = l1;
        P.lambda2 = l2;
        P.beta = beta;
        P.validate();
        return P;
    }

    void validate() const {
        if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
            throw invalid_params("lambda1 and lambda2 must be positive");
        if (!(mu1 > 0.0) || !(mu2 > 0.0))
            throw invalid_params("mu1 and mu2 must be positive");
        if (!(q >= 2.0) || !(p >= 2.0))
            throw invalid_params("powers q and p must be >= 2");
        if (!std::isfinite(beta)) throw invalid_params("beta must be finite");
    }
};

struct NParams {
    double lambda0 = 1.0;
    std::vector<double> lambdas;  // lambda_j for the KdV components, j = 1..N-1
    std::vector<double> betas;    // beta_j, same length

    int n_components() const { return static_cast<int>(lambdas.size()) + 1; }

    void validate() const {
        if (!(lambda0 > 0.0)) throw invalid_params("lambda0 must be positive");
        if (lambdas.empty()) throw invalid_params("need at least one KdV component");
        if (betas.size() != lambdas.size())
            throw invalid_params("betas and lambdas must have equal length");
        for (double l : lambdas)
            if (!(l > 0.0)) throw invalid_params("component lambdas must be positive");
        for (double b : betas)
            if (!std::isfinite(b)) throw invalid_params("betas must be finite");
    }
};

/// lambda1 = omega + c^2/4, lambda2 = c.
inline std::pair<double, double> wave_to_params(double omega, double c) {
    const double l1 = omega + 0.25 * c * c;
    if (!(l1 > 0.0) || !(c > 0.0))
        throw invalid_wave_parameters("wave parameters give nonpositive lambda");
    return {l1, c};
}

/// Ordered tuple of components sharing one grid.
struct State {
    std::vector<Field> components;

    State() = default;
    explicit State(std::vector<Field> comps) : components(std::move(comps)) {
        for (size_t i = 1; i < components.size(); ++i)
            if (components[i].grid != components[0].grid)
                throw shape_error("state components must share one grid");
    }

    int size() const { return static_cast<int>(components.size()); }
    const GridPtr& grid() const { return components.at(0).grid; }
    Field& operator[](int i) { return components[static_cast<size_t>(i)]; }
    const Field& operator[](int i) const { return components[static_cast<size_t>(i)]; }
};

inline State zero_state(const GridPtr& g, int n_comp) {
    std::vector<Field> comps;
    for (int i = 0; i < n_comp; ++i) comps.emplace_back(g);
    return State{std::move(comps)};
}

inline State operator+(const State& a, const State& b) {
    State r = a;
    for (int i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline State operator-(const State& a, const State& b) {
    State r = a;
    for (int i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

inline State operator*(double c, const State& a) {
    State r = a;
    for (int i = 0; i < r.size(); ++i) r[i] = c * r[i];
    return r;
}

inline void axpy(double alpha, const State& x, State& y) {
    for (int i = 0; i < y.size(); ++i) axpy(alpha, x[i], y[i]);
}

inline double dot(const State& a, const State& b) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i) s += dot(a[i], b[i]);
    return s;
}

inline double linf(const State& s) {
    double m = 0.0;
    for (const Field& f : s.components) m = std::max(m, linf(f));
    return m;
}

inline State abs(const State& s) {
    State r = s;
    for (Field& f : r.components) f = abs(f);
    return r;
}

inline bool all_finite(const State& s) {
    for (const Field& f : s.components)
        if (!all_finite(f)) return false;
    return true;
}

namespace detail {

inline double abs_pow(double x, double r) {  // |x|^r
    if (r == 2.0) return x * x;
    if (r == 3.0) return std::abs(x) * x * x;
    if (r == 4.0) {
        const double y = x * x;
        return y * y;
    }
    if (r == 6.0) {
        const double y = x * x;
        return y * y * y;
    }
    return std::pow(std::abs(x), r);
}

inline double odd_pow(double x, double r) {  // |x|^{r-1} x
    if (r == 2.0) return std::abs(x) * x;
    if (r == 3.0) return x * x * x;
    if (r == 5.0) {
        const double y = x * x;
        return y * y * x;
    }
    return std::pow(std::abs(x), r - 1.0) * x;
}

inline void require_two_components(const State& s) {
    if (s.size() != 2) throw shape_error("expected a two-component state");
}

/// The three coupling integrals of the two-component model.
struct Integrals2 {
    double u_pow = 0.0;   // int |u|^{q+1}
    double v_pow = 0.0;   // int |v|^{p+1}
    double uuv = 0.0;     // int u^2 v
};

inline Integrals2 coupling_integrals(const Params& P, const State& s) {
    require_two_components(s);
    const auto& u = s[0].values;
    const auto& v = s[1].values;
    const int n = s[0].size();
    const double h = s.grid()->spacing;
    Integrals2 I;
    for (int i = 0; i < n; ++i) {
        const double w = trapezoid_weight(i, n, h);
        I.u_pow += w * abs_pow(u[static_cast<size_t>(i)], P.q + 1.0);
        I.v_pow += w * abs_pow(v[static_cast<size_t>(i)], P.p + 1.0);
        I.uuv += w * u[static_cast<size_t>(i)] * u[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    return I;
}

struct IntegralsN {
    double u4 = 0.0;                 // int u^4
    std::vector<double> v3;          // int v_j^3
    std::vector<double> uuv;         // int u^2 v_j
};

inline IntegralsN coupling_integrals(const NParams& NP, const State& s) {
    if (s.size() != NP.n_components())
        throw shape_error("state does not match NParams component count");
    const int m = static_cast<int>(NP.lambdas.size());
    const auto& u = s[0].values;
    const int n = s[0].size();
    const double h = s.grid()->spacing;
    IntegralsN I;
    I.v3.assign(static_cast<size_t>(m), 0.0);
    I.uuv.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < n; ++i) {
        const double w = trapezoid_weight(i, n, h);
        const double ui = u[static_cast<size_t>(i)];
        I.u4 += w * ui * ui * ui * ui;
        for (int j = 0; j < m; ++j) {
            const double vij = s[j + 1].values[static_cast<size_t>(i)];
            I.v3[static_cast<size_t>(j)] += w * vij * vij * vij;
            I.uuv[static_cast<size_t>(j)] += w * ui * ui * vij;
        }
    }
    return I;
}

}  // namespace detail

inline double energy(const Params& P, const State& s) {
    detail::require_two_components(s);
    const auto I = detail::coupling_integrals(P, s);
    return 0.5 * norm_sq(s[0], P.lambda1) + 0.5 * norm_sq(s[1], P.lambda2) -
           P.mu1 / (P.q + 1.0) * I.u_pow - P.mu2 / (P.p + 1.0) * I.v_pow -
           0.5 * P.beta * I.uuv;
}

/// Nehari value Psi(s) = (grad Phi(s) | s).
inline double nehari_value(const Params& P, const State& s) {
    detail::require_two_components(s);
    const auto I = detail::coupling_integrals(P, s);
    return norm_sq(s[0], P.lambda1) + norm_sq(s[1], P.lambda2) - P.mu1 * I.u_pow -
           P.mu2 * I.v_pow - 1.5 * P.beta * I.uuv;
}

/// Strong-form residual; s solves the discrete system iff gradient(P, s) ~ 0.
inline State gradient(const Params& P, const State& s) {
    detail::require_two_components(s);
    Field gu = apply_operator(s[0], P.lambda1);
    Field gv = apply_operator(s[1], P.lambda2);
    const auto& u = s[0].values;
    const auto& v = s[1].values;
    for (size_t i = 0; i < u.size(); ++i) {
        gu.values[i] -= P.mu1 * detail::odd_pow(u[i], P.q) + P.beta * u[i] * v[i];
        gv.values[i] -= P.mu2 * detail::odd_pow(v[i], P.p) + 0.5 * P.beta * u[i] * u[i];
    }
    return State{{std::move(gu), std::move(gv)}};
}

/// Gradient of the Nehari value, the normal direction to the constraint set.
inline State nehari_gradient(const Params& P, const State& s) {
    detail::require_two_components(s);
    Field gu = 2.0 * apply_operator(s[0], P.lambda1);
    Field gv = 2.0 * apply_operator(s[1], P.lambda2);
    const auto& u = s[0].values;
    const auto& v = s[1].values;
    for (size_t i = 0; i < u.size(); ++i) {
        gu.values[i] -=
            (P.q + 1.0) * P.mu1 * detail::odd_pow(u[i], P.q) + 3.0 * P.beta * u[i] * v[i];
        gv.values[i] -=
            (P.p + 1.0) * P.mu2 * detail::odd_pow(v[i], P.p) + 1.5 * P.beta * u[i] * u[i];
    }
    return State{{std::move(gu), std::move(gv)}};
}

/// analytic = quadrature pairing of gradient(P, s) with d;
/// numeric  = centered difference of the energy along d.
inline std::pair<double, double> directional_derivative_check(const Params& P, const State& s,
                                                              const State& d, double eps) {
    if (!(eps > 0.0)) throw invalid_params("directional derivative step must be positive");
    const double analytic = dot(gradient(P, s), d);
    State plus = s;
    axpy(eps, d, plus);
    State minus = s;
    axpy(-eps, d, minus);
    const double numeric = (energy(P, plus) - energy(P, minus)) / (2.0 * eps);
    return {analytic, numeric};
}

inline double energy_n(const NParams& NP, const State& s) {
    const auto I = detail::coupling_integrals(NP, s);
    double e = 0.5 * norm_sq(s[0], NP.lambda0) - 0.25 * I.u4;
    for (size_t j = 0; j < NP.lambdas.size(); ++j) {
        e += 0.5 * norm_sq(s[static_cast<int>(j) + 1], NP.lambdas[j]);
        e -= I.v3[j] / 6.0;
        e -= 0.5 * NP.betas[j] * I.uuv[j];
    }
    return e;
}

inline double nehari_value_n(const NParams& NP, const State& s) {
    const auto I = detail::coupling_integrals(NP, s);
    double psi = norm_sq(s[0], NP.lambda0) - I.u4;
    for (size_t j = 0; j < NP.lambdas.size(); ++j) {
        psi += norm_sq(s[static_cast<int>(j) + 1], NP.lambdas[j]);
        psi -= 0.5 * I.v3[j];
        psi -= 1.5 * NP.betas[j] * I.uuv[j];
    }
    return psi;
}

inline State gradient_n(const NParams& NP, const State& s) {
    if (s.size() != NP.n_components())
        throw shape_error("state does not match NParams component count");
    const int m = static_cast<int>(NP.lambdas.size());
    std::vector<Field> out;
    out.reserve(static_cast<size_t>(m) + 1);
    Field gu = apply_operator(s[0], NP.lambda0);
    const auto& u = s[0].values;
    for (size_t i = 0; i < u.size(); ++i) {
        double coupling = 0.0;
        for (int j = 0; j < m; ++j)
            coupling += NP.betas[static_cast<size_t>(j)] * s[j + 1].values[i];
        gu.values[i] -= u[i] * u[i] * u[i] + u[i] * coupling;
    }
    out.push_back(std::move(gu));
    for (int j = 0; j < m; ++j) {
        Field gv = apply_operator(s[j + 1], NP.lambdas[static_cast<size_t>(j)]);
        const auto& vj = s[j + 1].values;
        for (size_t i = 0; i < vj.size(); ++i)
            gv.values[i] -= 0.5 * detail::odd_pow(vj[i], 2.0) +
                            0.5 * NP.betas[static_cast<size_t>(j)] * u[i] * u[i];
        out.push_back(std::move(gv));
    }
    return State{std::move(out)};
}

inline State nehari_gradient_n(const NParams& NP, const State& s) {
    if (s.size() != NP.n_components())
        throw shape_error("state does not match NParams component count");
    const int m = static_cast<int>(NP.lambdas.size());
    std::vector<Field> out;
    out.reserve(static_cast<size_t>(m) + 1);
    Field gu = 2.0 * apply_operator(s[0], NP.lambda0);
    const auto& u = s[0].values;
    for (size_t i = 0; i < u.size(); ++i) {
        double coupling = 0.0;
        for (int j = 0; j < m; ++j)
            coupling += NP.betas[static_cast<size_t>(j)] * s[j + 1].values[i];
        gu.values[i] -= 4.0 * u[i] * u[i] * u[i] + 3.0 * u[i] * coupling;
    }
    out.push_back(std::move(gu));
    for (int j = 0; j < m; ++j) {
        Field gv = 2.0 * apply_operator(s[j + 1], NP.lambdas[static_cast<size_t>(j)]);
        const auto& vj = s[j + 1].values;
        for (size_t i = 0; i < vj.size(); ++i)
            gv.values[i] -= 1.5 * detail::odd_pow(vj[i], 2.0) +
                            1.5 * NP.betas[static_cast<size_t>(j)] * u[i] * u[i];
        out.push_back(std::move(gv));
    }
    return State{std::move(out)};
}

inline double total_norm_sq(const Params& P, const State& s) {
    detail::require_two_components(s);
    return norm_sq(s[0], P.lambda1) + norm_sq(s[1], P.lambda2);
}

inline double total_norm_sq(const NParams& NP, const State& s) {
    if (s.size() != NP.n_components())
        throw shape_error("state does not match NParams component count");
    double t = norm_sq(s[0], NP.lambda0);
    for (size_t j = 0; j < NP.lambdas.size(); ++j)
        t += norm_sq(s[static_cast<int>(j) + 1], NP.lambdas[j]);
    return t;
}

}  // namespace nlskdv
