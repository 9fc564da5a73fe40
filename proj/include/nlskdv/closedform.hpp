// Exact solutions and analytic constants: sech-power solitons, the explicit
// coupled family, sech moments, and closed-form energies. These are sampled
// from scalar formulas, never produced by the solvers, so they can serve as
// independent oracles.
#pragma once

#include <cmath>

#include "nlskdv/grid.hpp"
#include "nlskdv/model.hpp"

namespace nlskdv {

/// Exact rational value, kept as a numerator/denominator pair.
struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Integral of sech^k over the real line for k in {4, 6, 8}.
inline Rational sech_moment(int k) {
    switch (k) {
        case 4: return {4, 3};
        case 6: return {16, 15};
        case 8: return {32, 35};
        default: throw unsupported_moment("sech_moment supports k in {4, 6, 8}");
    }
}

/// Samples of the unique positive even solution of -w'' + lambda w = mu |w|^{r-1} w:
///   w(x) = [(r+1) lambda / (2 mu)]^{1/(r-1)} sech^{2/(r-1)}((r-1) sqrt(lambda) x / 2).
inline Field make_soliton(double lambda, double mu, double r, const GridPtr& g) {
    if (!(lambda > 0.0) || !(mu > 0.0)) throw invalid_params("soliton needs lambda, mu > 0");
    if (!(r >= 2.0)) throw invalid_params("soliton power must be >= 2");
    const double peak = std::pow((r + 1.0) * lambda / (2.0 * mu), 1.0 / (r - 1.0));
    const double rate = 0.5 * (r - 1.0) * std::sqrt(lambda);
    const double expo = 2.0 / (r - 1.0);
    return sample(g, [&](double x) {
        const double s = 1.0 / std::cosh(rate * x);
        return peak * std::pow(s, expo);
    });
}

/// One member of the explicit solution branch: valid for 0 < beta < 1/6,
/// with the KdV frequency locked to lambda2 = 4 lambda1 + beta (1 - 6 beta) / 12.
struct ExplicitFamilyPoint {
    double beta = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    State state;

    Params params() const {
        Params P = Params::cubic_quadratic(lambda1, lambda2, beta);
        return P;
    }
};

inline ExplicitFamilyPoint explicit_family(double lambda1, double beta, const GridPtr& g) {
    if (!(lambda1 > 0.0)) throw invalid_params("explicit_family needs lambda1 > 0");
    if (!(beta > 0.0) || !(beta < 1.0 / 6.0))
        throw family_undefined("explicit family exists only for 0 < beta < 1/6");
    ExplicitFamilyPoint pt;
    pt.beta = beta;
    pt.lambda1 = lambda1;
    pt.lambda2 = 4.0 * lambda1 + beta * (1.0 - 6.0 * beta) / 12.0;
    const double root = std::sqrt(lambda1);
    const double u_coeff = std::sqrt(2.0 * lambda1 * (1.0 - 6.0 * beta));
    const double v_coeff = 12.0 * lambda1;
    Field u = sample(g, [&](double x) { return u_coeff / std::cosh(root * x); });
    Field v = sample(g, [&](double x) {
        const double s = 1.0 / std::cosh(root * x);
        return v_coeff * s * s;
    });
    pt.state = State{{std::move(u), std::move(v)}};
    return pt;
}

/// Energy of the semitrivial solution (0, V_2): 24/5 lambda2^{5/2}.
inline double closed_energy_v2(double lambda2) {
    if (!(lambda2 > 0.0)) throw invalid_params("closed_energy_v2 needs lambda2 > 0");
    return 4.8 * std::pow(lambda2, 2.5);
}

/// Energy along the explicit branch: 4/3 lambda1^{3/2} (1 - 6 beta) + 768/5 lambda1^{5/2}.
inline double closed_energy_ubeta(double lambda1, double beta) {
    if (!(lambda1 > 0.0)) throw invalid_params("closed_energy_ubeta needs lambda1 > 0");
    if (!(beta > 0.0) || !(beta < 1.0 / 6.0))
        throw family_undefined("explicit family exists only for 0 < beta < 1/6");
    return (4.0 / 3.0) * std::pow(lambda1, 1.5) * (1.0 - 6.0 * beta) +
           153.6 * std::pow(lambda1, 2.5);
}

}  // namespace nlskdv
