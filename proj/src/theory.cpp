#include "nwfpp/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace nwfpp {

model_constants constants(double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("constants: rho must be > 0 (lambda degenerates at rho = 0)");
    model_constants k{};
    k.rho = rho;
    const double disc = std::sqrt(rho * rho + 6.0 * rho + 1.0);
    k.lambda = (rho - 1.0 + disc) / 2.0;
    k.lambda2 = (rho - 1.0 - disc) / 2.0;
    k.pi = {2.0 / (k.lambda + 2.0), k.lambda / (k.lambda + 2.0)};
    // Qu = lambda*u with row red: rho*u_B = lambda*u_R; normalize pi.u = 1
    const double ub = 1.0 / (k.pi[0] * rho / k.lambda + k.pi[1]);
    k.u = {rho * ub / k.lambda, ub};
    k.c = std::log(1.0 - k.pi[0] * k.pi[0] / 2.0) - std::log(k.lambda * (k.lambda + 1.0));
    k.Q = mat2{{{0.0, rho}, {2.0, rho - 1.0}}};
    return k;
}

mat2 mean_matrix(const model_constants& k, double t) {
    if (t < 0.0)
        throw std::domain_error("mean_matrix: t must be >= 0");
    // spectral projectors: P1 = (Q - l2 I)/(l1 - l2), P2 = I - P1
    const double l1 = k.lambda, l2 = k.lambda2;
    const double d = l1 - l2;
    mat2 p1{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            p1.a[i][j] = (k.Q.a[i][j] - (i == j ? l2 : 0.0)) / d;
    const double e1 = std::exp(l1 * t), e2 = std::exp(l2 * t);
    mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.a[i][j] = e1 * p1.a[i][j] + e2 * ((i == j ? 1.0 : 0.0) - p1.a[i][j]);
    return m;
}

double ihrg_constant(const model_constants& k) {
    const double l = k.lambda, rho = k.rho;
    return std::log((rho + 2.0) * (2.0 * rho + l * l) /
                    (rho * (l + 2.0) * (l + 2.0) * l * (l + 1.0)));
}

} // namespace nwfpp
