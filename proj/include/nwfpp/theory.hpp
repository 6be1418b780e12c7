#pragma once

#include <array>
#include <cstdint>

namespace nwfpp {

enum class color : std::uint8_t { red = 0, blue = 1 };

struct mat2 {
    // row = parent type (red first), column = child type
    double a[2][2];

    mat2 operator*(const mat2& o) const {
        mat2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
        return r;
    }
};

// Closed-form constants of the two-type limit process for shortcut
// intensity rho: growth rate lambda (largest root of x^2+(1-rho)x-2rho),
// second eigenvalue, stationary type distribution pi, right eigenvector u
// normalized pi.u = 1, the additive distance constant c, and the generator Q.
struct model_constants {
    double rho;
    double lambda;
    double lambda2;
    std::array<double, 2> pi; // [red, blue]
    std::array<double, 2> u;  // [red, blue]
    double c;
    mat2 Q;

    double pi_red() const { return pi[0]; }
    double pi_blue() const { return pi[1]; }
    double u_red() const { return u[0]; }
    double u_blue() const { return u[1]; }
};

// throws std::domain_error for rho <= 0
model_constants constants(double rho);

// M(t) = e^{Qt} via the eigendecomposition (two distinct real eigenvalues)
mat2 mean_matrix(const model_constants& k, double t);

// the corresponding additive constant of the rank-1 inhomogeneous random
// graph with the same local limit; differs from c
double ihrg_constant(const model_constants& k);

} // namespace nwfpp
