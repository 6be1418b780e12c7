#pragma once

#include <cstdint>
#include <vector>

#include "nwfpp/theory.hpp"

namespace nwfpp {

struct solver_config {
    double theta_max = 10.0;
    int grid_points = 512;
    int quad_nodes = 64;
    double tol = 1e-10;
    int max_iter = 200;

    void validate() const; // throws std::invalid_argument
};

// Numerically solved pair (M_R, M_B) of alive-root martingale-limit MGFs on a
// theta grid (geometric near 0, linear beyond 1), M(theta) = E[exp(-theta W)].
// Off-grid evaluation by monotone piecewise-cubic interpolation.
class mgf_table {
public:
    const std::vector<double>& theta() const { return theta_; }
    const std::vector<double>& m_red() const { return m_red_; }
    const std::vector<double>& m_blue() const { return m_blue_; }
    double residual() const { return residual_; }
    const std::vector<double>& residual_history() const { return history_; }
    const model_constants& constants() const { return k_; }
    double theta_max() const { return theta_.back(); }

    double eval_red(double theta) const;
    double eval_blue(double theta) const;

    // MGF of the martingale limit when the root splits at time zero (the
    // exploration convention): M_R(theta)^2 exp(rho (M_B(theta) - 1))
    double eval_root_split(double theta) const;

private:
    friend mgf_table solve(const model_constants&, const solver_config&);
    std::vector<double> theta_, m_red_, m_blue_;
    std::vector<double> slope_red_, slope_blue_;
    std::vector<double> history_;
    double residual_ = 0.0;
    model_constants k_{};
};

// Fixed-point solve of the branching functional-equation system
//   M_R(t) = int_0^1 M_R(t w^l) exp(rho (M_B(t w^l) - 1)) dw
//   M_B(t) = int_0^1 M_R(t w^l)^2 exp(rho (M_B(t w^l) - 1)) dw
// (the Exp(1) parent-lifetime expectation substituted via w = e^{-x}),
// iterated from M0(t) = exp(-t u_type) with Gauss-Legendre quadrature.
// Throws std::runtime_error with the residual history on non-convergence.
mgf_table solve(const model_constants& k, const solver_config& config = {});

// x(t) = (1 - pi_R^2/2) e^{lambda t} / (lambda (lambda + 1))
double epidemic_x(const model_constants& k, double t);

// f(t) = 1 - M(x(t)) with M the root-split MGF; throws std::out_of_range
// (reporting the admissible t threshold) when x(t) exceeds the table range
double f_curve(const mgf_table& table, double t);

} // namespace nwfpp
