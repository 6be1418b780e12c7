#include "nwfpp/mgf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nwfpp {

namespace {

// Gauss-Legendre nodes/weights on [0,1], Newton iteration on P_n
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
}

// Fritsch-Carlson monotone cubic slopes
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto clip = [](double mm, double dd) {
        if (mm * dd <= 0.0) return 0.0;
        return std::abs(mm) > 3.0 * std::abs(dd) ? 3.0 * dd : mm;
    };
    m[0] = clip(m[0], d[0]);
    m[n - 1] = clip(m[n - 1], d[n - 2]);
    return m;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& m, double q) {
    if (q <= x.front()) return y.front();
    const auto it = std::upper_bound(x.begin(), x.end(), q);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double t = (q - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return y[i] * (2 * t3 - 3 * t2 + 1) + h * m[i] * (t3 - 2 * t2 + t) +
           y[i + 1] * (-2 * t3 + 3 * t2) + h * m[i + 1] * (t3 - t2);
}

} // namespace

void solver_config::validate() const {
    if (!(theta_max > 0.0) || grid_points < 8 || quad_nodes < 2 || !(tol > 0.0) || max_iter < 1)
        throw std::invalid_argument("solver_config: all parameters must be positive");
    if (!(tol < 1e-6))
        throw std::invalid_argument("solver_config: tol must be < 1e-6");
}

double mgf_table::eval_red(double theta) const {
    if (theta < 0.0) throw std::invalid_argument("mgf_table: theta must be >= 0");
    if (theta > theta_.back()) throw std::out_of_range("mgf_table: theta beyond theta_max");
    return pchip_eval(theta_, m_red_, slope_red_, theta);
}

double mgf_table::eval_blue(double theta) const {
    if (theta < 0.0) throw std::invalid_argument("mgf_table: theta must be >= 0");
    if (theta > theta_.back()) throw std::out_of_range("mgf_table: theta beyond theta_max");
    return pchip_eval(theta_, m_blue_, slope_blue_, theta);
}

double mgf_table::eval_root_split(double theta) const {
    const double mr = eval_red(theta);
    const double mb = eval_blue(theta);
    return mr * mr * std::exp(k_.rho * (mb - 1.0));
}

mgf_table solve(const model_constants& k, const solver_config& config) {
    config.validate();

    // grid: 0, geometric on [theta_lo, min(1, theta_max)], linear beyond 1
    std::vector<double> grid{0.0};
    const double theta_lo = 1e-8;
    const double geo_top = std::min(1.0, config.theta_max);
    const int n_geo = config.theta_max > 1.0 ? config.grid_points / 2
                                             : config.grid_points - 1;
    for (int i = 0; i < n_geo; ++i)
        grid.push_back(theta_lo * std::pow(geo_top / theta_lo,
                                           static_cast<double>(i) / (n_geo - 1)));
    if (config.theta_max > 1.0) {
        const int n_lin = config.grid_points - 1 - n_geo;
        for (int i = 1; i <= n_lin; ++i)
            grid.push_back(1.0 + (config.theta_max - 1.0) * static_cast<double>(i) / n_lin);
    }
    const std::size_t G = grid.size();

    std::vector<double> qx, qw;
    gauss_legendre_01(config.quad_nodes, qx, qw);
    // argument matrix theta_i * x_j^lambda
    std::vector<double> pow_x(config.quad_nodes);
    for (int j = 0; j < config.quad_nodes; ++j) pow_x[j] = std::pow(qx[j], k.lambda);

    std::vector<double> mr(G), mb(G);
    for (std::size_t i = 0; i < G; ++i) {
        mr[i] = std::exp(-grid[i] * k.u_red());
        mb[i] = std::exp(-grid[i] * k.u_blue());
    }

    std::vector<double> history;
    std::vector<double> nmr(G), nmb(G), sr, sb;
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < config.max_iter; ++it) {
        sr = pchip_slopes(grid, mr);
        sb = pchip_slopes(grid, mb);
        for (std::size_t i = 0; i < G; ++i) {
            double acc_r = 0.0, acc_b = 0.0;
            for (int j = 0; j < config.quad_nodes; ++j) {
                const double a = grid[i] * pow_x[j];
                const double fr = pchip_eval(grid, mr, sr, a);
                const double fb = pchip_eval(grid, mb, sb, a);
                const double e = std::exp(k.rho * (fb - 1.0));
                acc_r += qw[j] * fr * e;
                acc_b += qw[j] * fr * fr * e;
            }
            nmr[i] = acc_r;
            nmb[i] = acc_b;
        }
        nmr[0] = nmb[0] = 1.0;
        residual = 0.0;
        for (std::size_t i = 0; i < G; ++i)
            residual = std::max({residual, std::abs(nmr[i] - mr[i]), std::abs(nmb[i] - mb[i])});
        mr.swap(nmr);
        mb.swap(nmb);
        history.push_back(residual);
        if (residual < config.tol) break;
        if (it > 10 && residual > 10.0 * history[history.size() - 5])
            break; // diverging; reported below
    }
    if (residual >= config.tol) {
        std::ostringstream msg;
        msg << "mgf solve: no convergence within " << config.max_iter
            << " iterations; residual history:";
        for (const double r : history) msg << ' ' << r;
        throw std::runtime_error(msg.str());
    }

    mgf_table t;
    t.theta_ = std::move(grid);
    t.m_red_ = std::move(mr);
    t.m_blue_ = std::move(mb);
    t.slope_red_ = pchip_slopes(t.theta_, t.m_red_);
    t.slope_blue_ = pchip_slopes(t.theta_, t.m_blue_);
    t.residual_ = residual;
    t.history_ = std::move(history);
    t.k_ = k;
    return t;
}

double epidemic_x(const model_constants& k, double t) {
    return (1.0 - k.pi_red() * k.pi_red() / 2.0) * std::exp(k.lambda * t) /
           (k.lambda * (k.lambda + 1.0));
}

double f_curve(const mgf_table& table, double t) {
    const model_constants& k = table.constants();
    const double x = epidemic_x(k, t);
    if (x > table.theta_max()) {
        const double scale = (1.0 - k.pi_red() * k.pi_red() / 2.0) / (k.lambda * (k.lambda + 1.0));
        const double t_limit = std::log(table.theta_max() / scale) / k.lambda;
        std::ostringstream msg;
        msg << "f_curve: x(t) = " << x << " beyond theta_max; admissible t <= " << t_limit;
        throw std::out_of_range(msg.str());
    }
    return 1.0 - table.eval_root_split(x);
}

} // namespace nwfpp
