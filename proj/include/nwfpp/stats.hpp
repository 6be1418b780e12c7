#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nwfpp/rng.hpp"

namespace nwfpp {

// sorted-sample empirical CDF, x -> fraction of samples <= x
class ecdf {
public:
    explicit ecdf(std::vector<double> samples);
    double operator()(double x) const;
    const std::vector<double>& sorted() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

private:
    std::vector<double> samples_;
};

struct ks_result {
    double statistic = 0.0;
    double n_eff = 0.0;
    double critical_005 = 0.0;
    bool pass = false;
};

// exact sup over sample points of |ECDF - cdf|; 5% critical value 1.358/sqrt(n)
ks_result ks_one_sample(std::span<const double> samples,
                        const std::function<double(double)>& cdf);

// sup |F_a - F_b|; 5% critical value 1.358*sqrt((n_a+n_b)/(n_a n_b))
ks_result ks_two_sample(std::span<const double> a, std::span<const double> b);

double gumbel_cdf(double x);  // exp(-exp(-x))
double normal_cdf(double x);  // via erfc, <= 1e-7 absolute error
double gumbel_sample(rng_stream& rng); // -log(-log U)

struct chi_square_result {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 0.0;
};

// goodness of fit against fixed category probabilities (no fitted parameters)
chi_square_result chi_square_gof(std::span<const std::int64_t> counts,
                                 std::span<const double> probs);

} // namespace nwfpp
