#include "nwfpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace nwfpp {

ecdf::ecdf(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("ecdf: empty sample");
    std::sort(samples_.begin(), samples_.end());
}

double ecdf::operator()(double x) const {
    return static_cast<double>(std::upper_bound(samples_.begin(), samples_.end(), x) -
                               samples_.begin()) /
           static_cast<double>(samples_.size());
}

ks_result ks_one_sample(std::span<const double> samples,
                        const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    ks_result r;
    r.statistic = d;
    r.n_eff = n;
    r.critical_005 = 1.358 / std::sqrt(n);
    r.pass = r.statistic < r.critical_005;
    return r;
}

ks_result ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> xa(a.begin(), a.end()), xb(b.begin(), b.end());
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    const double na = static_cast<double>(xa.size()), nb = static_cast<double>(xb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xa.size() && j < xb.size()) {
        const double x = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    ks_result r;
    r.statistic = d;
    r.n_eff = na * nb / (na + nb);
    r.critical_005 = 1.358 * std::sqrt((na + nb) / (na * nb));
    r.pass = r.statistic < r.critical_005;
    return r;
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gumbel_sample(rng_stream& rng) {
    return -std::log(-std::log(rng.next_double_open()));
}

chi_square_result chi_square_gof(std::span<const std::int64_t> counts,
                                 std::span<const double> probs) {
    if (counts.size() != probs.size() || counts.size() < 2)
        throw std::invalid_argument("chi_square_gof: need matching categories (>= 2)");
    std::int64_t total = 0;
    for (const auto c : counts) total += c;
    if (total <= 0) throw std::invalid_argument("chi_square_gof: empty counts");
    chi_square_result r;
    r.dof = static_cast<int>(counts.size()) - 1;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expect = static_cast<double>(total) * probs[i];
        const double diff = static_cast<double>(counts[i]) - expect;
        r.statistic += diff * diff / expect;
    }
    r.p_value = boost::math::gamma_q(r.dof / 2.0, r.statistic / 2.0);
    return r;
}

} // namespace nwfpp
