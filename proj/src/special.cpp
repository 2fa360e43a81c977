#include "smd/special.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace smd {

double log_poisson_pmf(std::int64_t i, double z) {
    if (z == 0.0)
        return i == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return static_cast<double>(i) * std::log(z) - z -
           std::lgamma(static_cast<double>(i) + 1.0);
}

std::vector<double> gamma_p_integer_prefix(std::int64_t kmax, double z) {
    if (kmax < 1)
        throw std::invalid_argument("gamma_p_integer_prefix: kmax >= 1");
    std::vector<double> out(static_cast<std::size_t>(kmax));
    if (z <= 0.0) {
        for (auto& v : out) v = 0.0;
        return out;
    }
    // Poisson masses pois_j = z^j e^{-z} / j!, j = 0..kmax-1, seeded at the
    // mode so that neither end of the sweep underflows the seed itself.
    std::int64_t mode = std::min<std::int64_t>(kmax - 1, static_cast<std::int64_t>(z));
    std::vector<double> pois(static_cast<std::size_t>(kmax));
    pois[static_cast<std::size_t>(mode)] = std::exp(log_poisson_pmf(mode, z));
    for (std::int64_t j = mode; j > 0; --j)
        pois[static_cast<std::size_t>(j - 1)] =
            pois[static_cast<std::size_t>(j)] * static_cast<double>(j) / z;
    for (std::int64_t j = mode + 1; j < kmax; ++j)
        pois[static_cast<std::size_t>(j)] =
            pois[static_cast<std::size_t>(j - 1)] * z / static_cast<double>(j);
    // Q(k) = sum_{j<k} pois_j, P(k) = 1 - Q(k).  Accumulate ascending; the
    // left tail that underflows individually is genuinely negligible.
    kahan_sum q;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        q.add(pois[static_cast<std::size_t>(k - 1)]);
        double p = 1.0 - q.value();
        out[static_cast<std::size_t>(k - 1)] = p < 0.0 ? 0.0 : p;
    }
    return out;
}

double gamma_p_integer(std::int64_t k, double z) {
    return gamma_p_integer_prefix(k, z).back();
}

std::vector<double> gamma_central_moments(double shape, double rate, int m) {
    if (m < 0)
        throw std::invalid_argument("gamma_central_moments: m >= 0");
    std::vector<double> kappa(static_cast<std::size_t>(m) + 1, 0.0);
    double fact = 1.0;  // (r-1)! built incrementally
    double rp = rate;
    for (int r = 2; r <= m; ++r) {
        fact *= static_cast<double>(r - 1);
        rp *= rate;
        kappa[static_cast<std::size_t>(r)] = shape * fact / rp;
    }
    std::vector<double> mu(static_cast<std::size_t>(m) + 1, 0.0);
    mu[0] = 1.0;
    for (int r = 2; r <= m; ++r) {
        double acc = 0.0;
        for (int k = 2; k <= r; ++k)
            acc += binomial(r - 1, k - 1) * kappa[static_cast<std::size_t>(k)] *
                   mu[static_cast<std::size_t>(r - k)];
        mu[static_cast<std::size_t>(r)] = acc;
    }
    return mu;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= k; ++j)
        r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    return std::round(r);
}

namespace {

gauss_rule make_gauss_legendre(std::uint32_t n) {
    // Newton iteration on P_n with the three-term recurrence; standard
    // construction, nodes symmetric about 0.
    gauss_rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double eps = 1e-15;
    std::uint32_t m = (n + 1) / 2;
    for (std::uint32_t i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::uint32_t j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < eps) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const gauss_rule& gauss_legendre(std::uint32_t points) {
    if (points < 1)
        throw std::invalid_argument("gauss_legendre: points >= 1");
    static std::mutex mtx;
    static std::map<std::uint32_t, gauss_rule> cache;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(points);
    if (it == cache.end())
        it = cache.emplace(points, make_gauss_legendre(points)).first;
    return it->second;
}

}  // namespace smd
