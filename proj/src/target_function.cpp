#include "smd/target_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace smd {

namespace {

double horner(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

}  // namespace

target_function target_function::monomial(unsigned m) {
    target_function f;
    f.kind_ = kind_t::monomial;
    f.monomial_m_ = m;
    f.growth_ = m == 0 ? growth_class::bounded : growth_class::polynomial;
    f.growth_rate_ = static_cast<double>(m);
    f.name_ = "t^" + std::to_string(m);
    f.eval_ = [m](double t) { return std::pow(t, static_cast<double>(m)); };
    f.d1_ = [m](double t) {
        return m == 0 ? 0.0 : m * std::pow(t, static_cast<double>(m) - 1.0);
    };
    f.d2_ = [m](double t) {
        return m < 2 ? 0.0
                     : static_cast<double>(m) * (m - 1.0) *
                           std::pow(t, static_cast<double>(m) - 2.0);
    };
    return f;
}

target_function target_function::polynomial(std::vector<double> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
    target_function f;
    f.kind_ = kind_t::polynomial;
    f.coeffs_ = coeffs;
    f.growth_ = coeffs.size() <= 1 ? growth_class::bounded : growth_class::polynomial;
    f.growth_rate_ = static_cast<double>(coeffs.size() - 1);
    {
        std::ostringstream os;
        os << "poly:";
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            os << (k ? "," : "") << coeffs[k];
        f.name_ = os.str();
    }
    f.eval_ = [coeffs](double t) { return horner(coeffs, t); };
    std::vector<double> dc, d2c;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        dc.push_back(static_cast<double>(k) * coeffs[k]);
    for (std::size_t k = 1; k < dc.size(); ++k)
        d2c.push_back(static_cast<double>(k) * dc[k]);
    if (dc.empty()) dc.push_back(0.0);
    if (d2c.empty()) d2c.push_back(0.0);
    f.d1_ = [dc](double t) { return horner(dc, t); };
    f.d2_ = [d2c](double t) { return horner(d2c, t); };
    return f;
}

target_function target_function::exp_decay(double c) {
    if (!(c > 0.0))
        throw std::invalid_argument("exp_decay: rate must be positive");
    target_function f;
    f.kind_ = kind_t::exp_decay;
    f.decay_c_ = c;
    f.growth_ = growth_class::bounded;
    f.name_ = "exp_decay:" + std::to_string(c);
    f.eval_ = [c](double t) { return std::exp(-c * t); };
    f.d1_ = [c](double t) { return -c * std::exp(-c * t); };
    f.d2_ = [c](double t) { return c * c * std::exp(-c * t); };
    return f;
}

target_function target_function::x2_sin_pi() {
    target_function f;
    f.kind_ = kind_t::x2_sin_pi;
    f.growth_ = growth_class::polynomial;
    f.growth_rate_ = 2.0;
    f.name_ = "x2_sin_pi";
    f.eval_ = [](double t) { return t * t * std::sin(M_PI * t); };
    f.d1_ = [](double t) {
        return 2.0 * t * std::sin(M_PI * t) + M_PI * t * t * std::cos(M_PI * t);
    };
    f.d2_ = [](double t) {
        return (2.0 - M_PI * M_PI * t * t) * std::sin(M_PI * t) +
               4.0 * M_PI * t * std::cos(M_PI * t);
    };
    return f;
}

target_function target_function::x_exp_m7() {
    target_function f;
    f.kind_ = kind_t::x_exp_m7;
    f.growth_ = growth_class::bounded;
    f.name_ = "x_exp_m7";
    f.eval_ = [](double t) { return t * std::exp(-7.0 * t); };
    f.d1_ = [](double t) { return (1.0 - 7.0 * t) * std::exp(-7.0 * t); };
    f.d2_ = [](double t) { return (49.0 * t - 14.0) * std::exp(-7.0 * t); };
    return f;
}

target_function target_function::quad_exp() {
    target_function f;
    f.kind_ = kind_t::quad_exp;
    f.growth_ = growth_class::exponential;
    f.growth_rate_ = 1.0;
    f.name_ = "quad_exp";
    f.eval_ = [](double t) { return (t * t + 1.0) * std::exp(t); };
    f.d1_ = [](double t) { return (t * t + 2.0 * t + 1.0) * std::exp(t); };
    f.d2_ = [](double t) { return (t * t + 4.0 * t + 3.0) * std::exp(t); };
    return f;
}

target_function target_function::sampled(std::vector<double> xs,
                                         std::vector<double> ys) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw std::invalid_argument("sampled: need >= 2 matching samples");
    if (xs.front() < 0.0)
        throw std::invalid_argument("sampled: abscissae must be >= 0");
    if (!std::is_sorted(xs.begin(), xs.end()) ||
        std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("sampled: abscissae must be strictly increasing");
    target_function f;
    f.kind_ = kind_t::sampled;
    f.growth_ = growth_class::bounded;  // constant continuation outside the range
    f.name_ = "sampled";
    f.sample_xs_ = std::move(xs);
    f.sample_ys_ = std::move(ys);
    f.eval_ = [sx = f.sample_xs_, sy = f.sample_ys_](double t) {
        if (t <= sx.front()) return sy.front();
        if (t >= sx.back()) return sy.back();
        auto it = std::upper_bound(sx.begin(), sx.end(), t);
        std::size_t j = static_cast<std::size_t>(it - sx.begin());
        double w = (t - sx[j - 1]) / (sx[j] - sx[j - 1]);
        return sy[j - 1] + w * (sy[j] - sy[j - 1]);
    };
    return f;
}

target_function target_function::custom(std::function<double(double)> fn,
                                        growth_class g, double rate_or_order,
                                        std::string name) {
    target_function f;
    f.kind_ = kind_t::custom;
    f.growth_ = g;
    f.growth_rate_ = rate_or_order;
    f.name_ = std::move(name);
    f.eval_ = std::move(fn);
    return f;
}

target_function target_function::from_name(const std::string& name) {
    if (name == "x2_sin_pi") return x2_sin_pi();
    if (name == "x_exp_m7") return x_exp_m7();
    if (name == "quad_exp") return quad_exp();
    if (name.rfind("t^", 0) == 0)
        return monomial(static_cast<unsigned>(std::stoul(name.substr(2))));
    if (name.rfind("exp_decay:", 0) == 0)
        return exp_decay(std::stod(name.substr(10)));
    if (name.rfind("poly:", 0) == 0) {
        std::vector<double> c;
        std::stringstream ss(name.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(std::stod(tok));
        if (c.empty())
            throw std::invalid_argument("from_name: empty coefficient list");
        return polynomial(std::move(c));
    }
    throw std::invalid_argument("from_name: unknown function '" + name + "'");
}

double target_function::operator()(double t) const { return eval_(t); }

bool target_function::extends_beyond_samples(double t) const {
    return kind_ == kind_t::sampled && t > sample_xs_.back();
}

double target_function::derivative(double t) const {
    if (!d1_) throw std::logic_error("target_function: no analytic derivative");
    return d1_(t);
}

double target_function::second_derivative(double t) const {
    if (!d2_) throw std::logic_error("target_function: no analytic derivative");
    return d2_(t);
}

}  // namespace smd
