#include "turanlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace turanlab {
namespace {

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("bound formulas need n >= 1, got " + std::to_string(n));
}

}  // namespace

double asymptotic_bound(int n, int s, int t) {
    require_n(n);
    if (s < 2 || s > t)
        throw std::invalid_argument("asymptotic_bound needs 2 <= s <= t, got s=" + std::to_string(s) +
                                    " t=" + std::to_string(t));
    const double inv_s = 1.0 / s;
    return std::pow(t - s + 1.0, inv_s) * std::pow(n / 2.0, 2.0 - inv_s);
}

double k2t_bound(int n, int t) {
    require_n(n);
    if (t < 2) throw std::invalid_argument("k2t_bound needs t >= 2");
    return std::sqrt(t - 1.0) * std::pow(n / 2.0, 1.5);
}

double c4c5_lower_bound(int n) {
    require_n(n);
    return 2.0 / (3.0 * std::sqrt(3.0)) * std::pow(n, 1.5);
}

double c4c5_upper_bound(int n) {
    require_n(n);
    return std::pow(n, 1.5) / 2.0;
}

long long ltt_alpha(int k, int t) {
    if (k < 2 || t < 2) throw std::invalid_argument("alpha(k, t) needs k, t >= 2");
    const long long a = (2LL * k - 2) * (t - 1);
    return a * (a - 1);
}

double ltt_bound_principal(int n, int k, int t) {
    require_n(n);
    const double alpha = static_cast<double>(ltt_alpha(k, t));
    return std::sqrt(std::sqrt(alpha) + 1.0) * std::pow(n, 1.5) / 2.0;
}

BoundFormula main_bound_formula(int s, int t) {
    asymptotic_bound(1, s, t);
    return {"(t-s+1)^(1/s)*(n/2)^(2-1/s)", {{"s", s}, {"t", t}}, [s, t](int n) { return asymptotic_bound(n, s, t); }};
}

BoundFormula c4c5_lower_formula() { return {"2/(3*sqrt(3))*n^(3/2)", {}, c4c5_lower_bound}; }

BoundFormula c4c5_upper_formula() { return {"n^(3/2)/2", {}, c4c5_upper_bound}; }

BoundFormula ltt_formula(int k, int t) {
    ltt_alpha(k, t);
    return {"(alpha(k,t)^(1/2)+1)^(1/2)*n^(3/2)/2", {{"k", k}, {"t", t}},
            [k, t](int n) { return ltt_bound_principal(n, k, t); }};
}

}  // namespace turanlab
