#pragma once

#include <functional>
#include <map>
#include <string>

namespace turanlab {

/// A named principal-term formula n -> real. Evaluators are pure and defined for n >= 1.
struct BoundFormula {
    std::string name;
    std::map<std::string, int> params;
    std::function<double(int)> evaluate;

    double operator()(int n) const { return evaluate(n); }
};

/// (t - s + 1)^{1/s} (n/2)^{2 - 1/s}. Throws std::invalid_argument unless 2 <= s <= t and n >= 1.
double asymptotic_bound(int n, int s, int t);

/// sqrt(t - 1) (n/2)^{3/2}; equal to asymptotic_bound(n, 2, t).
double k2t_bound(int n, int t);

/// 2/(3 sqrt 3) n^{3/2} and n^{3/2}/2.
double c4c5_lower_bound(int n);
double c4c5_upper_bound(int n);

/// (2k-2)(t-1)((2k-2)(t-1)-1). Throws std::invalid_argument unless k, t >= 2.
long long ltt_alpha(int k, int t);

/// (alpha(k,t)^{1/2} + 1)^{1/2} n^{3/2} / 2, without the lower-order term.
double ltt_bound_principal(int n, int k, int t);

BoundFormula main_bound_formula(int s, int t);
BoundFormula c4c5_lower_formula();
BoundFormula c4c5_upper_formula();
BoundFormula ltt_formula(int k, int t);

}  // namespace turanlab
