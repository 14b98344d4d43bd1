#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace turanlab {

class UnsupportedFieldError : public std::invalid_argument {
public:
    explicit UnsupportedFieldError(int q);
    int order() const { return q_; }

private:
    int q_;
};

/// GF(q) for q prime, or q in {4, 8, 9, 16, 25, 27}.
/// Elements are the integers 0..q-1; for q = p^r the base-p digits of an element are
/// the coefficients of its polynomial representative (least significant digit = constant term).
class FiniteField {
public:
    explicit FiniteField(int q);

    static bool is_supported(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return r_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// Generator of the multiplicative group (least such element).
    int primitive_element() const { return generator_; }

    /// Multiplicative subgroup of order d, sorted; d must divide q-1.
    std::vector<int> subgroup(int d) const;

private:
    bool tabled() const { return r_ > 1; }

    int q_;
    int p_;
    int r_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    int generator_ = 1;
};

}  // namespace turanlab
