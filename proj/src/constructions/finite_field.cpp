#include "turanlab/finite_field.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace turanlab {
namespace {

constexpr int kMaxPrime = 1 << 16;

struct Modulus {
    int p;
    int r;
    std::vector<int> low;  // x^r = -(low[0] + low[1] x + ... + low[r-1] x^{r-1})
};

// Monic irreducible polynomials, coefficients of x^0..x^{r-1}.
const std::map<int, Modulus>& prime_power_table() {
    static const std::map<int, Modulus> table{
        {4, {2, 2, {1, 1}}},     // x^2 + x + 1
        {8, {2, 3, {1, 1, 0}}},  // x^3 + x + 1
        {9, {3, 2, {1, 0}}},     // x^2 + 1
        {16, {2, 4, {1, 1, 0, 0}}},
        {25, {5, 2, {2, 0}}},     // x^2 + 2
        {27, {3, 3, {1, 2, 0}}},  // x^3 + 2x + 1
    };
    return table;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(int x) {
    std::vector<int> out;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    if (x > 1) out.push_back(x);
    return out;
}

std::vector<int> digits(int a, int p, int r) {
    std::vector<int> out(static_cast<std::size_t>(r));
    for (auto& d : out) {
        d = a % p;
        a /= p;
    }
    return out;
}

int from_digits(const std::vector<int>& d, int p) {
    int a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

}  // namespace

UnsupportedFieldError::UnsupportedFieldError(int q)
    : std::invalid_argument("unsupported field order " + std::to_string(q) +
                            ": expected a prime below 65536 or one of 4, 8, 9, 16, 25, 27"),
      q_(q) {}

bool FiniteField::is_supported(int q) {
    return (q < kMaxPrime && is_prime(q)) || prime_power_table().count(q) > 0;
}

FiniteField::FiniteField(int q) : q_(q), p_(q), r_(1) {
    if (!is_supported(q)) throw UnsupportedFieldError(q);
    const auto uq = static_cast<std::size_t>(q);
    if (auto it = prime_power_table().find(q); it != prime_power_table().end()) {
        const Modulus& mod = it->second;
        p_ = mod.p;
        r_ = mod.r;
        add_.resize(uq * uq);
        mul_.resize(uq * uq);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                auto da = digits(a, p_, r_), db = digits(b, p_, r_);
                std::vector<int> sum(static_cast<std::size_t>(r_));
                for (int i = 0; i < r_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[static_cast<std::size_t>(a * q + b)] = from_digits(sum, p_);

                std::vector<int> prod(static_cast<std::size_t>(2 * r_ - 1), 0);
                for (int i = 0; i < r_; ++i)
                    for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int k = 2 * r_ - 2; k >= r_; --k) {
                    const int c = prod[k];
                    if (c == 0) continue;
                    prod[k] = 0;
                    for (int i = 0; i < r_; ++i) prod[k - r_ + i] = ((prod[k - r_ + i] - c * mod.low[i]) % p_ + p_) % p_;
                }
                prod.resize(static_cast<std::size_t>(r_));
                mul_[static_cast<std::size_t>(a * q + b)] = from_digits(prod, p_);
            }
    }
    inv_.assign(uq, 0);
    if (tabled()) {
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    } else {
        for (int a = 1; a < q; ++a) inv_[static_cast<std::size_t>(a)] = pow(a, q - 2);
    }

    if (q == 2) return;
    const auto factors = prime_factors(q - 1);
    for (int g = 2; g < q; ++g) {
        if (std::all_of(factors.begin(), factors.end(), [&](int f) { return pow(g, (q - 1) / f) != 1; })) {
            generator_ = g;
            break;
        }
    }
}

int FiniteField::add(int a, int b) const {
    if (tabled()) return add_[static_cast<std::size_t>(a * q_ + b)];
    const int s = a + b;
    return s >= q_ ? s - q_ : s;
}

int FiniteField::neg(int a) const {
    if (!tabled()) return a == 0 ? 0 : q_ - a;
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    return 0;
}

int FiniteField::mul(int a, int b) const {
    if (tabled()) return mul_[static_cast<std::size_t>(a * q_ + b)];
    return static_cast<int>(static_cast<long long>(a) * b % q_);
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return inv_[static_cast<std::size_t>(a)];
}

int FiniteField::pow(int a, long long e) const {
    int result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::vector<int> FiniteField::subgroup(int d) const {
    if (d < 1 || (q_ - 1) % d != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(d) + " does not divide " + std::to_string(q_ - 1));
    const int h = pow(generator_, (q_ - 1) / d);
    std::vector<int> out;
    for (int x = 1, i = 0; i < d; ++i, x = mul(x, h)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace turanlab
