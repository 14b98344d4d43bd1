#include "turanlab/rational.hpp"

namespace turanlab {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace turanlab
