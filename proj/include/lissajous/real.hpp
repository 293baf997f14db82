#ifndef LISSAJOUS_REAL_HPP
#define LISSAJOUS_REAL_HPP

#include "lissajous/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace lissajous {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

unsigned bitsToDigits10(unsigned bits);

// Sets the default precision of newly created Reals for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real toReal(const Rational& q);
Real pi();

// Accepts "p/q", decimals, and "sqrt(p/q)".
Real parseReal(const std::string& text);

std::string toString(const Real& x, int digits = 40);

} // namespace lissajous

#endif
