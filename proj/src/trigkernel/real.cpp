#include "lissajous/real.hpp"

#include "lissajous/errors.hpp"

#include <cmath>
#include <iomanip>
#include <regex>
#include <sstream>

namespace lissajous {

unsigned bitsToDigits10(unsigned bits)
{
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(Real::default_precision())
{
    Real::default_precision(bitsToDigits10(bits));
}

PrecisionScope::~PrecisionScope()
{
    Real::default_precision(saved_);
}

Real toReal(const Rational& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real parseReal(const std::string& text)
{
    static const std::regex sqrtForm(R"(\s*sqrt\s*\(\s*([^)]*)\)\s*)");
    static const std::regex decimal(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, sqrtForm)) {
        Real inner = parseReal(m[1].str());
        if (inner < 0)
            throw ParseError("square root of a negative number: '" + text + "'");
        return sqrt(inner);
    }
    if (text.find('/') != std::string::npos)
        return toReal(parseRational(text));
    if (!std::regex_match(text, decimal))
        throw ParseError("not a real number: '" + text + "'");
    return Real(text);
}

std::string toString(const Real& x, int digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << std::scientific << x;
    return os.str();
}

} // namespace lissajous
