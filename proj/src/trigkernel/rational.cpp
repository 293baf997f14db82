#include "lissajous/rational.hpp"

#include "lissajous/errors.hpp"

#include <cctype>

namespace lissajous {

namespace {

bool isIntegerText(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Integer parseInteger(const std::string& s)
{
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    return Integer(t, 10);
}

} // namespace

Rational parseRational(const std::string& text)
{
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!isIntegerText(s))
            throw ParseError("not an exact rational: '" + text + "'");
        return Rational(parseInteger(s));
    }
    std::string num = trim(s.substr(0, slash));
    std::string den = trim(s.substr(slash + 1));
    if (!isIntegerText(num) || !isIntegerText(den))
        throw ParseError("not an exact rational: '" + text + "'");
    Integer d = parseInteger(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + text + "'");
    Rational q(parseInteger(num), d);
    q.canonicalize();
    return q;
}

std::string toString(const Rational& q)
{
    return q.get_str();
}

long toLong(const Rational& q)
{
    if (!isInteger(q) || !q.get_num().fits_slong_p())
        throw DomainError("expected a machine integer, got " + q.get_str());
    return q.get_num().get_si();
}

std::optional<Rational> exactSqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

Rational power(const Rational& base, unsigned long exponent)
{
    Rational r(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    r = Rational(num, den);
    r.canonicalize();
    return r;
}

} // namespace lissajous
