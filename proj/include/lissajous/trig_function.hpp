#ifndef LISSAJOUS_TRIG_FUNCTION_HPP
#define LISSAJOUS_TRIG_FUNCTION_HPP

#include "lissajous/polynomial.hpp"
#include "lissajous/rational.hpp"
#include "lissajous/real.hpp"

#include <optional>
#include <string>

namespace lissajous {

enum class Variable { Theta, Phi };

std::string toString(Variable v);

using CPoly = Polynomial<Rational>;

// p0(c) + s*p1(c), i.e. a bivariate polynomial in (s, c) reduced modulo s^2 + c^2 - 1.
struct TrigPoly {
    CPoly even;
    CPoly odd;

    TrigPoly() = default;
    TrigPoly(CPoly e, CPoly o = CPoly()) : even(std::move(e)), odd(std::move(o)) {}

    bool isZero() const { return even.isZero() && odd.isZero(); }
    TrigPoly conjugate() const { return {even, -odd}; }
    TrigPoly timesSin() const;
    TrigPoly timesCos() const { return {even.shifted(1), odd.shifted(1)}; }

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) { return {a.even + b.even, a.odd + b.odd}; }
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return {a.even - b.even, a.odd - b.odd}; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const CPoly& p, const TrigPoly& a) { return {p * a.even, p * a.odd}; }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.even == b.even && a.odd == b.odd; }

    // derivative with respect to the angle, using s' = c and c' = -s
    TrigPoly derivative() const;
    std::string toString() const;
};

// sin^a(x) cos^b(x) * N(s, c) / d(c), kept in canonical form:
//   d is monic and coprime to c, 1 - c and 1 + c;
//   N is divisible neither by s nor by c; no common factor between N and d.
class QuasiTrigFunction {
public:
    explicit QuasiTrigFunction(Variable v = Variable::Phi) : var_(v) {}

    static QuasiTrigFunction constant(Variable v, const Rational& value);
    static QuasiTrigFunction monomial(Variable v, const Rational& sinExp, const Rational& cosExp,
                                      const Rational& coefficient = 1);
    static QuasiTrigFunction fromCos(Variable v, const CPoly& p);
    static QuasiTrigFunction fromSin(Variable v, const CPoly& p);
    static QuasiTrigFunction fromParts(Variable v, const Rational& sinExp, const Rational& cosExp,
                                       TrigPoly numerator, TrigPoly denominator);

    Variable variable() const { return var_; }
    const Rational& sinExponent() const { return a_; }
    const Rational& cosExponent() const { return b_; }
    const TrigPoly& numerator() const { return num_; }
    const CPoly& denominator() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    // a bare rational constant (possibly zero)
    std::optional<Rational> constantValue() const;

    QuasiTrigFunction operator-() const;
    friend QuasiTrigFunction operator+(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
    friend QuasiTrigFunction operator-(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
    friend QuasiTrigFunction operator*(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
    friend QuasiTrigFunction operator/(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
    friend QuasiTrigFunction operator*(const Rational& q, const QuasiTrigFunction& f);
    friend bool operator==(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
    friend bool operator!=(const QuasiTrigFunction& f, const QuasiTrigFunction& g) { return !(f == g); }

    QuasiTrigFunction reciprocal() const;
    std::string toString() const;

    // re-runs the normalization; the identity on canonical values
    QuasiTrigFunction canonicalized() const;

private:
    void canonicalize();

    Variable var_;
    Rational a_{0};
    Rational b_{0};
    TrigPoly num_;
    CPoly den_{Rational(1)};
};

inline QuasiTrigFunction scale(const QuasiTrigFunction& f, const Rational& q) { return q * f; }

QuasiTrigFunction differentiate(const QuasiTrigFunction& f);

// r with f == r*g; throws NotProportional
Rational proportionality(const QuasiTrigFunction& f, const QuasiTrigFunction& g);
std::optional<Rational> tryProportionality(const QuasiTrigFunction& f, const QuasiTrigFunction& g);

// throws PoleAtPoint when the denominator vanishes at x, DomainError for a
// non-integer power of a negative sine or cosine
Real evaluateNumeric(const QuasiTrigFunction& f, const Real& x, unsigned precisionBits);

} // namespace lissajous

#endif
