#ifndef LISSAJOUS_JET_HPP
#define LISSAJOUS_JET_HPP

#include "lissajous/real.hpp"

#include <vector>

namespace lissajous {

// Truncated Taylor expansion f(x0 + h) = sum_k c_k h^k about a fixed point.
// Differentiation drops the highest coefficient, so every operation keeps the
// length of its shortest operand.
class Jet {
public:
    Jet() = default;
    explicit Jet(std::vector<Real> coefficients) : c_(std::move(coefficients)) {}
    static Jet constant(const Real& v, std::size_t length);
    static Jet sinAt(const Real& x0, std::size_t length);
    static Jet cosAt(const Real& x0, std::size_t length);

    std::size_t length() const { return c_.size(); }
    const Real& value() const { return c_.front(); }
    const Real& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Real>& coefficients() const { return c_; }

    Jet operator-() const;
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(const Real& s, const Jet& a);

    Jet derivative() const;

private:
    std::vector<Real> c_;
};

// f^e for real e; a negative base is only allowed for integer e
Jet pow(const Jet& f, const Real& e);

} // namespace lissajous

#endif
