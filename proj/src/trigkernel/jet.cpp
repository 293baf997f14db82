#include "lissajous/jet.hpp"

#include "lissajous/errors.hpp"

#include <algorithm>

namespace lissajous {

namespace {

std::size_t common(const Jet& a, const Jet& b)
{
    return std::min(a.length(), b.length());
}

Jet trigAt(const Real& x0, std::size_t length, bool isSin)
{
    Real s = sin(x0);
    Real c = cos(x0);
    // derivatives cycle through s, c, -s, -c (sin) or c, -s, -c, s (cos)
    Real cycle[4] = {s, c, -s, -c};
    int offset = isSin ? 0 : 1;
    std::vector<Real> r(length);
    Real factorial = 1;
    for (std::size_t k = 0; k < length; ++k) {
        if (k > 0)
            factorial *= Real(static_cast<unsigned long>(k));
        r[k] = cycle[(k + offset) % 4] / factorial;
    }
    return Jet(std::move(r));
}

} // namespace

Jet Jet::constant(const Real& v, std::size_t length)
{
    std::vector<Real> r(length, Real(0));
    if (length > 0)
        r[0] = v;
    return Jet(std::move(r));
}

Jet Jet::sinAt(const Real& x0, std::size_t length)
{
    return trigAt(x0, length, true);
}

Jet Jet::cosAt(const Real& x0, std::size_t length)
{
    return trigAt(x0, length, false);
}

Jet Jet::operator-() const
{
    std::vector<Real> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        r[k] = -c_[k];
    return Jet(std::move(r));
}

Jet operator+(const Jet& a, const Jet& b)
{
    std::size_t n = common(a, b);
    std::vector<Real> r(n);
    for (std::size_t k = 0; k < n; ++k)
        r[k] = a.c_[k] + b.c_[k];
    return Jet(std::move(r));
}

Jet operator-(const Jet& a, const Jet& b)
{
    std::size_t n = common(a, b);
    std::vector<Real> r(n);
    for (std::size_t k = 0; k < n; ++k)
        r[k] = a.c_[k] - b.c_[k];
    return Jet(std::move(r));
}

Jet operator*(const Jet& a, const Jet& b)
{
    std::size_t n = common(a, b);
    std::vector<Real> r(n, Real(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            r[k] += a.c_[j] * b.c_[k - j];
    return Jet(std::move(r));
}

Jet operator/(const Jet& a, const Jet& b)
{
    std::size_t n = common(a, b);
    if (n == 0)
        return Jet();
    if (b.c_[0] == 0)
        throw ZeroDenominator("jet division by a function vanishing at the expansion point");
    std::vector<Real> r(n);
    for (std::size_t k = 0; k < n; ++k) {
        Real acc = a.c_[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= b.c_[j] * r[k - j];
        r[k] = acc / b.c_[0];
    }
    return Jet(std::move(r));
}

Jet operator*(const Real& s, const Jet& a)
{
    std::vector<Real> r(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        r[k] = s * a.c_[k];
    return Jet(std::move(r));
}

Jet Jet::derivative() const
{
    if (c_.empty())
        return Jet();
    std::vector<Real> r(c_.size() - 1);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k)
        r[k] = Real(static_cast<unsigned long>(k + 1)) * c_[k + 1];
    return Jet(std::move(r));
}

Jet pow(const Jet& f, const Real& e)
{
    std::size_t n = f.length();
    if (n == 0)
        return Jet();
    const Real& f0 = f[0];
    if (f0 == 0)
        throw PoleAtPoint("power series of a function vanishing at the expansion point");
    if (f0 < 0 && e != floor(e))
        throw DomainError("non-integer power of a negative value");
    std::vector<Real> g(n);
    g[0] = pow(f0, e);
    // k f0 g_k = sum_{j=1..k} (e j - (k - j)) f_j g_{k-j}
    for (std::size_t k = 1; k < n; ++k) {
        Real acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            Real w = e * Real(static_cast<unsigned long>(j)) - Real(static_cast<unsigned long>(k - j));
            acc += w * f[j] * g[k - j];
        }
        g[k] = acc / (Real(static_cast<unsigned long>(k)) * f0);
    }
    return Jet(std::move(g));
}

} // namespace lissajous
