#include "lissajous/space.hpp"

#include "lissajous/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lissajous {

namespace {

template <class Op>
SampledFunction zipWith(const SampledFunction& a, const SampledFunction& b, Op op)
{
    if (a.size() != b.size())
        throw IncompatibleVariables("sampled functions on different point sets");
    std::vector<Jet> r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.push_back(op(a[i], b[i]));
    return SampledFunction(std::move(r));
}

} // namespace

SampledFunction SampledFunction::operator-() const
{
    std::vector<Jet> r;
    r.reserve(jets_.size());
    for (const auto& j : jets_)
        r.push_back(-j);
    return SampledFunction(std::move(r));
}

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b)
{
    return zipWith(a, b, [](const Jet& x, const Jet& y) { return x + y; });
}

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b)
{
    return zipWith(a, b, [](const Jet& x, const Jet& y) { return x - y; });
}

SampledFunction operator*(const SampledFunction& a, const SampledFunction& b)
{
    return zipWith(a, b, [](const Jet& x, const Jet& y) { return x * y; });
}

SampledFunction operator/(const SampledFunction& a, const SampledFunction& b)
{
    return zipWith(a, b, [](const Jet& x, const Jet& y) { return x / y; });
}

SampledFunction operator*(const Real& s, const SampledFunction& a)
{
    std::vector<Jet> r;
    r.reserve(a.size());
    for (const auto& j : a.jets())
        r.push_back(s * j);
    return SampledFunction(std::move(r));
}

SampledSpace::SampledSpace(Variable v, std::vector<Real> points, std::size_t jetLength, Real tolerance)
    : var_(v), length_(jetLength), tol_(std::move(tolerance)), log_(std::make_shared<ResidualLog>())
{
    std::vector<Jet> s, c;
    for (const auto& x : points) {
        s.push_back(Jet::sinAt(x, length_));
        c.push_back(Jet::cosAt(x, length_));
    }
    points_ = std::make_shared<const std::vector<Real>>(std::move(points));
    sin_ = std::make_shared<const std::vector<Jet>>(std::move(s));
    cos_ = std::make_shared<const std::vector<Jet>>(std::move(c));
}

SampledSpace SampledSpace::onInterval(Variable v, const Real& lo, const Real& hi, int count,
                                      std::size_t jetLength, const Real& tolerance)
{
    Real g = (sqrt(Real(5)) - 1) / 2;
    std::vector<Real> pts;
    for (int i = 1; i <= count; ++i) {
        Real t = Real(i) * g;
        t -= floor(t);
        pts.push_back(lo + (hi - lo) * t);
    }
    return SampledSpace(v, std::move(pts), jetLength, tolerance);
}

SampledFunction SampledSpace::constant(const Real& v) const
{
    return SampledFunction(std::vector<Jet>(points_->size(), Jet::constant(v, length_)));
}

SampledFunction SampledSpace::sinPower(const Real& a) const
{
    std::vector<Jet> r;
    for (const auto& j : *sin_)
        r.push_back(pow(j, a));
    return SampledFunction(std::move(r));
}

SampledFunction SampledSpace::cosPower(const Real& b) const
{
    std::vector<Jet> r;
    for (const auto& j : *cos_)
        r.push_back(pow(j, b));
    return SampledFunction(std::move(r));
}

SampledFunction SampledSpace::horner(const Polynomial<Real>& p, const std::vector<Jet>& arg) const
{
    std::vector<Jet> r;
    for (const auto& x : arg) {
        Jet acc = Jet::constant(Real(0), length_);
        for (int k = p.degree(); k >= 0; --k)
            acc = acc * x + Jet::constant(p[k], length_);
        r.push_back(std::move(acc));
    }
    return SampledFunction(std::move(r));
}

SampledFunction SampledSpace::cosPolynomial(const Polynomial<Real>& p) const
{
    return horner(p, *cos_);
}

SampledFunction SampledSpace::sinPolynomial(const Polynomial<Real>& p) const
{
    return horner(p, *sin_);
}

SampledFunction SampledSpace::derivative(const SampledFunction& f) const
{
    std::vector<Jet> r;
    r.reserve(f.size());
    for (const auto& j : f.jets())
        r.push_back(j.derivative());
    return SampledFunction(std::move(r));
}

bool SampledSpace::isZero(const SampledFunction& f) const
{
    Real worst = 0;
    for (const auto& j : f.jets())
        worst = std::max(worst, Real(abs(j.value())));
    log_->record(worst, worst <= tol_);
    return worst <= tol_;
}

std::optional<Real> SampledSpace::ratio(const SampledFunction& f, const SampledFunction& g) const
{
    std::size_t best = 0;
    Real gmax = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Real v = abs(g[i].value());
        if (v > gmax) {
            gmax = v;
            best = i;
        }
    }
    if (gmax <= tol_)
        throw ZeroDenominator("proportionality against a function vanishing at every sample point");
    Real r = f[best].value() / g[best].value();
    Real residual = 0, fmax = 0, rgmax = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        residual = std::max(residual, Real(abs(f[i].value() - r * g[i].value())));
        fmax = std::max(fmax, Real(abs(f[i].value())));
        rgmax = std::max(rgmax, Real(abs(r * g[i].value())));
    }
    Real rel = residual / std::max({Real(1), fmax, rgmax});
    log_->record(rel, rel <= tol_);
    if (rel > tol_)
        return std::nullopt;
    return r;
}

bool SampledSpace::same(const Real& a, const Real& b) const
{
    Real scale = std::max({Real(1), Real(abs(a)), Real(abs(b))});
    Real rel = abs(a - b) / scale;
    log_->record(rel, rel <= tol_);
    return rel <= tol_;
}

std::string SampledSpace::describe(const SampledFunction& f) const
{
    std::ostringstream os;
    os << "sampled[" << f.size() << "]";
    if (f.size() > 0)
        os << " f(x0)=" << toString(f[0].value(), 20);
    return os.str();
}

} // namespace lissajous
