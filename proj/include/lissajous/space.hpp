#ifndef LISSAJOUS_SPACE_HPP
#define LISSAJOUS_SPACE_HPP

#include "lissajous/jet.hpp"
#include "lissajous/trig_function.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lissajous {

// Function spaces used by the generic model code. Both expose the same
// vocabulary: elementary functions, derivative, proportionality test.

struct ExactSpace {
    using Scalar = Rational;
    using Function = QuasiTrigFunction;

    Variable variable = Variable::Phi;

    Function zero() const { return Function(variable); }
    Function constant(const Scalar& v) const { return Function::constant(variable, v); }
    Function sinPower(const Scalar& a) const { return Function::monomial(variable, a, 0); }
    Function cosPower(const Scalar& b) const { return Function::monomial(variable, 0, b); }
    Function sin() const { return sinPower(1); }
    Function cos() const { return cosPower(1); }
    Function cosPolynomial(const Polynomial<Scalar>& p) const { return Function::fromCos(variable, p); }
    Function sinPolynomial(const Polynomial<Scalar>& p) const { return Function::fromSin(variable, p); }
    Function derivative(const Function& f) const { return differentiate(f); }

    bool isZero(const Function& f) const { return f.isZero(); }
    std::optional<Scalar> ratio(const Function& f, const Function& g) const { return tryProportionality(f, g); }
    bool same(const Scalar& a, const Scalar& b) const { return a == b; }
    bool isZeroScalar(const Scalar& a) const { return a == 0; }
    std::string describe(const Function& f) const { return f.toString(); }
};

class SampledFunction {
public:
    SampledFunction() = default;
    explicit SampledFunction(std::vector<Jet> jets) : jets_(std::move(jets)) {}

    std::size_t size() const { return jets_.size(); }
    const Jet& operator[](std::size_t i) const { return jets_[i]; }
    const std::vector<Jet>& jets() const { return jets_; }

    SampledFunction operator-() const;
    friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
    friend SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);
    friend SampledFunction operator*(const SampledFunction& a, const SampledFunction& b);
    friend SampledFunction operator/(const SampledFunction& a, const SampledFunction& b);
    friend SampledFunction operator*(const Real& s, const SampledFunction& a);

private:
    std::vector<Jet> jets_;
};

// Largest residual among accepted zero/proportionality decisions, and the
// number of decisions rejected (a rejection is either a failed check or a
// probe such as grouping terms by proportional factors).
struct ResidualLog {
    Real worst = 0;
    long accepted = 0;
    long rejected = 0;
    void record(const Real& r, bool ok)
    {
        if (!ok) {
            ++rejected;
            return;
        }
        ++accepted;
        if (r > worst)
            worst = r;
    }
};

// Collocation space: a function is represented by Taylor jets at fixed
// sample points; equality means agreement at every point within tolerance.
class SampledSpace {
public:
    using Scalar = Real;
    using Function = SampledFunction;

    SampledSpace(Variable v, std::vector<Real> points, std::size_t jetLength, Real tolerance);

    // count points spread over (lo, hi) by the golden-ratio sequence
    static SampledSpace onInterval(Variable v, const Real& lo, const Real& hi, int count,
                                   std::size_t jetLength, const Real& tolerance);

    Variable variable() const { return var_; }
    const std::vector<Real>& points() const { return *points_; }
    const Real& tolerance() const { return tol_; }
    const ResidualLog& residuals() const { return *log_; }

    Function zero() const { return constant(Real(0)); }
    Function constant(const Scalar& v) const;
    Function sinPower(const Scalar& a) const;
    Function cosPower(const Scalar& b) const;
    Function sin() const { return Function(*sin_); }
    Function cos() const { return Function(*cos_); }
    Function cosPolynomial(const Polynomial<Scalar>& p) const;
    Function sinPolynomial(const Polynomial<Scalar>& p) const;
    Function derivative(const Function& f) const;

    bool isZero(const Function& f) const;
    std::optional<Scalar> ratio(const Function& f, const Function& g) const;
    bool same(const Scalar& a, const Scalar& b) const;
    bool isZeroScalar(const Scalar& a) const { return abs(a) <= tol_; }
    std::string describe(const Function& f) const;

private:
    Function horner(const Polynomial<Scalar>& p, const std::vector<Jet>& arg) const;

    Variable var_;
    std::shared_ptr<const std::vector<Real>> points_;
    std::size_t length_;
    Real tol_;
    std::shared_ptr<const std::vector<Jet>> sin_;
    std::shared_ptr<const std::vector<Jet>> cos_;
    std::shared_ptr<ResidualLog> log_;
};

} // namespace lissajous

#endif
