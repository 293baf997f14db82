#ifndef LISSAJOUS_POLYNOMIAL_HPP
#define LISSAJOUS_POLYNOMIAL_HPP

#include "lissajous/errors.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lissajous {

// Dense univariate polynomial, coefficients stored from the constant term up.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(T constant) : c_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Polynomial monomial(const T& coefficient, int degree)
    {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = coefficient;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(T(1), 1); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }

    T operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }
    const std::vector<T>& coefficients() const { return c_; }

    T operator()(const T& x) const
    {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.isZero() || b.isZero())
            return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, Polynomial p)
    {
        if (s == 0)
            return Polynomial();
        for (auto& a : p.c_)
            a *= s;
        return p;
    }
    friend Polynomial operator/(Polynomial p, const T& s)
    {
        if (s == 0)
            throw ZeroDenominator("polynomial divided by zero");
        for (auto& a : p.c_)
            a /= s;
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // multiply by x^k
    Polynomial shifted(int k) const
    {
        if (isZero())
            return *this;
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return Polynomial();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    // p(q(x))
    Polynomial compose(const Polynomial& q) const
    {
        Polynomial r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * q + Polynomial(*it);
        return r;
    }

    Polynomial monic() const
    {
        if (isZero())
            return *this;
        return *this / leading();
    }

    // Euclidean division over a field: *this = q*d + r
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.isZero())
            throw ZeroDenominator("polynomial division by zero polynomial");
        Polynomial r = *this;
        int dd = d.degree();
        if (r.degree() < dd)
            return {Polynomial(), r};
        std::vector<T> q(r.degree() - dd + 1, T(0));
        const T& lead = d.leading();
        while (!r.isZero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            T f = r.leading() / lead;
            q[k] = f;
            for (int i = 0; i <= dd; ++i)
                r.c_[i + k] -= f * d.c_[i];
            r.c_.pop_back();
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    bool divides(const Polynomial& p) const { return p.divmod(*this).second.isZero(); }

    std::string toString(const std::string& var = "x") const
    {
        if (isZero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            T a = c_[i];
            if (a == 0)
                continue;
            bool negative = a < 0;
            if (negative)
                a = -a;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (i == 0 || a != 1) {
                os << a;
                if (i > 0)
                    os << "*";
            }
            if (i >= 1)
                os << var;
            if (i > 1)
                os << "^" << i;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.isZero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace lissajous

#endif
