#ifndef LISSAJOUS_BIVAR_HPP
#define LISSAJOUS_BIVAR_HPP

#include "lissajous/polynomial.hpp"
#include "lissajous/rational.hpp"
#include "lissajous/real.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace lissajous {

// Polynomial in two commuting variables (x, y): sum of c_ij x^i y^j.
template <class T>
class BivarPoly {
public:
    using Exponents = std::pair<int, int>;

    BivarPoly() = default;
    BivarPoly(const T& constant) { set(0, 0, constant); }

    static BivarPoly x(int power = 1) { return monomial(T(1), power, 0); }
    static BivarPoly y(int power = 1) { return monomial(T(1), 0, power); }
    static BivarPoly monomial(const T& c, int i, int j)
    {
        BivarPoly p;
        p.set(i, j, c);
        return p;
    }
    // p(y) embedded as a polynomial in y only
    static BivarPoly inY(const Polynomial<T>& q)
    {
        BivarPoly p;
        for (int j = 0; j <= q.degree(); ++j)
            p.set(0, j, q[j]);
        return p;
    }

    const std::map<Exponents, T>& terms() const { return c_; }
    bool isZero() const { return c_.empty(); }
    T coefficient(int i, int j) const
    {
        auto it = c_.find({i, j});
        return it == c_.end() ? T(0) : it->second;
    }

    int degreeX() const
    {
        int d = -1;
        for (const auto& [e, c] : c_)
            d = std::max(d, e.first);
        return d;
    }
    int degreeY() const
    {
        int d = -1;
        for (const auto& [e, c] : c_)
            d = std::max(d, e.second);
        return d;
    }
    // max over terms of wx*i + wy*j
    int weightedDegree(int wx, int wy) const
    {
        int d = -1;
        for (const auto& [e, c] : c_)
            d = std::max(d, wx * e.first + wy * e.second);
        return d;
    }

    BivarPoly operator-() const
    {
        BivarPoly r;
        for (const auto& [e, c] : c_)
            r.c_.emplace(e, T(-c));
        return r;
    }
    BivarPoly& operator+=(const BivarPoly& o)
    {
        for (const auto& [e, c] : o.c_)
            set(e.first, e.second, T(coefficient(e.first, e.second) + c));
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o) { return *this += -o; }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b)
    {
        BivarPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                int i = ea.first + eb.first, j = ea.second + eb.second;
                r.set(i, j, T(r.coefficient(i, j) + ca * cb));
            }
        return r;
    }
    friend BivarPoly operator*(const T& s, const BivarPoly& a)
    {
        BivarPoly r;
        for (const auto& [e, c] : a.c_)
            r.set(e.first, e.second, T(s * c));
        return r;
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }

    T operator()(const T& xv, const T& yv) const
    {
        T r(0);
        for (const auto& [e, c] : c_) {
            T term = c;
            for (int i = 0; i < e.first; ++i)
                term *= xv;
            for (int j = 0; j < e.second; ++j)
                term *= yv;
            r += term;
        }
        return r;
    }

    // y -> -y
    BivarPoly reflectY() const
    {
        BivarPoly r;
        for (const auto& [e, c] : c_)
            r.c_.emplace(e, e.second % 2 == 0 ? c : T(-c));
        return r;
    }

    // terms with y-exponent of the given parity, exponents kept
    BivarPoly parityPart(int parity) const
    {
        BivarPoly r;
        for (const auto& [e, c] : c_)
            if (e.second % 2 == parity)
                r.c_.emplace(e, c);
        return r;
    }

    // substitute y^2 -> y; all y-exponents must be even
    BivarPoly halveY() const
    {
        BivarPoly r;
        for (const auto& [e, c] : c_) {
            if (e.second % 2 != 0)
                throw std::invalid_argument("halveY on an odd y power");
            r.c_.emplace(Exponents{e.first, e.second / 2}, c);
        }
        return r;
    }

    // divide by y; every term must contain y
    BivarPoly divideY() const
    {
        BivarPoly r;
        for (const auto& [e, c] : c_) {
            if (e.second == 0)
                throw std::invalid_argument("divideY on a y-free term");
            r.c_.emplace(Exponents{e.first, e.second - 1}, c);
        }
        return r;
    }

    // substitute y -> q(z), giving a polynomial in (x, z)
    BivarPoly composeY(const Polynomial<T>& q) const
    {
        BivarPoly r;
        BivarPoly qz = inY(q);
        std::map<int, BivarPoly> powers;
        powers[0] = BivarPoly(T(1));
        for (const auto& [e, c] : c_) {
            int j = e.second;
            if (!powers.count(j)) {
                int top = powers.rbegin()->first;
                BivarPoly acc = powers.rbegin()->second;
                for (int k = top + 1; k <= j; ++k) {
                    acc = acc * qz;
                    powers[k] = acc;
                }
            }
            r += monomial(c, e.first, 0) * powers[j];
        }
        return r;
    }

    std::string toString(const std::string& xName, const std::string& yName) const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [e, c] = *it;
            os << (first ? "" : " + ") << "(" << lissajous::toString(c) << ")";
            if (e.first > 0)
                os << "*" << xName << "^" << e.first;
            if (e.second > 0)
                os << "*" << yName << "^" << e.second;
            first = false;
        }
        return os.str();
    }

    // one line per monomial: "i j coefficient"
    std::string table() const
    {
        std::ostringstream os;
        for (const auto& [e, c] : c_)
            os << e.first << " " << e.second << " " << lissajous::toString(c) << "\n";
        return os.str();
    }

private:
    void set(int i, int j, const T& c)
    {
        if (c == 0)
            c_.erase({i, j});
        else
            c_[{i, j}] = c;
    }

    std::map<Exponents, T> c_;
};

} // namespace lissajous

#endif
