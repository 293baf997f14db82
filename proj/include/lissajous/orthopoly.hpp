#ifndef LISSAJOUS_ORTHOPOLY_HPP
#define LISSAJOUS_ORTHOPOLY_HPP

#include "lissajous/polynomial.hpp"
#include "lissajous/rational.hpp"

namespace lissajous {

// generalized binomial coefficient binom(top, k) for any scalar top
template <class T>
T binomial(const T& top, int k)
{
    return falling<T>(top, k) / factorialRatio<T>(k, 0);
}

// Jacobi polynomial from the explicit two-sided binomial sum
//   P_n^(a,b)(x) = sum_k binom(n+a, n-k) binom(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)
// valid for negative parameters as well.
template <class T>
Polynomial<T> jacobi(int n, const T& a, const T& b)
{
    using P = Polynomial<T>;
    T half = T(1) / T(2);
    P minus(std::vector<T>{-half, half});
    P plus(std::vector<T>{half, half});
    P result;
    for (int k = 0; k <= n; ++k) {
        T coeff = binomial<T>(a + T(n), n - k) * binomial<T>(b + T(n), k);
        if (coeff == 0)
            continue;
        P term(coeff);
        for (int i = 0; i < k; ++i)
            term *= minus;
        for (int i = 0; i < n - k; ++i)
            term *= plus;
        result += term;
    }
    return result;
}

// C_n^(l)(x) = sum_k (-1)^k (l)_{n-k} / (k! (n-2k)!) (2x)^(n-2k)
template <class T>
Polynomial<T> gegenbauer(int n, const T& l)
{
    std::vector<T> c(n + 1, T(0));
    for (int k = 0; 2 * k <= n; ++k) {
        T term = rising<T>(l, n - k) / (factorialRatio<T>(k, 0) * factorialRatio<T>(n - 2 * k, 0));
        for (int i = 0; i < n - 2 * k; ++i)
            term *= T(2);
        c[n - 2 * k] = k % 2 == 0 ? term : T(-term);
    }
    return Polynomial<T>(std::move(c));
}

// p(-x)
template <class T>
Polynomial<T> reflect(const Polynomial<T>& p)
{
    std::vector<T> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return Polynomial<T>(std::move(c));
}

// p(1 - 2x^2), i.e. p(-cos 2t) written in c = cos t
template <class T>
Polynomial<T> inDoubleAngle(const Polynomial<T>& p)
{
    return p.compose(Polynomial<T>(std::vector<T>{T(1), T(0), T(-2)}));
}

} // namespace lissajous

#endif
