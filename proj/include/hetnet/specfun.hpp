#pragma once

#include <functional>

// Special functions and quadrature used by the moment formulas and the
// goodness-of-fit machinery. All functions are pure and thread-safe.

namespace hetnet::specfun {

// Gamma function for x > 0 (Lanczos, g ~ 7, 9 coefficients).
double gamma_fn(double x);

// log Gamma for x > 0.
double lgamma_fn(double x);

// Modified Bessel function of the first kind, order 0, x >= 0.
// Power series below the crossover, asymptotic expansion above.
double bessel_i0(double x);
// e^{-x} I_0(x); finite for all x >= 0.
double bessel_i0_scaled(double x);

// Kummer's confluent hypergeometric M(a, b, z). Supported domain:
// b > 0 and moderate |z| (the moment formulas use a in (-1/2, 0),
// b = 1, z <= 0). Negative z is evaluated through the Kummer
// transform so the series has positive terms.
double hyp1f1(double a, double b, double z);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

// Upper regularized incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
// b may be +infinity: the tail is mapped through x = a + t/(1-t).
// Throws std::runtime_error if the subdivision limit is hit before
// the error estimate drops below tol.
double quad(const std::function<double(double)>& f, double a, double b,
            double tol = 1e-10);

// Survival function of the Kolmogorov distribution: P(K > x).
double kolmogorov_q(double x);

}  // namespace hetnet::specfun
