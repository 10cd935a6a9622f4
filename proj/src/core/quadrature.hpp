#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <string>

#include "errors.hpp"

namespace anomalab {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 52;
    // Initial uniform split of the interval; keeps the adaptive error estimate
    // honest on integrands with separated features.
    int initial_panels = 8;
};

// Default absolute tolerance, overridable via the ANOMALAB_QUAD_TOL
// environment variable.
double default_quad_tol();

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
};

// Adaptive composite 15-point Gauss-Legendre on [a,b]. Panels are bisected
// until the whole-vs-halves discrepancy meets the local error budget.
// Throws QuadratureFailure if the budget cannot be met within max_depth.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureOptions& opt = {});

QuadResultC integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                      const QuadratureOptions& opt = {});

// Single fixed-order Gauss-Legendre panel (no adaptivity, no error control).
double gauss_panel(const std::function<double(double)>& f, double a, double b);
std::complex<double> gauss_panel(const std::function<std::complex<double>(double)>& f, double a,
                                 double b);

} // namespace anomalab
