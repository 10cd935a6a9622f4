#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace anomalab {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// "p/q" (or plain "p"); used by JSON serialization and the C API.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Complex number with exact rational real/imaginary parts.
struct Gaussian {
    Rational re{0};
    Rational im{0};

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r) {}
    Gaussian(long r, long i) : re(r), im(i) {}

    static Gaussian i() { return Gaussian{0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian operator/(const Gaussian& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw InvalidArgument("Gaussian: division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
};

inline Gaussian operator*(const Rational& s, const Gaussian& g) { return Gaussian{s} * g; }

// Exact coefficient of the form (complex rational) * pi^pi_pow. Sums are only
// formed between equal pi powers (zero absorbs anything), which is all the
// Fourier-side and classical-part bookkeeping needs.
struct PiCoeff {
    Gaussian factor;
    int pi_pow = 0;

    PiCoeff() = default;
    PiCoeff(Gaussian f, int p = 0) : factor(std::move(f)), pi_pow(p) {}

    bool is_zero() const { return factor.is_zero(); }

    PiCoeff operator-() const { return {-factor, pi_pow}; }
    PiCoeff operator*(const PiCoeff& o) const { return {factor * o.factor, pi_pow + o.pi_pow}; }
    PiCoeff operator*(const Gaussian& g) const { return {factor * g, pi_pow}; }
    PiCoeff operator+(const PiCoeff& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_pow != o.pi_pow)
            throw InvalidArgument("PiCoeff: sum of distinct pi powers is not representable");
        return {factor + o.factor, pi_pow};
    }
    bool operator==(const PiCoeff& o) const {
        if (is_zero() && o.is_zero()) return true;
        return factor == o.factor && pi_pow == o.pi_pow;
    }
};

inline std::complex<double> to_complex(const Gaussian& g) {
    return {to_double(g.re), to_double(g.im)};
}

inline std::complex<double> to_complex(const PiCoeff& c) {
    double p = 1.0;
    int n = c.pi_pow;
    for (; n > 0; --n) p *= std::numbers::pi;
    for (; n < 0; ++n) p /= std::numbers::pi;
    return to_complex(c.factor) * p;
}

Rational factorial(int n);

std::ostream& operator<<(std::ostream& os, const Gaussian& g);
std::ostream& operator<<(std::ostream& os, const PiCoeff& c);

} // namespace anomalab
