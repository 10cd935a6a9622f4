#pragma once

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace anomalab {

// Truncated Taylor series in one variable, used to evaluate derivatives of
// closed-form expressions (bumps, (x^2+eps^2)^q, ...) exactly to roundoff.
// Coefficient c[k] is the k-th Taylor coefficient at the expansion point.
class TSeries {
public:
    TSeries() : c_(1, 0.0) {}
    explicit TSeries(std::size_t order, double value = 0.0) : c_(order + 1, 0.0) {
        c_[0] = value;
    }
    static TSeries variable(double x0, std::size_t order) {
        TSeries s(order);
        s.c_[0] = x0;
        if (order >= 1) s.c_[1] = 1.0;
        return s;
    }
    static TSeries constant(double v, std::size_t order) { return TSeries(order, v); }

    std::size_t order() const { return c_.size() - 1; }
    double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
    double& at(std::size_t k) { return c_[k]; }

    // k-th derivative value at the expansion point.
    double derivative(std::size_t k) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
        return (*this)[k] * f;
    }
    double value() const { return c_[0]; }

    TSeries operator-() const;
    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;
    TSeries operator/(const TSeries& o) const;

    TSeries operator+(double s) const;
    TSeries operator-(double s) const;
    TSeries operator*(double s) const;

    friend TSeries operator+(double s, const TSeries& t) { return t + s; }
    friend TSeries operator-(double s, const TSeries& t) { return (-t) + s; }
    friend TSeries operator*(double s, const TSeries& t) { return t * s; }
    friend TSeries operator/(double s, const TSeries& t) {
        return TSeries::constant(s, t.order()) / t;
    }

private:
    std::vector<double> c_;
};

TSeries exp(const TSeries& u);
TSeries log(const TSeries& u);
// u^q for real exponent; requires u(x0) > 0.
TSeries pow(const TSeries& u, double q);
TSeries sqrt(const TSeries& u);

} // namespace anomalab
