#include "taylor.hpp"

#include <algorithm>

namespace anomalab {

TSeries TSeries::operator-() const {
    TSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

TSeries TSeries::operator+(const TSeries& o) const {
    TSeries r(std::max(order(), o.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = (*this)[k] + o[k];
    return r;
}

TSeries TSeries::operator-(const TSeries& o) const {
    TSeries r(std::max(order(), o.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = (*this)[k] - o[k];
    return r;
}

TSeries TSeries::operator*(const TSeries& o) const {
    TSeries r(std::max(order(), o.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += (*this)[j] * o[k - j];
        r.c_[k] = s;
    }
    return r;
}

TSeries TSeries::operator/(const TSeries& o) const {
    if (o[0] == 0.0) throw InvalidArgument("TSeries: division by series with zero constant term");
    TSeries r(std::max(order(), o.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        double s = (*this)[k];
        for (std::size_t j = 1; j <= k; ++j) s -= o[j] * r.c_[k - j];
        r.c_[k] = s / o[0];
    }
    return r;
}

TSeries TSeries::operator+(double s) const {
    TSeries r = *this;
    r.c_[0] += s;
    return r;
}
TSeries TSeries::operator-(double s) const { return *this + (-s); }
TSeries TSeries::operator*(double s) const {
    TSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

TSeries exp(const TSeries& u) {
    TSeries y(u.order());
    y.at(0) = std::exp(u.value());
    for (std::size_t n = 1; n <= u.order(); ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * u[k] * y[n - k];
        y.at(n) = s / static_cast<double>(n);
    }
    return y;
}

TSeries log(const TSeries& u) {
    if (u.value() <= 0.0) throw InvalidArgument("TSeries: log requires positive constant term");
    TSeries y(u.order());
    y.at(0) = std::log(u.value());
    for (std::size_t n = 1; n <= u.order(); ++n) {
        double s = static_cast<double>(n) * u[n];
        for (std::size_t k = 1; k < n; ++k) s -= static_cast<double>(k) * y[k] * u[n - k];
        y.at(n) = s / (static_cast<double>(n) * u.value());
    }
    return y;
}

TSeries pow(const TSeries& u, double q) {
    if (u.value() <= 0.0) throw InvalidArgument("TSeries: pow requires positive constant term");
    TSeries y(u.order());
    y.at(0) = std::pow(u.value(), q);
    for (std::size_t n = 1; n <= u.order(); ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            s += ((q + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * u[k] * y[n - k];
        y.at(n) = s / (static_cast<double>(n) * u.value());
    }
    return y;
}

TSeries sqrt(const TSeries& u) { return pow(u, 0.5); }

} // namespace anomalab
