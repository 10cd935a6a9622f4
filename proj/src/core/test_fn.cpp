#include "test_fn.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace anomalab {

namespace {

// Support-edge guard: inside but this close to the edge the bump value
// underflows anyway, and the series 1/(1-u^2) loses all accuracy.
constexpr double kEdgeMargin = 1e-9;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

} // namespace

TestFn::TestFn(std::string id, double support_radius, int max_order, Smoothness smoothness,
               std::function<TSeries(double, int)> jet)
    : id_(std::move(id)),
      support_(support_radius),
      max_order_(max_order),
      smoothness_(smoothness),
      jet_(std::move(jet)) {}

double TestFn::deriv(double x, int k) const {
    if (k < 0 || k > max_order_)
        throw InvalidArgument("TestFn '" + id_ + "': derivative order " + std::to_string(k) +
                              " not available (max " + std::to_string(max_order_) + ")");
    if (std::abs(x) >= support_ * (1.0 - kEdgeMargin)) return 0.0;
    return jet_(x, k).derivative(static_cast<std::size_t>(k));
}

TestFn TestFn::translated(double shift) const {
    auto jet = jet_;
    return TestFn(id_ + "@" + std::to_string(shift), support_ + std::abs(shift), max_order_,
                  smoothness_, [jet, shift](double x, int k) { return jet(x - shift, k); });
}

TestFn TestFn::arg_scaled(double s) const {
    if (s <= 0.0) throw InvalidArgument("TestFn::arg_scaled: scale must be positive");
    auto jet = jet_;
    // d^k/dx^k phi(x/s) = s^-k phi^{(k)}(x/s); fold into the series coefficients.
    return TestFn(id_ + "/" + std::to_string(s), support_ * s, max_order_, smoothness_,
                  [jet, s](double x, int k) {
                      TSeries t = jet(x / s, k);
                      TSeries r(static_cast<std::size_t>(k));
                      double f = 1.0;
                      for (int j = 0; j <= k; ++j) {
                          r.at(j) = t[j] * f;
                          f /= s;
                      }
                      return r;
                  });
}

TestFn TestFn::bump(double radius) {
    return TestFn("bump", radius, 64, Smoothness::c_infinity, [radius](double x, int k) {
        auto ord = static_cast<std::size_t>(k);
        TSeries u = TSeries::variable(x / radius, ord) * (1.0 / radius);
        // exp(1 - 1/(1-(x/R)^2))
        return exp(1.0 - 1.0 / (1.0 - u * u));
    });
}

TestFn TestFn::skew_bump(double radius) {
    return TestFn("skew_bump", radius, 64, Smoothness::c_infinity, [radius](double x, int k) {
        auto ord = static_cast<std::size_t>(k);
        TSeries u = TSeries::variable(x / radius, ord) * (1.0 / radius);
        return (1.0 + u) * exp(1.0 - 1.0 / (1.0 - u * u));
    });
}

TestFn TestFn::odd_bump(double radius) {
    return TestFn("odd_bump", radius, 64, Smoothness::c_infinity, [radius](double x, int k) {
        auto ord = static_cast<std::size_t>(k);
        TSeries u = TSeries::variable(x / radius, ord) * (1.0 / radius);
        return u * u * u * exp(1.0 - 1.0 / (1.0 - u * u));
    });
}

TestFn TestFn::poly_bump(int m, double radius) {
    if (m < 2) throw InvalidArgument("poly_bump: exponent must be >= 2");
    return TestFn("poly_bump" + std::to_string(m), radius, m - 1, Smoothness::c_k,
                  [radius, m](double x, int k) {
                      auto ord = static_cast<std::size_t>(k);
                      TSeries u = TSeries::variable(x / radius, ord) * (1.0 / radius);
                      TSeries base = 1.0 - u * u;
                      TSeries r = TSeries::constant(1.0, ord);
                      for (int j = 0; j < m; ++j) r = r * base;
                      return r;
                  });
}

TestFn TestFn::by_name(const std::string& name) {
    auto parts = split(name, ':');
    const std::string& base = parts[0];
    if (base == "bump" || base == "skew_bump" || base == "odd_bump") {
        double r = parts.size() > 1 ? std::stod(parts[1]) : 1.0;
        if (r <= 0) throw InvalidArgument("test function radius must be positive: " + name);
        if (base == "bump") return bump(r);
        if (base == "skew_bump") return skew_bump(r);
        return odd_bump(r);
    }
    if (base == "poly_bump") {
        if (parts.size() < 2) throw InvalidArgument("poly_bump requires an exponent: " + name);
        int m = std::stoi(parts[1]);
        double r = parts.size() > 2 ? std::stod(parts[2]) : 1.0;
        return poly_bump(m, r);
    }
    throw InvalidArgument("unknown test function: " + name);
}

RadialTestFn::RadialTestFn(std::string id, double support_radius,
                           std::function<TSeries(double, int)> jet_in_r2)
    : id_(std::move(id)), support_(support_radius), jet_(std::move(jet_in_r2)) {}

TSeries RadialTestFn::g_jet(double r, int order) const {
    return jet_(r * r, order);
}

double RadialTestFn::operator()(double r) const {
    if (r >= support_ * (1.0 - kEdgeMargin)) return 0.0;
    return g_jet(r, 0).value();
}

double RadialTestFn::d1(double r) const {
    if (r >= support_ * (1.0 - kEdgeMargin)) return 0.0;
    // phi'(r) = 2 r g'(r^2)
    return 2.0 * r * g_jet(r, 1).derivative(1);
}

double RadialTestFn::d2(double r) const {
    if (r >= support_ * (1.0 - kEdgeMargin)) return 0.0;
    TSeries g = g_jet(r, 2);
    return 2.0 * g.derivative(1) + 4.0 * r * r * g.derivative(2);
}

double RadialTestFn::laplacian(double r, int n) const {
    if (r >= support_ * (1.0 - kEdgeMargin)) return 0.0;
    TSeries g = g_jet(r, 2);
    return 2.0 * n * g.derivative(1) + 4.0 * r * r * g.derivative(2);
}

RadialTestFn RadialTestFn::rbump(double radius) {
    double r2 = radius * radius;
    return RadialTestFn("rbump:" + std::to_string(radius), radius, [r2](double u, int k) {
        auto ord = static_cast<std::size_t>(k);
        if (u >= r2 * (1.0 - kEdgeMargin)) return TSeries(ord, 0.0);
        TSeries s = TSeries::variable(u / r2, ord) * (1.0 / r2);
        return exp(1.0 - 1.0 / (1.0 - s));
    });
}

RadialTestFn RadialTestFn::rpoly(int m, double radius) {
    if (m < 3) throw InvalidArgument("rpoly: exponent must be >= 3 for a C^2 profile");
    double r2 = radius * radius;
    return RadialTestFn("rpoly" + std::to_string(m) + ":" + std::to_string(radius), radius,
                        [r2, m](double u, int k) {
                            auto ord = static_cast<std::size_t>(k);
                            if (u >= r2) return TSeries(ord, 0.0);
                            TSeries s = TSeries::variable(u / r2, ord) * (1.0 / r2);
                            TSeries base = 1.0 - s;
                            TSeries r = TSeries::constant(1.0, ord);
                            for (int j = 0; j < m; ++j) r = r * base;
                            return r;
                        });
}

RadialTestFn RadialTestFn::by_name(const std::string& name) {
    auto parts = split(name, ':');
    const std::string& base = parts[0];
    if (base == "rbump") {
        double r = parts.size() > 1 ? std::stod(parts[1]) : 1.0;
        return rbump(r);
    }
    if (base == "rpoly") {
        if (parts.size() < 2) throw InvalidArgument("rpoly requires an exponent: " + name);
        int m = std::stoi(parts[1]);
        double r = parts.size() > 2 ? std::stod(parts[2]) : 1.0;
        return rpoly(m, r);
    }
    throw InvalidArgument("unknown radial test function: " + name);
}

std::vector<RadialTestFn> RadialTestFn::standard_family() {
    return {rbump(1.0), rbump(0.7), rpoly(3, 1.0), rpoly(4, 1.3), rpoly(5, 0.9), rpoly(6, 1.1)};
}

double sphere_area(int n) {
    if (n < 1) throw InvalidArgument("sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

} // namespace anomalab
