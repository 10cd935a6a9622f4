#include "quadrature.hpp"

namespace anomalab {

namespace {

struct GLNode {
    double x;
    double w;
};

// 15-point Gauss-Legendre rule on [-1,1].
constexpr std::array<GLNode, 15> kGL15{{
    {-0.98799251802048542849, 0.030753241996117268355},
    {-0.93727339240070590431, 0.070366047488108124709},
    {-0.8482065834104272162, 0.10715922046717193501},
    {-0.72441773136017004742, 0.13957067792615431445},
    {-0.57097217260853884754, 0.16626920581699393355},
    {-0.3941513470775633699, 0.18616100001556221103},
    {-0.2011940939974345223, 0.19843148532711157646},
    {0.0, 0.20257824192556127288},
    {0.2011940939974345223, 0.19843148532711157646},
    {0.3941513470775633699, 0.18616100001556221103},
    {0.57097217260853884754, 0.16626920581699393355},
    {0.72441773136017004742, 0.13957067792615431445},
    {0.8482065834104272162, 0.10715922046717193501},
    {0.93727339240070590431, 0.070366047488108124709},
    {0.98799251802048542849, 0.030753241996117268355},
}};

template <typename T>
T panel(const std::function<T(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T sum{};
    for (const auto& n : kGL15) sum += f(mid + half * n.x) * n.w;
    return sum * half;
}

template <typename T>
struct Acc {
    T value{};
    double err = 0.0;
};

template <typename T>
void adapt(const std::function<T(double)>& f, double a, double b, T whole, double tol, int depth,
           const QuadratureOptions& opt, Acc<T>& acc) {
    const double mid = 0.5 * (a + b);
    T left = panel(f, a, mid);
    T right = panel(f, mid, b);
    const double disc = std::abs(whole - (left + right));
    if (disc <= tol || depth >= opt.max_depth) {
        if (disc > tol) {
            throw QuadratureFailure("adaptive quadrature: tolerance " + std::to_string(tol) +
                                    " not met on subinterval [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "] (discrepancy " + std::to_string(disc) +
                                    ")");
        }
        acc.value += left + right;
        acc.err += disc;
        return;
    }
    adapt(f, a, mid, left, 0.5 * tol, depth + 1, opt, acc);
    adapt(f, mid, b, right, 0.5 * tol, depth + 1, opt, acc);
}

template <typename T>
Acc<T> run(const std::function<T(double)>& f, double a, double b, const QuadratureOptions& opt) {
    Acc<T> acc;
    if (a == b) return acc;
    const int p = std::max(1, opt.initial_panels);
    const double h = (b - a) / p;
    for (int i = 0; i < p; ++i) {
        const double lo = a + i * h;
        const double hi = (i + 1 == p) ? b : lo + h;
        T whole = panel(f, lo, hi);
        adapt(f, lo, hi, whole, opt.abs_tol / p, 0, opt, acc);
    }
    return acc;
}

} // namespace

double default_quad_tol() {
    if (const char* s = std::getenv("ANOMALAB_QUAD_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0.0) return v;
    }
    return 1e-10;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureOptions& opt) {
    auto acc = run<double>(f, a, b, opt);
    return {acc.value, acc.err};
}

QuadResultC integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                      const QuadratureOptions& opt) {
    auto acc = run<std::complex<double>>(f, a, b, opt);
    return {acc.value, acc.err};
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    return panel<double>(f, a, b);
}

std::complex<double> gauss_panel(const std::function<std::complex<double>(double)>& f, double a,
                                 double b) {
    return panel<std::complex<double>>(f, a, b);
}

} // namespace anomalab
