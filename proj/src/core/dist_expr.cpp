#include "dist_expr.hpp"

#include <sstream>

#include "errors.hpp"

namespace anomalab {

AffineArg::AffineArg(Rational a, Rational b, Rational g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
    if (alpha == 0 && beta == 0)
        throw InvalidArgument("AffineArg: (alpha, beta) must not both vanish");
}

std::pair<AffineArg, Rational> AffineArg::normalized(const Rational& a, const Rational& b,
                                                     const Rational& g) {
    if (a == 0 && b == 0) throw InvalidArgument("AffineArg: (alpha, beta) must not both vanish");
    Rational lead = (a != 0) ? a : b;
    Rational s = lead < 0 ? Rational(-lead) : lead;
    AffineArg arg;
    arg.alpha = a / s;
    arg.beta = b / s;
    arg.gamma = g / s;
    return {arg, s};
}

bool AffineArg::operator<(const AffineArg& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    if (beta != o.beta) return beta < o.beta;
    return gamma < o.gamma;
}

std::string AffineArg::to_string() const {
    std::ostringstream os;
    os << rational_to_string(alpha) << "*x";
    if (beta != 0) os << (beta < 0 ? "" : "+") << rational_to_string(beta) << "*t";
    if (gamma != 0) os << (gamma < 0 ? "" : "+") << rational_to_string(gamma);
    return os.str();
}

void DistExpr::insert(int k, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DistExpr DistExpr::basis(int k, const Rational& alpha, const Rational& beta, const Rational& gamma,
                         const Gaussian& c) {
    if (k < 1) throw InvalidArgument("DistExpr::basis: order must be >= 1");
    auto [arg, s] = AffineArg::normalized(alpha, beta, gamma);
    DistExpr r;
    r.arg_ = arg;
    // (s w + i0)^{-k} = s^{-k} (w + i0)^{-k}
    Rational sk = 1;
    for (int i = 0; i < k; ++i) sk *= s;
    r.insert(k, c * Gaussian{1 / sk});
    return r;
}

DistExpr DistExpr::e(int k, const Gaussian& c) { return basis(k, 1, 0, 0, c); }

DistExpr DistExpr::operator+(const DistExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (!(arg_ == o.arg_))
        throw ArgMismatch("sum of expressions on different arguments: " + arg_.to_string() +
                          " vs " + o.arg_.to_string());
    DistExpr r = *this;
    for (const auto& [k, c] : o.terms_) r.insert(k, c);
    return r;
}

DistExpr DistExpr::operator-(const DistExpr& o) const { return *this + (-o); }

DistExpr DistExpr::operator-() const {
    DistExpr r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

DistExpr DistExpr::scaled(const Gaussian& c) const {
    if (c.is_zero()) return DistExpr::zero();
    DistExpr r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

bool DistExpr::operator==(const DistExpr& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return arg_ == o.arg_ && terms_ == o.terms_;
}

std::string DistExpr::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*e" << k;
    }
    os << " on w = " << arg_.to_string();
    return os.str();
}

DistExpr mul(const DistExpr& a, const DistExpr& b) {
    if (a.is_zero() || b.is_zero()) return DistExpr::zero();
    if (!(a.arg_ == b.arg_))
        throw ArgMismatch("product undefined: arguments " + a.arg_.to_string() + " and " +
                          b.arg_.to_string() + " carry different singular rays");
    DistExpr r;
    r.arg_ = a.arg_;
    for (const auto& [j, cj] : a.terms_)
        for (const auto& [k, ck] : b.terms_) r.insert(j + k, cj * ck);
    return r;
}

DistExpr pow(const DistExpr& a, int p) {
    if (p < 1) throw InvalidArgument("pow: exponent must be >= 1");
    DistExpr r = a;
    for (int i = 1; i < p; ++i) r = mul(r, a);
    return r;
}

DistExpr diff(const DistExpr& a, char var) {
    if (var != 'x' && var != 't') throw InvalidArgument("diff: variable must be 'x' or 't'");
    if (a.is_zero()) return DistExpr::zero();
    Rational chain = (var == 'x') ? a.arg_.alpha : a.arg_.beta;
    if (chain == 0) return DistExpr::zero();
    DistExpr r;
    r.arg_ = a.arg_;
    for (const auto& [k, c] : a.terms_) r.insert(k + 1, c * Gaussian{-k * chain});
    return r;
}

ClassicalPart decompose(const DistExpr& a) {
    ClassicalPart out;
    for (const auto& [k, c] : a.terms()) {
        out.pf[k] = c;
        // delta^{(k-1)} coefficient: -i pi (-1)^{k-1} / (k-1)!
        Gaussian factor = Gaussian{0, -1} * c;
        if ((k - 1) % 2 != 0) factor = -factor;
        PiCoeff d{factor * Gaussian{1 / factorial(k - 1)}, 1};
        out.delta[k - 1] = d;
    }
    return out;
}

bool hormander_compatible(const DistExpr& a, const DistExpr& b) {
    if (a.is_zero() || b.is_zero()) return true;
    return a.arg() == b.arg();
}

} // namespace anomalab
