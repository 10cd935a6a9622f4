#pragma once

#include <map>
#include <string>

#include "rational.hpp"

namespace anomalab {

// Affine argument w = alpha*x + beta*t + gamma of a boundary-value element
// (w + i0)^{-k}. Canonical form: the first nonzero of (alpha, beta) is +-1;
// positive rescalings fold into term coefficients via
// (s w + i0)^{-k} = s^{-k} (w + i0)^{-k}, s > 0. The sign is kept: w = -x is
// the conjugate orientation (one-sided Fourier support on the opposite ray)
// and is a genuinely different element.
struct AffineArg {
    Rational alpha{0};
    Rational beta{0};
    Rational gamma{0};

    AffineArg() = default;
    AffineArg(Rational a, Rational b, Rational g);

    // The positive scale factor s that was divided out during normalization.
    // Callers fold s^{-k} into coefficients.
    static std::pair<AffineArg, Rational> normalized(const Rational& a, const Rational& b,
                                                     const Rational& g);

    bool pure_x() const { return beta == 0; }
    bool operator==(const AffineArg& o) const = default;
    bool operator<(const AffineArg& o) const;

    std::string to_string() const;
};

// Classical decomposition of an algebra element into finite-part and
// delta-derivative pieces: sum of pf[k]*Pf(1/w^k) (k=1 meaning vp(1/w)) and
// delta[j]*delta^{(j)}(w); delta coefficients carry one power of pi.
struct ClassicalPart {
    std::map<int, Gaussian> pf;
    std::map<int, PiCoeff> delta;

    bool operator==(const ClassicalPart& o) const = default;
};

// Finite linear combination of basis elements e_k = (w + i0)^{-k}, k >= 1,
// over one affine argument, with exact complex-rational coefficients. The
// zero expression has an empty term map and compares equal regardless of its
// argument.
class DistExpr {
public:
    DistExpr() = default;

    // c * (alpha x + beta t + gamma + i0)^{-k}; the normalization scale folds
    // into the stored coefficient.
    static DistExpr basis(int k, const Rational& alpha, const Rational& beta,
                          const Rational& gamma, const Gaussian& c = Gaussian{1});
    // e_k on w = x.
    static DistExpr e(int k, const Gaussian& c = Gaussian{1});
    static DistExpr zero() { return DistExpr(); }

    const AffineArg& arg() const { return arg_; }
    const std::map<int, Gaussian>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    DistExpr operator+(const DistExpr& o) const;
    DistExpr operator-(const DistExpr& o) const;
    DistExpr operator-() const;
    DistExpr scaled(const Gaussian& c) const;
    bool operator==(const DistExpr& o) const;

    std::string to_string() const;

private:
    friend DistExpr mul(const DistExpr&, const DistExpr&);
    friend DistExpr diff(const DistExpr&, char);

    AffineArg arg_;
    std::map<int, Gaussian> terms_; // k -> coefficient, no zeros stored

    void insert(int k, const Gaussian& c);
};

// Product in the algebra: bilinear with basis rule e_j * e_k = e_{j+k}.
// Throws ArgMismatch when both operands are nonzero on different arguments.
DistExpr mul(const DistExpr& a, const DistExpr& b);

// u^p by repeated multiplication, p >= 1.
DistExpr pow(const DistExpr& a, int p);

// Derivative in x or t: chain rule through w plus d/dw e_k = -k e_{k+1}.
DistExpr diff(const DistExpr& a, char var);

// e_1 -> vp(1/w) - i pi delta(w); e_{k+1} by formally differentiating the e_1
// decomposition k times and dividing by (-1)^k k!.
ClassicalPart decompose(const DistExpr& a);

// Hoermander wavefront compatibility inside this restricted class: the
// one-sided singular rays must coincide (equal normalized arguments), or one
// factor must be zero (empty wavefront set).
bool hormander_compatible(const DistExpr& a, const DistExpr& b);

} // namespace anomalab
