#include "rational.hpp"

#include <sstream>

namespace anomalab {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InvalidArgument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw InvalidArgument("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed rational literal: " + s);
    }
}

Rational factorial(int n) {
    if (n < 0) throw InvalidArgument("factorial of negative integer");
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    os << "(" << rational_to_string(g.re) << (g.im < 0 ? "" : "+") << rational_to_string(g.im)
       << "i)";
    return os;
}

std::ostream& operator<<(std::ostream& os, const PiCoeff& c) {
    os << c.factor;
    if (c.pi_pow != 0) os << "*pi^" << c.pi_pow;
    return os;
}

} // namespace anomalab
