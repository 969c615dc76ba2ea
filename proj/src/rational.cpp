#include "latticecf/rational.hpp"

#include "latticecf/errors.hpp"

namespace latticecf {

Rational::Rational(Integer n, Integer d) {
    if (d == 0)
        fail(ErrorKind::division_by_zero, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Integer g = gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

Rational Rational::reciprocal() const {
    if (num_ == 0)
        fail(ErrorKind::division_by_zero, "reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
        fail(ErrorKind::division_by_zero, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer n = parse_integer(text.substr(0, slash));
    Integer d = parse_integer(text.substr(slash + 1));
    if (d == 0)
        fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace latticecf
