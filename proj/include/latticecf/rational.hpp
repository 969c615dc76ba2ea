#pragma once

#include "latticecf/integer.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace latticecf {

// Reduced fraction num/den with den >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }

    Integer floor() const { return floor_div(num_, den_); }
    Integer ceil() const { return ceil_div(num_, den_); }

    // Throws division_by_zero for a zero value.
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_, reduced_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    // Accepts "P/Q" or a bare integer. Throws ErrorKind::parse.
    static Rational parse(std::string_view text);

private:
    struct reduced_tag {};
    Rational(Integer n, Integer d, reduced_tag) : num_(std::move(n)), den_(std::move(d)) {}

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace latticecf
