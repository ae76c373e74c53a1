#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).
//
// Every identity the engine checks is an exact equality, so scalars carry
// arbitrary-precision rational real and imaginary parts.  The canonical
// form (reduced fractions, positive denominators) is maintained by
// boost::multiprecision::cpp_rational, which makes equality structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mhcq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(int n) : re(n) {}
    Scalar(long long n) : re(n) {}
    explicit Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar inverse() const {
        if (is_zero()) throw ScalarError("division by zero scalar");
        Rational n = re * re + im * im;  // norm, nonzero
        return Scalar(re / n, -im / n);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend Scalar conj(const Scalar& x) { return Scalar(x.re, -x.im); }

    // Integer power; negative exponents invert first.
    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1);
        Scalar base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
};

namespace detail {

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace detail

// Wire format: RAT ( (+|-) RAT "i" )?  with RAT = INT ("/" POSINT)?
inline std::string to_string(const Scalar& x) {
    if (x.im == 0) return detail::rational_str(x.re);
    std::string s = detail::rational_str(x.re);
    if (x.im < 0) {
        s += "-" + detail::rational_str(-x.im) + "i";
    } else {
        s += "+" + detail::rational_str(x.im) + "i";
    }
    return s;
}

namespace detail {

// Parses RAT starting at pos; advances pos past it.
inline Rational parse_rat(std::string_view text, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    size_t digits_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_begin)
        throw ScalarError("malformed scalar literal: expected digits at offset " +
                          std::to_string(start));
    Integer num(std::string(text.substr(digits_begin, pos - digits_begin)));
    if (neg) num = -num;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin)
            throw ScalarError("malformed scalar literal: expected denominator digits");
        Integer den(std::string(text.substr(den_begin, pos - den_begin)));
        if (den == 0) throw ScalarError("zero denominator in scalar literal");
        return Rational(num, den);
    }
    return Rational(num);
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
    size_t pos = 0;
    Rational re = detail::parse_rat(text, pos);
    if (pos == text.size()) return Scalar(std::move(re));
    char sign = text[pos];
    if (sign != '+' && sign != '-')
        throw ScalarError("malformed scalar literal: unexpected character at offset " +
                          std::to_string(pos));
    ++pos;
    Rational im = detail::parse_rat(text, pos);
    if (sign == '-') im = -im;
    if (pos == text.size() || text[pos] != 'i')
        throw ScalarError("malformed scalar literal: expected trailing 'i'");
    ++pos;
    if (pos != text.size())
        throw ScalarError("malformed scalar literal: trailing characters");
    return Scalar(std::move(re), std::move(im));
}

}  // namespace mhcq
