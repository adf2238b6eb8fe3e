#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "arcsid/errors.hpp"

namespace arcsid {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator. Thin wrapper over boost cpp_rational that adds sign
// normalization on construction and checked division (the backend's own
// divide-by-zero throw carries no operand context).
class Rat {
public:
    using backend = boost::multiprecision::cpp_rational;

    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rat(long long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rat(const BigInt& n) : v_(n) {}       // NOLINT(google-explicit-constructor)

    Rat(BigInt num, BigInt den) {
        if (den == 0) {
            throw arith_error("rational with zero denominator: " + num.str() + "/0");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = backend(num, den);
    }

    explicit Rat(backend v) : v_(std::move(v)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }

    const backend& raw() const { return v_; }

    Rat operator-() const { return Rat(backend(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) {
            throw arith_error("division by zero: (" + to_string_impl(v_) +
                              ") / (" + to_string_impl(o.v_) + ")");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.convert_to<double>(); }

private:
    static std::string to_string_impl(const backend& v) {
        BigInt n = boost::multiprecision::numerator(v);
        BigInt d = boost::multiprecision::denominator(v);
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    backend v_;
};

// "num" when the value is an integer, "num/den" otherwise; denominator always
// positive, sign on the numerator.
inline std::string to_string(const Rat& r) {
    BigInt n = r.num();
    BigInt d = r.den();
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Integer power with the usual 0^0 = 1 convention; a negative exponent
// requires a nonzero base.
inline Rat pow(const Rat& base, long long exp) {
    if (exp < 0) {
        if (base.is_zero()) {
            throw arith_error("zero raised to negative exponent " + std::to_string(exp));
        }
        return Rat(1) / pow(base, -exp);
    }
    Rat result(1);
    Rat b = base;
    unsigned long long e = static_cast<unsigned long long>(exp);
    while (e > 0) {
        if (e & 1ULL) result *= b;
        b *= b;
        e >>= 1ULL;
    }
    return result;
}

// Integer power of a BigInt, exponent >= 0.
inline BigInt ipow(BigInt base, unsigned long long exp) {
    BigInt result(1);
    while (exp > 0) {
        if (exp & 1ULL) result *= base;
        base *= base;
        exp >>= 1ULL;
    }
    return result;
}

}  // namespace arcsid
