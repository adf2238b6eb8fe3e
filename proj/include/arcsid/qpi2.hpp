#pragma once

#include <string>

#include "arcsid/errors.hpp"
#include "arcsid/rational.hpp"

namespace arcsid {

// Element of the 2-dimensional rational vector space spanned by 1 and pi^2:
// values of the form r + p*pi^2 with r, p rational. Addition and subtraction
// are componentwise. Multiplication is restricted: the product of two elements
// whose pi^2 parts are both nonzero would carry a pi^4 term, which has no slot
// here, so that case throws ("degree overflow"). Division is only by nonzero
// rationals. This is exactly enough structure to evaluate trigamma values at
// half-integers and the brackets built from them, while making any accidental
// escape from the space a hard error instead of a silent wrong answer.
class QPi2 {
public:
    QPi2() = default;
    QPi2(Rat rational_part, Rat pi2_part)
        : r_(std::move(rational_part)), p_(std::move(pi2_part)) {}
    QPi2(const Rat& rational_part) : r_(rational_part) {}  // NOLINT
    QPi2(int n) : r_(n) {}                                 // NOLINT
    QPi2(long long n) : r_(n) {}                           // NOLINT

    static QPi2 pi2() { return QPi2(Rat(0), Rat(1)); }

    const Rat& rational_part() const { return r_; }
    const Rat& pi2_part() const { return p_; }

    bool is_rational() const { return p_.is_zero(); }
    bool is_zero() const { return r_.is_zero() && p_.is_zero(); }

    QPi2 operator-() const { return QPi2(-r_, -p_); }

    QPi2& operator+=(const QPi2& o) { r_ += o.r_; p_ += o.p_; return *this; }
    QPi2& operator-=(const QPi2& o) { r_ -= o.r_; p_ -= o.p_; return *this; }

    QPi2& operator*=(const QPi2& o) {
        if (!p_.is_zero() && !o.p_.is_zero()) {
            throw arith_error("degree overflow: (" + to_string_of(*this) + ") * (" +
                              to_string_of(o) + ") leaves the pi^2 space");
        }
        // (r + p*pi^2)(r' + p'*pi^2) with p*p' = 0:
        Rat r = r_ * o.r_;
        Rat p = r_ * o.p_ + p_ * o.r_;
        r_ = std::move(r);
        p_ = std::move(p);
        return *this;
    }

    QPi2& operator/=(const Rat& d) {
        if (d.is_zero()) {
            throw arith_error("division by zero: (" + to_string_of(*this) + ") / 0");
        }
        r_ /= d;
        p_ /= d;
        return *this;
    }

    friend QPi2 operator+(QPi2 a, const QPi2& b) { a += b; return a; }
    friend QPi2 operator-(QPi2 a, const QPi2& b) { a -= b; return a; }
    friend QPi2 operator*(QPi2 a, const QPi2& b) { a *= b; return a; }
    friend QPi2 operator/(QPi2 a, const Rat& d) { a /= d; return a; }

    friend QPi2 operator*(const Rat& s, QPi2 a) {
        a *= QPi2(s);
        return a;
    }
    friend QPi2 operator*(QPi2 a, const Rat& s) {
        a *= QPi2(s);
        return a;
    }

    friend bool operator==(const QPi2& a, const QPi2& b) {
        return a.r_ == b.r_ && a.p_ == b.p_;
    }
    friend bool operator!=(const QPi2& a, const QPi2& b) { return !(a == b); }

private:
    static std::string to_string_of(const QPi2& v);

    Rat r_;
    Rat p_;
};

// Pure rationals print as plain rationals; anything with a pi^2 component
// prints as "r + p*pi^2" (the joining "+" is literal, signs live on the
// components: "-4 + 1/2*pi^2", "0 + -1*pi^2").
inline std::string to_string(const QPi2& v) {
    if (v.pi2_part().is_zero()) return to_string(v.rational_part());
    return to_string(v.rational_part()) + " + " + to_string(v.pi2_part()) + "*pi^2";
}

inline std::string QPi2::to_string_of(const QPi2& v) { return to_string(v); }

}  // namespace arcsid
