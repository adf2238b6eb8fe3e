#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcsid/errors.hpp"
#include "arcsid/rational.hpp"

namespace arcsid {

// Dense truncated formal power series over the rationals. A series of order N
// represents c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N): exactly N known
// coefficients. Binary operations truncate to the smaller order, since beyond
// it the result's coefficients are not determined by the operands. Asking for
// a coefficient at or past the order is an error, never a silent zero.
class TruncSeries {
public:
    explicit TruncSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw series_error("series must have at least one coefficient");
    }

    static TruncSeries constant(const Rat& value, std::size_t order) {
        if (order == 0) throw series_error("series must have at least one coefficient");
        std::vector<Rat> c(order, Rat(0));
        c[0] = value;
        return TruncSeries(std::move(c));
    }

    std::size_t order() const { return c_.size(); }

    const Rat& coeff(std::size_t j) const {
        if (j >= c_.size()) {
            throw series_error("coefficient index " + std::to_string(j) +
                               " out of range for series of order " +
                               std::to_string(c_.size()));
        }
        return c_[j];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    // Termwise d/dx; drops the constant term, so the result has one less
    // coefficient. Needs order >= 2 to leave anything.
    TruncSeries derivative() const {
        if (c_.size() < 2) {
            throw series_error("derivative needs order >= 2, have " +
                               std::to_string(c_.size()));
        }
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j) {
            d[j - 1] = c_[j] * Rat(static_cast<long long>(j));
        }
        return TruncSeries(std::move(d));
    }

    // Termwise antiderivative with constant term 0; gains one coefficient.
    TruncSeries integral() const {
        std::vector<Rat> o(c_.size() + 1, Rat(0));
        for (std::size_t j = 0; j < c_.size(); ++j) {
            o[j + 1] = c_[j] / Rat(static_cast<long long>(j + 1));
        }
        return TruncSeries(std::move(o));
    }

    // x -> c*x substitution: coefficient j picks up a factor c^j.
    TruncSeries arg_scaled(const Rat& factor) const {
        std::vector<Rat> o(c_.size());
        Rat p(1);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            o[j] = c_[j] * p;
            p *= factor;
        }
        return TruncSeries(std::move(o));
    }

    // Multiply by x^k (k > 0) or divide by x^{-k} (k < 0). Division requires
    // the low-order coefficients to vanish. The order shifts with k: both
    // directions preserve exactly the information the operands carry.
    TruncSeries shifted(long long k) const {
        if (k == 0) return *this;
        if (k > 0) {
            std::vector<Rat> o(c_.size() + static_cast<std::size_t>(k), Rat(0));
            for (std::size_t j = 0; j < c_.size(); ++j) {
                o[j + static_cast<std::size_t>(k)] = c_[j];
            }
            return TruncSeries(std::move(o));
        }
        std::size_t drop = static_cast<std::size_t>(-k);
        if (drop >= c_.size()) {
            throw series_error("shift by " + std::to_string(k) +
                               " consumes the whole series of order " +
                               std::to_string(c_.size()));
        }
        for (std::size_t j = 0; j < drop; ++j) {
            if (!c_[j].is_zero()) {
                throw series_error("series not divisible by x^" + std::to_string(drop) +
                                   ": coefficient of x^" + std::to_string(j) + " is " +
                                   arcsid::to_string(c_[j]));
            }
        }
        return TruncSeries(std::vector<Rat>(c_.begin() + static_cast<long long>(drop),
                                            c_.end()));
    }

    // Multiplicative inverse; requires a nonzero constant term. Standard
    // recurrence: t_0 = 1/s_0, t_n = -(1/s_0) * sum_{j=1}^{n} s_j t_{n-j}.
    TruncSeries inverse() const {
        if (c_[0].is_zero()) {
            throw series_error("inverse of series with zero constant term");
        }
        std::vector<Rat> t(c_.size());
        t[0] = Rat(1) / c_[0];
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Rat acc(0);
            for (std::size_t j = 1; j <= n; ++j) {
                acc += c_[j] * t[n - j];
            }
            t[n] = -(acc / c_[0]);
        }
        return TruncSeries(std::move(t));
    }

    // Square root; requires constant term exactly 1 (enough for every series
    // this engine manipulates, and avoids choosing a branch). Recurrence:
    // t_0 = 1, t_n = (s_n - sum_{j=1}^{n-1} t_j t_{n-j}) / 2.
    TruncSeries sqrt() const {
        if (c_[0] != Rat(1)) {
            throw series_error("sqrt requires constant term 1, have " + arcsid::to_string(c_[0]));
        }
        std::vector<Rat> t(c_.size());
        t[0] = Rat(1);
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Rat acc(0);
            for (std::size_t j = 1; j < n; ++j) {
                acc += t[j] * t[n - j];
            }
            t[n] = (c_[n] - acc) / Rat(2);
        }
        return TruncSeries(std::move(t));
    }

    // Scalar multiple.
    TruncSeries scaled(const Rat& s) const {
        std::vector<Rat> o(c_.size());
        for (std::size_t j = 0; j < c_.size(); ++j) o[j] = c_[j] * s;
        return TruncSeries(std::move(o));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rat> o(n);
        for (std::size_t j = 0; j < n; ++j) o[j] = a.c_[j] + b.c_[j];
        return TruncSeries(std::move(o));
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rat> o(n);
        for (std::size_t j = 0; j < n; ++j) o[j] = a.c_[j] - b.c_[j];
        return TruncSeries(std::move(o));
    }

    // Cauchy product, truncated to the smaller operand order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rat> o(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                o[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return TruncSeries(std::move(o));
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (j > 0) out += " + ";
            out += arcsid::to_string(c_[j]);
            if (j == 1) {
                out += "*x";
            } else if (j > 1) {
                out += "*x^" + std::to_string(j);
            }
        }
        out += " (mod x^" + std::to_string(c_.size()) + ")";
        return out;
    }

private:
    std::vector<Rat> c_;
};

struct SeriesMismatch {
    std::size_t index;
    Rat lhs;
    Rat rhs;
};

// First coefficient where the two series differ on their common prefix, if
// any. Orders need not match; only the shared prefix is compared.
inline std::optional<SeriesMismatch> first_mismatch(const TruncSeries& a,
                                                    const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t j = 0; j < n; ++j) {
        if (a.coeff(j) != b.coeff(j)) {
            return SeriesMismatch{j, a.coeff(j), b.coeff(j)};
        }
    }
    return std::nullopt;
}

inline bool prefix_equal(const TruncSeries& a, const TruncSeries& b) {
    return !first_mismatch(a, b).has_value();
}

inline std::string to_string(const TruncSeries& s) { return s.to_string(); }

}  // namespace arcsid
