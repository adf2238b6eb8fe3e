#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcsid/combinatorics.hpp"
#include "arcsid/report.hpp"
#include "arcsid/series.hpp"

namespace arcsid {

namespace detail {
inline void require_order(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        throw std::invalid_argument(std::string(what) + " needs order >= " +
                                    std::to_string(min) + ", got " + std::to_string(n));
    }
}
}  // namespace detail

// arcsin x = sum_l binom(2l,l) x^(2l+1) / (4^l (2l+1)).
inline TruncSeries arcsin_series(std::size_t N) {
    detail::require_order(N, 2, "arcsin series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t l = 0; 2 * l + 1 < N; ++l) {
        long long ll = static_cast<long long>(l);
        c[2 * l + 1] = Rat(binomial(2 * ll, ll), ipow(BigInt(4), l) * (2 * ll + 1));
    }
    return TruncSeries(std::move(c));
}

// arcsin^2 x = (1/2) sum_{l>=1} (2x)^(2l) / (l^2 binom(2l,l)).
inline TruncSeries arcsin_squared_series(std::size_t N) {
    detail::require_order(N, 3, "arcsin^2 series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t l = 1; 2 * l < N; ++l) {
        long long ll = static_cast<long long>(l);
        c[2 * l] = Rat(ipow(BigInt(4), l),
                       BigInt(2) * ll * ll * binomial(2 * ll, ll));
    }
    return TruncSeries(std::move(c));
}

// arcsin^3 x = 3! sum_l [(2l+1)!!]^2 * (sum_{k=0}^{l} 1/(2k+1)^2) * x^(2l+3) / (2l+3)!.
inline TruncSeries arcsin_cubed_series(std::size_t N) {
    detail::require_order(N, 4, "arcsin^3 series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t l = 0; 2 * l + 3 < N; ++l) {
        long long ll = static_cast<long long>(l);
        BigInt odd = double_factorial(2 * ll + 1);
        c[2 * l + 3] =
            Rat(BigInt(6) * odd * odd, factorial(2 * ll + 3)) * odd_square_partial_sum(ll);
    }
    return TruncSeries(std::move(c));
}

// 1/sqrt(1-4x^2) = sum_k binom(2k,k) x^(2k).
inline TruncSeries inv_sqrt_series(std::size_t N) {
    detail::require_order(N, 1, "inverse-sqrt series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t k = 0; 2 * k < N; ++k) {
        long long kk = static_cast<long long>(k);
        c[2 * k] = Rat(binomial(2 * kk, kk));
    }
    return TruncSeries(std::move(c));
}

// 2x arcsin(x) / sqrt(1-x^2) = sum_{l>=1} (2x)^(2l) / (l binom(2l,l)).
inline TruncSeries lehmer_series(std::size_t N) {
    detail::require_order(N, 3, "lehmer series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t l = 1; 2 * l < N; ++l) {
        long long ll = static_cast<long long>(l);
        c[2 * l] = Rat(ipow(BigInt(4), l), BigInt(ll) * binomial(2 * ll, ll));
    }
    return TruncSeries(std::move(c));
}

// arcsin^2(x) / sqrt(1-x^2) = 2! sum_n [(2n+1)!!]^2 * (sum_{k=0}^{n} 1/(2k+1)^2)
//                             * x^(2n+2) / (2n+2)!.
inline TruncSeries arcsin_sq_over_sqrt_series(std::size_t N) {
    detail::require_order(N, 3, "arcsin^2/sqrt series");
    std::vector<Rat> c(N, Rat(0));
    for (std::size_t n = 0; 2 * n + 2 < N; ++n) {
        long long nn = static_cast<long long>(n);
        BigInt odd = double_factorial(2 * nn + 1);
        c[2 * n + 2] =
            Rat(BigInt(2) * odd * odd, factorial(2 * nn + 2)) * odd_square_partial_sum(nn);
    }
    return TruncSeries(std::move(c));
}

// The polynomial 1 - x^2 as a truncated series (the x^2 term is dropped when
// the order is too small to hold it, as with any truncation).
inline TruncSeries one_minus_x_sq_series(std::size_t N) {
    detail::require_order(N, 1, "1-x^2 series");
    std::vector<Rat> c(N, Rat(0));
    c[0] = Rat(1);
    if (N >= 3) c[2] = Rat(-1);
    return TruncSeries(std::move(c));
}

// Lookup by the names the CLI accepts.
inline TruncSeries series_by_name(const std::string& name, std::size_t N) {
    if (name == "arcsin") return arcsin_series(N);
    if (name == "arcsin_sq") return arcsin_squared_series(N);
    if (name == "arcsin_cubed") return arcsin_cubed_series(N);
    if (name == "inv_sqrt") return inv_sqrt_series(N);
    if (name == "lehmer") return lehmer_series(N);
    if (name == "arcsin_sq_over_sqrt") return arcsin_sq_over_sqrt_series(N);
    throw std::invalid_argument(
        "unknown series '" + name +
        "' (expected one of: arcsin, arcsin_sq, arcsin_cubed, inv_sqrt, lehmer, "
        "arcsin_sq_over_sqrt)");
}

// The six named series at a common order, bundled so the consistency suite can
// be driven from either the real constructors or deliberately corrupted
// copies (fault-injection tests).
struct CatalogSeries {
    TruncSeries arcsin;
    TruncSeries arcsin_sq;
    TruncSeries arcsin_cubed;
    TruncSeries inv_sqrt;
    TruncSeries lehmer;
    TruncSeries arcsin_sq_over_sqrt;

    static CatalogSeries standard(std::size_t N) {
        return CatalogSeries{arcsin_series(N),    arcsin_squared_series(N),
                             arcsin_cubed_series(N), inv_sqrt_series(N),
                             lehmer_series(N),    arcsin_sq_over_sqrt_series(N)};
    }
};

// Cross-checks proving that the independently-built series cohere: products,
// derivatives, and the sqrt/inverse rebuild all reproduce one another. Each
// check compares the common prefix of two series computed by different
// routes; a mismatch reports the first differing power and both coefficients.
inline std::vector<VerifyReport> consistency_checks(const CatalogSeries& s) {
    std::vector<VerifyReport> out;
    std::size_t N = s.arcsin.order();

    auto run = [&out](const std::string& id, const TruncSeries& lhs,
                      const TruncSeries& rhs) {
        auto t0 = std::chrono::steady_clock::now();
        auto mism = first_mismatch(lhs, rhs);
        auto t1 = std::chrono::steady_clock::now();
        VerifyReport r;
        r.identity = id;
        r.n_lo = 0;
        r.n_hi = static_cast<long long>(std::min(lhs.order(), rhs.order())) - 1;
        r.passed = !mism.has_value();
        if (mism) {
            r.first_failure = FirstFailure{static_cast<long long>(mism->index),
                                           to_string(mism->lhs), to_string(mism->rhs)};
        }
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
                .count();
        out.push_back(std::move(r));
    };

    // (a) arcsin * arcsin reproduces the squared series.
    run("consistency.a", s.arcsin * s.arcsin, s.arcsin_sq);

    // (b) arcsin^2 * arcsin reproduces the cubed series.
    run("consistency.b", s.arcsin_sq * s.arcsin, s.arcsin_cubed);

    // (c) d/dx arcsin = 1/sqrt(1-x^2), rebuilt from the literal polynomial.
    run("consistency.c", s.arcsin.derivative(),
        one_minus_x_sq_series(N >= 2 ? N - 1 : 1).sqrt().inverse());

    // (d) lehmer / x = 2 * arcsin / sqrt(1-x^2), rebuilt from parts.
    run("consistency.d", s.lehmer.shifted(-1),
        (s.arcsin * one_minus_x_sq_series(N).sqrt().inverse()).scaled(Rat(2)));

    // (e) d/dx arcsin^3 = 3 * arcsin^2 / sqrt(1-x^2).
    run("consistency.e", s.arcsin_cubed.derivative(),
        s.arcsin_sq_over_sqrt.scaled(Rat(3)));

    // (f) x * d/dx arcsin^2 = lehmer.
    run("consistency.f", s.arcsin_sq.derivative().shifted(1), s.lehmer);

    return out;
}

inline std::vector<VerifyReport> catalog_consistency(std::size_t N) {
    if (N < 8) {
        throw std::invalid_argument("consistency suite needs order >= 8, got " +
                                    std::to_string(N));
    }
    return consistency_checks(CatalogSeries::standard(N));
}

}  // namespace arcsid
