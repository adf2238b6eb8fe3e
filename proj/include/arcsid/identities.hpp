#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "arcsid/catalog.hpp"
#include "arcsid/combinatorics.hpp"
#include "arcsid/qpi2.hpp"
#include "arcsid/rational.hpp"
#include "arcsid/report.hpp"
#include "arcsid/series.hpp"

namespace arcsid {

// ---------------------------------------------------------------------------
// Forms: some displays circulate in a misprinted version; the engine
// evaluates both the version as printed in the literature and the numerically
// forced correction, and never silently substitutes one for the other.
// ---------------------------------------------------------------------------

enum class Form { none, printed, corrected };

enum class FormSupport {
    single,        // one canonical statement; --form is not accepted
    printed_only,  // statement is correct as printed; no corrected variant exists
    both           // printed and corrected variants both evaluable
};

inline std::string to_string(Form f) {
    switch (f) {
        case Form::none: return "none";
        case Form::printed: return "printed";
        case Form::corrected: return "corrected";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Point evaluators. Each returns (lhs, rhs) evaluated exactly at one n.
// ---------------------------------------------------------------------------

namespace detail {
inline void require_nonneg(long long n) {
    if (n < 0) throw std::invalid_argument("identity index n must be >= 0, got " +
                                           std::to_string(n));
}

// binom(2k,k) / binom(2(n-k+1), n-k+1), the ratio every "ratio" identity sums.
inline Rat central_ratio(long long k, long long n) {
    return Rat(central_binomial(k), central_binomial(n - k + 1));
}

inline Rat pow2(long long e) { return pow(Rat(2), e); }
}  // namespace detail

// Sum_{k=0}^{n} binom(2k,k) binom(2(n-k),n-k) / (2k+1)  vs
// 2^(4n) / ((2n+1) binom(2n,n)).
inline std::pair<Rat, Rat> eval_thm21(long long n) {
    detail::require_nonneg(n);
    Rat lhs(0);
    for (long long k = 0; k <= n; ++k) {
        lhs += Rat(central_binomial(k) * central_binomial(n - k), BigInt(2 * k + 1));
    }
    Rat rhs(ipow(BigInt(2), static_cast<unsigned long long>(4 * n)),
            BigInt(2 * n + 1) * central_binomial(n));
    return {lhs, rhs};
}

// pi^2 - 2*t for a trigamma value t. The pi^2 components must cancel exactly;
// a residue can only mean the trigamma table is wrong, so it is an internal
// error, never an identity verdict.
inline QPi2 ratio_rhs_bracket(const QPi2& trigamma_value) {
    QPi2 b = QPi2::pi2() - QPi2(Rat(2)) * trigamma_value;
    if (!b.is_rational()) {
        throw consistency_error("pi^2 residue " + to_string(b.pi2_part()) +
                                " in trigamma bracket; expected exact cancellation");
    }
    return b;
}

// Weighted sums of central_ratio against a trigamma bracket:
//   variant 1: weight 1/(2^(4k) (2k+1) (n-k+1)^2),  coefficient 3[(2n+1)!!]^2/(2^(2n+3)(2n+3)!)
//   variant 2: weight 1/(2^(4k) (n-k+1)^2),         coefficient  [(2n+1)!!]^2/(2^(2n+3)(2n+2)!)
//   variant 3: weight 1/(2^(4k) (2k+1) (n-k+1)),    coefficient  [(2n+1)!!]^2/(2^(2n+3)(2n+2)!)
// all equated to coefficient * (pi^2 - 2*trigamma(n+3/2)).
inline std::pair<Rat, QPi2> eval_ratio_identity(int variant, long long n) {
    detail::require_nonneg(n);
    if (variant < 1 || variant > 3) {
        throw std::invalid_argument("ratio identity variant must be 1..3, got " +
                                    std::to_string(variant));
    }
    Rat lhs(0);
    for (long long k = 0; k <= n; ++k) {
        BigInt m = n - k + 1;
        BigInt denom = ipow(BigInt(2), static_cast<unsigned long long>(4 * k));
        switch (variant) {
            case 1: denom *= BigInt(2 * k + 1) * m * m; break;
            case 2: denom *= m * m; break;
            case 3: denom *= BigInt(2 * k + 1) * m; break;
        }
        lhs += Rat(BigInt(1), denom) * detail::central_ratio(k, n);
    }

    BigInt odd = double_factorial(2 * n + 1);
    Rat coef = (variant == 1)
                   ? Rat(BigInt(3) * odd * odd,
                         ipow(BigInt(2), static_cast<unsigned long long>(2 * n + 3)) *
                             factorial(2 * n + 3))
                   : Rat(odd * odd,
                         ipow(BigInt(2), static_cast<unsigned long long>(2 * n + 3)) *
                             factorial(2 * n + 2));
    QPi2 bracket = ratio_rhs_bracket(trigamma_half_integer(n + 1));
    return {lhs, QPi2(coef) * bracket};
}

// The same three statements in their power-of-two display form, pure-rational
// on both sides:
//   lhs variant 1: 3! [(2n+1)!!]^2 / (2n+3)! * S_n
//   lhs variants 2,3: 2! [(2n+1)!!]^2 / (2n+2)! * S_n     (S_n = sum 1/(2j+1)^2)
//   rhs: sum_k 2^e(k) * u_v(k) * central_ratio(k, n)
// where u_v matches the variant weight without its 2^(4k), and the exponent is
// e = 2(n-2k)+1 — except that variant 1 circulates with e = 2(n-2k)-1, which
// the corrected form repairs. Variants 2 and 3 are correct as printed, so
// their corrected form coincides with the printed one.
inline std::pair<Rat, Rat> eval_raw_cauchy(int variant, Form form, long long n) {
    detail::require_nonneg(n);
    if (variant < 1 || variant > 3) {
        throw std::invalid_argument("raw display variant must be 1..3, got " +
                                    std::to_string(variant));
    }
    if (form != Form::printed && form != Form::corrected) {
        throw std::invalid_argument("raw display requires form printed or corrected");
    }

    BigInt odd = double_factorial(2 * n + 1);
    Rat lhs = (variant == 1) ? Rat(BigInt(6) * odd * odd, factorial(2 * n + 3))
                             : Rat(BigInt(2) * odd * odd, factorial(2 * n + 2));
    lhs *= odd_square_partial_sum(n);

    const long long exp_shift = (variant == 1 && form == Form::printed) ? -1 : 1;
    Rat rhs(0);
    for (long long k = 0; k <= n; ++k) {
        BigInt m = n - k + 1;
        BigInt u;
        switch (variant) {
            case 1: u = BigInt(2 * k + 1) * m * m; break;
            case 2: u = m * m; break;
            default: u = BigInt(2 * k + 1) * m; break;
        }
        rhs += detail::pow2(2 * (n - 2 * k) + exp_shift) * Rat(BigInt(1), u) *
               detail::central_ratio(k, n);
    }
    return {lhs, rhs};
}

enum class ConvId { monthly_final, monthly, alzer_nagy, equivalence_step };

// Central-binomial / Catalan convolution family:
//   monthly_final:   sum binom(2k,k) binom(2(n-k),n-k) / (k+1)      = binom(2n+1, n)
//   monthly:         sum binom(2k,k) binom(2(n-k+1),n-k+1) / (k+1)  = 2 binom(2n+2, n)
//   alzer_nagy:      sum binom(2k,k) C_(n-k)                        = binom(2n+2, n+1)/2
//   equivalence_step: 2 binom(2n+2,n) + binom(2n+2,n+1)/(n+2)       = binom(2n+3, n+1)
inline std::pair<Rat, Rat> eval_convolution(ConvId id, long long n) {
    detail::require_nonneg(n);
    switch (id) {
        case ConvId::monthly_final: {
            Rat lhs(0);
            for (long long k = 0; k <= n; ++k) {
                lhs += Rat(central_binomial(k) * central_binomial(n - k), BigInt(k + 1));
            }
            return {lhs, Rat(binomial(2 * n + 1, n))};
        }
        case ConvId::monthly: {
            Rat lhs(0);
            for (long long k = 0; k <= n; ++k) {
                lhs += Rat(central_binomial(k) * central_binomial(n - k + 1),
                           BigInt(k + 1));
            }
            return {lhs, Rat(BigInt(2) * binomial(2 * n + 2, n))};
        }
        case ConvId::alzer_nagy: {
            Rat lhs(0);
            for (long long k = 0; k <= n; ++k) {
                lhs += Rat(central_binomial(k) * catalan(n - k));
            }
            return {lhs, Rat(central_binomial(n + 1), BigInt(2))};
        }
        case ConvId::equivalence_step: {
            Rat lhs = Rat(BigInt(2) * binomial(2 * n + 2, n)) +
                      Rat(central_binomial(n + 1), BigInt(n + 2));
            return {lhs, Rat(binomial(2 * n + 3, n + 1))};
        }
    }
    throw std::invalid_argument("unknown convolution identity");
}

// Catalan-number rewrites of the identities above, via binom(2k,k) = (k+1)C_k:
//   1: sum (n-k+1) C_k C_(n-k)                         = binom(2n+1, n)
//   2: sum (k+1)(n-k+1)/(2k+1) C_k C_(n-k)             = 2^(4n)/((2n+1)(n+1)C_n)
//   3: sum f/(2^(4k) (2k+1) (n-k+1)^2) * C_k/C_(n-k+1) = 3 [(2n+1)!!]^2 S_n / (2^(2n) (2n+3)!)
//   4: sum f/(2^(4k) (n-k+1)^2)        * C_k/C_(n-k+1) =   [(2n+1)!!]^2 S_n / (2^(2n) (2n+2)!)
//   5: sum f/(2^(4k) (2k+1) (n-k+1))   * C_k/C_(n-k+1) =   [(2n+1)!!]^2 S_n / (2^(2n) (2n+2)!)
// where for 3..5 the extra factor f is (n-k+2)/(k+1) as the displays circulate
// (printed) and (k+1)/(n-k+2) as forced by the substitution (corrected).
// Rewrites 1 and 2 carry no such factor and are correct as printed.
inline std::pair<Rat, Rat> eval_catalan_rewrite(int index, Form form, long long n) {
    detail::require_nonneg(n);
    if (index < 1 || index > 5) {
        throw std::invalid_argument("catalan rewrite index must be 1..5, got " +
                                    std::to_string(index));
    }
    if (index <= 2) {
        if (form == Form::corrected) {
            throw std::invalid_argument("catalan rewrite " + std::to_string(index) +
                                        " has no corrected form: it is correct as printed");
        }
    } else if (form != Form::printed && form != Form::corrected) {
        throw std::invalid_argument("catalan rewrite " + std::to_string(index) +
                                    " requires form printed or corrected");
    }

    if (index == 1) {
        Rat lhs(0);
        for (long long k = 0; k <= n; ++k) {
            lhs += Rat(BigInt(n - k + 1) * catalan(k) * catalan(n - k));
        }
        return {lhs, Rat(binomial(2 * n + 1, n))};
    }
    if (index == 2) {
        Rat lhs(0);
        for (long long k = 0; k <= n; ++k) {
            lhs += Rat(BigInt(k + 1) * BigInt(n - k + 1) * catalan(k) * catalan(n - k),
                       BigInt(2 * k + 1));
        }
        Rat rhs(ipow(BigInt(2), static_cast<unsigned long long>(4 * n)),
                BigInt(2 * n + 1) * BigInt(n + 1) * catalan(n));
        return {lhs, rhs};
    }

    Rat lhs(0);
    for (long long k = 0; k <= n; ++k) {
        BigInt m = n - k + 1;
        BigInt base = ipow(BigInt(2), static_cast<unsigned long long>(4 * k));
        switch (index) {
            case 3: base *= BigInt(2 * k + 1) * m * m; break;
            case 4: base *= m * m; break;
            default: base *= BigInt(2 * k + 1) * m; break;
        }
        Rat factor = (form == Form::printed) ? Rat(BigInt(n - k + 2), BigInt(k + 1))
                                             : Rat(BigInt(k + 1), BigInt(n - k + 2));
        lhs += factor * Rat(catalan(k), base * catalan(n - k + 1));
    }

    BigInt odd = double_factorial(2 * n + 1);
    BigInt p = ipow(BigInt(2), static_cast<unsigned long long>(2 * n));
    Rat rhs = (index == 3) ? Rat(BigInt(3) * odd * odd, p * factorial(2 * n + 3))
                           : Rat(odd * odd, p * factorial(2 * n + 2));
    rhs *= odd_square_partial_sum(n);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Registry: the identity ids the CLI and identity files accept.
// ---------------------------------------------------------------------------

struct IdentityInfo {
    std::string id;
    FormSupport forms;
    std::string description;
};

inline const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> reg = {
        {"thm2.1", FormSupport::single,
         "odd-denominator central-binomial convolution vs 2^(4n)/((2n+1)binom(2n,n))"},
        {"thm3.1a", FormSupport::single,
         "ratio sum, weight 1/(2^(4k)(2k+1)(n-k+1)^2), vs trigamma bracket"},
        {"thm3.1b", FormSupport::single,
         "ratio sum, weight 1/(2^(4k)(n-k+1)^2), vs trigamma bracket"},
        {"thm3.1c", FormSupport::single,
         "ratio sum, weight 1/(2^(4k)(2k+1)(n-k+1)), vs trigamma bracket"},
        {"raw3.1", FormSupport::both,
         "power-of-two display of thm3.1a; printed exponent off by a factor of 4"},
        {"raw3.2", FormSupport::both, "power-of-two display of thm3.1b; correct as printed"},
        {"raw3.3", FormSupport::both, "power-of-two display of thm3.1c; correct as printed"},
        {"monthly_final", FormSupport::single,
         "Catalan-weighted convolution equal to binom(2n+1,n)"},
        {"monthly", FormSupport::single,
         "shifted Catalan-weighted convolution equal to 2binom(2n+2,n)"},
        {"alzer_nagy", FormSupport::single,
         "central-binomial/Catalan convolution equal to half the next central binomial"},
        {"equivalence_step", FormSupport::single,
         "binomial rearrangement linking the two convolution displays"},
        {"catalan_rw1", FormSupport::printed_only,
         "Catalan form of the binom(2n+1,n) convolution"},
        {"catalan_rw2", FormSupport::printed_only, "Catalan form of thm2.1"},
        {"catalan_rw3", FormSupport::both,
         "Catalan form of thm3.1a; printed swaps (k+1) and (n-k+2)"},
        {"catalan_rw4", FormSupport::both,
         "Catalan form of thm3.1b; printed swaps (k+1) and (n-k+2)"},
        {"catalan_rw5", FormSupport::both,
         "Catalan form of thm3.1c; printed swaps (k+1) and (n-k+2)"},
    };
    return reg;
}

inline const IdentityInfo* find_identity(const std::string& id) {
    for (const auto& info : identity_registry()) {
        if (info.id == id) return &info;
    }
    return nullptr;
}

// Point evaluator for a registry id in a concrete form, both sides as QPi2.
// Form validity: single-form ids take Form::none; printed_only ids take
// printed (or none, meaning printed); both-form ids take printed or corrected.
inline std::pair<QPi2, QPi2> evaluate_identity(const std::string& id, Form form,
                                               long long n) {
    const IdentityInfo* info = find_identity(id);
    if (!info) throw std::invalid_argument("unknown identity id '" + id + "'");

    switch (info->forms) {
        case FormSupport::single:
            if (form != Form::none) {
                throw std::invalid_argument("identity '" + id +
                                            "' has a single form; --form is not accepted");
            }
            break;
        case FormSupport::printed_only:
            if (form == Form::corrected) {
                throw std::invalid_argument("identity '" + id +
                                            "' is correct as printed; no corrected form");
            }
            break;
        case FormSupport::both:
            if (form == Form::none) {
                throw std::invalid_argument("identity '" + id +
                                            "' requires form printed or corrected");
            }
            break;
    }

    auto lift = [](std::pair<Rat, Rat> p) {
        return std::pair<QPi2, QPi2>{QPi2(p.first), QPi2(p.second)};
    };

    if (id == "thm2.1") return lift(eval_thm21(n));
    if (id == "thm3.1a" || id == "thm3.1b" || id == "thm3.1c") {
        int variant = id.back() - 'a' + 1;
        auto [lhs, rhs] = eval_ratio_identity(variant, n);
        return {QPi2(lhs), rhs};
    }
    if (id == "raw3.1" || id == "raw3.2" || id == "raw3.3") {
        int variant = id.back() - '0';
        return lift(eval_raw_cauchy(variant, form, n));
    }
    if (id == "monthly_final") return lift(eval_convolution(ConvId::monthly_final, n));
    if (id == "monthly") return lift(eval_convolution(ConvId::monthly, n));
    if (id == "alzer_nagy") return lift(eval_convolution(ConvId::alzer_nagy, n));
    if (id == "equivalence_step") {
        return lift(eval_convolution(ConvId::equivalence_step, n));
    }
    // catalan_rw1..5
    int index = id.back() - '0';
    Form f = (info->forms == FormSupport::printed_only && form == Form::none)
                 ? Form::printed
                 : form;
    return lift(eval_catalan_rewrite(index, f, n));
}

// ---------------------------------------------------------------------------
// Range sweeps.
// ---------------------------------------------------------------------------

struct VerifyOptions {
    int jobs = 1;  // 0 = hardware concurrency
};

using PointCheck = std::function<std::optional<FirstFailure>(long long)>;

namespace detail {

// Sweep [n_lo, n_hi] with a per-point check, stopping once a failure at or
// below the current position is known. Workers own contiguous segments and
// scan upward, so the smallest failing n is always reached by the worker
// owning it before that worker can be cancelled: the merged result is
// deterministic regardless of thread timing.
inline std::optional<FirstFailure> sweep(const PointCheck& check, long long n_lo,
                                         long long n_hi, int jobs) {
    const long long count = n_hi - n_lo + 1;
    if (jobs <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        jobs = hc == 0 ? 1 : static_cast<int>(hc);
    }
    if (static_cast<long long>(jobs) > count) jobs = static_cast<int>(count);

    if (jobs == 1) {
        for (long long n = n_lo; n <= n_hi; ++n) {
            if (auto f = check(n)) return f;
        }
        return std::nullopt;
    }

    std::atomic<long long> fail_min{n_hi + 1};
    std::vector<std::optional<FirstFailure>> results(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));

    const long long chunk = count / jobs;
    const long long extra = count % jobs;
    long long start = n_lo;
    for (int w = 0; w < jobs; ++w) {
        const long long len = chunk + (w < extra ? 1 : 0);
        const long long lo = start;
        const long long hi = start + len - 1;
        start = hi + 1;
        workers.emplace_back([&, w, lo, hi] {
            try {
                for (long long n = lo; n <= hi; ++n) {
                    if (fail_min.load(std::memory_order_relaxed) < n) break;
                    if (auto f = check(n)) {
                        results[static_cast<std::size_t>(w)] = f;
                        long long cur = fail_min.load(std::memory_order_relaxed);
                        while (n < cur && !fail_min.compare_exchange_weak(
                                              cur, n, std::memory_order_relaxed)) {
                        }
                        break;
                    }
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::optional<FirstFailure> best;
    for (const auto& r : results) {
        if (r && (!best || r->n < best->n)) best = r;
    }
    return best;
}

}  // namespace detail

// Sweep an arbitrary per-point check over [n_lo, n_hi], producing a report
// under the given identity/form labels.
inline VerifyReport verify_points(const std::string& identity,
                                  std::optional<std::string> form_label,
                                  const PointCheck& check, long long n_lo,
                                  long long n_hi, const VerifyOptions& opts = {}) {
    if (n_lo < 0 || n_lo > n_hi) {
        throw std::invalid_argument("invalid range " + std::to_string(n_lo) + ".." +
                                    std::to_string(n_hi));
    }
    auto t0 = std::chrono::steady_clock::now();
    prewarm_combinatorics(n_hi);
    auto failure = detail::sweep(check, n_lo, n_hi, opts.jobs);
    auto t1 = std::chrono::steady_clock::now();

    VerifyReport r;
    r.identity = identity;
    r.form = std::move(form_label);
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.passed = !failure.has_value();
    r.first_failure = std::move(failure);
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
            .count();
    return r;
}

// Sweep one registry identity in one form.
inline VerifyReport verify_range(const std::string& id, Form form, long long n_lo,
                                 long long n_hi, const VerifyOptions& opts = {}) {
    const IdentityInfo* info = find_identity(id);
    if (!info) throw std::invalid_argument("unknown identity id '" + id + "'");

    // Validate the id/form combination up front (point evaluation would also
    // reject it, but inside a worker thread with a less direct message).
    evaluate_identity(id, form, n_lo >= 0 ? n_lo : 0);

    std::optional<std::string> form_label;
    if (info->forms == FormSupport::printed_only) {
        form_label = "printed";
    } else if (form != Form::none) {
        form_label = to_string(form);
    }

    PointCheck check = [id, form](long long n) -> std::optional<FirstFailure> {
        auto [lhs, rhs] = evaluate_identity(id, form, n);
        if (lhs == rhs) return std::nullopt;
        return FirstFailure{n, to_string(lhs), to_string(rhs)};
    };
    return verify_points(id, std::move(form_label), check, n_lo, n_hi, opts);
}

// The forms a registry id runs when no form is requested explicitly.
inline std::vector<Form> default_forms(const IdentityInfo& info) {
    switch (info.forms) {
        case FormSupport::single: return {Form::none};
        case FormSupport::printed_only: return {Form::printed};
        case FormSupport::both: return {Form::printed, Form::corrected};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Coefficient route check: the product series arcsin(2x)/(2x) * 1/sqrt(1-4x^2)
// is built with series operations only, and its x^(2n) coefficient is compared
// against a closed form reached by two different derivations:
//   route A: 2^(4n) (n!)^2 / (2n+1)!
//   route B: 2^(4n+1) / ((n+1) binom(2n+2, n+1))
// ---------------------------------------------------------------------------

enum class Route { A, B };

inline VerifyReport coefficient_route_check(Route route, long long n_max,
                                            const VerifyOptions& opts = {}) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be >= 0, got " + std::to_string(n_max));
    }
    auto t0 = std::chrono::steady_clock::now();

    const std::size_t K = static_cast<std::size_t>(2 * n_max + 2);
    // arcsin(2x)/(2x): substitute x -> 2x, divide by x, halve.
    TruncSeries left =
        arcsin_series(std::max<std::size_t>(K, 2)).arg_scaled(Rat(2)).shifted(-1).scaled(
            Rat(1, 2));
    TruncSeries product = left * inv_sqrt_series(left.order());

    std::optional<FirstFailure> failure;
    for (long long n = 0; n <= n_max; ++n) {
        Rat got = product.coeff(static_cast<std::size_t>(2 * n));
        Rat expect =
            (route == Route::A)
                ? Rat(ipow(BigInt(2), static_cast<unsigned long long>(4 * n)) *
                          factorial(n) * factorial(n),
                      factorial(2 * n + 1))
                : Rat(ipow(BigInt(2), static_cast<unsigned long long>(4 * n + 1)),
                      BigInt(n + 1) * binomial(2 * n + 2, n + 1));
        if (got != expect) {
            failure = FirstFailure{n, to_string(got), to_string(expect)};
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();

    VerifyReport r;
    r.identity = route == Route::A ? "coeff_route.A" : "coeff_route.B";
    r.n_lo = 0;
    r.n_hi = n_max;
    r.passed = !failure.has_value();
    r.first_failure = std::move(failure);
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
            .count();
    (void)opts;
    return r;
}

}  // namespace arcsid
