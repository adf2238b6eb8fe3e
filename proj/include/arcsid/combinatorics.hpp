#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "arcsid/errors.hpp"
#include "arcsid/qpi2.hpp"
#include "arcsid/rational.hpp"

namespace arcsid {

// Memoized integer combinatorics shared by the whole engine. All tables are
// guarded by a mutex so verification sweeps can run on several threads; call
// prewarm() before fanning out to avoid serializing on first touch.
class Combinatorics {
public:
    static Combinatorics& instance() {
        static Combinatorics c;
        return c;
    }

    // n! for n >= 0.
    BigInt factorial(long long n) {
        if (n < 0) throw std::domain_error("factorial of negative " + std::to_string(n));
        std::lock_guard<std::mutex> lock(mu_);
        return factorial_locked(n);
    }

    // m!! for m >= -1, with (-1)!! = 0!! = 1.
    BigInt double_factorial(long long m) {
        if (m < -1) throw std::domain_error("double factorial of " + std::to_string(m));
        std::lock_guard<std::mutex> lock(mu_);
        return double_factorial_locked(m);
    }

    // Binomial coefficient; n must be >= 0, out-of-range k gives 0.
    BigInt binomial(long long n, long long k) {
        if (n < 0) {
            throw std::invalid_argument("binomial with negative upper index " +
                                        std::to_string(n));
        }
        if (k < 0 || k > n) return BigInt(0);
        std::lock_guard<std::mutex> lock(mu_);
        return binomial_locked(n, k);
    }

    // binom(2n, n).
    BigInt central_binomial(long long n) {
        if (n < 0) {
            throw std::invalid_argument("central binomial of negative " + std::to_string(n));
        }
        std::lock_guard<std::mutex> lock(mu_);
        return binomial_locked(2 * n, n);
    }

    // Catalan number binom(2n,n)/(n+1); the division is checked because a
    // nonzero remainder can only mean a corrupted table.
    BigInt catalan(long long n) {
        if (n < 0) throw std::invalid_argument("catalan of negative " + std::to_string(n));
        std::lock_guard<std::mutex> lock(mu_);
        BigInt c = binomial_locked(2 * n, n);
        BigInt q = c / (n + 1);
        if (q * (n + 1) != c) {
            throw consistency_error("catalan(" + std::to_string(n) +
                                    "): central binomial not divisible by n+1");
        }
        return q;
    }

    // S_m = sum_{k=0}^{m} 1/(2k+1)^2; S_{-1} = 0.
    Rat odd_square_partial_sum(long long m) {
        if (m < -1) {
            throw std::invalid_argument("odd-square partial sum with m = " + std::to_string(m));
        }
        if (m == -1) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        return odd_square_partial_sum_locked(m);
    }

    // Trigamma at the half-integer m + 1/2 for m >= 0:
    //   psi'(m + 1/2) = pi^2/2 - 4 * sum_{k=1}^{m} 1/(2k-1)^2
    // The finite sum is S_{m-1} in the notation above.
    QPi2 trigamma_half_integer(long long m) {
        if (m < 0) {
            throw std::invalid_argument("trigamma at half-integer below 1/2: m = " +
                                        std::to_string(m));
        }
        Rat tail(0);
        if (m >= 1) {
            std::lock_guard<std::mutex> lock(mu_);
            tail = odd_square_partial_sum_locked(m - 1);
        }
        return QPi2(Rat(-4) * tail, Rat(1, 2));
    }

    // Fill every table up to the sizes a sweep over 0..max_n will touch, so
    // worker threads mostly hit read-only completed entries.
    void prewarm(long long max_n) {
        if (max_n < 0) return;
        std::lock_guard<std::mutex> lock(mu_);
        factorial_locked(2 * max_n + 4);
        double_factorial_locked(2 * max_n + 3);
        odd_square_partial_sum_locked(max_n + 1);
        for (long long n = 0; n <= 2 * max_n + 4; ++n) {
            binomial_locked(n, n / 2);
        }
    }

private:
    Combinatorics() = default;

    BigInt factorial_locked(long long n) {
        while (static_cast<long long>(fact_.size()) <= n) {
            if (fact_.empty()) {
                fact_.push_back(BigInt(1));
            } else {
                fact_.push_back(fact_.back() * static_cast<long long>(fact_.size()));
            }
        }
        return fact_[static_cast<std::size_t>(n)];
    }

    BigInt double_factorial_locked(long long m) {
        // Stored at index m + 1 so (-1)!! sits at slot 0.
        while (static_cast<long long>(dfact_.size()) <= m + 1) {
            if (dfact_.size() < 2) {
                dfact_.push_back(BigInt(1));  // covers (-1)!! and 0!!
            } else {
                long long v = static_cast<long long>(dfact_.size()) - 1;
                dfact_.push_back(dfact_[dfact_.size() - 2] * v);
            }
        }
        return dfact_[static_cast<std::size_t>(m + 1)];
    }

    BigInt binomial_locked(long long n, long long k) {
        if (k < 0 || k > n) return BigInt(0);
        if (k > n - k) k = n - k;
        std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) |
                            static_cast<std::uint64_t>(k);
        auto it = binom_.find(key);
        if (it != binom_.end()) return it->second;
        BigInt v = factorial_locked(n) / (factorial_locked(k) * factorial_locked(n - k));
        binom_.emplace(key, v);
        return v;
    }

    Rat odd_square_partial_sum_locked(long long m) {
        while (static_cast<long long>(odd_sq_.size()) <= m) {
            long long k = static_cast<long long>(odd_sq_.size());
            BigInt odd = 2 * k + 1;
            Rat term(BigInt(1), odd * odd);
            odd_sq_.push_back(odd_sq_.empty() ? term : odd_sq_.back() + term);
        }
        return odd_sq_[static_cast<std::size_t>(m)];
    }

    std::mutex mu_;
    std::vector<BigInt> fact_;
    std::vector<BigInt> dfact_;
    std::unordered_map<std::uint64_t, BigInt> binom_;
    std::vector<Rat> odd_sq_;
};

inline BigInt factorial(long long n) { return Combinatorics::instance().factorial(n); }
inline BigInt double_factorial(long long m) {
    return Combinatorics::instance().double_factorial(m);
}
inline BigInt binomial(long long n, long long k) {
    return Combinatorics::instance().binomial(n, k);
}
inline BigInt central_binomial(long long n) {
    return Combinatorics::instance().central_binomial(n);
}
inline BigInt catalan(long long n) { return Combinatorics::instance().catalan(n); }
inline Rat odd_square_partial_sum(long long m) {
    return Combinatorics::instance().odd_square_partial_sum(m);
}
inline QPi2 trigamma_half_integer(long long m) {
    return Combinatorics::instance().trigamma_half_integer(m);
}
inline void prewarm_combinatorics(long long max_n) {
    Combinatorics::instance().prewarm(max_n);
}

}  // namespace arcsid
