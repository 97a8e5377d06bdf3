#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace powgraph {

// Euler phi(n), n >= 1.
inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// n = p^k with k >= 1, or nothing.
inline std::optional<std::pair<std::uint64_t, int>> prime_power_parse(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) {
                n /= d;
                ++k;
            }
            if (n != 1) return std::nullopt;
            return std::make_pair(d, k);
        }
    }
    return std::make_pair(n, 1);  // n itself prime
}

// p^k with overflow left to the caller's domain (orders stay tiny here).
inline std::uint64_t ipow(std::uint64_t p, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace powgraph
