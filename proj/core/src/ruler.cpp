#include "radixham/ruler.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>

namespace radixham {

namespace {

[[noreturn]] void throw_sum_overflow() {
    throw std::overflow_error("distance sum does not fit in 64 bits");
}

// Least-significant-first expansion into buf; returns the digit count.
// buf must hold at least 64 entries (enough for any uint64 in base 2).
std::size_t expand_digits(std::uint64_t v, std::uint64_t radix,
                          std::span<std::uint64_t> buf) {
    std::size_t len = 0;
    do {
        buf[len++] = v % radix;
        v /= radix;
    } while (v != 0);
    return len;
}

}  // namespace

Valuation valuation(std::uint64_t m, Base base) {
    if (m == 0) {
        throw std::invalid_argument("valuation of 0 is undefined: every power divides it");
    }
    Valuation v;
    while (m % base.value() == 0) {
        m /= base.value();
        ++v.exponent;
    }
    return v;
}

Distance consecutive_distance(std::uint64_t m, Base base) {
    return Distance{valuation(m, base).exponent + 1};
}

SumResult sum_naive(std::uint64_t m, Base base) {
    SumResult result{0, SumMode::naive, m};
    std::array<std::uint64_t, 64> lo_digits;
    std::array<std::uint64_t, 64> hi_digits;
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::size_t lo_len = expand_digits(i, base.value(), lo_digits);
        const std::size_t hi_len = expand_digits(i + 1, base.value(), hi_digits);
        const std::size_t width = std::max(lo_len, hi_len);
        std::uint64_t differing = 0;
        for (std::size_t j = 0; j < width; ++j) {
            // A missing digit is the left padding: zero.
            const std::uint64_t a = j < lo_len ? lo_digits[j] : 0;
            const std::uint64_t b = j < hi_len ? hi_digits[j] : 0;
            differing += a != b ? 1 : 0;
        }
        if (__builtin_add_overflow(result.total, differing, &result.total)) {
            throw_sum_overflow();
        }
    }
    return result;
}

SumResult sum_fast(std::uint64_t m, Base base) {
    SumResult result{0, SumMode::fast, 0};
    if (m == 0) {
        return result;
    }
    std::uint64_t power = 1;
    for (;;) {
        if (__builtin_add_overflow(result.total, m / power, &result.total)) {
            throw_sum_overflow();
        }
        ++result.terms_evaluated;
        // Continue while power * radix <= m, tested without overflowing.
        if (power > m / base.value()) {
            break;
        }
        power *= base.value();
    }
    return result;
}

std::uint64_t sum_power_identity(std::uint64_t k, Base base) {
    // Accumulates base^k + ... + base + 1 directly, never forming
    // base^(k+1), so the result is exact whenever it fits 64 bits.
    std::uint64_t power = 1;
    std::uint64_t total = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        if (__builtin_mul_overflow(power, base.value(), &power) ||
            __builtin_add_overflow(total, power, &total)) {
            throw std::overflow_error("geometric sum does not fit in 64 bits");
        }
    }
    return total;
}

DistanceSequence distance_sequence(std::uint64_t limit, Base base) {
    return DistanceSequence(limit, base);
}

}  // namespace radixham
