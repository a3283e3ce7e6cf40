#pragma once

// Hamming distances between consecutive integers in base n form a ruler
// sequence: the distance from m-1 to m is the base-n valuation of m plus
// one, because decrementing m rewrites exactly the trailing run of zero
// digits (to base-1 digits) together with the digit above it. Summing those
// distances gives a divisor-counting sum with one term per power of the
// base, which is what the closed form evaluates.

#include <cstdint>
#include <iterator>

#include "radixham/base.hpp"
#include "radixham/hamming.hpp"

namespace radixham {

/// Exponent of the highest power of the base dividing a positive integer.
/// For composite bases this is the base-power valuation, the largest l with
/// base^l | m, not a prime-factor valuation.
struct Valuation {
    std::uint64_t exponent = 0;
};

enum class SumMode { fast, naive };

/// S(m), the sum of the distances H(i, i+1) for i in [0, m), together with
/// how it was computed: naive evaluates one term per i, fast one term per
/// power of the base not exceeding m.
struct SumResult {
    std::uint64_t total = 0;
    SumMode mode = SumMode::fast;
    std::uint64_t terms_evaluated = 0;
};

/// Largest l such that base^l divides m. Rejects m = 0, which every power
/// divides.
Valuation valuation(std::uint64_t m, Base base);

/// Hamming distance between the padded numerals of m and m-1, via the
/// valuation: valuation(m, base) + 1. Requires m >= 1.
Distance consecutive_distance(std::uint64_t m, Base base);

/// Reference sum: expands each pair of consecutive integers to digits and
/// counts differing positions, never touching the valuation shortcut.
/// O(m log m) digit work; the oracle that sum_fast is checked against.
SumResult sum_naive(std::uint64_t m, Base base);

/// Closed-form sum: S(m) = sum over j >= 0 of floor(m / base^j), one term
/// per power of the base not exceeding m (floor(m / base^j) counts the
/// multiples of base^j in [1, m]). O(log m). Overflow of the 64-bit total
/// is reported, never wrapped.
SumResult sum_fast(std::uint64_t m, Base base);

/// S at an exact power of the base: S(base^k) is the geometric series
/// base^k + base^(k-1) + ... + 1 = (base^(k+1) - 1) / (base - 1). Used as
/// an independent cross-check family for sum_fast.
std::uint64_t sum_power_identity(std::uint64_t k, Base base);

/// Lazy range of consecutive_distance(i, base) for i = 1..limit, in order.
/// Stateless apart from the loop counter; instances are independent.
class DistanceSequence {
public:
    DistanceSequence(std::uint64_t limit, Base base)
        : limit_(limit), base_(base) {}

    class iterator {
    public:
        using value_type = Distance;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;
        iterator(std::uint64_t current, std::uint64_t remaining, std::uint64_t radix)
            : current_(current), remaining_(remaining), radix_(radix) {}

        Distance operator*() const { return consecutive_distance(current_, Base(radix_)); }

        iterator& operator++() {
            ++current_;
            --remaining_;
            return *this;
        }

        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.remaining_ == b.remaining_;
        }

    private:
        std::uint64_t current_ = 1;
        std::uint64_t remaining_ = 0;
        std::uint64_t radix_ = 2;
    };

    iterator begin() const { return iterator(1, limit_, base_.value()); }
    iterator end() const { return iterator(0, 0, base_.value()); }

    std::uint64_t size() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    Base base_;
};

DistanceSequence distance_sequence(std::uint64_t limit, Base base);

}  // namespace radixham
