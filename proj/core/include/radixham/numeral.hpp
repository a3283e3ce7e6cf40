#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radixham/base.hpp"

namespace radixham {

/// Digit expansion of a non-negative integer in a fixed base, most
/// significant digit first. Zero is the single digit [0]; the empty digit
/// sequence is not a numeral. Leading zeros are permitted so that padded
/// forms are representable; canonical forms carry none.
class Numeral {
public:
    Numeral(Base base, std::vector<std::uint64_t> digits);

    const Base& base() const noexcept { return base_; }
    std::span<const std::uint64_t> digits() const noexcept { return digits_; }
    std::size_t length() const noexcept { return digits_.size(); }

    /// No leading zero, except the single-digit zero numeral itself.
    bool is_canonical() const noexcept {
        return digits_.size() == 1 || digits_.front() != 0;
    }

    friend bool operator==(const Numeral&, const Numeral&) = default;

private:
    Base base_;
    std::vector<std::uint64_t> digits_;
};

/// Canonical digit expansion of m in the given base.
Numeral to_numeral(std::uint64_t m, Base base);

/// Horner evaluation of the digits; inverse of to_numeral on canonical
/// numerals. Throws std::overflow_error when the value exceeds 64 bits.
std::uint64_t value_of(const Numeral& x);

/// Parses digits 0-9, A-Z (case-insensitive) in the given base; leading
/// zeros are accepted and stripped to canonical form. Requires a non-empty
/// string and base <= 36.
Numeral parse(std::string_view text, Base base);

/// Renders the digits as uppercase text, most significant first. Leading
/// zeros are kept, so padded numerals format as padded strings. Requires
/// base <= 36.
std::string format(const Numeral& x);

/// Left-pads the shorter numeral with zero digits so both have length
/// max(len(a), len(b)). Values are unchanged. Requires equal bases.
std::pair<Numeral, Numeral> pad_to_common_length(const Numeral& a, const Numeral& b);

}  // namespace radixham
