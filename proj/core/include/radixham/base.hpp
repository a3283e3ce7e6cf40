#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radixham {

/// Radix of a positional numeral system. Digit-vector operations accept any
/// radix >= 2; textual parsing and formatting cover radices up to 36, using
/// the digit alphabet 0-9, A-Z.
class Base {
public:
    static constexpr std::uint64_t max_text_radix = 36;

    explicit Base(std::uint64_t radix) : radix_(radix) {
        if (radix < 2) {
            throw std::invalid_argument("radix must be at least 2, got " +
                                        std::to_string(radix));
        }
    }

    std::uint64_t value() const noexcept { return radix_; }

    /// True when the radix fits the 0-9, A-Z alphabet.
    bool has_text_alphabet() const noexcept { return radix_ <= max_text_radix; }

    friend bool operator==(const Base&, const Base&) = default;

private:
    std::uint64_t radix_;
};

}  // namespace radixham
