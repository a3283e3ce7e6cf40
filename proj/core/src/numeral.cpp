#include "radixham/numeral.hpp"

#include <algorithm>
#include <stdexcept>

namespace radixham {

namespace {

constexpr std::string_view digit_alphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

// -1 when ch is not a digit in any supported base.
int digit_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    return -1;
}

void require_text_alphabet(const Base& base) {
    if (!base.has_text_alphabet()) {
        throw std::invalid_argument("textual numerals require base <= 36, got " +
                                    std::to_string(base.value()));
    }
}

}  // namespace

Numeral::Numeral(Base base, std::vector<std::uint64_t> digits)
    : base_(base), digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("a numeral has at least one digit; zero is [0]");
    }
    for (std::uint64_t d : digits_) {
        if (d >= base_.value()) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " out of range for base " +
                                        std::to_string(base_.value()));
        }
    }
}

Numeral to_numeral(std::uint64_t m, Base base) {
    std::vector<std::uint64_t> digits;
    do {
        digits.push_back(m % base.value());
        m /= base.value();
    } while (m != 0);
    std::reverse(digits.begin(), digits.end());
    return Numeral(base, std::move(digits));
}

std::uint64_t value_of(const Numeral& x) {
    std::uint64_t acc = 0;
    for (std::uint64_t d : x.digits()) {
        if (__builtin_mul_overflow(acc, x.base().value(), &acc) ||
            __builtin_add_overflow(acc, d, &acc)) {
            throw std::overflow_error("numeral value does not fit in 64 bits");
        }
    }
    return acc;
}

Numeral parse(std::string_view text, Base base) {
    require_text_alphabet(base);
    if (text.empty()) {
        throw std::invalid_argument("empty string is not a numeral");
    }
    std::vector<std::uint64_t> digits;
    digits.reserve(text.size());
    for (char ch : text) {
        const int d = digit_value(ch);
        if (d < 0 || static_cast<std::uint64_t>(d) >= base.value()) {
            throw std::invalid_argument("'" + std::string(1, ch) +
                                        "' is not a digit in base " +
                                        std::to_string(base.value()));
        }
        digits.push_back(static_cast<std::uint64_t>(d));
    }
    // Strip leading zeros down to canonical form, keeping one digit for zero.
    const auto first_significant = std::find_if(
        digits.begin(), digits.end() - 1, [](std::uint64_t d) { return d != 0; });
    digits.erase(digits.begin(), first_significant);
    return Numeral(base, std::move(digits));
}

std::string format(const Numeral& x) {
    require_text_alphabet(x.base());
    std::string out;
    out.reserve(x.length());
    for (std::uint64_t d : x.digits()) {
        out.push_back(digit_alphabet[static_cast<std::size_t>(d)]);
    }
    return out;
}

std::pair<Numeral, Numeral> pad_to_common_length(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) {
        throw std::invalid_argument("cannot pad numerals of different bases (" +
                                    std::to_string(a.base().value()) + " vs " +
                                    std::to_string(b.base().value()) + ")");
    }
    const std::size_t width = std::max(a.length(), b.length());
    const auto padded = [width](const Numeral& x) {
        std::vector<std::uint64_t> digits(width, 0);
        std::copy(x.digits().begin(), x.digits().end(),
                  digits.begin() + static_cast<std::ptrdiff_t>(width - x.length()));
        return Numeral(x.base(), std::move(digits));
    };
    return {padded(a), padded(b)};
}

}  // namespace radixham
