#pragma once

#include <concepts>
#include <cstdint>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "radixham/numeral.hpp"

namespace radixham {

/// Count of positions at which two equal-length symbol sequences differ.
struct Distance {
    std::uint64_t value = 0;

    friend auto operator<=>(const Distance&, const Distance&) = default;
};

namespace detail {

// Raw arrays are excluded so that string literals route through the
// string_view overload instead of counting their terminator.
template <typename R>
concept symbol_range = std::ranges::input_range<R> && std::ranges::sized_range<R> &&
                       !std::is_array_v<std::remove_cvref_t<R>>;

template <typename R1, typename R2>
Distance count_differing_positions(R1&& lhs, R2&& rhs) {
    if (std::ranges::size(lhs) != std::ranges::size(rhs)) {
        throw std::invalid_argument(
            "hamming distance requires equal-length sequences (" +
            std::to_string(std::ranges::size(lhs)) + " vs " +
            std::to_string(std::ranges::size(rhs)) + ")");
    }
    Distance d;
    auto it = std::ranges::begin(rhs);
    for (auto&& symbol : lhs) {
        if (symbol != *it) {
            ++d.value;
        }
        ++it;
    }
    return d;
}

}  // namespace detail

/// Symbolwise Hamming distance between two equal-length sequences of any
/// symbol type with equality. Unequal lengths are an error, never a silent
/// truncation.
template <detail::symbol_range R1, detail::symbol_range R2>
    requires std::equality_comparable_with<std::ranges::range_reference_t<R1>,
                                           std::ranges::range_reference_t<R2>>
Distance hamming(R1&& lhs, R2&& rhs) {
    return detail::count_differing_positions(std::forward<R1>(lhs),
                                             std::forward<R2>(rhs));
}

/// Character-string form, so hamming("math", "mats") measures characters.
inline Distance hamming(std::string_view lhs, std::string_view rhs) {
    return detail::count_differing_positions(lhs, rhs);
}

/// Hamming distance between two numerals of the same base after left-zero
/// padding to a common length. Unequal lengths never reach the raw distance.
Distance hamming_numerals(const Numeral& a, const Numeral& b);

}  // namespace radixham
