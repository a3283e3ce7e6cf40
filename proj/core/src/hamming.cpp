#include "radixham/hamming.hpp"

namespace radixham {

Distance hamming_numerals(const Numeral& a, const Numeral& b) {
    const auto [lhs, rhs] = pad_to_common_length(a, b);
    return hamming(lhs.digits(), rhs.digits());
}

}  // namespace radixham
