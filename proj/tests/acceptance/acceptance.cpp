// Acceptance suite. Every check recomputes its expected value from an
// independent oracle local to this file (plain digit expansions, geometric
// series in 128-bit arithmetic, strtoull) and compares the library and the
// CLI against it. One line per criterion; exit status 0 only if all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "radixham/base.hpp"
#include "radixham/hamming.hpp"
#include "radixham/numeral.hpp"
#include "radixham/ruler.hpp"

namespace {

using radixham::Base;

const std::vector<std::uint64_t> tested_bases{2, 3, 4, 5, 6, 10, 16, 36};

#ifndef RADIXHAM_CLI_PATH
#define RADIXHAM_CLI_PATH ""
#endif

std::string cli_path = RADIXHAM_CLI_PATH;

// Digit-by-digit comparison from the least significant end; a number that
// runs out of digits contributes zeros, which is exactly the left-zero
// padding convention. Keeps clear of the library's valuation shortcut.
std::uint64_t padded_digit_distance(std::uint64_t a, std::uint64_t b,
                                    std::uint64_t radix) {
    std::uint64_t differing = 0;
    while (a != 0 || b != 0) {
        if (a % radix != b % radix) {
            ++differing;
        }
        a /= radix;
        b /= radix;
    }
    return differing;
}

bool is_pure_power(std::uint64_t m, std::uint64_t radix) {
    if (m < radix) {
        return false;
    }
    while (m % radix == 0) {
        m /= radix;
    }
    return m == 1;
}

struct CliOutput {
    int exit_code = -1;
    std::string out;
};

CliOutput run_cli(const std::string& args) {
    CliOutput result;
    const std::string command = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int criteria_failed = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::string line = "[" + std::to_string(index) + "/8] " + name;
    if (line.size() < 64) {
        line.append(64 - line.size(), ' ');
    }
    line += ok ? " PASS" : " FAIL";
    if (!detail.empty()) {
        line += " (" + detail + ")";
    }
    std::puts(line.c_str());
    if (!ok) {
        ++criteria_failed;
    }
}

void criterion_distance_identity() {
    std::uint64_t at_powers = 0;
    std::uint64_t at_multiples = 0;
    std::uint64_t at_non_multiples = 0;
    std::string failure;
    for (const std::uint64_t radix : tested_bases) {
        const Base base(radix);
        for (std::uint64_t m = 1; m <= 5000; ++m) {
            const std::uint64_t expected = padded_digit_distance(m, m - 1, radix);
            const std::uint64_t got = radixham::consecutive_distance(m, base).value;
            if (got != expected) {
                failure = "m=" + std::to_string(m) + " base=" + std::to_string(radix) +
                          ": got " + std::to_string(got) + ", digit comparison says " +
                          std::to_string(expected);
                report(1, "consecutive distance equals padded digit comparison", false,
                       failure);
                return;
            }
            if (m % radix != 0) {
                ++at_non_multiples;
            } else if (is_pure_power(m, radix)) {
                ++at_powers;
            } else {
                ++at_multiples;
            }
        }
    }
    report(1, "consecutive distance equals padded digit comparison", true,
           std::to_string(at_powers + at_multiples + at_non_multiples) +
               " checks: " + std::to_string(at_powers) + " at exact powers, " +
               std::to_string(at_multiples) + " at proper multiples, " +
               std::to_string(at_non_multiples) + " at non-multiples");
}

void criterion_closed_form_vs_oracle() {
    std::uint64_t checks = 0;
    for (const std::uint64_t radix : tested_bases) {
        const Base base(radix);
        for (std::uint64_t m = 0; m <= 5000; ++m) {
            const std::uint64_t fast = radixham::sum_fast(m, base).total;
            const std::uint64_t naive = radixham::sum_naive(m, base).total;
            if (fast != naive) {
                report(2, "closed form equals the naive reference sum", false,
                       "m=" + std::to_string(m) + " base=" + std::to_string(radix) +
                           ": fast " + std::to_string(fast) + " vs naive " +
                           std::to_string(naive));
                return;
            }
            ++checks;
        }
    }
    for (const std::uint64_t radix : {2, 10}) {
        const Base base(radix);
        for (const std::uint64_t m : {100'000, 1'000'000}) {
            if (radixham::sum_fast(m, base).total !=
                radixham::sum_naive(m, base).total) {
                report(2, "closed form equals the naive reference sum", false,
                       "spot check m=" + std::to_string(m) +
                           " base=" + std::to_string(radix));
                return;
            }
            ++checks;
        }
    }
    report(2, "closed form equals the naive reference sum", true,
           std::to_string(checks) + " checks incl. spot m=1e5, 1e6");
}

void criterion_string_examples() {
    bool ok = radixham::hamming("math", "mats") == radixham::Distance{1} &&
              radixham::hamming("math", "math") == radixham::Distance{0};
    bool rejected = false;
    try {
        radixham::hamming("math", "mat");
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    report(3, "character-string distances; unequal lengths rejected", ok && rejected,
           ok && rejected ? "H(math,mats)=1, H(math,math)=0, length mismatch throws"
                          : "");
}

void criterion_non_multiple_sharpness() {
    std::uint64_t checks = 0;
    for (const std::uint64_t radix : tested_bases) {
        const Base base(radix);
        for (std::uint64_t m = 1; m <= 5000; ++m) {
            if (m % radix == 0) {
                continue;
            }
            if (radixham::consecutive_distance(m, base).value != 1) {
                report(4, "non-multiples of the base sit at distance exactly 1",
                       false,
                       "m=" + std::to_string(m) + " base=" + std::to_string(radix));
                return;
            }
            ++checks;
        }
    }
    report(4, "non-multiples of the base sit at distance exactly 1", true,
           std::to_string(checks) + " checks");
}

void criterion_telescoping() {
    std::uint64_t checks = 0;
    for (const std::uint64_t radix : tested_bases) {
        const Base base(radix);
        std::uint64_t previous = radixham::sum_fast(0, base).total;
        for (std::uint64_t m = 1; m <= 5000; ++m) {
            const std::uint64_t current = radixham::sum_fast(m, base).total;
            const std::uint64_t step = padded_digit_distance(m, m - 1, radix);
            if (current - previous != step) {
                report(5, "prefix sums telescope to single distances", false,
                       "m=" + std::to_string(m) + " base=" + std::to_string(radix));
                return;
            }
            previous = current;
            ++checks;
        }
    }
    report(5, "prefix sums telescope to single distances", true,
           std::to_string(checks) + " checks");
}

void criterion_geometric_identity() {
    std::uint64_t checks = 0;
    constexpr std::uint64_t limit = 1'000'000'000'000;
    for (const std::uint64_t radix : {2, 3, 10}) {
        const Base base(radix);
        unsigned __int128 power = 1;
        for (std::uint64_t k = 0; power <= limit; ++k, power *= radix) {
            const unsigned __int128 expected = (power * radix - 1) / (radix - 1);
            const std::uint64_t fast =
                radixham::sum_fast(static_cast<std::uint64_t>(power), base).total;
            const std::uint64_t identity = radixham::sum_power_identity(k, base);
            if (static_cast<unsigned __int128>(fast) != expected ||
                identity != fast) {
                report(6, "geometric series at exact powers of the base", false,
                       "k=" + std::to_string(k) + " base=" + std::to_string(radix));
                return;
            }
            ++checks;
        }
    }
    report(6, "geometric series at exact powers of the base", true,
           std::to_string(checks) + " powers up to 1e12, bases 2, 3, 10");
}

void criterion_term_count_and_speed() {
    for (const std::uint64_t m :
         {1'000ULL, 1'000'000ULL, 1'000'000'000ULL, 1'000'000'000'000ULL}) {
        for (const std::uint64_t radix : tested_bases) {
            // floor(log_radix m): the largest j with radix^j <= m.
            std::uint64_t log_floor = 0;
            std::uint64_t power = 1;
            while (power <= m / radix) {
                power *= radix;
                ++log_floor;
            }
            const auto result = radixham::sum_fast(m, Base(radix));
            if (result.terms_evaluated > log_floor + 1) {
                report(7, "term count is logarithmic; closed form under 1 ms", false,
                       "m=" + std::to_string(m) + " base=" + std::to_string(radix) +
                           ": " + std::to_string(result.terms_evaluated) +
                           " terms > " + std::to_string(log_floor + 1));
                return;
            }
        }
    }

    double best_seconds = 1e9;
    for (int run = 0; run < 9; ++run) {
        const auto start = std::chrono::steady_clock::now();
        const auto timed = radixham::sum_fast(1'000'000'000'000, Base(2));
        const auto stop = std::chrono::steady_clock::now();
        if (timed.terms_evaluated != 40) {
            report(7, "term count is logarithmic; closed form under 1 ms", false,
                   "unexpected term count " + std::to_string(timed.terms_evaluated));
            return;
        }
        const double elapsed = std::chrono::duration<double>(stop - start).count();
        if (elapsed < best_seconds) {
            best_seconds = elapsed;
        }
    }
    const bool fast_enough = best_seconds < 1e-3;
    report(7, "term count is logarithmic; closed form under 1 ms", fast_enough,
           "32 bound checks; S(1e12, base 2) in " +
               std::to_string(best_seconds * 1e6) + " us");
}

void criterion_cli_golden() {
    // Expected bytes are regenerated here from the oracles, not hard-coded.
    const std::string expected_sum =
        std::to_string(radixham::sum_naive(4, Base(2)).total) + "\n";

    const std::uint64_t lhs = std::strtoull("1000", nullptr, 2);
    const std::uint64_t rhs = std::strtoull("111", nullptr, 2);
    const std::string expected_dist =
        std::to_string(padded_digit_distance(lhs, rhs, 2)) + "\n";

    std::string expected_bfile;
    for (std::uint64_t i = 1; i <= 6; ++i) {
        expected_bfile += std::to_string(i) + " " +
                          std::to_string(padded_digit_distance(i, i - 1, 3)) + "\n";
    }

    const CliOutput sum = run_cli("sum --base 2 4");
    const CliOutput dist = run_cli("dist --base 2 1000 111");
    const CliOutput seq = run_cli("seq --base 3 --format bfile 6");

    const bool ok = sum.exit_code == 0 && sum.out == expected_sum &&
                    dist.exit_code == 0 && dist.out == expected_dist &&
                    seq.exit_code == 0 && seq.out == expected_bfile;
    report(8, "CLI output matches oracle-regenerated golden text", ok,
           ok ? "sum=7, dist=4, six b-file lines"
              : "CLI at " + cli_path + " disagreed with the oracle");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        cli_path = argv[1];
    }

    try {
        criterion_distance_identity();
        criterion_closed_form_vs_oracle();
        criterion_string_examples();
        criterion_non_multiple_sharpness();
        criterion_telescoping();
        criterion_geometric_identity();
        criterion_term_count_and_speed();
        criterion_cli_golden();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected exception: %s\n", e.what());
        return 1;
    }

    std::printf("%d/8 criteria passed\n", 8 - criteria_failed);
    return criteria_failed == 0 ? 0 : 1;
}
