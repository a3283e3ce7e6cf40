// Command-line front end: base conversion, padded Hamming distances,
// distance sums (closed form or reference loop), ruler sequences, and a
// fast-vs-naive timing report.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "radixham/base.hpp"
#include "radixham/hamming.hpp"
#include "radixham/numeral.hpp"
#include "radixham/ruler.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t default_naive_guard = 10'000'000;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void run_convert(const std::string& value, std::uint64_t from, std::uint64_t to) {
    const radixham::Numeral input = radixham::parse(value, radixham::Base(from));
    const std::uint64_t m = radixham::value_of(input);
    std::cout << radixham::format(radixham::to_numeral(m, radixham::Base(to))) << '\n';
}

void run_dist(const std::string& lhs, const std::string& rhs, std::uint64_t base,
              bool json) {
    const radixham::Base b(base);
    const radixham::Numeral a = radixham::parse(lhs, b);
    const radixham::Numeral c = radixham::parse(rhs, b);
    const auto [padded_lhs, padded_rhs] = radixham::pad_to_common_length(a, c);
    const radixham::Distance d =
        radixham::hamming(padded_lhs.digits(), padded_rhs.digits());
    if (json) {
        const ordered_json report{{"base", b.value()},
                                  {"lhs", radixham::format(a)},
                                  {"rhs", radixham::format(c)},
                                  {"padded_lhs", radixham::format(padded_lhs)},
                                  {"padded_rhs", radixham::format(padded_rhs)},
                                  {"distance", d.value}};
        std::cout << report.dump() << '\n';
    } else {
        std::cout << d.value << '\n';
    }
}

void enforce_naive_guard(std::uint64_t m, std::uint64_t guard) {
    if (m > guard) {
        throw std::runtime_error("naive mode over m=" + std::to_string(m) +
                                 " exceeds the iteration guard (" +
                                 std::to_string(guard) +
                                 "); raise --guard or use --mode fast");
    }
}

void run_sum(std::uint64_t m, std::uint64_t base, const std::string& mode,
             std::uint64_t guard, bool json) {
    const radixham::Base b(base);
    radixham::SumResult result;
    if (mode == "naive") {
        enforce_naive_guard(m, guard);
        result = radixham::sum_naive(m, b);
    } else {
        result = radixham::sum_fast(m, b);
    }
    if (json) {
        const ordered_json report{{"base", b.value()},
                                  {"m", m},
                                  {"total", result.total},
                                  {"mode", mode},
                                  {"terms", result.terms_evaluated}};
        std::cout << report.dump() << '\n';
    } else {
        std::cout << result.total << '\n';
    }
}

void run_seq(std::uint64_t m, std::uint64_t base, const std::string& format) {
    const bool bfile = format == "bfile";
    std::uint64_t index = 1;
    for (radixham::Distance d : radixham::distance_sequence(m, radixham::Base(base))) {
        if (bfile) {
            std::cout << index << ' ' << d.value << '\n';
        } else {
            std::cout << d.value << '\n';
        }
        ++index;
    }
}

void run_bench(std::uint64_t m, std::uint64_t base, bool include_naive,
               std::uint64_t guard) {
    const radixham::Base b(base);

    const auto fast_start = std::chrono::steady_clock::now();
    const radixham::SumResult fast = radixham::sum_fast(m, b);
    const double fast_time = seconds_since(fast_start);

    ordered_json report{{"base", b.value()},
                        {"m", m},
                        {"fast_total", fast.total},
                        {"fast_terms", fast.terms_evaluated},
                        {"fast_time", fast_time}};

    if (include_naive) {
        if (m > guard) {
            std::cerr << "note: naive leg skipped, m=" << m
                      << " exceeds the iteration guard (" << guard << ")\n";
        } else {
            const auto naive_start = std::chrono::steady_clock::now();
            const radixham::SumResult naive = radixham::sum_naive(m, b);
            const double naive_time = seconds_since(naive_start);
            if (naive.total != fast.total) {
                throw std::runtime_error(
                    "fast and naive totals disagree: " + std::to_string(fast.total) +
                    " vs " + std::to_string(naive.total));
            }
            report["naive_total"] = naive.total;
            report["naive_terms"] = naive.terms_evaluated;
            report["naive_time"] = naive_time;
        }
    }

    std::cout << report.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Radix numerals, Hamming distances between consecutive integers, "
        "and their prefix sums"};
    app.require_subcommand(1);

    const auto text_base = CLI::Range(std::uint64_t{2}, std::uint64_t{36});
    const auto any_base =
        CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max());

    auto* convert = app.add_subcommand("convert", "Rewrite a numeral in another base");
    std::string convert_value;
    std::uint64_t convert_from = 0;
    std::uint64_t convert_to = 0;
    convert->add_option("value", convert_value, "Numeral to convert")->required();
    convert->add_option("--from", convert_from, "Base the input is written in")
        ->required()
        ->check(text_base);
    convert->add_option("--to", convert_to, "Base to write the output in")
        ->required()
        ->check(text_base);
    convert->callback([&] { run_convert(convert_value, convert_from, convert_to); });

    auto* dist = app.add_subcommand(
        "dist", "Hamming distance between two numerals after left-zero padding");
    std::string dist_lhs;
    std::string dist_rhs;
    std::uint64_t dist_base = 0;
    bool dist_json = false;
    dist->add_option("lhs", dist_lhs, "First numeral")->required();
    dist->add_option("rhs", dist_rhs, "Second numeral")->required();
    dist->add_option("--base", dist_base, "Base both numerals are written in")
        ->required()
        ->check(text_base);
    dist->add_flag("--json", dist_json, "Emit the full report as one JSON object");
    dist->callback([&] { run_dist(dist_lhs, dist_rhs, dist_base, dist_json); });

    auto* sum = app.add_subcommand(
        "sum", "Sum of Hamming distances between consecutive integers in [0, m]");
    std::uint64_t sum_m = 0;
    std::uint64_t sum_base = 0;
    std::string sum_mode = "fast";
    std::uint64_t sum_guard = default_naive_guard;
    bool sum_json = false;
    sum->add_option("m", sum_m, "Upper limit of the sum (decimal)")->required();
    sum->add_option("--base", sum_base, "Base of the digit expansions")
        ->required()
        ->check(any_base);
    sum->add_option("--mode", sum_mode, "fast: closed form; naive: reference loop")
        ->check(CLI::IsMember({"fast", "naive"}))
        ->capture_default_str();
    sum->add_option("--guard", sum_guard, "Iteration cap for naive mode")
        ->capture_default_str();
    sum->add_flag("--json", sum_json, "Emit the result as one JSON object");
    sum->callback([&] { run_sum(sum_m, sum_base, sum_mode, sum_guard, sum_json); });

    auto* seq = app.add_subcommand(
        "seq", "Distances between consecutive integers, one per line, for i = 1..m");
    std::uint64_t seq_m = 0;
    std::uint64_t seq_base = 0;
    std::string seq_format = "plain";
    seq->add_option("m", seq_m, "Last index of the sequence (decimal)")
        ->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("--base", seq_base, "Base of the digit expansions")
        ->required()
        ->check(any_base);
    seq->add_option("--format", seq_format,
                    "plain: value per line; bfile: \"index value\" pairs")
        ->check(CLI::IsMember({"plain", "bfile"}))
        ->capture_default_str();
    seq->callback([&] { run_seq(seq_m, seq_base, seq_format); });

    auto* bench = app.add_subcommand(
        "bench", "Time the closed form against the reference loop, report as JSON");
    std::uint64_t bench_m = 0;
    std::uint64_t bench_base = 0;
    bool bench_naive = false;
    std::uint64_t bench_guard = default_naive_guard;
    bench->add_option("m", bench_m, "Upper limit of the sum (decimal)")->required();
    bench->add_option("--base", bench_base, "Base of the digit expansions")
        ->required()
        ->check(any_base);
    bench->add_flag("--include-naive", bench_naive,
                    "Also run the naive reference loop (times in seconds)");
    bench->add_option("--guard", bench_guard, "Iteration cap for the naive leg")
        ->capture_default_str();
    bench->callback([&] { run_bench(bench_m, bench_base, bench_naive, bench_guard); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
