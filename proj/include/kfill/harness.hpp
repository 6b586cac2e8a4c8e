#pragma once

#include <iosfwd>

#include "kfill/oracle.hpp"
#include "kfill/pushdown.hpp"

namespace kfill {

enum class GenMethod { RelatorProduct, CommutatorStack, PushdownRoundtrip };

const char* gen_method_name(GenMethod m);

// Deterministic null-homotopic word generator; reduced length lands within
// +-50% of the requested length (retries internally).
Word gen_null_word(const Ambient& amb, std::uint64_t seed, std::int64_t length, GenMethod method);

struct BenchConfig {
    int n = 3;
    int r = 2;
    std::vector<std::int64_t> lengths;
    int samples = 5;  // per length and generator
    std::uint64_t seed = 1;
    std::string csv_path;
    double slope_tolerance = 0.5;
    int workers = 0;  // 0 = KFILL_WORKERS or hardware
};

struct BenchRow {
    int n = 0, r = 0;
    std::uint64_t seed = 0;
    GenMethod method = GenMethod::RelatorProduct;
    std::int64_t len = 0;
    std::int64_t area = 0;
    std::int64_t radius = 0;
    double ms = 0;
};

struct GrowthReport {
    std::vector<std::int64_t> lengths;
    std::vector<std::int64_t> max_area;
    std::vector<double> mean_area;
    double slope = 0;
    double residual = 0;
    bool slope_defined = false;
    int claimed_exponent = 0;  // d_n + 2
    bool pass = false;
    std::string str() const;
};

int dehn_exponent(int n);  // d_n: 7, 3, 2

GrowthReport fit_growth(const std::vector<BenchRow>& rows, int n, double tolerance);

std::vector<BenchRow> bench_growth(const BenchConfig& cfg, GrowthReport* report);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

// Self-contained log-log SVG scatter of area against length.
void write_growth_svg(std::ostream& os, const std::vector<BenchRow>& rows);

// Flat `key = value` config text.
BenchConfig parse_bench_config(std::istream& is);

// Fitted-constant report for the tactic library (measured maxima).
std::string constants_report(int n, int rank, std::uint64_t seed, int draws);

int cli_dispatch(int argc, char** argv);

}  // namespace kfill
