// Writes the bundled synthetic sample: 16 alternatives x 25 criteria shaped
// like the health-system hierarchy in data/hierarchy.json. The numbers are
// synthetic and do not describe any real country.
//
// Each alternative draws a latent level q ~ U(0,1); each cell mixes q with
// independent noise u ~ U(0,1) as t = 0.6 q + 0.4 u and maps t into the
// criterion's range, reversed for cost criteria so that a high q is good on
// every criterion. Values are rounded to 2 decimals. The generator uses
// std::mt19937_64 and converts its raw 64-bit output to [0,1) by hand, so the
// file is identical on every standard library.
//
// usage: generate_sample [seed] > data/sample/matrix.csv

#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "sspahp/core.hpp"
#include "sspahp/io.hpp"

namespace {

struct CriterionRange {
    const char* id;
    double lo;
    double hi;
    bool cost;
};

constexpr CriterionRange kCriteria[] = {
    {"C1", 300, 1500, false}, {"C2", 80, 300, false},   {"C3", 2.3, 5.0, false},
    {"C4", 4, 18, false},     {"C5", 2, 6, false},      {"C6", 10, 40, false},
    {"C7", 5, 35, false},     {"C8", 3, 12, true},      {"C9", 75, 90, false},
    {"C10", 10, 30, false},   {"C11", 1.5, 5, true},    {"C12", 3, 9, true},
    {"C13", 74, 83.5, false}, {"C14", 150, 500, true},  {"C15", 0, 6, true},
    {"C16", 0, 1.5, true},    {"C17", 0, 5, true},      {"C18", 85, 100, false},
    {"C19", 60, 86, false},   {"C20", 900, 6000, false}, {"C21", 4, 10, false},
    {"C22", 0.1, 0.8, false}, {"C23", 8, 25, false},    {"C24", 20, 100, false},
    {"C25", 50, 100, false},
};

constexpr std::size_t kAlternatives = 16;
constexpr std::uint64_t kDefaultSeed = 20220121;

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : kDefaultSeed;
    std::mt19937_64 rng(seed);

    constexpr std::size_t n = std::size(kCriteria);
    sspahp::DecisionMatrix matrix;
    matrix.values = sspahp::Matrix(kAlternatives, n);
    for (const auto& c : kCriteria) matrix.criterion_ids.emplace_back(c.id);
    for (std::size_t i = 0; i < kAlternatives; ++i) {
        matrix.alternative_ids.push_back((i < 9 ? "S0" : "S") + std::to_string(i + 1));
        const double q = unit(rng);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = kCriteria[j];
            const double t = 0.6 * q + 0.4 * unit(rng);
            const double x = c.cost ? c.hi - t * (c.hi - c.lo) : c.lo + t * (c.hi - c.lo);
            matrix.values(i, j) = std::round(x * 100.0) / 100.0;
        }
    }
    sspahp::io::write_decision_matrix(std::cout, matrix);
    return 0;
}
