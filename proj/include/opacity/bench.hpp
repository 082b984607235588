#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "opacity/reductions.hpp"

namespace opacity {

enum class BenchFamily { sat, coloring };

/// {x1}, {-x1} over n variables: unsatisfiable at every n >= 1 with a 2(n+1)-letter alphabet.
CnfFormula unsat_family_formula(std::size_t n);
/// G(n, 1/2) drawn from mt19937 seeded with seed_seq{seed, n}.
ColorGraph random_family_graph(std::size_t n, std::uint32_t seed);

struct BenchRow {
    std::size_t n = 0;
    std::size_t states = 0;
    std::size_t transitions = 0;
    bool holds = true;
    std::size_t witness_length = 0;
    std::size_t explored = 0;
    double millis = 0;
};

struct BenchReport {
    std::string family;
    std::vector<BenchRow> rows;  // ascending n

    std::string to_tsv() const;
};

BenchReport bench_family(BenchFamily family, std::size_t n_min, std::size_t n_max, std::uint32_t seed = 0);

}  // namespace opacity
