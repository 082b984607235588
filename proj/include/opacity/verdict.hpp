#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace opacity {

struct SearchStats {
    std::size_t explored_nodes = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Outcome of a decision procedure.
///
/// When `holds` is false, `witness` is a violating word spelled with symbol
/// names. For the k-step notions `split` is the length of the witness prefix
/// that reaches the secret; the remainder is the continuation.
struct Verdict {
    bool holds = true;
    std::optional<std::vector<std::string>> witness;
    std::optional<std::size_t> split;
    SearchStats stats;
};

/// Wall time since construction.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::duration<double, std::milli> elapsed() const {
        return std::chrono::steady_clock::now() - start_;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace opacity
