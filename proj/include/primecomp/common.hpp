#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primecomp {

inline constexpr const char* kVersion = "0.1.0";

// Thrown when a requested computation would exceed the configured memory
// ceiling (CLI maps this to exit status 3).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Global thread budget. 0 = use hardware concurrency. Set once by the CLI;
// library code reads it through thread_budget().
void set_thread_budget(unsigned n);
unsigned thread_budget();

// Memory ceiling in bytes for single allocations such as sieve bitmaps.
// Overridable via the PRIMECOMP_MEMORY_LIMIT environment variable.
std::uint64_t memory_ceiling();

// Writes "warning: ..." to stderr. All logging goes to stderr; stdout is
// reserved for data.
void warn(const std::string& msg);

// Neumaier-compensated summation; fixed accumulation order gives
// reproducible sums.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Smallest integer >= x, tolerant of pow() landing a hair above an exact
// integer. All threshold computations share this so they agree bit-for-bit.
inline std::int64_t int_threshold_ceil(double x) {
    return static_cast<std::int64_t>(std::ceil(x - 1e-9));
}

// Largest integer <= x with the same nudge.
inline std::int64_t int_threshold_floor(double x) {
    return static_cast<std::int64_t>(std::floor(x + 1e-9));
}

}  // namespace primecomp
