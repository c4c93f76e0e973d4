#include "primecomp/common.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace primecomp {

namespace {
std::atomic<unsigned> g_thread_budget{0};
}

void set_thread_budget(unsigned n) { g_thread_budget.store(n); }

unsigned thread_budget() {
    unsigned n = g_thread_budget.load();
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    return n;
}

std::uint64_t memory_ceiling() {
    static const std::uint64_t ceiling = [] {
        if (const char* env = std::getenv("PRIMECOMP_MEMORY_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::uint64_t>(v);
            warn(std::string("ignoring unparsable PRIMECOMP_MEMORY_LIMIT=") + env);
        }
        return std::uint64_t{4} << 30;  // 4 GiB default
    }();
    return ceiling;
}

void warn(const std::string& msg) {
    std::fprintf(stderr, "warning: %s\n", msg.c_str());
}

}  // namespace primecomp
