#include "biquad/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace biquad {

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("BIQUAD_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) return static_cast<int>(std::min<long>(parsed, 256));
    }
    return static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), n);
    // Small jobs are not worth the thread spawn.
    if (workers <= 1 || n < 256) {
        fn(0, n);
        return;
    }

    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, w, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

} // namespace biquad
