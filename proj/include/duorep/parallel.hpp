#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace duorep {

// Worker count: DUOREP_THREADS caps it, default = hardware concurrency.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DUOREP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min(unsigned(v), hw);
    }
    return hw;
}

// Runs fn(i) for i in [0, count). Tasks must write only to their own slots;
// results are deterministic regardless of the thread count.
inline void parallel_for(long count, const std::function<void(long)>& fn) {
    unsigned workers = thread_budget();
    if (workers <= 1 || count < 2) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    if (long(workers) > count) workers = unsigned(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (long i = long(w); i < count; i += long(workers)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace duorep
