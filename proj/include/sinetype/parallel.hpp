#pragma once

/*
 * parallel.hpp — bounded fork-join over an index range.
 *
 * SINETYPE_THREADS caps the worker count (unset: hardware concurrency).
 * Work items write only to their own slot, so results are identical for any
 * thread count; exceptions are captured and rethrown on the calling thread.
 */

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sinetype {

inline int max_threads() {
    if (const char* env = std::getenv("SINETYPE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    int workers = max_threads();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (std::size_t(workers) > count) workers = int(count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = std::size_t(t); i < count; i += std::size_t(workers)) body(i);
            } catch (...) {
                errors[std::size_t(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace sinetype
