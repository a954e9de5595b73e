#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lenspec {

// Worker count: LENSPEC_THREADS wins, then hardware concurrency.
inline int default_thread_count() {
    if (const char* env = std::getenv("LENSPEC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// fn(i) for i in [0, count), work-stealing over an atomic counter. The first
// exception thrown by any worker is rethrown on the caller.
inline void parallel_for(long count, const std::function<void(long)>& fn,
                         int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    if (count < static_cast<long>(threads)) threads = static_cast<int>(count);
    if (threads <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace lenspec
