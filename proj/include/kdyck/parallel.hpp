#pragma once

#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace kdyck {

// Worker count: KDYCK_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
inline unsigned effective_threads() {
    if (const char* env = std::getenv("KDYCK_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Runs work(i) for i in [0, jobs) on a small pool, then feeds the results to
// consume(i, result) on the calling thread in index order.  Deterministic
// output for any thread count; exceptions from workers are rethrown on the
// calling thread after the pool drains.
template <typename Result>
void ordered_parallel_for(std::size_t jobs,
                          const std::function<Result(std::size_t)>& work,
                          const std::function<void(std::size_t, Result&)>& consume,
                          unsigned threads = effective_threads()) {
    if (jobs == 0) return;
    if (threads <= 1 || jobs == 1) {
        for (std::size_t i = 0; i < jobs; ++i) {
            Result r = work(i);
            consume(i, r);
        }
        return;
    }

    std::mutex mu;
    std::condition_variable cv;
    std::size_t next_job = 0;
    std::vector<bool> done(jobs, false);
    std::vector<Result> results(jobs);
    std::exception_ptr failure;

    auto body = [&] {
        for (;;) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (failure || next_job >= jobs) return;
                mine = next_job++;
            }
            try {
                Result r = work(mine);
                std::lock_guard<std::mutex> lock(mu);
                results[mine] = std::move(r);
                done[mine] = true;
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    unsigned n = threads < jobs ? threads : static_cast<unsigned>(jobs);
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(body);

    std::size_t emitted = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (emitted < jobs) {
            cv.wait(lock, [&] { return done[emitted] || failure; });
            if (failure) break;
            Result r = std::move(results[emitted]);
            std::size_t idx = emitted++;
            lock.unlock();
            try {
                consume(idx, r);
            } catch (...) {
                lock.lock();
                if (!failure) failure = std::current_exception();
                break;
            }
            lock.lock();
        }
        next_job = jobs; // stop idle workers picking up more work
    }
    cv.notify_all();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace kdyck
