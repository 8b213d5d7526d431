#include "gccha/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gccha {

int thread_budget() {
    if (const char* env = std::getenv("GCCHA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(Index begin, Index end, const std::function<void(Index)>& fn,
                  int max_threads) {
    const Index count = end - begin;
    if (count <= 0) return;
    int budget = max_threads > 0 ? max_threads : thread_budget();
    int workers = static_cast<int>(std::min<Index>(budget, count));
    if (workers <= 1) {
        for (Index i = begin; i < end; ++i) fn(i);
        return;
    }

    std::atomic<Index> next(begin);
    std::exception_ptr first_error;
    std::atomic<bool> failed(false);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                Index i = next.fetch_add(1);
                if (i >= end || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gccha
