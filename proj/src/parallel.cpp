#include "chiralix/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chiralix::parallel {

namespace {

int env_threads() {
    const char* env = std::getenv("CHIRALIX_THREADS");
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (env == nullptr || *env == '\0') return hw;
    char* end = nullptr;
    long k = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || k < 1) return hw;
    return static_cast<int>(k < hw ? k : hw);
}

std::atomic<int> g_override{0};

}  // namespace

int max_threads() {
    int k = g_override.load(std::memory_order_relaxed);
    return k >= 1 ? k : env_threads();
}

void set_max_threads(int k) {
    g_override.store(k < 1 ? 0 : k, std::memory_order_relaxed);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = static_cast<std::size_t>(max_threads());
    if (workers > n) workers = n;
    if (workers <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace chiralix::parallel
