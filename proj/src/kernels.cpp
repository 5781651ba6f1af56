#include "plap/kernels.hpp"

#include <atomic>

namespace plap::kernels {

namespace {
std::atomic<bool> g_parallel{true};
std::atomic<int> g_threads{0};  // 0 = OpenMP default
}  // namespace

bool parallel_enabled() {
#ifdef PLAP_HAVE_OPENMP
    return g_parallel.load(std::memory_order_relaxed);
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int thread_count() {
#ifdef PLAP_HAVE_OPENMP
    int n = g_threads.load(std::memory_order_relaxed);
    return n > 0 ? n : omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int n) {
    g_threads.store(n, std::memory_order_relaxed);
#ifdef PLAP_HAVE_OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

}  // namespace plap::kernels
