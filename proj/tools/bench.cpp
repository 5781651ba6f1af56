// Benchmark comparing the serial reference kernels with the OpenMP ones.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "plap/kernels.hpp"
#include "plap/linalg.hpp"
#include "plap/matrix.hpp"

using namespace plap;

namespace {

double seconds(const std::function<void()>& body, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count() / reps;
}

ExactMatrix random_exact(std::mt19937_64& rng, std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long long>(rng() % 19) - 9,
                               1 + static_cast<long long>(rng() % 7));
    return m;
}

FloatMatrix random_float(std::mt19937_64& rng, std::size_t n) {
    FloatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<double>(rng() % 4096) / 512.0 - 4.0;
    return m;
}

void row(const char* name, std::size_t n, double serial, double parallel) {
    std::printf("%-22s n=%-5zu serial %10.3f ms   parallel %10.3f ms   speedup %.2fx\n",
                name, n, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::mt19937_64 rng(1);
    std::printf("threads: %d\n", kernels::thread_count());

    for (std::size_t n : {24, 48, 96}) {
        ExactMatrix a = random_exact(rng, n), b = random_exact(rng, n);
        ExactMatrix c(n, n);
        double serial = seconds(
            [&] { kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n); }, reps);
        double parallel = seconds(
            [&] { kernels::matmul_parallel(a.data(), b.data(), c.data(), n, n, n); },
            reps);
        row("exact matmul", n, serial, parallel);
    }

    for (std::size_t n : {128, 256, 512}) {
        FloatMatrix a = random_float(rng, n), b = random_float(rng, n);
        FloatMatrix c(n, n);
        double serial = seconds(
            [&] { kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n); }, reps);
        double parallel = seconds(
            [&] { kernels::matmul_parallel(a.data(), b.data(), c.data(), n, n, n); },
            reps);
        row("float matmul", n, serial, parallel);
    }

    // Gaussian elimination driven through the row-update kernel; small integer
    // entries keep the rational growth representative of chain-level matrices
    for (std::size_t n : {32, 48}) {
        ExactMatrix a0(2 * n, n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a0(i, j) = Rational(static_cast<long long>(rng() % 5) - 2);
        auto eliminate = [&](bool parallel_on) {
            bool before = kernels::parallel_enabled();
            kernels::set_parallel(parallel_on);
            ExactMatrix a = a0;
            linalg::reduced_row_echelon(std::move(a));
            kernels::set_parallel(before);
        };
        double serial = seconds([&] { eliminate(false); }, reps);
        double parallel = seconds([&] { eliminate(true); }, reps);
        row("exact row reduction", n, serial, parallel);
    }
    return 0;
}
