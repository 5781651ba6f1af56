#pragma once

#include <cstddef>

#ifdef PLAP_HAVE_OPENMP
#include <omp.h>
#endif

#include "plap/rational.hpp"

namespace plap::kernels {

/// Runtime switch between the serial reference kernels and the OpenMP ones.
/// Both produce identical results: parallelism is only ever across output
/// rows/entries, each of which is computed in a fixed serial order.
bool parallel_enabled();
void set_parallel(bool on);

/// Thread count used by the parallel kernels (1 without OpenMP).
int thread_count();
void set_thread_count(int n);

/// Work threshold (in entry operations) below which the dispatching kernels
/// stay serial. Rational entries cost orders of magnitude more per operation
/// than doubles, so their cutoff is far lower.
template <typename T>
inline constexpr std::size_t parallel_cutoff = 4096;
template <>
inline constexpr std::size_t parallel_cutoff<Rational> = 256;

// C(m x n) = A(m x k) * B(k x n), row-major buffers. C must not alias A or B.

template <typename T>
void matmul_serial(const T* a, const T* b, T* c, std::size_t m, std::size_t k,
                   std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T acc{};
            for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
            c[i * n + j] = acc;
        }
    }
}

template <typename T>
void matmul_parallel(const T* a, const T* b, T* c, std::size_t m, std::size_t k,
                     std::size_t n) {
#ifdef PLAP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(m); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T acc{};
            for (std::size_t p = 0; p < k; ++p)
                acc += a[i * k + p] * b[p * n + j];
            c[i * n + j] = acc;
        }
    }
#else
    matmul_serial(a, b, c, m, k, n);
#endif
}

template <typename T>
void matmul(const T* a, const T* b, T* c, std::size_t m, std::size_t k, std::size_t n) {
    if (parallel_enabled() && m * k * n >= parallel_cutoff<T>)
        matmul_parallel(a, b, c, m, k, n);
    else
        matmul_serial(a, b, c, m, k, n);
}

// Elimination step: for each row r in rows[0..cnt), data[r,:] -= factor[r] * data[pivot,:]
// acting on columns [col_begin, n). factor is indexed by absolute row. Rows are
// disjoint from the pivot row, so updates are independent.

template <typename T>
void eliminate_rows_serial(T* data, std::size_t n, const std::size_t* rows,
                           std::size_t cnt, const T* factors, std::size_t pivot_row,
                           std::size_t col_begin) {
    const T* pivot = data + pivot_row * n;
    for (std::size_t idx = 0; idx < cnt; ++idx) {
        std::size_t r = rows[idx];
        const T& f = factors[idx];
        T* row = data + r * n;
        for (std::size_t j = col_begin; j < n; ++j) row[j] -= f * pivot[j];
    }
}

template <typename T>
void eliminate_rows_parallel(T* data, std::size_t n, const std::size_t* rows,
                             std::size_t cnt, const T* factors, std::size_t pivot_row,
                             std::size_t col_begin) {
#ifdef PLAP_HAVE_OPENMP
    const T* pivot = data + pivot_row * n;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long idx = 0; idx < static_cast<long long>(cnt); ++idx) {
        std::size_t r = rows[idx];
        const T& f = factors[idx];
        T* row = data + r * n;
        for (std::size_t j = col_begin; j < n; ++j) row[j] -= f * pivot[j];
    }
#else
    eliminate_rows_serial(data, n, rows, cnt, factors, pivot_row, col_begin);
#endif
}

template <typename T>
void eliminate_rows(T* data, std::size_t n, const std::size_t* rows, std::size_t cnt,
                    const T* factors, std::size_t pivot_row, std::size_t col_begin) {
    if (parallel_enabled() && cnt * (n - col_begin) >= parallel_cutoff<T>)
        eliminate_rows_parallel(data, n, rows, cnt, factors, pivot_row, col_begin);
    else
        eliminate_rows_serial(data, n, rows, cnt, factors, pivot_row, col_begin);
}

}  // namespace plap::kernels
