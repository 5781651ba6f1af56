#include <doctest.h>

#include <random>

#include "plap/kernels.hpp"
#include "plap/matrix.hpp"

using plap::ExactMatrix;
using plap::FloatMatrix;
using plap::Rational;

namespace {

ExactMatrix random_exact(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(static_cast<long long>(rng() % 21) - 10,
                               1 + static_cast<long long>(rng() % 5));
    return m;
}

FloatMatrix random_float(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    FloatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<double>(rng() % 1000) / 97.0 - 5.0;
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    ExactMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(a.transpose()(0, 1) == Rational(3));
    CHECK((a * ExactMatrix::identity(2)) == a);
    CHECK((a - a) == ExactMatrix(2, 2));
    ExactMatrix b = a.block(0, 1, 2, 1);
    CHECK(b.rows() == 2);
    CHECK(b(1, 0) == Rational(4));
    ExactMatrix h = ExactMatrix::hcat(a, b);
    CHECK(h.cols() == 3);
    CHECK(h(0, 2) == Rational(2));
    // 0-dimension edges
    ExactMatrix e(0, 3), f(3, 0);
    CHECK((e * f).rows() == 0);
    CHECK((f.transpose() * f).rows() == 0);
    CHECK((f * e).rows() == 3);
    CHECK((f * e) == ExactMatrix(3, 3));
}

TEST_CASE("serial and parallel kernels produce identical results") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 8; ++iter) {
        std::size_t m = 1 + rng() % 24, k = 1 + rng() % 24, n = 1 + rng() % 24;
        ExactMatrix a = random_exact(rng, m, k), b = random_exact(rng, k, n);
        ExactMatrix c_serial(m, n), c_parallel(m, n);
        plap::kernels::matmul_serial(a.data(), b.data(), c_serial.data(), m, k, n);
        plap::kernels::matmul_parallel(a.data(), b.data(), c_parallel.data(), m, k, n);
        CHECK(c_serial == c_parallel);

        FloatMatrix fa = random_float(rng, m, k), fb = random_float(rng, k, n);
        FloatMatrix fc_serial(m, n), fc_parallel(m, n);
        plap::kernels::matmul_serial(fa.data(), fb.data(), fc_serial.data(), m, k, n);
        plap::kernels::matmul_parallel(fa.data(), fb.data(), fc_parallel.data(), m, k, n);
        // per-entry dot products run in a fixed order, so bitwise equality holds
        CHECK(fc_serial == fc_parallel);
    }
}

TEST_CASE("elimination kernel serial/parallel equivalence") {
    std::mt19937_64 rng(23);
    std::size_t rows = 20, cols = 17;
    ExactMatrix a = random_exact(rng, rows, cols);
    ExactMatrix b = a;
    std::vector<std::size_t> elim;
    std::vector<Rational> factors;
    for (std::size_t r = 1; r < rows; ++r) {
        elim.push_back(r);
        factors.push_back(Rational(static_cast<long long>(rng() % 7) - 3, 2));
    }
    plap::kernels::eliminate_rows_serial(a.data(), cols, elim.data(), elim.size(),
                                         factors.data(), 0, 1);
    plap::kernels::eliminate_rows_parallel(b.data(), cols, elim.data(), elim.size(),
                                           factors.data(), 0, 1);
    CHECK(a == b);
    // spot-check against the definition
    ExactMatrix c = random_exact(rng, 3, 3), d = c;
    std::size_t one_row[] = {2};
    Rational one_factor[] = {Rational(5, 3)};
    plap::kernels::eliminate_rows(c.data(), 3, one_row, 1, one_factor, 0, 0);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(c(2, j) == d(2, j) - Rational(5, 3) * d(0, j));
}

TEST_CASE("parallel switch round trip") {
    bool before = plap::kernels::parallel_enabled();
    plap::kernels::set_parallel(false);
    CHECK_FALSE(plap::kernels::parallel_enabled());
    plap::kernels::set_parallel(true);
    plap::kernels::set_parallel(before);
    CHECK(plap::kernels::thread_count() >= 1);
}
