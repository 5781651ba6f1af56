#include <doctest.h>

#include <cmath>
#include <random>

#include "plap/errors.hpp"
#include "plap/linalg.hpp"

using namespace plap;
using linalg::Spectrum;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

ExactMatrix random_exact(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(static_cast<long long>(rng() % 9) - 4,
                               1 + static_cast<long long>(rng() % 3));
    return m;
}

bool penrose_exact(const ExactMatrix& a, const ExactMatrix& p) {
    return a * p * a == a && p * a * p == p && (a * p).transpose() == a * p &&
           (p * a).transpose() == p * a;
}

double rel_err(const FloatMatrix& a, const FloatMatrix& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            num = std::max(num, std::abs(a(i, j) - b(i, j)));
            den = std::max(den, std::abs(b(i, j)));
        }
    return den > 0 ? num / den : num;
}

// the worked example N matrix (down Laplacian of K conjugated into J u B)
ExactMatrix fix1_nmat() {
    return ExactMatrix{{R(3), R(-1, 2), R(1), R(0), R(0)},
                       {R(-1), R(2), R(1), R(-1), R(1)},
                       {R(2), R(1), R(2), R(0), R(0)},
                       {R(0), R(-1, 2), R(0), R(1), R(-1)},
                       {R(0), R(1), R(0), R(-2), R(2)}};
}

}  // namespace

TEST_CASE("exact pseudoinverse golden values") {
    CHECK(linalg::pseudoinverse(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
    ExactMatrix t{{R(1), R(-1)}, {R(-2), R(2)}};
    ExactMatrix expected{{R(1, 10), R(-1, 5)}, {R(-1, 10), R(1, 5)}};
    CHECK(linalg::pseudoinverse(t) == expected);
    CHECK(penrose_exact(t, expected));
    ExactMatrix zero(3, 5);
    ExactMatrix pz = linalg::pseudoinverse(zero);
    CHECK(pz.rows() == 5);
    CHECK(pz.cols() == 3);
    CHECK(pz == ExactMatrix(5, 3));
}

TEST_CASE("exact pseudoinverse satisfies the Penrose identities on randoms") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        ExactMatrix a = random_exact(rng, r, c);
        CHECK(penrose_exact(a, linalg::pseudoinverse(a)));
    }
}

TEST_CASE("schur complement block conventions") {
    ExactMatrix n = fix1_nmat();
    CHECK(linalg::schur_complement(n, 0) == n);
    CHECK(linalg::schur_complement(n, 5).rows() == 0);
    ExactMatrix expected{{R(3), R(-1, 2), R(1)}, {R(-1), R(3, 2), R(1)}, {R(2), R(1), R(2)}};
    CHECK(linalg::schur_complement(n, 2) == expected);
}

TEST_CASE("rank and kernel golden values") {
    ExactMatrix down{{R(3), R(-1), R(2)}, {R(-1, 2), R(3, 2), R(1)}, {R(1), R(1), R(2)}};
    ExactMatrix k = linalg::kernel_basis(down);
    REQUIRE(k.cols() == 1);
    // spanned by (1, 1, -1)
    Rational scale = k(0, 0);
    CHECK(scale != R(0));
    CHECK(k(1, 0) == scale);
    CHECK(k(2, 0) == -scale);
    CHECK(linalg::kernel_basis(ExactMatrix::identity(4)).cols() == 0);
    CHECK(linalg::rank(ExactMatrix{{R(1), R(-1)}, {R(-2), R(2)}}) == 1);
}

TEST_CASE("rank agrees with kernel dimension on randoms") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        ExactMatrix a = random_exact(rng, r, c);
        ExactMatrix k = linalg::kernel_basis(a);
        CHECK(linalg::rank(a) + k.cols() == c);
        if (k.cols() > 0) CHECK(a * k == ExactMatrix(r, k.cols()));
        CHECK(linalg::rank(a) == linalg::rank(a.transpose()));
    }
}

TEST_CASE("rank handles structured deficiency and skipped columns") {
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 40; ++iter) {
        // rank(B C) <= inner dimension by construction
        std::size_t m = 2 + rng() % 5, inner = 1 + rng() % 3, n = 2 + rng() % 5;
        ExactMatrix b = random_exact(rng, m, inner), c = random_exact(rng, inner, n);
        ExactMatrix a = b * c;
        std::size_t expected = n - linalg::kernel_basis(a).cols();
        CHECK(linalg::rank(a) <= std::min(inner, std::min(m, n)));
        CHECK(linalg::rank(a) == expected);
        // prepend zero columns so the elimination must skip them
        ExactMatrix padded = ExactMatrix::hcat(ExactMatrix(m, 2), a);
        CHECK(linalg::rank(padded) == expected);
        // duplicated columns change nothing
        CHECK(linalg::rank(ExactMatrix::hcat(a, a)) == expected);
    }
}

TEST_CASE("exact inverse and solve") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 1 + rng() % 5;
        ExactMatrix a = random_exact(rng, n, n);
        if (linalg::rank(a) != n) continue;
        CHECK(a * linalg::inverse(a) == ExactMatrix::identity(n));
        ExactMatrix x = random_exact(rng, n, 2);
        CHECK(linalg::solve(a, a * x) == x);
    }
    CHECK_THROWS_AS(linalg::inverse(ExactMatrix(2, 2)), SingularMatrixError);
}

TEST_CASE("weighted complement basis") {
    // the worked example complement inside Im(f_1): V = span{(1,1,-1)}, weights (2,1,1)
    ExactMatrix v(3, 1);
    v(0, 0) = R(1);
    v(1, 0) = R(1);
    v(2, 0) = R(-1);
    std::vector<Rational> w{R(2), R(1), R(1)};
    ExactMatrix c = linalg::weighted_complement_basis(v, w);
    REQUIRE(c.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational dot;
        for (std::size_t i = 0; i < 3; ++i) dot += c(i, j) * v(i, 0) / w[i];
        CHECK(dot == R(0));
    }
    // the worked example choice {2[xy]-[yz], [yz]+[xz]} passes the same predicate
    ExactMatrix example_choice{{R(2), R(0)}, {R(-1), R(1)}, {R(0), R(1)}};
    for (std::size_t j = 0; j < 2; ++j) {
        Rational dot;
        for (std::size_t i = 0; i < 3; ++i) dot += example_choice(i, j) * v(i, 0) / w[i];
        CHECK(dot == R(0));
    }
    // V full space -> no columns; V empty -> identity-like full basis
    CHECK(linalg::weighted_complement_basis(ExactMatrix::identity(3), w).cols() == 0);
    ExactMatrix full = linalg::weighted_complement_basis(ExactMatrix(3, 0), w);
    CHECK(full.cols() == 3);
    CHECK(linalg::rank(full) == 3);
    // dependent columns rejected
    ExactMatrix dep(3, 2);
    dep(0, 0) = R(1);
    dep(0, 1) = R(2);
    CHECK_THROWS_AS(linalg::weighted_complement_basis(dep, w), ValidationError);
}

TEST_CASE("jacobi spectrum golden and property checks") {
    FloatMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 1.0;
    Spectrum s = linalg::symmetric_spectrum(d);
    REQUIRE(s.size() == 2);
    CHECK(s.values[0] == doctest::Approx(1.0));
    CHECK(s.values[1] == doctest::Approx(2.0));

    // FIX1 full persistent Laplacian symmetrization has spectrum {5/2, 5/2, 4}
    double r2 = std::sqrt(0.5);
    FloatMatrix fix1(3, 3);
    fix1(0, 0) = 3.5;
    fix1(0, 2) = r2;
    fix1(2, 0) = r2;
    fix1(1, 1) = 2.5;
    fix1(2, 2) = 3.0;
    Spectrum sf = linalg::symmetric_spectrum(fix1);
    REQUIRE(sf.size() == 3);
    CHECK(sf.values[0] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sf.values[1] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sf.values[2] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sf.product() == doctest::Approx(25.0).epsilon(1e-10));

    CHECK(linalg::symmetric_spectrum(FloatMatrix(4, 4)).values ==
          std::vector<double>{0, 0, 0, 0});

    FloatMatrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(linalg::symmetric_spectrum(bad, 1e-9), ValidationError);

    // eigenvalue sum matches the trace; PSD inputs stay >= -tol
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 1 + rng() % 7;
        FloatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = static_cast<double>(rng() % 100) / 25.0 - 2.0;
        FloatMatrix psd = a * a.transpose();
        Spectrum sp = linalg::symmetric_spectrum(psd, 1e-6);
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += psd(i, i);
        CHECK(sp.sum() == doctest::Approx(trace).epsilon(1e-9));
        CHECK(sp.min() >= -1e-9);
        for (std::size_t i = 1; i < n; ++i) CHECK(sp.values[i - 1] <= sp.values[i]);
    }
}

TEST_CASE("float svd-based pseudoinverse, rank, kernel") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        ExactMatrix ae = random_exact(rng, r, c);
        FloatMatrix a = to_float(ae);
        FloatMatrix p = linalg::pseudoinverse(a);
        CHECK(rel_err(a * p * a, a) < 1e-10);
        CHECK(rel_err(p * a * p, p) < 1e-10);
        CHECK(rel_err((a * p).transpose(), a * p) < 1e-10);
        CHECK(rel_err((p * a).transpose(), p * a) < 1e-10);
        // float rank with the default threshold matches the exact rank here
        CHECK(linalg::rank(a) == linalg::rank(ae));
        FloatMatrix k = linalg::kernel_basis(a);
        CHECK(k.cols() + linalg::rank(a) == c);
        if (k.cols() > 0) {
            FloatMatrix ak = a * k;
            double worst = 0.0;
            for (std::size_t i = 0; i < ak.rows(); ++i)
                for (std::size_t j = 0; j < ak.cols(); ++j)
                    worst = std::max(worst, std::abs(ak(i, j)));
            CHECK(worst < 1e-10);
        }
    }
}

TEST_CASE("float schur invariance under block-orthogonal conjugation") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 3 + rng() % 3;
        std::size_t d = 1 + rng() % (n - 1);
        ExactMatrix ae = random_exact(rng, n, n + 1);
        FloatMatrix l = to_float(ae * ae.transpose());
        // random orthogonal blocks from Jacobi eigenvectors of random symmetric seeds
        auto random_orthogonal = [&](std::size_t k) {
            ExactMatrix se = random_exact(rng, k, k);
            FloatMatrix s = to_float(se * se.transpose());
            return linalg::jacobi_eigen(s).eigenvectors;
        };
        FloatMatrix q1 = random_orthogonal(d), q2 = random_orthogonal(n - d);
        FloatMatrix q(n, n);
        q.set_block(0, 0, q1);
        q.set_block(d, d, q2);
        FloatMatrix conj = q.transpose() * l * q;
        FloatMatrix lhs = linalg::schur_complement(conj, n - d);
        FloatMatrix rhs = q1.transpose() * linalg::schur_complement(l, n - d) * q1;
        CHECK(rel_err(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("exact psd test") {
    ExactMatrix id = ExactMatrix::identity(3);
    CHECK(linalg::is_psd(id));
    ExactMatrix neg = R(-1) * id;
    CHECK_FALSE(linalg::is_psd(neg));
    // PSD with an exactly zero diagonal entry but nonzero row is rejected
    ExactMatrix tricky{{R(0), R(1)}, {R(1), R(0)}};
    CHECK_FALSE(linalg::is_psd(tricky));
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 1 + rng() % 5;
        ExactMatrix a = random_exact(rng, n, 1 + rng() % 5);
        CHECK(linalg::is_psd(a * a.transpose()));
    }
}

TEST_CASE("appendix-B schur properties pass on seed 7") {
    linalg::SchurPropertyReport rep = linalg::verify_schur_properties(7, 25, 6);
    CHECK(rep.cancellation_ok);
    CHECK(rep.kernel_projection_ok);
    CHECK(rep.factor_restriction_ok);
    CHECK(rep.extremal_ok);
    CHECK(rep.basis_independence_ok);
    CHECK(rep.extremal_samples > 0);
    CHECK(rep.all_ok());
}

TEST_CASE("cancellation identity trivial case E=I R=I") {
    ExactMatrix i3 = ExactMatrix::identity(3);
    ExactMatrix lhs = i3.transpose() * i3 *
                      linalg::pseudoinverse(linalg::inverse(i3) * i3 * i3.transpose() * i3) *
                      linalg::inverse(i3) * i3;
    CHECK(lhs == i3);
}
