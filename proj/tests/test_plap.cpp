#include <doctest.h>

#include <random>
#include "plap/errors.hpp"
#include "plap/fixtures.hpp"
#include "plap/oracle.hpp"
#include "plap/plap.hpp"
#include "plap/tower.hpp"

using namespace plap;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

ExactMatrix reference_view(const ExactMatrix& ours, const std::vector<std::size_t>& row_perm,
                       const std::vector<std::size_t>& col_perm) {
    ExactMatrix out(row_perm.size(), col_perm.size());
    for (std::size_t i = 0; i < row_perm.size(); ++i)
        for (std::size_t j = 0; j < col_perm.size(); ++j)
            out(i, j) = ours(row_perm[i], col_perm[j]);
    return out;
}

const std::vector<std::size_t> kPermL{0, 2, 1};         // (xy,yz,xz) in our order
const std::vector<std::size_t> kPermJB{0, 2, 1, 3, 4};  // reference J u B in ours

ExactMatrix fig_down_reference() {
    return ExactMatrix{{R(3), R(-1), R(2)}, {R(-1, 2), R(3, 2), R(1)}, {R(1), R(1), R(2)}};
}

ExactMatrix fig_up_reference() {
    return ExactMatrix{{R(1, 2), R(1), R(-1)}, {R(1, 2), R(1), R(-1)},
                       {R(-1, 2), R(-1), R(1)}};
}

ExactMatrix fig_full_reference() {
    return ExactMatrix{{R(7, 2), R(0), R(1)}, {R(0), R(5, 2), R(0)},
                       {R(1, 2), R(0), R(3)}};
}

SimplicialMap identity_map(const SimplicialComplex& k) {
    SimplicialMap f;
    f.domain = k;
    f.codomain = k;
    for (std::size_t v = 0; v < k.vertices.size(); ++v)
        f.vertex_map.push_back(static_cast<VertexId>(v));
    return f;
}

}  // namespace

TEST_CASE("fig2 q=1: the complete worked example, exactly") {
    SimplicialMap f = fixtures::fig2_map();
    LaplacianReport rep = laplacian_report(f, 1);
    CHECK(rep.n == 3);
    CHECK(rep.n_p == 1);

    ExactMatrix n_reference{{R(3), R(-1, 2), R(1), R(0), R(0)},
                        {R(-1), R(2), R(1), R(-1), R(1)},
                        {R(2), R(1), R(2), R(0), R(0)},
                        {R(0), R(-1, 2), R(0), R(1), R(-1)},
                        {R(0), R(1), R(0), R(-2), R(2)}};
    CHECK(reference_view(rep.nmat, kPermJB, kPermJB) == n_reference);

    CHECK(reference_view(rep.down, kPermL, kPermL) == fig_down_reference());
    CHECK(reference_view(rep.up, kPermL, kPermL) == fig_up_reference());
    CHECK(reference_view(rep.full, kPermL, kPermL) == fig_full_reference());

    CHECK(rep.schq == ExactMatrix{{R(5, 2)}});
    CHECK(linalg::determinant(rep.full) == R(25));
    REQUIRE(rep.nullity);
    CHECK(*rep.nullity == 0);
    CHECK(persistent_betti(f, 1) == 0);
    CHECK(essential_up_laplacian(f, 1) == ExactMatrix{{R(5, 2)}});
    CHECK(persistent_laplacian(f, 1) == rep.down + rep.up);
}

TEST_CASE("fig3 q=1: no 2-simplices, so the up part vanishes") {
    SimplicialMap f = fixtures::fig3_map();
    LaplacianReport rep = laplacian_report(f, 1);
    CHECK(rep.up == ExactMatrix(3, 3));
    // without (q+1)-simplices in the codomain, the essential block is n_p x n_p zero
    CHECK(rep.schq == ExactMatrix(1, 1));
    CHECK(reference_view(rep.full, kPermL, kPermL) == fig_down_reference());
    REQUIRE(rep.nullity);
    CHECK(*rep.nullity == 1);
    CHECK(persistent_betti(f, 1) == 1);
    // kernel spanned by the persisting cycle [xy]+[yz]-[xz]
    ExactMatrix k = linalg::kernel_basis(rep.full);
    REQUIRE(k.cols() == 1);
    Rational s = k(0, 0);  // our order (xy, xz, yz)
    CHECK(s != R(0));
    CHECK(k(1, 0) == -s);
    CHECK(k(2, 0) == s);
    // same matrix as fig2's down part (the complexes share all 1-chain data)
    CHECK(rep.down == laplacian_report(fixtures::fig2_map(), 1).down);
}

TEST_CASE("fig2 spectra: up {0,0,5/2}, full {5/2,5/2,4}, ess-up {5/2}") {
    SimplicialMap f = fixtures::fig2_map();
    linalg::Spectrum up = spectrum(f, 1, LaplacianWhich::Up);
    REQUIRE(up.size() == 3);
    CHECK(up.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(up.values[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(up.values[2] == doctest::Approx(2.5).epsilon(1e-12));

    linalg::Spectrum full = spectrum(f, 1, LaplacianWhich::Full);
    REQUIRE(full.size() == 3);
    CHECK(full.values[0] == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(full.values[1] == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(full.values[2] == doctest::Approx(4.0).epsilon(1e-10));
    // eigenvalue product matches the exact determinant
    CHECK(full.product() ==
          doctest::Approx(linalg::determinant(persistent_laplacian(f, 1)).to_double())
              .epsilon(1e-9));

    linalg::Spectrum ess = spectrum(f, 1, LaplacianWhich::EssUp);
    REQUIRE(ess.size() == 1);
    CHECK(ess.values[0] == doctest::Approx(2.5).epsilon(1e-10));

    // q beyond the domain dimension: empty image, empty spectrum
    CHECK(spectrum(f, 5, LaplacianWhich::Full).size() == 0);
}

TEST_CASE("identity maps reduce exactly to the combinatorial laplacians") {
    for (std::uint64_t seed = 101; seed <= 112; ++seed) {
        SimplicialComplex k = random_complex(3 + seed % 6, 3, 0.65, seed);
        SimplicialMap f = identity_map(k);
        for (int q = 0; q <= k.dim(); ++q) {
            LaplacianReport rep = laplacian_report(f, q);
            CHECK(rep.down == combinatorial_laplacian(k, q, LaplacianKind::Down));
            CHECK(rep.up == combinatorial_laplacian(k, q, LaplacianKind::Up));
            CHECK(rep.full == combinatorial_laplacian(k, q, LaplacianKind::Full));
            CHECK(*rep.nullity == oracle::classical_betti(k, q));
        }
    }
}

TEST_CASE("kernel of the down persistent laplacian is the pushed kernel (exactly)") {
    for (std::uint64_t seed = 120; seed <= 132; ++seed) {
        SimplicialComplex k = random_complex(4 + seed % 5, 2, 0.6, seed);
        SimplicialMap f = collapse_map(
            k, random_partition(k.vertices.size(), 2 + seed % 4, seed + 9));
        for (int q = 0; q <= k.dim(); ++q) {
            LaplacianReport rep = laplacian_report(f, q);
            // embed R1 (Im(f_q) coordinates) into C_q^L coordinates
            ExactMatrix r1_ambient(f.codomain.count(q), rep.n_p);
            for (std::size_t j = 0; j < rep.n_p; ++j)
                for (std::size_t i = 0; i < rep.n; ++i)
                    r1_ambient(rep.hit[i], j) = rep.r1(i, j);
            CHECK(linalg::same_span(r1_ambient, oracle::pushed_kernel_basis(f, q)));
        }
    }
}

TEST_CASE("up matrix does not depend on the choice of bases B1, B2") {
    std::mt19937_64 rng(140);
    SimplicialMap maps[] = {fixtures::fig2_map(),
                            collapse_map(random_complex(6, 2, 0.7, 7),
                                         random_partition(6, 3, 8))};
    for (const SimplicialMap& f : maps) {
        int q = 1;
        LaplacianReport rep = laplacian_report(f, q);
        const std::size_t n = rep.n, n_p = rep.n_p, n_l = f.codomain.count(q);
        auto random_invertible = [&](std::size_t m) {
            for (;;) {
                ExactMatrix u(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        u(i, j) = R(static_cast<long long>(rng() % 5) - 2);
                if (linalg::rank(u) == m) return u;
            }
        };
        for (int trial = 0; trial < 3; ++trial) {
            // any bases of the same two subspaces are valid B1, B2
            ExactMatrix r1 = rep.r1 * random_invertible(n_p);
            ExactMatrix r2 = rep.r2 * random_invertible(n - n_p);
            ExactMatrix r = ExactMatrix::hcat(r1, r2);
            std::vector<bool> is_hit(n_l, false);
            for (std::size_t idx : rep.hit) is_hit[idx] = true;
            ExactMatrix full_cob(n_l, n_l);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) full_cob(rep.hit[i], j) = r(i, j);
            std::size_t col = n;
            for (std::size_t idx = 0; idx < n_l; ++idx)
                if (!is_hit[idx]) full_cob(idx, col++) = R(1);
            ExactMatrix up_l = combinatorial_laplacian(f.codomain, q, LaplacianKind::Up);
            ExactMatrix qmat = linalg::inverse(full_cob) * up_l * full_cob;
            ExactMatrix schq = linalg::schur_complement(qmat, n_l - n_p);
            ExactMatrix padded(n, n);
            padded.set_block(0, 0, schq);
            CHECK(r * padded * linalg::inverse(r) == rep.up);
        }
    }
}

TEST_CASE("inclusion and identity maps reproduce the direct schur restriction") {
    // identity on fig2's L: essential block = Sch(up Laplacian, ker boundary)
    SimplicialMap ident = identity_map(fixtures::fig2_map().codomain);
    for (std::uint64_t seed = 150; seed <= 158; ++seed) {
        SimplicialComplex l = random_complex(4 + seed % 4, 3, 0.7, seed);
        SimplicialComplex k = random_subcomplex(l, 0.65, seed + 1);
        SimplicialMap maps[] = {inclusion_map(k, l), identity_map(l), ident};
        for (const SimplicialMap& f : maps) {
            for (int q = 0; q <= f.domain.dim(); ++q) {
                LaplacianReport rep = laplacian_report(f, q);
                if (rep.n_p == 0) continue;
                ExactMatrix s = oracle::pushed_kernel_basis(f, q);
                ExactMatrix direct = oracle::schur_restriction_direct(
                    boundary_matrix(f.codomain, q + 1), weight_vector(f.codomain, q + 1),
                    weight_vector(f.codomain, q), s);
                // move our essential block from the R1 basis to the S basis
                ExactMatrix r1_ambient(f.codomain.count(q), rep.n_p);
                for (std::size_t j = 0; j < rep.n_p; ++j)
                    for (std::size_t i = 0; i < rep.n; ++i)
                        r1_ambient(rep.hit[i], j) = rep.r1(i, j);
                ExactMatrix c = linalg::solve(s, r1_ambient);
                CHECK(rep.schq == linalg::inverse(c) * direct * c);
            }
        }
    }
}

TEST_CASE("persistent laplacians are W-self-adjoint and PSD") {
    for (std::uint64_t seed = 160; seed <= 170; ++seed) {
        SimplicialComplex k = random_complex(4 + seed % 4, 3, 0.6, seed);
        SimplicialMap f = collapse_map(
            k, random_partition(k.vertices.size(), 2 + seed % 4, seed + 13));
        for (int q = 0; q <= k.dim(); ++q) {
            LaplacianReport rep = laplacian_report(f, q);
            CHECK(is_weighted_self_adjoint(rep.down, rep.image_weights));
            CHECK(is_weighted_self_adjoint(rep.up, rep.image_weights));
            CHECK(is_weighted_self_adjoint(rep.full, rep.image_weights));
            for (auto which : {LaplacianWhich::Down, LaplacianWhich::Up,
                               LaplacianWhich::Full, LaplacianWhich::EssUp}) {
                linalg::Spectrum s = spectrum(f, q, which);
                CHECK(s.min() >= -1e-9);
            }
        }
    }
}

TEST_CASE("nullity equals the oracle betti number on random collapse maps") {
    for (std::uint64_t seed = 180; seed <= 196; ++seed) {
        SimplicialComplex k = random_complex(4 + seed % 5, 3, 0.6, seed);
        SimplicialMap f = collapse_map(
            k, random_partition(k.vertices.size(), 2 + seed % 5, seed + 17));
        for (int q = 0; q <= 2; ++q)
            CHECK(persistent_betti(f, q) == oracle::oracle_persistent_betti(f, q));
    }
}

TEST_CASE("degenerate image: beta = 0, matching the oracle") {
    // collapse an edge to a single vertex and ask about q = 1
    SimplicialComplex edge = parse_complex(R"({"vertices":["a","b"],"simplices":[
        {"verts":["a"],"weight":1},{"verts":["b"],"weight":1},
        {"verts":["a","b"],"weight":1}]})");
    SimplicialMap f = collapse_map(edge, {{0, 1}});
    LaplacianReport rep = laplacian_report(f, 1);
    CHECK(rep.n == 0);
    CHECK(rep.full.rows() == 0);
    CHECK(persistent_betti(f, 1) == 0);
    CHECK(oracle::oracle_persistent_betti(f, 1) == 0);
    // identity on a single vertex at q=0 has one persistent class
    SimplicialComplex pt = parse_complex(
        R"({"vertices":["a"],"simplices":[{"verts":["a"],"weight":1}]})");
    CHECK(persistent_betti(identity_map(pt), 0) == 1);
}

TEST_CASE("non weight preserving maps are rejected with the reweighting hint") {
    SimplicialMap gf = tower::compose(fixtures::fig5_f(), fixtures::fig5_g());
    CHECK_THROWS_WITH_AS(persistent_betti(gf, 1),
                         doctest::Contains("weight preserving"),
                         NotWeightPreservingError);
}

TEST_CASE("float backend pipeline approximates the exact one") {
    SimplicialMap f = fixtures::fig2_map();
    FloatLaplacianReport rep = laplacian_report_float(f, 1);
    LaplacianReport exact = laplacian_report(f, 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(rep.down(i, j) ==
                  doctest::Approx(exact.down(i, j).to_double()).epsilon(1e-9));
            CHECK(rep.up(i, j) ==
                  doctest::Approx(exact.up(i, j).to_double()).epsilon(1e-9));
            CHECK(rep.full(i, j) ==
                  doctest::Approx(exact.full(i, j).to_double()).epsilon(1e-9));
        }
    CHECK_FALSE(rep.nullity.has_value());
}
