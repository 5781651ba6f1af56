#pragma once

#include <string>
#include <vector>

#include "plap/linalg.hpp"
#include "plap/plap.hpp"

namespace plap::tower {

/// Vertex-map composition; the composite's weight-preservation status is
/// computed, never assumed (it can fail even when both factors preserve
/// weights). Throws DimensionError when codomain(f) != domain(g).
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

/// Structural inclusion detection: injective vertex map and equal weights on
/// shared simplices (decides applicability of the inclusion monotonicity
/// theorem).
bool is_inclusion(const SimplicialMap& f);

/// Simplex-surjectivity: the image complex equals the codomain.
bool is_surjective(const SimplicialMap& f);

struct Tower {
    std::vector<SimplicialMap> maps;  // maps[i] : K_i -> K_{i+1}

    std::size_t size() const { return maps.size(); }
    void validate() const;  // adjacent codomain/domain must agree
};

enum class CheckStatus { Holds, Violated, Skipped };

struct EigenComparison {
    std::string name;       // which inequality family
    CheckStatus status = CheckStatus::Skipped;
    std::string reason;     // when skipped
    bool informational = false;  // padded-up probe: violations are expected data
    std::size_t k_compared = 0;
    double worst_margin = 0.0;  // min_k (lhs_k - rhs_k); >= -tol means holds
    std::vector<double> lhs, rhs;
};

struct TripleReport {
    std::size_t index = 0;  // triple (K_i, K_{i+1}, K_{i+2})
    std::vector<EigenComparison> checks;
};

struct MonotonicityReport {
    int q = 0;
    double tol = 1e-9;
    std::vector<TripleReport> triples;

    bool all_ok() const;  // ignores informational comparisons
};

/// Eigenvalue monotonicity along the tower at dimension q. Per adjacent
/// triple f : K -> L, g : L -> M the report covers, each applied only when
/// its hypotheses hold (anything else is marked skipped with the reason):
///  - down persistent eigenvalues (needs f, g, g.f weight preserving at q),
///  - essential up persistent eigenvalues (needs f, g weight preserving at q),
///  - padded up eigenvalues for inclusion pairs,
///  - the Loewner comparison of down Laplacians for surjective pairs,
///  - an informational padded-up probe (no theorem; a known
///    counterexample shows it can fail while the essential version holds).
MonotonicityReport monotonicity_report(const Tower& t, int q, double tol = 1e-9);

/// Spectrum of Sch(up Laplacian of m at q, span(subspace)) computed from the
/// boundary matrix alone; needs no weight-preservation hypothesis.
linalg::Spectrum essential_up_spectrum_direct(const SimplicialComplex& m, int q,
                                              const ExactMatrix& subspace,
                                              double tol = 1e-9);

}  // namespace plap::tower
