#pragma once

#include "plap/chains.hpp"
#include "plap/matrix.hpp"

namespace plap::oracle {

/// Persistent Betti number straight from the rank formula of the homology
/// proof: dim f_q(ker d_q^K) - dim(Im d_{q+1}^L  intersect  f_q(ker d_q^K)),
/// via dim(A cap B) = dim A + dim B - dim(A+B). Reads no weights, shares
/// nothing with the Schur pipeline.
std::size_t oracle_persistent_betti(const SimplicialMap& f, int q);

/// Classical Betti number from rank-nullity of the boundary matrices.
std::size_t classical_betti(const SimplicialComplex& k, int q);

/// Matrix of f_W f_W* on the given basis of W, built definitionally:
/// f_W is f restricted to the preimage f^{-1}(span W) with corestricted
/// codomain, adjoints taken in the simplex-weight inner products
/// <e_i,e_j> = delta_ij / w_i of domain and codomain.
ExactMatrix schur_restriction_direct(const ExactMatrix& f_matrix,
                                     const std::vector<Rational>& domain_weights,
                                     const std::vector<Rational>& codomain_weights,
                                     const ExactMatrix& subspace_basis);

struct CochainDualityResult {
    bool up_ok = false;
    bool down_ok = false;
    bool full_ok = false;
    bool pass() const { return up_ok && down_ok && full_ok; }
};

/// Builds the cochain-side persistent Laplacians on ker(f^q)^perp from the
/// dual boundary/chain-map matrices and the cochain inner products
/// <chi_s, chi_s> = w(s), then checks j-conjugated exact equality with the
/// chain-side operators.
CochainDualityResult cochain_duality_check(const SimplicialMap& f, int q);

// Subspace utilities shared with the tower checks and the test suites.

/// Independent columns spanning the column space of a (its RREF pivots).
ExactMatrix column_space_basis(const ExactMatrix& a);

/// Basis of {x : A x in span(S)}; S may have zero columns (plain kernel).
ExactMatrix preimage_basis(const ExactMatrix& a, const ExactMatrix& s);

/// Basis of f_q(ker d_q^K) inside C_q^L, from raw matrices.
ExactMatrix pushed_kernel_basis(const SimplicialMap& f, int q);

}  // namespace plap::oracle
