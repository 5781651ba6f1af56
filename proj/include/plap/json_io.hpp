#pragma once

#include <string>

#include "plap/chains.hpp"
#include "plap/linalg.hpp"
#include "plap/oracle.hpp"
#include "plap/plap.hpp"
#include "plap/tower.hpp"

namespace plap::io {

/// Matrices serialize to row-major JSON arrays: "p/q" strings for the exact
/// backend, numbers for the float backend. All emitted JSON is
/// stable-key-ordered.

std::string matrix_json(const ExactMatrix& m, int indent = -1);
std::string matrix_json(const FloatMatrix& m, int indent = -1);

std::string spectrum_json(const linalg::Spectrum& s, int indent = -1);

std::string wp_report_json(const WpReport& r, int indent = -1);

std::string laplacian_json(const LaplacianReport& r, LaplacianWhich which,
                           bool intermediates, int indent = -1);
std::string laplacian_json(const FloatLaplacianReport& r, LaplacianWhich which,
                           bool intermediates, int indent = -1);

std::string betti_json(int q, std::size_t betti, std::size_t nullity, int indent = -1);

std::string schur_properties_json(const linalg::SchurPropertyReport& r, int indent = -1);

std::string cochain_json(int q, const oracle::CochainDualityResult& r, int indent = -1);

std::string monotonicity_json(const tower::MonotonicityReport& r, int indent = -1);
std::string monotonicity_csv(const tower::MonotonicityReport& r);
std::string monotonicity_pretty(const tower::MonotonicityReport& r);

}  // namespace plap::io
