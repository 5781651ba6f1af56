#pragma once

#include <string>
#include <vector>

#include "plap/tower.hpp"

namespace plap::fixtures {

/// Built-in example data shipped with the CLI.
std::vector<std::string> names();

/// Raw file content of a named fixture ("fig2-KL", "fig3-KpLp" are map files,
/// "fig5-composition" is a tower file). Throws ValidationError for unknown
/// names.
std::string file_content(const std::string& name);

/// fig2-KL: K = 4 vertices a..d with 5 unit-weight edges, L = filled triangle
/// xyz where xy and y carry weight 2; a->x, b->y, c->z, d->y.
SimplicialMap fig2_map();

/// fig3-KpLp: same complexes without the 2-simplex of L.
SimplicialMap fig3_map();

/// fig5-composition: f : K -> L and g : L -> M, both weight preserving while
/// g o f is not (the edge ab of weight 1 lands on xy of weight 2).
SimplicialMap fig5_f();
SimplicialMap fig5_g();

/// Collapse-generated two-step tower reproducing the padded-up monotonicity
/// failure: up spectra {0^5, 3} vs {0^4, 3, 3}, essential spectra {3} vs
/// {3, 3}. K = triangle abc plus the path h-u-v-c; f collapses {c, h}; g fills
/// both 2-cells of the image.
tower::Tower padded_up_counterexample();

}  // namespace plap::fixtures
