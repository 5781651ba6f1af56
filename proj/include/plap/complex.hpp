#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plap/rational.hpp"

namespace plap {

using VertexId = int;
/// Strictly increasing tuple of vertex indices.
using Simplex = std::vector<VertexId>;

/// Weighted abstract simplicial complex over an ordered vertex set.
///
/// The vertex list position fixes the total order used for orientations.
/// Within each dimension, simplices are kept sorted lexicographically; that
/// ordering is the canonical chain-group basis everywhere downstream.
/// Instances are immutable after construction/validation.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<Simplex>> simplices_by_dim;
    std::vector<std::vector<Rational>> weights_by_dim;

    int dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }

    std::size_t count(int q) const {
        return (q >= 0 && q <= dim()) ? simplices_by_dim[q].size() : 0;
    }
    const std::vector<Simplex>& simplices(int q) const;
    const Rational& weight(int q, std::size_t index) const;
    std::optional<std::size_t> find(int q, const Simplex& s) const;

    /// Human-readable name, e.g. "xy" for single-character vertex labels.
    std::string simplex_label(const Simplex& s) const;

    /// Sorts simplex lists into canonical order and checks all invariants:
    /// face closure, positive weights, strictly increasing tuples, no
    /// duplicates. Throws ValidationError.
    void canonicalize_and_validate();

    std::string serialize() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices == b.vertices && a.simplices_by_dim == b.simplices_by_dim &&
               a.weights_by_dim == b.weights_by_dim;
    }
};

/// Simplicial map given by a total vertex assignment. Valid iff every
/// simplex image is a codomain simplex.
struct SimplicialMap {
    SimplicialComplex domain;
    SimplicialComplex codomain;
    std::vector<VertexId> vertex_map;  // domain vertex index -> codomain vertex index

    void validate() const;  // throws MapError

    /// Image vertex set of a simplex, sorted with duplicates removed.
    Simplex image_set(const Simplex& s) const;
};

/// Parses the complex file format; returns a validated complex with
/// simplices auto-sorted into canonical order.
SimplicialComplex parse_complex(const std::string& json_text);

/// Parses a map file. `load_file` resolves a referenced complex path to its
/// file content; inline complex objects need no loading.
SimplicialMap parse_map(const std::string& json_text,
                        const std::function<std::string(const std::string&)>& load_file);

std::string serialize_map(const SimplicialMap& f);

/// Im(f) as a complex with pushed-forward weights
/// w(tau) = sum of w(sigma) over same-dimension preimages, plus the
/// corestricted map K -> Im(f) (weight preserving by construction).
SimplicialMap image_complex(const SimplicialMap& f);

/// Vertex-collapse map: groups partition the domain vertices; the codomain is
/// the image complex under the collapse with pushed-forward weights.
SimplicialMap collapse_map(const SimplicialComplex& k,
                           const std::vector<std::vector<VertexId>>& partition);

/// Face-closed random complex: flag-style fill-in (a q-simplex may appear only
/// once all its facets are present) with random rational weights.
/// Deterministic per seed.
SimplicialComplex random_complex(int n_vertices, int max_dim, double density,
                                 std::uint64_t seed);

/// Random partition of {0..n-1} into at most n_groups nonempty groups.
std::vector<std::vector<VertexId>> random_partition(std::size_t n, std::size_t n_groups,
                                                    std::uint64_t seed);

/// Random downward-closed subcomplex keeping each top simplex with
/// probability keep; weights inherited (so the inclusion is weight
/// preserving). All vertices are kept.
SimplicialComplex random_subcomplex(const SimplicialComplex& k, double keep,
                                    std::uint64_t seed);

/// Inclusion map between complexes where every simplex of k is a simplex of l
/// with equal weight. Throws MapError otherwise.
SimplicialMap inclusion_map(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace plap
