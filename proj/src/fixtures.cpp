#include "plap/fixtures.hpp"

#include <algorithm>

#include <json.hpp>

#include "plap/errors.hpp"

namespace plap::fixtures {

namespace {

const char* kFig2 = R"JSON({
  "domain": {
    "vertices": ["a", "b", "c", "d"],
    "simplices": [
      {"verts": ["a"], "weight": "1"},
      {"verts": ["b"], "weight": "1"},
      {"verts": ["c"], "weight": "1"},
      {"verts": ["d"], "weight": "1"},
      {"verts": ["a", "b"], "weight": "1"},
      {"verts": ["b", "c"], "weight": "1"},
      {"verts": ["a", "c"], "weight": "1"},
      {"verts": ["a", "d"], "weight": "1"},
      {"verts": ["b", "d"], "weight": "1"}
    ]
  },
  "codomain": {
    "vertices": ["x", "y", "z"],
    "simplices": [
      {"verts": ["x"], "weight": "1"},
      {"verts": ["y"], "weight": "2"},
      {"verts": ["z"], "weight": "1"},
      {"verts": ["x", "y"], "weight": "2"},
      {"verts": ["y", "z"], "weight": "1"},
      {"verts": ["x", "z"], "weight": "1"},
      {"verts": ["x", "y", "z"], "weight": "1"}
    ]
  },
  "vertex_map": {"a": "x", "b": "y", "c": "z", "d": "y"}
})JSON";

const char* kFig3 = R"JSON({
  "domain": {
    "vertices": ["a", "b", "c", "d"],
    "simplices": [
      {"verts": ["a"], "weight": "1"},
      {"verts": ["b"], "weight": "1"},
      {"verts": ["c"], "weight": "1"},
      {"verts": ["d"], "weight": "1"},
      {"verts": ["a", "b"], "weight": "1"},
      {"verts": ["b", "c"], "weight": "1"},
      {"verts": ["a", "c"], "weight": "1"},
      {"verts": ["a", "d"], "weight": "1"},
      {"verts": ["b", "d"], "weight": "1"}
    ]
  },
  "codomain": {
    "vertices": ["x", "y", "z"],
    "simplices": [
      {"verts": ["x"], "weight": "1"},
      {"verts": ["y"], "weight": "2"},
      {"verts": ["z"], "weight": "1"},
      {"verts": ["x", "y"], "weight": "2"},
      {"verts": ["y", "z"], "weight": "1"},
      {"verts": ["x", "z"], "weight": "1"}
    ]
  },
  "vertex_map": {"a": "x", "b": "y", "c": "z", "d": "y"}
})JSON";

const char* kFig5 = R"JSON({
  "maps": [
    {
      "domain": {
        "vertices": ["a", "b"],
        "simplices": [
          {"verts": ["a"], "weight": "1"},
          {"verts": ["b"], "weight": "1"},
          {"verts": ["a", "b"], "weight": "1"}
        ]
      },
      "codomain": {
        "vertices": ["c", "d", "e"],
        "simplices": [
          {"verts": ["c"], "weight": "1"},
          {"verts": ["d"], "weight": "1"},
          {"verts": ["e"], "weight": "1"},
          {"verts": ["c", "d"], "weight": "1"},
          {"verts": ["c", "e"], "weight": "1"}
        ]
      },
      "vertex_map": {"a": "c", "b": "d"}
    },
    {
      "domain": {
        "vertices": ["c", "d", "e"],
        "simplices": [
          {"verts": ["c"], "weight": "1"},
          {"verts": ["d"], "weight": "1"},
          {"verts": ["e"], "weight": "1"},
          {"verts": ["c", "d"], "weight": "1"},
          {"verts": ["c", "e"], "weight": "1"}
        ]
      },
      "codomain": {
        "vertices": ["x", "y"],
        "simplices": [
          {"verts": ["x"], "weight": "1"},
          {"verts": ["y"], "weight": "2"},
          {"verts": ["x", "y"], "weight": "2"}
        ]
      },
      "vertex_map": {"c": "x", "d": "y", "e": "y"}
    }
  ]
})JSON";

SimplicialMap map_from(const char* text) {
    return parse_map(text, nullptr);
}

SimplicialMap fig5_part(std::size_t index) {
    auto j = nlohmann::json::parse(kFig5);
    return parse_map(j.at("maps").at(index).dump(), nullptr);
}

}  // namespace

std::vector<std::string> names() {
    return {"fig2-KL", "fig3-KpLp", "fig5-composition"};
}

std::string file_content(const std::string& name) {
    if (name == "fig2-KL") return kFig2;
    if (name == "fig3-KpLp") return kFig3;
    if (name == "fig5-composition") return kFig5;
    throw ValidationError("unknown fixture '" + name + "' (see `plap fixtures`)");
}

SimplicialMap fig2_map() { return map_from(kFig2); }
SimplicialMap fig3_map() { return map_from(kFig3); }
SimplicialMap fig5_f() { return fig5_part(0); }
SimplicialMap fig5_g() { return fig5_part(1); }

tower::Tower padded_up_counterexample() {
    // K: hollow triangle abc plus the path h-u, u-v, v-c; all weights 1
    SimplicialComplex k;
    k.vertices = {"a", "b", "c", "h", "u", "v"};
    auto add = [&](SimplicialComplex& cx, std::vector<VertexId> s, Rational w) {
        int q = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(cx.simplices_by_dim.size()) <= q) {
            cx.simplices_by_dim.resize(q + 1);
            cx.weights_by_dim.resize(q + 1);
        }
        cx.simplices_by_dim[q].push_back(std::move(s));
        cx.weights_by_dim[q].push_back(std::move(w));
    };
    for (VertexId v = 0; v < 6; ++v) add(k, {v}, Rational(1));
    add(k, {0, 1}, Rational(1));  // ab
    add(k, {1, 2}, Rational(1));  // bc
    add(k, {0, 2}, Rational(1));  // ac
    add(k, {3, 4}, Rational(1));  // hu
    add(k, {4, 5}, Rational(1));  // uv
    add(k, {2, 5}, Rational(1));  // cv
    k.canonicalize_and_validate();

    // f collapses {c, h}; L is two hollow triangles sharing the merged vertex
    SimplicialMap f = collapse_map(k, {{0}, {1}, {2, 3}, {4}, {5}});

    // M = L with both 2-cells filled; g is the vertex-identity inclusion
    SimplicialComplex m = f.codomain;
    const auto& labels = m.vertices;
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<VertexId>(i);
        throw InternalError("padded_up_counterexample: missing vertex");
    };
    VertexId a = index_of("a"), b = index_of("b"), c = index_of("c");
    VertexId u = index_of("u"), v = index_of("v");
    {
        Simplex t1{a, b, c}, t2{c, u, v};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        m.simplices_by_dim.resize(3);
        m.weights_by_dim.resize(3);
        m.simplices_by_dim[2] = {t1, t2};
        m.weights_by_dim[2] = {Rational(1), Rational(1)};
    }
    m.canonicalize_and_validate();
    SimplicialMap g = inclusion_map(f.codomain, m);

    tower::Tower t;
    t.maps = {std::move(f), std::move(g)};
    t.validate();
    return t;
}

}  // namespace plap::fixtures
