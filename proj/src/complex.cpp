#include "plap/complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "plap/errors.hpp"

namespace plap {

namespace {

const std::vector<Simplex> kNoSimplices;

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Rational weight_from_json(const json& v) {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    throw ParseError("weight must be a number or a \"p/q\" string");
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
    if (q < 0 || q > dim()) return kNoSimplices;
    return simplices_by_dim[q];
}

const Rational& SimplicialComplex::weight(int q, std::size_t index) const {
    return weights_by_dim[q][index];
}

std::optional<std::size_t> SimplicialComplex::find(int q, const Simplex& s) const {
    if (q < 0 || q > dim()) return std::nullopt;
    const auto& list = simplices_by_dim[q];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
    bool all_single = true;
    for (const auto& v : vertices)
        if (v.size() != 1) all_single = false;
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !all_single) out += ",";
        out += vertices[s[i]];
    }
    return out;
}

void SimplicialComplex::canonicalize_and_validate() {
    const std::size_t nv = vertices.size();
    {
        std::set<std::string> seen;
        for (const auto& v : vertices) {
            if (v.empty()) throw ValidationError("empty vertex label");
            if (!seen.insert(v).second)
                throw ValidationError("duplicate vertex label '" + v + "'");
        }
    }
    if (simplices_by_dim.size() != weights_by_dim.size())
        throw ValidationError("simplex/weight table size mismatch");
    for (int q = 0; q <= dim(); ++q) {
        auto& list = simplices_by_dim[q];
        auto& wts = weights_by_dim[q];
        if (list.size() != wts.size())
            throw ValidationError("simplex/weight count mismatch at dimension " +
                                  std::to_string(q));
        std::vector<std::size_t> order(list.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return list[a] < list[b]; });
        std::vector<Simplex> sorted_s;
        std::vector<Rational> sorted_w;
        sorted_s.reserve(list.size());
        for (std::size_t i : order) {
            sorted_s.push_back(list[i]);
            sorted_w.push_back(wts[i]);
        }
        list = std::move(sorted_s);
        wts = std::move(sorted_w);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Simplex& s = list[i];
            if (static_cast<int>(s.size()) != q + 1)
                throw ValidationError("simplex of wrong dimension in dimension-" +
                                      std::to_string(q) + " list");
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j] < 0 || static_cast<std::size_t>(s[j]) >= nv)
                    throw ValidationError("simplex references unknown vertex");
                if (j && s[j] <= s[j - 1])
                    throw ValidationError("simplex tuple not strictly increasing");
            }
            if (i && list[i - 1] == s)
                throw ValidationError("duplicate simplex " + simplex_label(s));
            if (!(wts[i] > Rational(0)))
                throw ValidationError("non-positive weight on simplex " +
                                      simplex_label(s));
        }
    }
    // face closure: every facet of every listed simplex is listed
    for (int q = 1; q <= dim(); ++q) {
        for (const Simplex& s : simplices_by_dim[q]) {
            Simplex face(s.size() - 1);
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                std::size_t t = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != omit) face[t++] = s[j];
                if (!find(q - 1, face))
                    throw ValidationError("complex not face-closed: missing face " +
                                          simplex_label(face) + " of " + simplex_label(s));
            }
        }
    }
}

std::string SimplicialComplex::serialize() const {
    ordered_json out;
    out["vertices"] = vertices;
    ordered_json simps = ordered_json::array();
    for (int q = 0; q <= dim(); ++q) {
        for (std::size_t i = 0; i < simplices_by_dim[q].size(); ++i) {
            ordered_json item;
            std::vector<std::string> verts;
            for (VertexId v : simplices_by_dim[q][i]) verts.push_back(vertices[v]);
            item["verts"] = verts;
            item["weight"] = weights_by_dim[q][i].to_string();
            simps.push_back(std::move(item));
        }
    }
    out["simplices"] = std::move(simps);
    return out.dump();
}

Simplex SimplicialMap::image_set(const Simplex& s) const {
    Simplex image;
    image.reserve(s.size());
    for (VertexId v : s) image.push_back(vertex_map[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

void SimplicialMap::validate() const {
    if (vertex_map.size() != domain.vertices.size())
        throw MapError("vertex map must cover every domain vertex");
    for (VertexId target : vertex_map) {
        if (target < 0 || static_cast<std::size_t>(target) >= codomain.vertices.size())
            throw MapError("vertex map targets unknown codomain vertex");
    }
    for (int q = 0; q <= domain.dim(); ++q) {
        for (const Simplex& s : domain.simplices_by_dim[q]) {
            Simplex image = image_set(s);
            if (!codomain.find(static_cast<int>(image.size()) - 1, image)) {
                throw MapError("image of simplex " + domain.simplex_label(s) + " (= " +
                               codomain.simplex_label(image) +
                               ") is not a simplex of the codomain");
            }
        }
    }
}

SimplicialComplex parse_complex(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("complex file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
        throw ParseError("complex file needs 'vertices' and 'simplices' fields");
    SimplicialComplex out;
    try {
        out.vertices = j.at("vertices").get<std::vector<std::string>>();
    } catch (const json::exception&) {
        throw ParseError("'vertices' must be an array of strings");
    }
    std::map<std::string, VertexId> index;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        index[out.vertices[i]] = static_cast<VertexId>(i);
    if (!j.at("simplices").is_array())
        throw ParseError("'simplices' must be an array");
    for (const auto& item : j.at("simplices")) {
        if (!item.is_object() || !item.contains("verts") || !item.contains("weight"))
            throw ParseError("each simplex needs 'verts' and 'weight'");
        Simplex s;
        for (const auto& v : item.at("verts")) {
            if (!v.is_string()) throw ParseError("'verts' must be an array of strings");
            auto it = index.find(v.get<std::string>());
            if (it == index.end())
                throw ValidationError("simplex references unknown vertex '" +
                                      v.get<std::string>() + "'");
            s.push_back(it->second);
        }
        if (s.empty()) throw ParseError("empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("simplex lists a vertex twice");
        Rational w;
        try {
            w = weight_from_json(item.at("weight"));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad weight: ") + e.what());
        }
        int q = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(out.simplices_by_dim.size()) <= q) {
            out.simplices_by_dim.resize(q + 1);
            out.weights_by_dim.resize(q + 1);
        }
        out.simplices_by_dim[q].push_back(std::move(s));
        out.weights_by_dim[q].push_back(std::move(w));
    }
    out.canonicalize_and_validate();
    return out;
}

SimplicialMap parse_map(const std::string& json_text,
                        const std::function<std::string(const std::string&)>& load_file) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("map file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
        !j.contains("vertex_map"))
        throw ParseError("map file needs 'domain', 'codomain' and 'vertex_map'");
    auto resolve = [&](const json& side) -> SimplicialComplex {
        if (side.is_string()) {
            if (!load_file) throw ParseError("complex file references not supported here");
            return parse_complex(load_file(side.get<std::string>()));
        }
        return parse_complex(side.dump());
    };
    SimplicialMap f;
    f.domain = resolve(j.at("domain"));
    f.codomain = resolve(j.at("codomain"));
    std::map<std::string, VertexId> cod_index;
    for (std::size_t i = 0; i < f.codomain.vertices.size(); ++i)
        cod_index[f.codomain.vertices[i]] = static_cast<VertexId>(i);
    const auto& vm = j.at("vertex_map");
    if (!vm.is_object()) throw ParseError("'vertex_map' must be an object");
    f.vertex_map.assign(f.domain.vertices.size(), -1);
    for (std::size_t i = 0; i < f.domain.vertices.size(); ++i) {
        const std::string& name = f.domain.vertices[i];
        if (!vm.contains(name))
            throw MapError("vertex map is missing domain vertex '" + name + "'");
        std::string target = vm.at(name).get<std::string>();
        auto it = cod_index.find(target);
        if (it == cod_index.end())
            throw MapError("vertex map sends '" + name + "' to unknown vertex '" +
                           target + "'");
        f.vertex_map[i] = it->second;
    }
    f.validate();
    return f;
}

std::string serialize_map(const SimplicialMap& f) {
    ordered_json out;
    out["domain"] = json::parse(f.domain.serialize());
    out["codomain"] = json::parse(f.codomain.serialize());
    ordered_json vm;
    for (std::size_t i = 0; i < f.domain.vertices.size(); ++i)
        vm[f.domain.vertices[i]] = f.codomain.vertices[f.vertex_map[i]];
    out["vertex_map"] = std::move(vm);
    return out.dump();
}

namespace {

/// Shared builder for image complexes: `assignment` sends each domain vertex
/// to a codomain *label position* given by (group id, display label). Groups
/// are ordered by id; that order becomes the new vertex order.
SimplicialMap build_image(const SimplicialComplex& k,
                          const std::vector<VertexId>& group_of_vertex,
                          const std::vector<std::string>& group_labels) {
    SimplicialComplex l;
    l.vertices = group_labels;
    std::map<Simplex, Rational> pushed;  // per dimension below
    int max_q = k.dim();
    l.simplices_by_dim.resize(1);
    l.weights_by_dim.resize(1);
    for (int q = 0; q <= max_q; ++q) {
        pushed.clear();
        for (std::size_t i = 0; i < k.count(q); ++i) {
            const Simplex& s = k.simplices_by_dim[q][i];
            Simplex image;
            image.reserve(s.size());
            for (VertexId v : s) image.push_back(group_of_vertex[v]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (static_cast<int>(image.size()) != q + 1) continue;  // degenerate
            pushed[image] += k.weights_by_dim[q][i];
        }
        if (pushed.empty()) continue;
        if (static_cast<int>(l.simplices_by_dim.size()) <= q) {
            l.simplices_by_dim.resize(q + 1);
            l.weights_by_dim.resize(q + 1);
        }
        for (auto& [simplex, weight] : pushed) {
            l.simplices_by_dim[q].push_back(simplex);
            l.weights_by_dim[q].push_back(weight);
        }
    }
    l.canonicalize_and_validate();
    SimplicialMap out;
    out.domain = k;
    out.codomain = std::move(l);
    out.vertex_map = group_of_vertex;
    out.validate();
    return out;
}

}  // namespace

SimplicialMap image_complex(const SimplicialMap& f) {
    // hit codomain vertices, in codomain order
    std::vector<bool> hit(f.codomain.vertices.size(), false);
    for (VertexId v : f.vertex_map) hit[v] = true;
    std::vector<VertexId> new_index(f.codomain.vertices.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < hit.size(); ++i) {
        if (hit[i]) {
            new_index[i] = static_cast<VertexId>(labels.size());
            labels.push_back(f.codomain.vertices[i]);
        }
    }
    std::vector<VertexId> groups(f.domain.vertices.size());
    for (std::size_t i = 0; i < groups.size(); ++i)
        groups[i] = new_index[f.vertex_map[i]];
    return build_image(f.domain, groups, labels);
}

SimplicialMap collapse_map(const SimplicialComplex& k,
                           const std::vector<std::vector<VertexId>>& partition) {
    std::vector<VertexId> rep_of_vertex(k.vertices.size(), -1);
    std::vector<VertexId> reps;
    for (const auto& group : partition) {
        if (group.empty()) throw ValidationError("collapse_map: empty group");
        VertexId rep = *std::min_element(group.begin(), group.end());
        reps.push_back(rep);
        for (VertexId v : group) {
            if (v < 0 || static_cast<std::size_t>(v) >= k.vertices.size())
                throw ValidationError("collapse_map: group references unknown vertex");
            if (rep_of_vertex[v] != -1)
                throw ValidationError("collapse_map: vertex in two groups");
            rep_of_vertex[v] = rep;
        }
    }
    for (VertexId r : rep_of_vertex)
        if (r == -1) throw ValidationError("collapse_map: partition must cover all vertices");
    std::sort(reps.begin(), reps.end());
    std::vector<VertexId> group_index(k.vertices.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < reps.size(); ++g) {
        group_index[reps[g]] = static_cast<VertexId>(g);
        labels.push_back(k.vertices[reps[g]]);
    }
    std::vector<VertexId> groups(k.vertices.size());
    for (std::size_t v = 0; v < groups.size(); ++v)
        groups[v] = group_index[rep_of_vertex[v]];
    return build_image(k, groups, labels);
}

SimplicialComplex random_complex(int n_vertices, int max_dim, double density,
                                 std::uint64_t seed) {
    if (n_vertices <= 0) throw ValidationError("random_complex: need at least one vertex");
    if (density < 0.0 || density > 1.0)
        throw ValidationError("random_complex: density must be in [0,1]");
    std::mt19937_64 rng(seed);
    auto random_weight = [&]() {
        long long num = 1 + static_cast<long long>(rng() % 6);
        long long den = 1 + static_cast<long long>(rng() % 4);
        return Rational(num, den);
    };
    SimplicialComplex out;
    for (int i = 0; i < n_vertices; ++i) out.vertices.push_back("v" + std::to_string(i));
    out.simplices_by_dim.resize(1);
    out.weights_by_dim.resize(1);
    for (int i = 0; i < n_vertices; ++i) {
        out.simplices_by_dim[0].push_back({i});
        out.weights_by_dim[0].push_back(random_weight());
    }
    for (int q = 1; q <= max_dim; ++q) {
        std::vector<Simplex> added;
        // flag-style fill-in: admit a q-simplex only if every facet is present
        Simplex cur(q + 1);
        std::function<void(int, int)> enumerate = [&](int next, int depth) {
            if (depth == q + 1) {
                Simplex face(q);
                for (int omit = 0; omit <= q; ++omit) {
                    int t = 0;
                    for (int j = 0; j <= q; ++j)
                        if (j != omit) face[t++] = cur[j];
                    if (!out.find(q - 1, face)) return;
                }
                if (uniform01(rng) < density) added.push_back(cur);
                return;
            }
            for (int v = next; v < n_vertices; ++v) {
                cur[depth] = v;
                enumerate(v + 1, depth + 1);
            }
        };
        enumerate(0, 0);
        if (added.empty()) break;
        out.simplices_by_dim.resize(q + 1);
        out.weights_by_dim.resize(q + 1);
        for (auto& s : added) {
            out.simplices_by_dim[q].push_back(std::move(s));
            out.weights_by_dim[q].push_back(random_weight());
        }
    }
    out.canonicalize_and_validate();
    return out;
}

std::vector<std::vector<VertexId>> random_partition(std::size_t n, std::size_t n_groups,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (n_groups == 0) n_groups = 1;
    std::vector<std::vector<VertexId>> groups(n_groups);
    for (std::size_t v = 0; v < n; ++v)
        groups[rng() % n_groups].push_back(static_cast<VertexId>(v));
    groups.erase(std::remove_if(groups.begin(), groups.end(),
                                [](const auto& g) { return g.empty(); }),
                 groups.end());
    return groups;
}

SimplicialComplex random_subcomplex(const SimplicialComplex& k, double keep,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SimplicialComplex out;
    out.vertices = k.vertices;
    out.simplices_by_dim.assign(1, k.simplices_by_dim[0]);
    out.weights_by_dim.assign(1, k.weights_by_dim[0]);
    for (int q = 1; q <= k.dim(); ++q) {
        std::vector<Simplex> kept_s;
        std::vector<Rational> kept_w;
        for (std::size_t i = 0; i < k.count(q); ++i) {
            const Simplex& s = k.simplices_by_dim[q][i];
            bool faces_ok = true;
            Simplex face(s.size() - 1);
            for (std::size_t omit = 0; omit < s.size() && faces_ok; ++omit) {
                std::size_t t = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != omit) face[t++] = s[j];
                if (!out.find(q - 1, face)) faces_ok = false;
            }
            if (faces_ok && uniform01(rng) < keep) {
                kept_s.push_back(s);
                kept_w.push_back(k.weights_by_dim[q][i]);
            }
        }
        if (kept_s.empty()) break;
        out.simplices_by_dim.push_back(std::move(kept_s));
        out.weights_by_dim.push_back(std::move(kept_w));
    }
    out.canonicalize_and_validate();
    return out;
}

SimplicialMap inclusion_map(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::map<std::string, VertexId> l_index;
    for (std::size_t i = 0; i < l.vertices.size(); ++i)
        l_index[l.vertices[i]] = static_cast<VertexId>(i);
    SimplicialMap f;
    f.domain = k;
    f.codomain = l;
    f.vertex_map.reserve(k.vertices.size());
    for (const auto& name : k.vertices) {
        auto it = l_index.find(name);
        if (it == l_index.end())
            throw MapError("inclusion_map: vertex '" + name + "' not in codomain");
        f.vertex_map.push_back(it->second);
    }
    for (int q = 0; q <= k.dim(); ++q) {
        for (std::size_t i = 0; i < k.count(q); ++i) {
            Simplex image = f.image_set(k.simplices_by_dim[q][i]);
            auto idx = l.find(q, image);
            if (!idx)
                throw MapError("inclusion_map: simplex " +
                               k.simplex_label(k.simplices_by_dim[q][i]) +
                               " not in codomain");
            if (l.weight(q, *idx) != k.weight(q, i))
                throw MapError("inclusion_map: weight mismatch on shared simplex " +
                               k.simplex_label(k.simplices_by_dim[q][i]));
        }
    }
    f.validate();
    return f;
}

}  // namespace plap
