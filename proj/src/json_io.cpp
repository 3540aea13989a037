#include "subgauss/json_io.hpp"

namespace subgauss {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("config: " + what);
}

double number(const json& j, const std::string& what) {
  require(j.is_number(), what + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<int>();
}

}  // namespace

ScalarDist scalar_dist_from_json(const json& j) {
  require(j.is_object() && j.contains("atoms") && j["atoms"].is_array(),
          "scalar distribution needs an \"atoms\" array");
  std::vector<Atom> atoms;
  for (const json& a : j["atoms"]) {
    require(a.is_array() && a.size() == 2, "atom must be a [value, prob] pair");
    atoms.push_back({number(a[0], "atom value"), number(a[1], "atom prob")});
  }
  return ScalarDist(std::move(atoms));
}

VectorSpec vector_spec_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(),
          "vector spec needs a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "product") {
    require(j.contains("marginals") && j["marginals"].is_array(),
            "product spec needs \"marginals\"");
    ProductSpec s;
    for (const json& m : j["marginals"]) s.marginals.push_back(scalar_dist_from_json(m));
    return {std::move(s)};
  }
  if (kind == "cancellation") {
    require(j.contains("base") && j.contains("n"), "cancellation spec needs base, n");
    CancellationSpec s{scalar_dist_from_json(j["base"]), integer(j["n"], "n"), {}};
    if (j.contains("members")) {
      require(j["members"].is_array(), "members must be an array");
      for (const json& v : j["members"]) s.members.push_back(integer(v, "member"));
    }
    return {std::move(s)};
  }
  if (kind == "convex") {
    require(j.contains("weights") && j.contains("parts"),
            "convex spec needs weights, parts");
    ConvexCombinationSpec s;
    for (const json& w : j["weights"]) s.weights.push_back(number(w, "weight"));
    for (const json& part : j["parts"]) s.parts.push_back(vector_spec_from_json(part));
    return {std::move(s)};
  }
  if (kind == "explicit") {
    require(j.contains("dim") && j.contains("atoms"), "explicit spec needs dim, atoms");
    ExplicitSpec s;
    s.dim = integer(j["dim"], "dim");
    for (const json& a : j["atoms"]) {
      require(a.is_object() && a.contains("prob") && a.contains("point"),
              "explicit atom needs prob, point");
      VectorAtom atom;
      atom.prob = number(a["prob"], "prob");
      for (const json& v : a["point"]) atom.point.push_back(number(v, "coordinate"));
      s.atoms.push_back(std::move(atom));
    }
    return {std::move(s)};
  }
  if (kind == "example42") {
    require(j.contains("n") && j.contains("base"), "example42 spec needs n, base");
    return {Example42Spec{integer(j["n"], "n"), scalar_dist_from_json(j["base"])}};
  }
  if (kind == "example51") {
    require(j.contains("n") && j.contains("d") && j.contains("base"),
            "example51 spec needs n, d, base");
    return {Example51VectorSpec{integer(j["n"], "n"), integer(j["d"], "d"),
                                scalar_dist_from_json(j["base"])}};
  }
  throw DomainError("config: unknown vector spec kind \"" + kind + "\"");
}

Direction direction_from_json(const json& j) {
  require(j.is_array(), "direction must be an array of numbers");
  Direction d;
  for (const json& v : j) d.coords.push_back(number(v, "direction entry"));
  return d;
}

Hypergraph hypergraph_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("d") &&
              j.contains("edges") && j.contains("weights"),
          "hypergraph needs n, d, edges, weights");
  std::vector<std::vector<int>> edges;
  for (const json& e : j["edges"]) {
    require(e.is_array(), "edge must be a vertex list");
    std::vector<int> verts;
    for (const json& v : e) verts.push_back(integer(v, "vertex"));
    edges.push_back(std::move(verts));
  }
  std::vector<double> weights;
  for (const json& w : j["weights"]) weights.push_back(number(w, "weight"));
  return Hypergraph::from_vertex_lists(integer(j["n"], "n"), integer(j["d"], "d"),
                                       edges, weights);
}

SubsetMeasure measure_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("p"),
          "measure needs n, p");
  const int n = integer(j["n"], "n");
  const double p = number(j["p"], "p");
  std::string mode = "exact";
  if (j.contains("mode")) {
    require(j["mode"].is_string(), "mode must be a string");
    mode = j["mode"].get<std::string>();
  }
  if (mode == "exact") return SubsetMeasure::exact(n, p);
  if (mode == "sampled") {
    const std::uint64_t count =
        j.contains("count") ? j["count"].get<std::uint64_t>() : 100000;
    const std::uint64_t seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
    return SubsetMeasure::sampled(n, p, count, seed);
  }
  throw DomainError("config: unknown measure mode \"" + mode + "\"");
}

json scalar_dist_to_json(const ScalarDist& d) {
  json atoms = json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({a.value, a.prob});
  return {{"atoms", atoms}};
}

namespace {

struct SpecEncoder {
  json operator()(const ProductSpec& s) const {
    json marg = json::array();
    for (const ScalarDist& m : s.marginals) marg.push_back(scalar_dist_to_json(m));
    return {{"kind", "product"}, {"marginals", marg}};
  }
  json operator()(const CancellationSpec& s) const {
    return {{"kind", "cancellation"},
            {"base", scalar_dist_to_json(s.base)},
            {"n", s.n},
            {"members", s.members}};
  }
  json operator()(const ConvexCombinationSpec& s) const {
    json parts = json::array();
    for (const VectorSpec& part : s.parts) parts.push_back(vector_spec_to_json(part));
    return {{"kind", "convex"}, {"weights", s.weights}, {"parts", parts}};
  }
  json operator()(const ExplicitSpec& s) const {
    json atoms = json::array();
    for (const VectorAtom& a : s.atoms) {
      atoms.push_back({{"prob", a.prob}, {"point", a.point}});
    }
    return {{"kind", "explicit"}, {"dim", s.dim}, {"atoms", atoms}};
  }
  json operator()(const Example42Spec& s) const {
    return {{"kind", "example42"}, {"n", s.n}, {"base", scalar_dist_to_json(s.base)}};
  }
  json operator()(const Example51VectorSpec& s) const {
    return {{"kind", "example51"},
            {"n", s.n},
            {"d", s.d},
            {"base", scalar_dist_to_json(s.base)}};
  }
};

}  // namespace

json vector_spec_to_json(const VectorSpec& spec) {
  return std::visit(SpecEncoder{}, spec.node);
}

json direction_to_json(const Direction& theta) { return theta.coords; }

json hypergraph_to_json(const Hypergraph& W) {
  json edges = json::array();
  json weights = json::array();
  for (const auto& [mask, w] : W.edges) {
    json verts = json::array();
    for (int i = 0; i < W.n; ++i) {
      if (mask >> i & 1u) verts.push_back(i + 1);
    }
    edges.push_back(verts);
    weights.push_back(w);
  }
  return {{"n", W.n}, {"d", W.d}, {"edges", edges}, {"weights", weights}};
}

}  // namespace subgauss
