#pragma once

#include <string>

#include <json.hpp>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/hypergraph.hpp"
#include "subgauss/random_vector.hpp"

namespace subgauss {

// Schemas (see README):
//   vector spec: {"kind":"product","marginals":[{"atoms":[[v,p],...]},...]}
//                {"kind":"cancellation","base":{...},"n":4,"members":[1,3]}
//                {"kind":"convex","weights":[...],"parts":[{...},...]}
//                {"kind":"explicit","dim":2,"atoms":[{"prob":p,"point":[...]},...]}
//                {"kind":"example42","n":20,"base":{...}}
//                {"kind":"example51","n":10,"d":2,"base":{...}}
//   direction:   [t1,...,tn]
//   hypergraph:  {"n":..,"d":..,"edges":[[i,j,..],..],"weights":[..]}
//   measure:     {"n":..,"p":..,"mode":"exact"|"sampled","seed":..,"count":..}
ScalarDist scalar_dist_from_json(const nlohmann::json& j);
VectorSpec vector_spec_from_json(const nlohmann::json& j);
Direction direction_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
SubsetMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json scalar_dist_to_json(const ScalarDist& d);
nlohmann::json vector_spec_to_json(const VectorSpec& spec);
nlohmann::json direction_to_json(const Direction& theta);
nlohmann::json hypergraph_to_json(const Hypergraph& W);

}  // namespace subgauss
