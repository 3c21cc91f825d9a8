// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/serialize.hpp"

#include <map>
#include <utility>

#include "aslab/error.hpp"

namespace aslab::serialize {

using addpoly::AdditivePolynomial;
using addpoly::FpSubspace;
using gf::Element;
using gf::FiniteField;

namespace {

// Runs a loader and turns any parse or contract error into MalformedInput.
template <typename F>
auto guarded(const char* what, F&& load) -> decltype(load()) {
  try {
    return load();
  } catch (const MalformedInput&) {
    throw;
  } catch (const Json::exception& err) {
    throw MalformedInput(std::string(what) + ": " + err.what());
  } catch (const InvalidArgument& err) {
    throw MalformedInput(std::string(what) + ": " + err.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  return j;
}

Json indices_json(const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& err) {
    throw MalformedInput(std::string("invalid JSON: ") + err.what());
  }
}

// ---- values ------------------------------------------------------------------

Json to_json(const FiniteField& field) { return field.spec(); }

Json to_json(const Element& x) { return x.digits(); }

Json to_json(std::span<const Element> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json to_json(const AdditivePolynomial& f) {
  return Json{{"field", to_json(f.field())}, {"coeffs", to_json(std::span<const Element>(f.coeffs()))}};
}

Json to_json(const FpSubspace& s) {
  const auto basis = s.basis();
  return Json{{"field", to_json(s.ambient())}, {"basis", to_json(std::span<const Element>(basis))}};
}

Json to_json(const asext::ArtinSchreierExtension& ext) {
  return Json{{"K", to_json(ext.K)},
              {"L", to_json(ext.L)},
              {"embedding_generator_image", to_json(ext.embedding.image_of_generator())},
              {"a", to_json(ext.a)},
              {"alpha", to_json(ext.alpha)}};
}

Json to_json(const contrary::ContraryCertificate& cert) {
  Json slots = Json::array();
  for (const auto& slot : cert.slots) {
    slots.push_back(Json{{"beta", to_json(slot.beta)},
                         {"y", to_json(slot.y)},
                         {"x", to_json(std::span<const Element>(slot.x))}});
  }
  return Json{{"ext", to_json(cert.ext)},
              {"a", to_json(std::span<const Element>(cert.a))},
              {"b_base", to_json(std::span<const Element>(cert.b_base))},
              {"b", to_json(std::span<const Element>(cert.b))},
              {"slots", std::move(slots)}};
}

Json to_json(const hypercube::BottomUpHypercube& cube) {
  Json nodes = Json::object();
  for (const auto& [s, f] : cube.nodes()) nodes[hypercube::subset_key(s)] = to_json(f);
  Json edges = Json::object();
  for (const auto& [pair, h] : cube.edges()) edges[hypercube::edge_key(pair.first, pair.second)] = to_json(h);
  return Json{{"n", cube.n()},
              {"field", to_json(cube.field())},
              {"a", to_json(std::span<const Element>(cube.a()))},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

// ---- reports -----------------------------------------------------------------

Json to_json(const contrary::VerifyResult& r) { return Json{{"valid", r.valid}, {"failure", r.failure}}; }

Json to_json(const contrary::ClosureReport& r) {
  auto entries = [](const std::vector<contrary::ClosureEntry>& list) {
    Json out = Json::array();
    for (const auto& e : list) out.push_back(Json{{"indices", indices_json(e.indices)}, {"contrary", e.contrary}});
    return out;
  };
  return Json{{"permutations", entries(r.permutations)},
              {"subtuples", entries(r.subtuples)},
              {"all_passed", r.all_passed}};
}

Json to_json(const contrary::CensusReport& r) {
  Json tuples = Json::array();
  for (const auto& t : r.contrary_tuples) tuples.push_back(to_json(std::span<const Element>(t)));
  return Json{{"n", r.n},
              {"candidates", r.candidates},
              {"contrary_count", r.contrary_tuples.size()},
              {"contrary_tuples", std::move(tuples)}};
}

Json to_json(const hypercube::CheckReport& r) {
  return Json{{"name", r.name},
              {"passed", r.passed},
              {"checked", r.checked},
              {"nontrivial", r.nontrivial},
              {"counterexample", r.counterexample}};
}

Json to_json(const hypercube::BaldwinSaxlReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"index", e.index},
                           {"edge_surjective", e.edge_surjective},
                           {"contains_intersection", e.contains_intersection},
                           {"image_size", e.image_size},
                           {"intersection_size", e.intersection_size}});
  }
  return Json{{"entries", std::move(entries)},
              {"failure_everywhere", r.failure_everywhere},
              {"equivalence_holds", r.equivalence_holds}};
}

Json to_json(const hypercube::PointCountReport& r) {
  return Json{{"count", r.count}, {"field_order", r.field_order}, {"hempel", r.hempel}, {"matches", r.matches}};
}

Json to_json(const hypercube::CrossCheckReport& r) {
  Json slots = Json::array();
  for (const auto& s : r.slots) {
    slots.push_back(Json{{"slot", s.slot + 1}, {"order", indices_json(s.order)}, {"passed", s.passed}});
  }
  return Json{{"slots", std::move(slots)}, {"passed", r.passed}};
}

// ---- loaders -----------------------------------------------------------------

FiniteField field_from_json(const Json& j) {
  return guarded("field", [&] {
    if (!j.is_string()) throw MalformedInput("field must be a spec string");
    return FiniteField::parse(j.get<std::string>());
  });
}

Element element_from_json(const FiniteField& field, const Json& j) {
  return guarded("element", [&] {
    array(j, "element");
    for (const auto& d : j) {
      if (!d.is_number_unsigned()) throw MalformedInput("element digits must be non-negative integers");
    }
    return field.from_digits(j.get<gf::Digits>());
  });
}

std::vector<Element> elements_from_json(const FiniteField& field, const Json& j) {
  std::vector<Element> out;
  for (const auto& x : array(j, "element list")) out.push_back(element_from_json(field, x));
  return out;
}

AdditivePolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const FiniteField field = field_from_json(member(j, "field"));
    return AdditivePolynomial(field, elements_from_json(field, member(j, "coeffs")));
  });
}

FpSubspace subspace_from_json(const Json& j) {
  return guarded("subspace", [&] {
    const FiniteField field = field_from_json(member(j, "field"));
    const auto basis = elements_from_json(field, member(j, "basis"));
    return FpSubspace::from_generators(field, basis);
  });
}

asext::ArtinSchreierExtension extension_from_json(const Json& j) {
  return guarded("extension", [&] {
    const FiniteField K = field_from_json(member(j, "K"));
    const FiniteField L = field_from_json(member(j, "L"));
    if (L.characteristic() != K.characteristic() || L.degree() != K.degree() * K.characteristic()) {
      throw MalformedInput("L must have degree p over K");
    }
    const Element image = element_from_json(L, member(j, "embedding_generator_image"));
    return asext::ArtinSchreierExtension{K, L, gf::Embedding(K, L, image), element_from_json(K, member(j, "a")),
                                         element_from_json(L, member(j, "alpha"))};
  });
}

contrary::ContraryCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    auto ext = extension_from_json(member(j, "ext"));
    contrary::ContraryCertificate cert{ext,
                                       elements_from_json(ext.K, member(j, "a")),
                                       elements_from_json(ext.K, member(j, "b_base")),
                                       elements_from_json(ext.K, member(j, "b")),
                                       {}};
    for (const auto& slot : array(member(j, "slots"), "slots")) {
      cert.slots.push_back(contrary::Slot{element_from_json(ext.L, member(slot, "beta")),
                                          element_from_json(ext.K, member(slot, "y")),
                                          elements_from_json(ext.L, member(slot, "x"))});
    }
    return cert;
  });
}

hypercube::BottomUpHypercube hypercube_from_json(const Json& j) {
  return guarded("hypercube", [&] {
    const FiniteField field = field_from_json(member(j, "field"));
    auto a = elements_from_json(field, member(j, "a"));
    const Json& n = member(j, "n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() != a.size()) {
      throw MalformedInput("n must equal the length of a");
    }
    std::map<hypercube::Subset, AdditivePolynomial> nodes;
    const Json& node_doc = member(j, "nodes");
    if (!node_doc.is_object()) throw MalformedInput("nodes must be an object");
    for (const auto& [key, value] : node_doc.items()) {
      nodes.emplace(hypercube::parse_subset_key(key), polynomial_from_json(value));
    }
    std::map<hypercube::SubsetPair, AdditivePolynomial> edges;
    const Json& edge_doc = member(j, "edges");
    if (!edge_doc.is_object()) throw MalformedInput("edges must be an object");
    for (const auto& [key, value] : edge_doc.items()) {
      edges.emplace(hypercube::parse_edge_key(key), polynomial_from_json(value));
    }
    return hypercube::BottomUpHypercube(field, std::move(a), std::move(nodes), std::move(edges));
  });
}

}  // namespace aslab::serialize
