// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "aslab/addpoly.hpp"
#include "aslab/asext.hpp"
#include "aslab/contrary.hpp"
#include "aslab/hypercube.hpp"

/// Canonical JSON forms. Objects use sorted keys, fields are spec strings
/// with an explicit modulus and elements are little-endian digit arrays, so
/// equal values always serialize to identical bytes. Every loader throws
/// MalformedInput on structural problems.
namespace aslab::serialize {

using Json = nlohmann::json;

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);
Json parse(std::string_view text);

Json to_json(const gf::FiniteField& field);
Json to_json(const gf::Element& x);
Json to_json(std::span<const gf::Element> xs);
Json to_json(const addpoly::AdditivePolynomial& f);
Json to_json(const addpoly::FpSubspace& s);
Json to_json(const asext::ArtinSchreierExtension& ext);
Json to_json(const contrary::ContraryCertificate& cert);
Json to_json(const hypercube::BottomUpHypercube& cube);

Json to_json(const contrary::VerifyResult& r);
Json to_json(const contrary::ClosureReport& r);
Json to_json(const contrary::CensusReport& r);
Json to_json(const hypercube::CheckReport& r);
Json to_json(const hypercube::BaldwinSaxlReport& r);
Json to_json(const hypercube::PointCountReport& r);
Json to_json(const hypercube::CrossCheckReport& r);

gf::FiniteField field_from_json(const Json& j);
gf::Element element_from_json(const gf::FiniteField& field, const Json& j);
std::vector<gf::Element> elements_from_json(const gf::FiniteField& field, const Json& j);
addpoly::AdditivePolynomial polynomial_from_json(const Json& j);
addpoly::FpSubspace subspace_from_json(const Json& j);
/// Checks that the embedding image is a root but not the Artin-Schreier
/// invariants, so an inconsistent extension reaches the verifier.
asext::ArtinSchreierExtension extension_from_json(const Json& j);
contrary::ContraryCertificate certificate_from_json(const Json& j);
hypercube::BottomUpHypercube hypercube_from_json(const Json& j);

}  // namespace aslab::serialize
