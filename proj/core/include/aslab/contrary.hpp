// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aslab/asext.hpp"

namespace aslab::contrary {

using asext::ArtinSchreierExtension;
using gf::Element;

/// Witnesses for one slot i of a contrary tuple:
/// y = b_j * wp(x[j]) for every j, with x[j] in K exactly when j != i.
struct Slot {
  Element beta;            // in L
  Element y;               // in K
  std::vector<Element> x;  // in L
};

/// A replayable witness that b = (b_1^p, ..., b_n^p) is (L,K)-contrary,
/// together with the data the generator used to produce it.
struct ContraryCertificate {
  ArtinSchreierExtension ext;
  std::vector<Element> a;       // F_p-independent, in K
  std::vector<Element> b_base;  // in K, f_T = twist(b_base[i]) o f_{W_i}
  std::vector<Element> b;       // b_base[i]^p
  std::vector<Slot> slots;
};

/// Precomputes A = wp(K) and U = wp(L \ K) cap K once per extension so
/// that many tuples can be classified cheaply.
class ContraryOracle {
 public:
  explicit ContraryOracle(const ArtinSchreierExtension& ext);

  const gf::FiniteField& base() const { return base_; }
  const std::vector<Element>& image() const { return image_; }
  const std::vector<Element>& outside_image() const { return outside_; }

  /// For every i: (b_i * U) meets the intersection of b_j * A over j != i.
  /// With a single entry the intersection is all of K.
  bool is_contrary(std::span<const Element> b) const;

 private:
  gf::FiniteField base_;
  std::vector<Element> image_;
  std::vector<Element> outside_;
  std::vector<char> in_image_;
};

bool is_contrary_bruteforce(std::span<const Element> b, const ArtinSchreierExtension& ext);

/// Builds the certificate for an F_p-independent tuple a of length 2..k.
/// Every slot is materialized with beta_i = alpha * a_i. If `oracle` is null
/// one is built to confirm the resulting tuple by enumeration.
ContraryCertificate generate_contrary(const ArtinSchreierExtension& ext, std::span<const Element> a,
                                      const ContraryOracle* oracle = nullptr);

struct VerifyResult {
  bool valid = false;
  std::string failure;  // first failed check, empty when valid
};

/// Replays every equation and membership of the certificate with exact
/// arithmetic. Never enumerates L. Throws MalformedInput for structural
/// problems (wrong lengths, elements from the wrong field).
VerifyResult verify_certificate_detailed(const ContraryCertificate& cert);
bool verify_certificate(const ContraryCertificate& cert);

struct ClosureEntry {
  std::vector<std::size_t> indices;  // positions of b, in the order used
  bool contrary = false;
};

struct ClosureReport {
  std::vector<ClosureEntry> permutations;
  std::vector<ClosureEntry> subtuples;
  bool all_passed = false;
};

/// Brute-force check that every permutation and every nonempty subtuple of
/// a contrary tuple is contrary. Requires 1 <= n <= 4.
ClosureReport closure_check(std::span<const Element> b, const ContraryOracle& oracle);

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t candidates = 0;
  std::vector<std::vector<Element>> contrary_tuples;  // lex order
};

/// Draws entries of K as rng() % |K| until the n-tuple is F_p-independent.
/// Uses only the raw engine output so draws match on every standard library.
std::vector<Element> sample_independent_tuple(const gf::FiniteField& K, std::size_t n, std::mt19937_64& rng);

inline constexpr std::uint64_t kMaxCensusSize = 1000000;

/// Classifies every n-tuple over K^x. Requires |K|^n <= 10^6.
CensusReport census(const ContraryOracle& oracle, std::size_t n);

}  // namespace aslab::contrary
