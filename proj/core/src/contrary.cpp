// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/contrary.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "aslab/addpoly.hpp"
#include "aslab/error.hpp"

namespace aslab::contrary {

using addpoly::FpSubspace;
using aslab::detail::ensure;

namespace {

std::vector<Element> without(std::span<const Element> v, std::size_t skip) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(v[i]);
  }
  return out;
}

bool independent(const gf::FiniteField& field, std::span<const Element> v) {
  return FpSubspace::from_generators(field, v).dim() == v.size();
}

}  // namespace

// ---- brute force -------------------------------------------------------------

ContraryOracle::ContraryOracle(const ArtinSchreierExtension& ext)
    : base_(ext.K), image_(asext::wp_image(ext.K)), outside_(asext::wp_outside_image(ext)), in_image_(ext.K.order(), 0) {
  for (const auto& x : image_) in_image_[x.index()] = 1;
}

bool ContraryOracle::is_contrary(std::span<const Element> b) const {
  if (b.empty()) throw InvalidArgument("empty tuple");
  std::vector<std::uint32_t> inverses;
  for (const auto& x : b) {
    if (!(x.field() == base_)) throw FieldMismatch("tuple entry is not in K");
    if (x.is_zero()) throw InvalidArgument("tuple entries must be nonzero");
    inverses.push_back(base_.inv(x.index()));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool met = false;
    for (const auto& u : outside_) {
      const std::uint32_t v = base_.mul(b[i].index(), u.index());
      bool in_all = true;
      for (std::size_t j = 0; j < b.size() && in_all; ++j) {
        if (j != i) in_all = in_image_[base_.mul(v, inverses[j])] != 0;
      }
      if (in_all) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

bool is_contrary_bruteforce(std::span<const Element> b, const ArtinSchreierExtension& ext) {
  return ContraryOracle(ext).is_contrary(b);
}

// ---- generator ---------------------------------------------------------------

ContraryCertificate generate_contrary(const ArtinSchreierExtension& ext, std::span<const Element> a,
                                      const ContraryOracle* oracle) {
  const auto& K = ext.K;
  const auto& e = ext.embedding;
  const std::size_t n = a.size();
  if (n < 2 || n > K.degree()) {
    throw InvalidArgument("tuple length must lie between 2 and [K : F_p] = " + std::to_string(K.degree()));
  }
  for (const auto& x : a) {
    if (!(x.field() == K)) throw FieldMismatch("tuple entry is not in K");
  }
  if (!independent(K, a)) throw InvalidArgument("tuple is not F_p-linearly independent");

  const FpSubspace span_all = FpSubspace::from_generators(K, a);
  const auto f_span_all = addpoly::f_of_subgroup(span_all).base_change(e);
  std::vector<Element> b_base;
  std::vector<Element> b;
  std::vector<addpoly::AdditivePolynomial> f_hyperplanes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto others = without(a, i);
    const FpSubspace hyperplane = FpSubspace::from_generators(K, others);
    b_base.push_back(addpoly::by_one(hyperplane, span_all));
    b.push_back(b_base.back().pow(K.characteristic()));
    f_hyperplanes.push_back(addpoly::f_of_subgroup(hyperplane).base_change(e));
  }

  std::vector<Slot> slots;
  for (std::size_t i = 0; i < n; ++i) {
    const Element beta = ext.alpha * e.apply(a[i]);
    const Element y_in_L = f_span_all(beta);
    const auto y = e.preimage(y_in_L);
    ensure(y.has_value(), "f_T(beta) is not in K");
    std::vector<Element> x;
    for (std::size_t j = 0; j < n; ++j) {
      Element xij = f_hyperplanes[j](beta) / e.apply(b_base[j]);
      ensure(y_in_L == e.apply(b[j]) * asext::wp(xij), "y_i differs from b_j wp(x_ij)");
      ensure(e.contains(xij) == (i != j), "x_ij membership in K does not follow i != j");
      x.push_back(std::move(xij));
    }
    slots.push_back(Slot{beta, *y, std::move(x)});
  }

  ContraryCertificate cert{ext, std::vector<Element>(a.begin(), a.end()), std::move(b_base), std::move(b),
                           std::move(slots)};
  const VerifyResult replay = verify_certificate_detailed(cert);
  ensure(replay.valid, "generated certificate fails replay: " + replay.failure);
  if (ext.L.order() <= gf::kMaxFieldOrder) {
    std::optional<ContraryOracle> local;
    if (oracle == nullptr) oracle = &local.emplace(ext);
    ensure(oracle->is_contrary(cert.b), "generated tuple is not contrary by enumeration");
  }
  return cert;
}

// ---- replay ------------------------------------------------------------------

VerifyResult verify_certificate_detailed(const ContraryCertificate& cert) {
  const auto& ext = cert.ext;
  const auto& K = ext.K;
  const auto& L = ext.L;
  const auto& e = ext.embedding;
  const std::size_t n = cert.a.size();

  auto require_in = [](const Element& x, const gf::FiniteField& f, const char* what) {
    if (!(x.field() == f)) throw MalformedInput(std::string(what) + " is in the wrong field");
  };
  if (n == 0) throw MalformedInput("certificate has an empty tuple");
  if (cert.b_base.size() != n || cert.b.size() != n || cert.slots.size() != n) {
    throw MalformedInput("certificate tuple lengths disagree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    require_in(cert.a[i], K, "a");
    require_in(cert.b_base[i], K, "b_base");
    require_in(cert.b[i], K, "b");
    const auto& slot = cert.slots[i];
    require_in(slot.beta, L, "beta");
    require_in(slot.y, K, "y");
    if (slot.x.size() != n) throw MalformedInput("slot has the wrong number of x entries");
    for (const auto& x : slot.x) require_in(x, L, "x");
  }

  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  const std::string at = " at ";

  if (!asext::is_valid_extension(ext)) return fail("extension invariants");
  if (!independent(K, cert.a)) return fail("a is not F_p-linearly independent");

  std::vector<Element> a_in_L;
  for (const auto& x : cert.a) a_in_L.push_back(e.apply(x));
  const std::uint32_t p = K.characteristic();

  for (std::size_t j = 0; j < n; ++j) {
    const auto& base = cert.b_base[j];
    if (base.is_zero()) return fail("b_base is zero" + at + std::to_string(j));
    if (!(cert.b[j] == base.pow(p))) return fail("b != b_base^p" + at + std::to_string(j));
    // b_base must span the line f_{W_j}(F_p a_j).
    const Element on_line = addpoly::eval_subgroup_polynomial(without(cert.a, j), cert.a[j]);
    bool same_line = false;
    for (std::uint32_t c = 1; c < p && !same_line; ++c) same_line = base == K.constant(c) * on_line;
    if (!same_line) return fail("b_base is not on the line f_W(F_p a)" + at + std::to_string(j));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& slot = cert.slots[i];
    const std::string where = at + "slot " + std::to_string(i);
    if (!(slot.beta == ext.alpha * a_in_L[i])) return fail("beta != alpha * a" + where);
    const Element y = e.apply(slot.y);
    if (!(y == addpoly::eval_subgroup_polynomial(a_in_L, slot.beta))) return fail("y != f_T(beta)" + where);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = slot.x[j];
      const std::string cell = where + ", column " + std::to_string(j);
      if (!(y == e.apply(cert.b[j]) * asext::wp(x))) return fail("y != b wp(x)" + cell);
      if (e.contains(x) != (i != j)) return fail("membership of x in K" + cell);
      const Element image = addpoly::eval_subgroup_polynomial(without(a_in_L, j), slot.beta);
      if (!(x * e.apply(cert.b_base[j]) == image)) return fail("x != f_W(beta) / b_base" + cell);
    }
  }
  return VerifyResult{true, {}};
}

bool verify_certificate(const ContraryCertificate& cert) { return verify_certificate_detailed(cert).valid; }

std::vector<Element> sample_independent_tuple(const gf::FiniteField& K, std::size_t n, std::mt19937_64& rng) {
  if (n < 1 || n > K.degree()) throw InvalidArgument("an independent tuple needs 1 <= n <= [K : F_p]");
  std::vector<Element> tuple;
  for (;;) {
    tuple.clear();
    for (std::size_t i = 0; i < n; ++i) tuple.push_back(K.element(static_cast<std::uint32_t>(rng() % K.order())));
    if (independent(K, tuple)) return tuple;
  }
}

// ---- closure and census ------------------------------------------------------

ClosureReport closure_check(std::span<const Element> b, const ContraryOracle& oracle) {
  if (b.empty() || b.size() > 4) throw BoundExceeded("closure check supports tuples of length 1 to 4");
  if (!oracle.is_contrary(b)) throw InvalidArgument("closure check needs a contrary tuple");
  ClosureReport report;
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  auto classify = [&](const std::vector<std::size_t>& indices) {
    std::vector<Element> picked;
    for (auto i : indices) picked.push_back(b[i]);
    return ClosureEntry{indices, oracle.is_contrary(picked)};
  };
  do {
    report.permutations.push_back(classify(order));
  } while (std::next_permutation(order.begin(), order.end()));
  for (std::uint32_t mask = 1; mask < (1U << b.size()); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (mask & (1U << i)) indices.push_back(i);
    }
    report.subtuples.push_back(classify(indices));
  }
  report.all_passed = std::all_of(report.permutations.begin(), report.permutations.end(),
                                  [](const auto& entry) { return entry.contrary; }) &&
                      std::all_of(report.subtuples.begin(), report.subtuples.end(),
                                  [](const auto& entry) { return entry.contrary; });
  return report;
}

CensusReport census(const ContraryOracle& oracle, std::size_t n) {
  const auto& K = oracle.base();
  if (n < 1) throw InvalidArgument("census needs n >= 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= K.order();
    if (total > kMaxCensusSize) throw BoundExceeded("census over |K|^n > 10^6 tuples");
  }
  CensusReport report;
  report.n = n;
  const std::uint32_t units = K.order() - 1;
  std::vector<std::uint32_t> digits(n, 0);
  std::vector<Element> tuple(n, K.one());
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) tuple[i] = K.element(digits[i] + 1);
    ++report.candidates;
    if (oracle.is_contrary(tuple)) report.contrary_tuples.push_back(tuple);
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == units) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return report;
}

}  // namespace aslab::contrary
