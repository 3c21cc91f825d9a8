// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aslab/gf.hpp"

namespace aslab::addpoly {

using gf::Element;
using gf::Embedding;
using gf::FiniteField;

/// Largest subgroup order for which f_G is expanded as a dense product.
inline constexpr std::uint32_t kMaxSubgroupOrder = 4096;
inline constexpr std::size_t kMaxSubgroupDim = 12;

/// An F_p-linear subspace of a finite field's additive group, kept as a
/// reduced echelon basis over the field's coordinate vectors.
class FpSubspace {
 public:
  /// The zero subspace.
  explicit FpSubspace(FiniteField ambient);

  static FpSubspace from_generators(const FiniteField& ambient, std::span<const Element> gens);
  static FpSubspace whole(const FiniteField& ambient);
  static FpSubspace prime_field(const FiniteField& ambient);
  static FpSubspace line(const Element& b);

  const FiniteField& ambient() const { return ambient_; }
  std::vector<Element> basis() const;
  std::size_t dim() const { return echelon_.rank(); }
  /// p^dim.
  std::uint64_t size() const;

  bool contains(const Element& x) const;
  bool contains(const FpSubspace& other) const;
  /// All p^dim elements, as the combinations sum c_i * basis_i with the
  /// coefficient tuple counted upward (last basis vector fastest).
  std::vector<Element> elements() const;

  FpSubspace sum(const FpSubspace& other) const;
  FpSubspace intersect(const FpSubspace& other) const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b);

 private:
  FiniteField ambient_;
  linalg::EchelonBasis echelon_;
};

/// Every subspace of the ambient field with dimension at most max_dim, in a
/// deterministic order (by dimension, then by discovery).
std::vector<FpSubspace> enumerate_subspaces(const FiniteField& ambient, std::size_t max_dim);

/// sum_i c_i x^{p^i} over a coefficient field.
class AdditivePolynomial {
 public:
  /// coeffs[i] is the coefficient of x^{p^i}; trailing zeros are dropped.
  AdditivePolynomial(FiniteField field, std::vector<Element> coeffs);

  /// x.
  static AdditivePolynomial identity(const FiniteField& field);
  /// The Artin-Schreier polynomial x^p - x.
  static AdditivePolynomial artin_schreier(const FiniteField& field);

  const FiniteField& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  /// Index of the leading term; the ordinary degree is p^p_degree().
  std::size_t p_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  /// Evaluation at x in the coefficient field.
  Element operator()(const Element& x) const;
  /// Evaluation at x in the target of e (coefficients are pushed through e).
  Element eval(const Element& x, const Embedding& e) const;

  /// Same polynomial with coefficients mapped through e.
  AdditivePolynomial base_change(const Embedding& e) const;

  std::string to_string() const;

  friend bool operator==(const AdditivePolynomial& a, const AdditivePolynomial& b);

 private:
  FiniteField field_;
  std::vector<Element> coeffs_;
};

/// outer(inner(x)).
AdditivePolynomial compose(const AdditivePolynomial& outer, const AdditivePolynomial& inner);

/// prod_{a in G} (x - a), expanded and then converted to linearized form.
/// Throws LemmaViolation if a non-p-power monomial survives the expansion.
AdditivePolynomial f_of_subgroup(const FpSubspace& group);

/// b^p * wp(x / b) = x^p - b^{p-1} x.
AdditivePolynomial twist_of_line(const Element& b);

/// {x in e.target() : f(x) = 0} for f over e.source(), by enumeration.
FpSubspace kernel_in(const AdditivePolynomial& f, const Embedding& e);

/// Complement of G in H obtained by extending G's basis with H's basis in
/// stored order. Requires G inside H.
FpSubspace complement(const FpSubspace& group, const FpSubspace& over);

struct Decomposition {
  FpSubspace quotient;  // C = f_G(C_0)
  AdditivePolynomial f_quotient;
};

/// C with |C| = |H : G| and f_H = f_C o f_G (checked before returning).
Decomposition decompose(const FpSubspace& group, const FpSubspace& over);

/// For an index-p inclusion G in H: the b with f_H = twist_of_line(b) o f_G.
Element by_one(const FpSubspace& group, const FpSubspace& over);

/// Same value as f_of_subgroup(span(gens))(x) without expanding any
/// polynomial: applies the twist recursion one generator at a time.
/// Costs O(n^2) field operations for n generators.
Element eval_subgroup_polynomial(std::span<const Element> gens, const Element& x);

enum class DescendOutcome {
  kInSubfield,             // the lemma's conclusion: a lies in K
  kIntersectionNonzero,    // hypothesis failed: the subgroups share a nonzero element
  kValueOutsideSubfield,   // hypothesis failed: some f_{G_i}(a) is not in K
};

/// If the G_i (subgroups of K) intersect trivially and every f_{G_i}(a) lies
/// in K, then a lies in K. Returns which branch applied; throws
/// LemmaViolation if the hypotheses hold and a is still outside K.
DescendOutcome descend(std::span<const FpSubspace> groups, const Element& a, const Embedding& e);

const char* to_string(DescendOutcome outcome);

}  // namespace aslab::addpoly
