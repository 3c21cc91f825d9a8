// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aslab/fp_linalg.hpp"

/// Exact arithmetic in GF(p^k), Frobenius and trace, and subfield embeddings.
///
/// A field is F_p[x] modulo a monic irreducible polynomial. Elements are
/// residue classes written as little-endian coefficient vectors
/// [d0, d1, ..., d_{k-1}] with d_i in [0, p).
///
/// Every element also has an index in [0, p^k) that orders elements
/// lexicographically by that vector, comparing d0 first. Enumerating indices
/// upward therefore walks the field in lexicographic order, which is what
/// every "lex-smallest" choice in the library relies on.
namespace aslab::gf {

using Digits = linalg::Vector;

/// Largest field order the library will construct.
inline constexpr std::uint32_t kMaxFieldOrder = 65536;

bool is_prime(std::uint64_t n);

/// Ben-Or test: monic f of degree k is irreducible over F_p iff
/// gcd(x^{p^d} - x, f) = 1 for every d <= k/2.
bool is_irreducible(std::uint32_t p, const Digits& monic);

/// Lexicographically smallest (d0 first) monic irreducible of degree k.
Digits find_irreducible(std::uint32_t p, std::uint32_t k);

class Element;

namespace detail {
struct FieldData;
}

class FiniteField {
 public:
  /// GF(p^k) with the canonical modulus from find_irreducible.
  FiniteField(std::uint32_t p, std::uint32_t k);
  /// GF(p^k) with an explicit monic irreducible modulus (validated).
  FiniteField(std::uint32_t p, Digits modulus);

  /// Parses "p^k" or "p^k/[c0,c1,...,1]".
  static FiniteField parse(std::string_view spec);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  const Digits& modulus() const;

  /// Canonical spec string, always with the explicit modulus.
  std::string spec() const;

  Element zero() const;
  Element one() const;
  /// Residue class of x.
  Element generator() const;
  /// Element of the prime field with value c mod p.
  Element constant(std::uint32_t c) const;
  Element element(std::uint32_t index) const;
  Element from_digits(const Digits& digits) const;
  /// Parses "[d0,...,d_{k-1}]".
  Element parse_element(std::string_view text) const;
  std::vector<Element> elements() const;

  // Index-level arithmetic backing Element; exposed for tight enumeration loops.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  Digits digits_of(std::uint32_t index) const;
  std::uint32_t index_of(const Digits& digits) const;

  /// Same characteristic, degree and modulus.
  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldData> data);

  std::shared_ptr<const detail::FieldData> data_;
};

class Element {
 public:
  Element(FiniteField field, std::uint32_t index);

  const FiniteField& field() const { return field_; }
  std::uint32_t index() const { return index_; }
  Digits digits() const { return field_.digits_of(index_); }
  std::string to_string() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  /// Throws DivisionByZero when other is zero.
  Element operator/(const Element& other) const;
  Element operator-() const;
  Element& operator+=(const Element& other) { return *this = *this + other; }
  Element& operator-=(const Element& other) { return *this = *this - other; }
  Element& operator*=(const Element& other) { return *this = *this * other; }

  Element inverse() const;
  Element pow(std::uint64_t e) const;
  /// x^{p^i}.
  Element frobenius(std::uint64_t i) const;
  /// sum_{i<k} x^{p^i}, as a value in [0, p).
  std::uint32_t trace_to_prime() const;

  /// Same field and same residue class.
  friend bool operator==(const Element& a, const Element& b);
  /// Lexicographic order on coefficient vectors. Both operands must share a field.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  const FiniteField& same_field(const Element& other) const;

  FiniteField field_;
  std::uint32_t index_;
};

/// A field homomorphism K -> L determined by the image of K's generator.
class Embedding {
 public:
  /// Canonical embedding: the lex-smallest root of K's modulus in L, or the
  /// identity when K and L are the same field.
  Embedding(FiniteField source, FiniteField target);
  /// Embedding with a given image of the generator; it must be a root of
  /// the source modulus.
  Embedding(FiniteField source, FiniteField target, const Element& image_of_generator);

  static Embedding identity(const FiniteField& field);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  const Element& image_of_generator() const { return image_; }

  Element apply(const Element& x) const;
  /// The unique x with apply(x) = y, when y lies in the image.
  std::optional<Element> preimage(const Element& y) const;
  /// Frobenius fixed-point test y^{p^k} = y with k = [source : F_p].
  bool contains(const Element& y) const;

 private:
  void build_linear_map();

  FiniteField source_;
  FiniteField target_;
  Element image_;
  std::vector<Digits> basis_images_;
  std::shared_ptr<const linalg::CombinationSolver> solver_;
};

Embedding build_embedding(const FiniteField& source, const FiniteField& target);
bool in_subfield(const Embedding& e, const Element& y);

}  // namespace aslab::gf
