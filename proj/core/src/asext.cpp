// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/asext.hpp"

#include <algorithm>

#include "aslab/error.hpp"

namespace aslab::asext {

using aslab::detail::ensure;

namespace {

void check_enumerable(const FiniteField& f) {
  if (f.order() > gf::kMaxFieldOrder) throw BoundExceeded("field too large to enumerate");
}

// Sorted, deduplicated elements of `field` flagged in `mask`.
std::vector<Element> collect(const FiniteField& field, const std::vector<char>& mask) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    if (mask[i]) out.push_back(field.element(i));
  }
  return out;
}

}  // namespace

Element wp(const Element& x) { return x.pow(x.field().characteristic()) - x; }

ArtinSchreierExtension build_as_extension(const FiniteField& K) {
  const std::uint32_t p = K.characteristic();
  const std::uint64_t degree = static_cast<std::uint64_t>(K.degree()) * p;
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < degree && order <= gf::kMaxFieldOrder; ++i) order *= p;
  if (order > gf::kMaxFieldOrder) {
    throw BoundExceeded("Artin-Schreier extension of " + K.spec() + " exceeds 65536 elements");
  }
  std::optional<Element> a;
  for (std::uint32_t i = 0; i < K.order() && !a; ++i) {
    Element x = K.element(i);
    if (x.trace_to_prime() != 0) a = x;
  }
  ensure(a.has_value(), "trace is identically zero");
  FiniteField L(p, static_cast<std::uint32_t>(degree));
  Embedding e = gf::build_embedding(K, L);
  const Element target = e.apply(*a);
  std::optional<Element> alpha;
  for (std::uint32_t i = 0; i < L.order() && !alpha; ++i) {
    Element y = L.element(i);
    if (wp(y) == target) alpha = y;
  }
  ensure(alpha.has_value(), "x^p - x - a has no root in the degree-p extension");
  ArtinSchreierExtension ext{K, L, std::move(e), *a, *alpha};
  ensure(is_valid_extension(ext), "constructed extension violates its invariants");
  return ext;
}

ArtinSchreierExtension make_as_extension(const FiniteField& K, const FiniteField& L,
                                         const Element& generator_image, const Element& a,
                                         const Element& alpha) {
  if (L.degree() != K.degree() * K.characteristic()) {
    throw InvalidArgument("L must have degree p over K");
  }
  ArtinSchreierExtension ext{K, L, Embedding(K, L, generator_image), a, alpha};
  if (!(a.field() == K) || !(alpha.field() == L)) throw FieldMismatch("extension data in the wrong field");
  if (!is_valid_extension(ext)) throw InvalidArgument("extension data violates the Artin-Schreier invariants");
  return ext;
}

bool is_valid_extension(const ArtinSchreierExtension& ext) {
  if (!(ext.embedding.source() == ext.K) || !(ext.embedding.target() == ext.L)) return false;
  if (ext.L.degree() != ext.K.degree() * ext.K.characteristic()) return false;
  if (!(ext.a.field() == ext.K) || !(ext.alpha.field() == ext.L)) return false;
  if (ext.a.trace_to_prime() == 0) return false;
  if (ext.embedding.contains(ext.alpha)) return false;
  return wp(ext.alpha) == ext.embedding.apply(ext.a);
}

std::vector<Element> wp_image(const FiniteField& K) {
  check_enumerable(K);
  std::vector<char> image(K.order(), 0);
  const std::uint32_t p = K.characteristic();
  for (std::uint32_t i = 0; i < K.order(); ++i) image[K.sub(K.pow(i, p), i)] = 1;
  std::uint32_t count = 0;
  for (std::uint32_t i = 0; i < K.order(); ++i) {
    const bool trace_zero = K.element(i).trace_to_prime() == 0;
    ensure(static_cast<bool>(image[i]) == trace_zero, "wp(K) differs from the kernel of the trace");
    count += image[i] ? 1 : 0;
  }
  ensure(static_cast<std::uint64_t>(count) * p == K.order(), "wp(K) does not have index p");
  return collect(K, image);
}

std::vector<Element> wp_outside_image(const ArtinSchreierExtension& ext) {
  check_enumerable(ext.L);
  const auto& L = ext.L;
  const auto& K = ext.K;
  const std::uint32_t p = L.characteristic();
  std::vector<char> hit(K.order(), 0);
  for (std::uint32_t i = 0; i < L.order(); ++i) {
    const Element y = L.element(i);
    if (ext.embedding.contains(y)) continue;
    const Element v = L.element(L.sub(L.pow(i, p), i));
    if (auto pre = ext.embedding.preimage(v)) hit[pre->index()] = 1;
  }
  const auto image = wp_image(K);
  for (const auto& x : image) {
    ensure(!hit[x.index()], "wp(K) and wp(L \\ K) meet inside K");
  }
  return collect(K, hit);
}

bool is_as_closed(const FiniteField& K) { return wp_image(K).size() == K.order(); }

}  // namespace aslab::asext
