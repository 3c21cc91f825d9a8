// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "aslab/gf.hpp"

namespace aslab::asext {

using gf::Element;
using gf::Embedding;
using gf::FiniteField;

/// L = K(alpha) with [L : K] = p and wp(alpha) = a in K.
struct ArtinSchreierExtension {
  FiniteField K;
  FiniteField L;
  Embedding embedding;  // K -> L
  Element a;            // in K, nonzero trace
  Element alpha;        // in L \ K, wp(alpha) = embedding(a)
};

/// x^p - x.
Element wp(const Element& x);

/// Deterministic extension of K: a is the lex-smallest element of nonzero
/// trace, L = GF(p^{kp}) with its canonical modulus, alpha the lex-smallest
/// root of x^p - x - a in L.
ArtinSchreierExtension build_as_extension(const FiniteField& K);

/// Rebuilds an extension from explicit data and checks every invariant.
ArtinSchreierExtension make_as_extension(const FiniteField& K, const FiniteField& L,
                                         const Element& generator_image, const Element& a,
                                         const Element& alpha);

/// Checks the extension invariants without enumerating L. Returns false on
/// failure rather than throwing.
bool is_valid_extension(const ArtinSchreierExtension& ext);

/// wp(K), sorted. Cross-checked against the kernel of the trace.
std::vector<Element> wp_image(const FiniteField& K);

/// wp(L \ K) intersected with K, as elements of K, sorted.
/// Checked disjoint from wp_image(K).
std::vector<Element> wp_outside_image(const ArtinSchreierExtension& ext);

/// Whether wp is surjective on K. Always false for a finite field.
bool is_as_closed(const FiniteField& K);

}  // namespace aslab::asext
