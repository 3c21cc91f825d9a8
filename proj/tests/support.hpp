// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "aslab/gf.hpp"

namespace aslab::testing {

using gf::Element;
using gf::FiniteField;

inline FiniteField gf4() { return FiniteField(2, 2); }
inline FiniteField gf16() { return FiniteField(2, 4); }

/// The residue class of x in GF(4) = F_2[x]/(x^2+x+1).
inline Element omega() { return gf4().generator(); }

/// e applied to every source element.
inline std::vector<Element> image_of(const gf::Embedding& e) {
  std::vector<Element> out;
  for (const auto& x : e.source().elements()) out.push_back(e.apply(x));
  return out;
}

/// The lex-smallest y in L with y^2 + y = e(w): the alpha of the GF(4)
/// inside GF(16) worked example, found by enumeration.
inline Element gf16_alpha(const gf::Embedding& e) {
  const Element target = e.apply(omega());
  for (const auto& y : e.target().elements()) {
    if (y * y + y == target) return y;
  }
  return e.target().zero();
}

}  // namespace aslab::testing
