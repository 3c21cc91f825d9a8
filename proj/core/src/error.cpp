// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/error.hpp"

namespace aslab::detail {

void throw_lemma_violation(const std::string& what) {
  throw LemmaViolation("lemma violated: " + what);
}

}  // namespace aslab::detail
