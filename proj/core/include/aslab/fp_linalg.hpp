// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace aslab::linalg {

/// A vector over F_p, one entry per coordinate, entries in [0, p).
using Vector = std::vector<std::uint32_t>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Reduced row echelon basis of a subspace of F_p^m.
///
/// The pivot of a row is its lowest-index nonzero coordinate and is scaled
/// to 1. Every other row is zero in that coordinate, and rows are kept
/// sorted by pivot. The form is unique, so two subspaces are equal exactly
/// when their rows are equal.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t length);

  /// Adds v to the span. Returns false when v was already in the span.
  bool insert(const Vector& v);

  /// Residual of v after eliminating every pivot coordinate.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }
  std::uint32_t prime() const { return p_; }
  std::size_t length() const { return length_; }

  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

 private:
  std::uint32_t p_;
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves sum_i c_i * columns[i] = y for fixed, linearly independent columns.
class CombinationSolver {
 public:
  CombinationSolver(std::uint32_t p, const std::vector<Vector>& columns);

  /// Coefficients c, or nullopt when y is outside the column span.
  std::optional<Vector> solve(const Vector& y) const;

 private:
  struct Row {
    Vector value;
    Vector combination;
    std::size_t pivot;
  };
  std::uint32_t p_;
  std::size_t length_;
  std::size_t columns_;
  std::vector<Row> rows_;
};

}  // namespace aslab::linalg
