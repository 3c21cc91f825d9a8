// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/fp_linalg.hpp"

#include <algorithm>

#include "aslab/error.hpp"

namespace aslab::linalg {
namespace {

std::optional<std::size_t> leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return std::nullopt;
}

// target -= factor * source, entrywise mod p.
void axpy(Vector& target, const Vector& source, std::uint32_t factor, std::uint32_t p) {
  if (factor == 0) return;
  const std::uint32_t neg = p - factor;
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] = (target[i] + neg * source[i]) % p;
  }
}

void scale(Vector& v, std::uint32_t factor, std::uint32_t p) {
  for (auto& x : v) x = (x * factor) % p;
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero();
  // p is tiny; Fermat's little theorem by repeated squaring.
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t length) : p_(p), length_(length) {}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != length_) throw InvalidArgument("vector length does not match basis");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    axpy(v, rows_[r], v[pivots_[r]], p_);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const {
  return !leading_index(reduce(v)).has_value();
}

bool EchelonBasis::insert(const Vector& v) {
  Vector residual = reduce(v);
  const auto lead = leading_index(residual);
  if (!lead) return false;
  scale(residual, inverse_mod(residual[*lead], p_), p_);
  for (auto& row : rows_) axpy(row, residual, row[*lead], p_);
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), *lead) - pivots_.begin();
  rows_.insert(rows_.begin() + at, std::move(residual));
  pivots_.insert(pivots_.begin() + at, *lead);
  return true;
}

CombinationSolver::CombinationSolver(std::uint32_t p, const std::vector<Vector>& columns)
    : p_(p), length_(columns.empty() ? 0 : columns.front().size()), columns_(columns.size()) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Row row{columns[c], Vector(columns_, 0), 0};
    row.combination[c] = 1;
    for (const auto& existing : rows_) {
      const std::uint32_t factor = row.value[existing.pivot];
      axpy(row.value, existing.value, factor, p_);
      axpy(row.combination, existing.combination, factor, p_);
    }
    const auto lead = leading_index(row.value);
    if (!lead) throw InvalidArgument("solver columns are linearly dependent");
    const std::uint32_t inv = inverse_mod(row.value[*lead], p_);
    scale(row.value, inv, p_);
    scale(row.combination, inv, p_);
    row.pivot = *lead;
    for (auto& existing : rows_) {
      const std::uint32_t factor = existing.value[row.pivot];
      axpy(existing.value, row.value, factor, p_);
      axpy(existing.combination, row.combination, factor, p_);
    }
    rows_.push_back(std::move(row));
  }
}

std::optional<Vector> CombinationSolver::solve(const Vector& y) const {
  if (y.size() != length_ && columns_ != 0) throw InvalidArgument("vector length does not match solver");
  Vector residual = y;
  Vector coefficients(columns_, 0);
  for (const auto& row : rows_) {
    const std::uint32_t factor = residual[row.pivot];
    if (factor == 0) continue;
    axpy(residual, row.value, factor, p_);
    for (std::size_t i = 0; i < columns_; ++i) {
      coefficients[i] = (coefficients[i] + factor * row.combination[i]) % p_;
    }
  }
  if (leading_index(residual)) return std::nullopt;
  return coefficients;
}

}  // namespace aslab::linalg
