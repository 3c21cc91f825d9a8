// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/addpoly.hpp"

#include <set>
#include <sstream>

#include "aslab/error.hpp"

namespace aslab::addpoly {

using aslab::detail::ensure;

// ---- FpSubspace --------------------------------------------------------------

FpSubspace::FpSubspace(FiniteField ambient)
    : ambient_(std::move(ambient)), echelon_(ambient_.characteristic(), ambient_.degree()) {}

FpSubspace FpSubspace::from_generators(const FiniteField& ambient, std::span<const Element> gens) {
  FpSubspace out(ambient);
  for (const auto& g : gens) {
    if (!(g.field() == ambient)) throw FieldMismatch("generator is not in the ambient field");
    out.echelon_.insert(g.digits());
  }
  return out;
}

FpSubspace FpSubspace::whole(const FiniteField& ambient) {
  FpSubspace out(ambient);
  for (std::uint32_t i = 0; i < ambient.degree(); ++i) {
    linalg::Vector unit(ambient.degree(), 0);
    unit[i] = 1;
    out.echelon_.insert(unit);
  }
  return out;
}

FpSubspace FpSubspace::prime_field(const FiniteField& ambient) {
  const Element one = ambient.one();
  return from_generators(ambient, std::span<const Element>(&one, 1));
}

FpSubspace FpSubspace::line(const Element& b) { return from_generators(b.field(), std::span<const Element>(&b, 1)); }

std::vector<Element> FpSubspace::basis() const {
  std::vector<Element> out;
  for (const auto& row : echelon_.rows()) out.push_back(ambient_.from_digits(row));
  return out;
}

std::uint64_t FpSubspace::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < dim(); ++i) s *= ambient_.characteristic();
  return s;
}

bool FpSubspace::contains(const Element& x) const {
  if (!(x.field() == ambient_)) throw FieldMismatch("element is not in the ambient field");
  return echelon_.contains(x.digits());
}

bool FpSubspace::contains(const FpSubspace& other) const {
  if (!(other.ambient_ == ambient_)) throw FieldMismatch("subspaces live in different fields");
  for (const auto& row : other.echelon_.rows()) {
    if (!echelon_.contains(row)) return false;
  }
  return true;
}

std::vector<Element> FpSubspace::elements() const {
  if (dim() > 16) throw BoundExceeded("subspace too large to enumerate");
  const auto b = basis();
  const std::uint32_t p = ambient_.characteristic();
  std::vector<Element> out;
  out.reserve(size());
  std::vector<std::uint32_t> coefficients(b.size(), 0);
  for (std::uint64_t n = 0; n < size(); ++n) {
    std::uint64_t rest = n;
    for (std::size_t i = b.size(); i-- > 0;) {
      coefficients[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::uint32_t c = 0; c < coefficients[i]; ++c) acc = ambient_.add(acc, b[i].index());
    }
    out.push_back(ambient_.element(acc));
  }
  return out;
}

FpSubspace FpSubspace::sum(const FpSubspace& other) const {
  if (!(other.ambient_ == ambient_)) throw FieldMismatch("subspaces live in different fields");
  FpSubspace out = *this;
  for (const auto& row : other.echelon_.rows()) out.echelon_.insert(row);
  return out;
}

FpSubspace FpSubspace::intersect(const FpSubspace& other) const {
  if (!(other.ambient_ == ambient_)) throw FieldMismatch("subspaces live in different fields");
  const FpSubspace& small = dim() <= other.dim() ? *this : other;
  const FpSubspace& large = dim() <= other.dim() ? other : *this;
  FpSubspace out(ambient_);
  for (const auto& x : small.elements()) {
    if (large.contains(x)) out.echelon_.insert(x.digits());
  }
  return out;
}

bool operator==(const FpSubspace& a, const FpSubspace& b) {
  return a.ambient_ == b.ambient_ && a.echelon_.rows() == b.echelon_.rows();
}

std::vector<FpSubspace> enumerate_subspaces(const FiniteField& ambient, std::size_t max_dim) {
  std::vector<FpSubspace> out{FpSubspace(ambient)};
  std::set<std::vector<linalg::Vector>> seen{{}};
  std::size_t level_begin = 0;
  for (std::size_t d = 1; d <= std::min<std::size_t>(max_dim, ambient.degree()); ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t s = level_begin; s < level_end; ++s) {
      for (std::uint32_t i = 1; i < ambient.order(); ++i) {
        const Element x = ambient.element(i);
        if (out[s].contains(x)) continue;
        FpSubspace grown = out[s].sum(FpSubspace::line(x));
        std::vector<linalg::Vector> key;
        for (const auto& b : grown.basis()) key.push_back(b.digits());
        if (seen.insert(key).second) out.push_back(std::move(grown));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---- AdditivePolynomial ------------------------------------------------------

AdditivePolynomial::AdditivePolynomial(FiniteField field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw FieldMismatch("coefficient is not in the coefficient field");
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AdditivePolynomial AdditivePolynomial::identity(const FiniteField& field) {
  return AdditivePolynomial(field, {field.one()});
}

AdditivePolynomial AdditivePolynomial::artin_schreier(const FiniteField& field) {
  return AdditivePolynomial(field, {-field.one(), field.one()});
}

Element AdditivePolynomial::operator()(const Element& x) const {
  if (!(x.field() == field_)) {
    throw FieldMismatch("evaluation point is outside the coefficient field; supply an embedding");
  }
  const auto& f = field_;
  std::uint32_t acc = 0;
  std::uint32_t power = x.index();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = f.pow(power, f.characteristic());
    acc = f.add(acc, f.mul(coeffs_[i].index(), power));
  }
  return f.element(acc);
}

Element AdditivePolynomial::eval(const Element& x, const Embedding& e) const {
  if (!(e.source() == field_)) throw FieldMismatch("embedding source is not the coefficient field");
  return base_change(e)(x);
}

AdditivePolynomial AdditivePolynomial::base_change(const Embedding& e) const {
  if (!(e.source() == field_)) throw FieldMismatch("embedding source is not the coefficient field");
  std::vector<Element> mapped;
  mapped.reserve(coeffs_.size());
  for (const auto& c : coeffs_) mapped.push_back(e.apply(c));
  return AdditivePolynomial(e.target(), std::move(mapped));
}

std::string AdditivePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  std::uint64_t degree = 1;
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i, degree *= field_.characteristic()) {
    if (coeffs_[i].is_zero()) continue;
    std::string monomial = degree == 1 ? "x" : "x^" + std::to_string(degree);
    terms.push_back(coeffs_[i].is_one() ? monomial : coeffs_[i].to_string() + "*" + monomial);
  }
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) out << " + ";
    out << *it;
    first = false;
  }
  return out.str();
}

bool operator==(const AdditivePolynomial& a, const AdditivePolynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

AdditivePolynomial compose(const AdditivePolynomial& outer, const AdditivePolynomial& inner) {
  if (!(outer.field() == inner.field())) throw FieldMismatch("composition across coefficient fields");
  const auto& f = outer.field();
  if (outer.is_zero() || inner.is_zero()) return AdditivePolynomial(f, {});
  std::vector<std::uint32_t> acc(outer.coeffs().size() + inner.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < outer.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < inner.coeffs().size(); ++j) {
      // (c_j x^{p^j})^{p^i} = c_j^{p^i} x^{p^{i+j}}
      const std::uint32_t twisted = inner.coeffs()[j].frobenius(i).index();
      acc[i + j] = f.add(acc[i + j], f.mul(outer.coeffs()[i].index(), twisted));
    }
  }
  std::vector<Element> coeffs;
  coeffs.reserve(acc.size());
  for (auto c : acc) coeffs.push_back(f.element(c));
  return AdditivePolynomial(f, std::move(coeffs));
}

AdditivePolynomial f_of_subgroup(const FpSubspace& group) {
  if (group.dim() > kMaxSubgroupDim || group.size() > kMaxSubgroupOrder) {
    throw BoundExceeded("subgroup of order " + std::to_string(group.size()) + " is too large to expand");
  }
  const auto& f = group.ambient();
  const auto roots = group.elements();
  // Dense coefficients of prod (x - a), lowest degree first.
  std::vector<std::uint32_t> dense{f.one().index()};
  dense.reserve(roots.size() + 1);
  for (const auto& a : roots) {
    const std::uint32_t minus_a = f.neg(a.index());
    dense.push_back(0);
    for (std::size_t i = dense.size() - 1; i > 0; --i) {
      dense[i] = f.add(dense[i - 1], f.mul(minus_a, dense[i]));
    }
    dense[0] = f.mul(minus_a, dense[0]);
  }
  std::vector<Element> linearized;
  std::size_t next_power = 1;
  for (std::size_t degree = 0; degree < dense.size(); ++degree) {
    if (degree == next_power) {
      linearized.push_back(f.element(dense[degree]));
      next_power *= f.characteristic();
    } else {
      ensure(dense[degree] == 0, "f_G has a nonzero coefficient at non-p-power degree " + std::to_string(degree));
    }
  }
  AdditivePolynomial out(f, std::move(linearized));
  ensure(out.is_monic() && out.p_degree() == group.dim(), "f_G is not monic of degree p^dim");
  return out;
}

AdditivePolynomial twist_of_line(const Element& b) {
  if (b.is_zero()) throw InvalidArgument("twist of the zero line");
  const auto& f = b.field();
  return AdditivePolynomial(f, {-b.pow(f.characteristic() - 1), f.one()});
}

FpSubspace kernel_in(const AdditivePolynomial& f, const Embedding& e) {
  const AdditivePolynomial g = f.base_change(e);
  const auto& field = e.target();
  std::vector<Element> zeros;
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    Element x = field.element(i);
    if (g(x).is_zero()) zeros.push_back(std::move(x));
  }
  return FpSubspace::from_generators(field, zeros);
}

FpSubspace complement(const FpSubspace& group, const FpSubspace& over) {
  if (!over.contains(group)) throw InvalidArgument("complement requires G to be contained in H");
  linalg::EchelonBasis extended(group.ambient().characteristic(), group.ambient().degree());
  for (const auto& g : group.basis()) extended.insert(g.digits());
  std::vector<Element> added;
  for (const auto& h : over.basis()) {
    if (extended.insert(h.digits())) added.push_back(h);
  }
  return FpSubspace::from_generators(group.ambient(), added);
}

Decomposition decompose(const FpSubspace& group, const FpSubspace& over) {
  const FpSubspace c0 = complement(group, over);
  const AdditivePolynomial f_g = f_of_subgroup(group);
  std::vector<Element> images;
  for (const auto& c : c0.basis()) images.push_back(f_g(c));
  FpSubspace quotient = FpSubspace::from_generators(group.ambient(), images);
  ensure(quotient.dim() == over.dim() - group.dim(), "|C| differs from |H : G|");
  AdditivePolynomial f_c = f_of_subgroup(quotient);
  ensure(compose(f_c, f_g) == f_of_subgroup(over), "f_H differs from f_C o f_G");
  return Decomposition{std::move(quotient), std::move(f_c)};
}

Element by_one(const FpSubspace& group, const FpSubspace& over) {
  if (!over.contains(group) || over.dim() != group.dim() + 1) {
    throw InvalidArgument("by_one requires an inclusion of index p");
  }
  const Decomposition d = decompose(group, over);
  Element b = d.quotient.basis().front();
  ensure(compose(twist_of_line(b), f_of_subgroup(group)) == f_of_subgroup(over),
         "f_H differs from b^p wp(f_G(x)/b)");
  return b;
}

Element eval_subgroup_polynomial(std::span<const Element> gens, const Element& x) {
  // values[m] tracks f_V(gens[m]) for the span V built so far; value tracks f_V(x).
  std::vector<Element> values(gens.begin(), gens.end());
  Element value = x;
  const std::uint32_t p = x.field().characteristic();
  for (std::size_t m = 0; m < values.size(); ++m) {
    if (!(values[m].field() == x.field())) throw FieldMismatch("generators and point in different fields");
    const Element b = values[m];
    if (b.is_zero()) continue;  // gens[m] already in the span
    const Element scale = b.pow(p - 1);
    value = value.pow(p) - scale * value;
    for (std::size_t r = m + 1; r < values.size(); ++r) values[r] = values[r].pow(p) - scale * values[r];
  }
  return value;
}

DescendOutcome descend(std::span<const FpSubspace> groups, const Element& a, const Embedding& e) {
  if (groups.empty()) throw InvalidArgument("descend needs at least one subgroup");
  FpSubspace meet = groups.front();
  for (const auto& g : groups.subspan(1)) meet = meet.intersect(g);
  if (meet.dim() != 0) return DescendOutcome::kIntersectionNonzero;
  for (const auto& g : groups) {
    if (!e.contains(f_of_subgroup(g).eval(a, e))) return DescendOutcome::kValueOutsideSubfield;
  }
  ensure(e.contains(a), "a satisfies every f_{G_i}(a) in K with trivial intersection but a is not in K");
  return DescendOutcome::kInSubfield;
}

const char* to_string(DescendOutcome outcome) {
  switch (outcome) {
    case DescendOutcome::kInSubfield:
      return "in_subfield";
    case DescendOutcome::kIntersectionNonzero:
      return "intersection_nonzero";
    case DescendOutcome::kValueOutsideSubfield:
      return "value_outside_subfield";
  }
  return "unknown";
}

}  // namespace aslab::addpoly
