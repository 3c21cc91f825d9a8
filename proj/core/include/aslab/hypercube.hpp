// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aslab/addpoly.hpp"
#include "aslab/contrary.hpp"

/// Pullback hypercubes on the subset lattice of {1..n}.
///
/// The bottom-up cube has F_A = A / span{a_i : i in A}, coordinatized by the
/// subgroup polynomial of that span, so nodes and edges are additive
/// polynomials. The top-down cube has F_A = the fiber product of the maps
/// x -> a_i wp(x) over the indices NOT in A. All checks are made on points
/// over explicit finite fields.
namespace aslab::hypercube {

using addpoly::AdditivePolynomial;
using gf::Element;
using gf::Embedding;
using gf::FiniteField;

/// Bit i-1 is set when index i belongs to the subset.
using Subset = std::uint32_t;
using SubsetPair = std::pair<Subset, Subset>;

inline constexpr std::size_t kMaxBottomUpDim = 4;
inline constexpr std::size_t kMaxTopDownDim = 3;
inline constexpr std::uint32_t kMaxTopDownField = 256;
inline constexpr std::uint32_t kMaxPullbackField = 4096;

/// "{1,3}"; the empty set is "{}".
std::string subset_key(Subset s);
Subset parse_subset_key(std::string_view key);
/// "{1}->{1,3}".
std::string edge_key(Subset from, Subset to);
SubsetPair parse_edge_key(std::string_view key);
bool is_subset(Subset a, Subset b);

class BottomUpHypercube {
 public:
  /// Takes the raw parts as loaded from a file. Checks only shape: a node for
  /// every subset, an edge for every strict inclusion, one coefficient field.
  BottomUpHypercube(FiniteField field, std::vector<Element> a, std::map<Subset, AdditivePolynomial> nodes,
                    std::map<SubsetPair, AdditivePolynomial> edges);

  std::size_t n() const { return a_.size(); }
  Subset full() const { return (Subset{1} << n()) - 1; }
  const FiniteField& field() const { return field_; }
  const std::vector<Element>& a() const { return a_; }
  const std::map<Subset, AdditivePolynomial>& nodes() const { return nodes_; }
  const std::map<SubsetPair, AdditivePolynomial>& edges() const { return edges_; }

  const AdditivePolynomial& node(Subset s) const;
  /// h_{from,to}; the identity when from == to.
  AdditivePolynomial edge(Subset from, Subset to) const;

 private:
  FiniteField field_;
  std::vector<Element> a_;
  std::map<Subset, AdditivePolynomial> nodes_;
  std::map<SubsetPair, AdditivePolynomial> edges_;
};

/// Outcome of one verification pass over a cube.
struct CheckReport {
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t nontrivial = 0;
  std::string counterexample;  // first failure, empty when passed

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
};

/// Nodes are f_{span A}, edges come from the decomposition of span A inside
/// span B. Asserts functoriality, that covering edges are twists of wp, and
/// geometric surjectivity over the coefficient field whenever its degree-p
/// extension is within bounds.
BottomUpHypercube build_bottom_up(const FiniteField& field, std::span<const Element> a);

/// node(empty) = x, node(A) = f_{span A}, monic of degree p^|A|.
CheckReport check_nodes(const BottomUpHypercube& cube);
/// h_{A,B} o f_A = f_B for every strict inclusion, and every covering edge
/// is x^p - b^{p-1} x for some b != 0.
CheckReport check_edges(const BottomUpHypercube& cube);
/// h_{B,C} o h_{A,B} = h_{A,C} for every chain A <= B <= C.
CheckReport check_functoriality(const BottomUpHypercube& cube);

/// For every pair A, B: w -> (h_{A^B,A}(w), h_{A^B,B}(w)) is a bijection from
/// E onto {(u,v) : h_{A,AvB}(u) = h_{B,AvB}(v)}, with E = e.target().
CheckReport verify_pullback(const BottomUpHypercube& cube, const Embedding& e);

/// Every value in E of every edge is hit within E or its degree-p extension.
CheckReport verify_geometric_surjectivity(const BottomUpHypercube& cube, const Embedding& e);

struct BaldwinSaxlEntry {
  std::size_t index = 0;                // 1-based i
  bool edge_surjective = false;         // F_empty -> F_{i} onto on K-points
  bool contains_intersection = false;   // G_i contains the other G_j's intersection
  std::uint64_t image_size = 0;         // |G_i|
  std::uint64_t intersection_size = 0;  // |intersection over j != i of G_j|
};

struct BaldwinSaxlReport {
  std::vector<BaldwinSaxlEntry> entries;
  bool failure_everywhere = false;  // no G_i contains the intersection of the others
  bool equivalence_holds = false;   // surjective <=> containment at every i
};

/// G_i = image of h_{[n]-{i},[n]} on K-points with K = e.target(). Throws
/// LemmaViolation if surjectivity and containment disagree at some i.
BaldwinSaxlReport baldwin_saxl_failure(const BottomUpHypercube& cube, const Embedding& e);

/// Points (t, x_1, ..., x_m) over E with t = c_j wp(x_j) for every listed j.
struct TopDownGroup {
  std::vector<std::size_t> indices;  // 1-based positions in the tuple
  std::vector<std::vector<Element>> points;
};

/// The group over an explicit coefficient list in E.
TopDownGroup top_down_group(std::span<const Element> coefficients, std::vector<std::size_t> indices);

/// F_A for every subset A, built over the indices outside A; F_{[n]} = E.
std::map<Subset, TopDownGroup> build_top_down(std::span<const Element> a, const Embedding& e);

/// (1/a_1, ..., 1/a_n) is F_p-linearly independent.
bool hempel_condition(std::span<const Element> a);

struct PointCountReport {
  std::uint64_t count = 0;
  std::uint64_t field_order = 0;
  bool hempel = false;
  bool matches = false;  // count == field_order
};

/// |G_a(E)| for the full tuple, asserted equal to |E| when the Hempel
/// condition holds.
PointCountReport point_count_check(std::span<const Element> a, const Embedding& e);

struct WitnessCheck {
  std::size_t slot = 0;
  std::vector<std::size_t> order;  // tuple positions, slot moved last
  bool passed = false;
};

struct CrossCheckReport {
  std::vector<WitnessCheck> slots;
  bool passed = false;
};

/// Reads each certificate slot as a point of the top-down group over L for
/// the tuple b reordered with the slot last: every coordinate except the
/// last in K, the last in L \ K. Requires a valid certificate.
CrossCheckReport cross_check_witness(const contrary::ContraryCertificate& cert);

}  // namespace aslab::hypercube
