// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "aslab/asext.hpp"
#include "aslab/error.hpp"

namespace aslab::hypercube {

using addpoly::FpSubspace;
using aslab::detail::ensure;

namespace {

std::vector<Element> pick(std::span<const Element> a, Subset s) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s & (Subset{1} << i)) out.push_back(a[i]);
  }
  return out;
}

// f(x) for every x in e.target(), indexed by x.
std::vector<std::uint32_t> value_table(const AdditivePolynomial& f, const Embedding& e) {
  const AdditivePolynomial g = f.base_change(e);
  const auto& E = e.target();
  std::vector<std::uint32_t> out(E.order());
  for (std::uint32_t i = 0; i < E.order(); ++i) out[i] = g(E.element(i)).index();
  return out;
}

bool is_twist(const AdditivePolynomial& h) {
  if (h.p_degree() != 1 || !h.is_monic()) return false;
  const Element minus_c0 = -h.coeffs()[0];
  if (minus_c0.is_zero()) return false;
  // -c0 = b^{p-1} for some b != 0 iff (-c0)^{(q-1)/(p-1)} = 1.
  const auto& f = h.field();
  return minus_c0.pow((f.order() - 1) / (f.characteristic() - 1)).is_one();
}

FiniteField extension_by_p(const FiniteField& E) {
  const std::uint64_t p = E.characteristic();
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < E.degree() * p && order <= gf::kMaxFieldOrder; ++i) order *= p;
  if (order > gf::kMaxFieldOrder) throw BoundExceeded("degree-p extension of " + E.spec() + " exceeds 65536");
  return FiniteField(E.characteristic(), E.degree() * E.characteristic());
}

void check_tuple(const FiniteField& field, std::span<const Element> a) {
  for (const auto& x : a) {
    if (!(x.field() == field)) throw FieldMismatch("tuple entry is not in the coefficient field");
  }
}

}  // namespace

// ---- subset keys ---------------------------------------------------------------

std::string subset_key(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!(s & (Subset{1} << i))) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Subset parse_subset_key(std::string_view key) {
  if (key.size() < 2 || key.front() != '{' || key.back() != '}') {
    throw MalformedInput("bad subset key '" + std::string(key) + "'");
  }
  key = key.substr(1, key.size() - 2);
  Subset s = 0;
  while (!key.empty()) {
    const auto comma = key.find(',');
    const auto token = key.substr(0, comma);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1 || value > 32) {
      throw MalformedInput("bad subset index in '" + std::string(key) + "'");
    }
    s |= Subset{1} << (value - 1);
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return s;
}

std::string edge_key(Subset from, Subset to) { return subset_key(from) + "->" + subset_key(to); }

SubsetPair parse_edge_key(std::string_view key) {
  const auto arrow = key.find("->");
  if (arrow == std::string_view::npos) throw MalformedInput("bad edge key '" + std::string(key) + "'");
  return {parse_subset_key(key.substr(0, arrow)), parse_subset_key(key.substr(arrow + 2))};
}

bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

// ---- BottomUpHypercube ---------------------------------------------------------

BottomUpHypercube::BottomUpHypercube(FiniteField field, std::vector<Element> a,
                                     std::map<Subset, AdditivePolynomial> nodes,
                                     std::map<SubsetPair, AdditivePolynomial> edges)
    : field_(std::move(field)), a_(std::move(a)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (a_.empty() || a_.size() > kMaxBottomUpDim) throw BoundExceeded("bottom-up cube dimension must be 1..4");
  check_tuple(field_, a_);
  const Subset top = full();
  std::size_t expected_edges = 0;
  for (Subset s = 0; s <= top; ++s) {
    const auto it = nodes_.find(s);
    if (it == nodes_.end()) throw MalformedInput("missing node " + subset_key(s));
    if (!(it->second.field() == field_)) throw MalformedInput("node " + subset_key(s) + " over the wrong field");
    for (Subset t = 0; t <= top; ++t) {
      if (s == t || !is_subset(s, t)) continue;
      ++expected_edges;
      const auto edge = edges_.find({s, t});
      if (edge == edges_.end()) throw MalformedInput("missing edge " + edge_key(s, t));
      if (!(edge->second.field() == field_)) throw MalformedInput("edge " + edge_key(s, t) + " over the wrong field");
    }
  }
  if (nodes_.size() != std::size_t{top} + 1 || edges_.size() != expected_edges) {
    throw MalformedInput("cube has nodes or edges outside the subset lattice");
  }
}

const AdditivePolynomial& BottomUpHypercube::node(Subset s) const {
  const auto it = nodes_.find(s);
  if (it == nodes_.end()) throw InvalidArgument("no node " + subset_key(s));
  return it->second;
}

AdditivePolynomial BottomUpHypercube::edge(Subset from, Subset to) const {
  if (from == to) return AdditivePolynomial::identity(field_);
  const auto it = edges_.find({from, to});
  if (it == edges_.end()) throw InvalidArgument("no edge " + edge_key(from, to));
  return it->second;
}

BottomUpHypercube build_bottom_up(const FiniteField& field, std::span<const Element> a) {
  if (a.empty() || a.size() > kMaxBottomUpDim) throw BoundExceeded("bottom-up cube dimension must be 1..4");
  check_tuple(field, a);
  if (FpSubspace::from_generators(field, a).dim() != a.size()) {
    throw InvalidArgument("cube tuple is not F_p-linearly independent");
  }
  const Subset top = (Subset{1} << a.size()) - 1;
  std::vector<FpSubspace> spans;
  std::map<Subset, AdditivePolynomial> nodes;
  for (Subset s = 0; s <= top; ++s) {
    const auto gens = pick(a, s);
    spans.push_back(FpSubspace::from_generators(field, gens));
    nodes.emplace(s, addpoly::f_of_subgroup(spans.back()));
  }
  std::map<SubsetPair, AdditivePolynomial> edges;
  for (Subset s = 0; s <= top; ++s) {
    for (Subset t = 0; t <= top; ++t) {
      if (s == t || !is_subset(s, t)) continue;
      auto h = addpoly::decompose(spans[s], spans[t]).f_quotient;
      if (std::popcount(t) == std::popcount(s) + 1) {
        ensure(h == addpoly::twist_of_line(addpoly::by_one(spans[s], spans[t])),
               "covering edge " + edge_key(s, t) + " is not the twist from by_one");
      }
      edges.emplace(SubsetPair{s, t}, std::move(h));
    }
  }
  BottomUpHypercube cube(field, std::vector<Element>(a.begin(), a.end()), std::move(nodes), std::move(edges));
  for (const auto& report : {check_nodes(cube), check_edges(cube), check_functoriality(cube)}) {
    ensure(report.passed, report.name + ": " + report.counterexample);
  }
  std::uint64_t extension_order = 1;
  for (std::uint32_t i = 0; i < field.characteristic(); ++i) extension_order *= field.order();
  if (extension_order <= gf::kMaxFieldOrder) {
    const auto surjective = verify_geometric_surjectivity(cube, Embedding::identity(field));
    ensure(surjective.passed, "geometric surjectivity: " + surjective.counterexample);
  }
  return cube;
}

// ---- structural checks ---------------------------------------------------------

CheckReport check_nodes(const BottomUpHypercube& cube) {
  CheckReport report{"nodes"};
  for (const auto& [s, f] : cube.nodes()) {
    ++report.checked;
    const auto expected = addpoly::f_of_subgroup(FpSubspace::from_generators(cube.field(), pick(cube.a(), s)));
    if (!(f == expected)) report.fail("node " + subset_key(s) + " is not f_{span A}");
    if (!f.is_monic() || f.p_degree() != static_cast<std::size_t>(std::popcount(s))) {
      report.fail("node " + subset_key(s) + " is not monic of degree p^|A|");
    }
  }
  if (!(cube.node(0) == AdditivePolynomial::identity(cube.field()))) report.fail("node {} is not x");
  return report;
}

CheckReport check_edges(const BottomUpHypercube& cube) {
  CheckReport report{"edges"};
  for (const auto& [key, h] : cube.edges()) {
    const auto [s, t] = key;
    ++report.checked;
    if (!(compose(h, cube.node(s)) == cube.node(t))) report.fail("edge " + edge_key(s, t) + " o f_A != f_B");
    if (std::popcount(t) == std::popcount(s) + 1) {
      ++report.nontrivial;
      if (!is_twist(h)) report.fail("covering edge " + edge_key(s, t) + " is not a twist of wp");
    }
  }
  return report;
}

CheckReport check_functoriality(const BottomUpHypercube& cube) {
  CheckReport report{"functorial"};
  const Subset top = cube.full();
  for (Subset a = 0; a <= top; ++a) {
    for (Subset b = a; b <= top; ++b) {
      if (!is_subset(a, b)) continue;
      for (Subset c = b; c <= top; ++c) {
        if (!is_subset(b, c)) continue;
        ++report.checked;
        if (a != b && b != c) ++report.nontrivial;
        if (!(compose(cube.edge(b, c), cube.edge(a, b)) == cube.edge(a, c))) {
          report.fail("chain " + subset_key(a) + " <= " + subset_key(b) + " <= " + subset_key(c));
        }
      }
    }
  }
  return report;
}

// ---- point-level checks ----------------------------------------------------------

CheckReport verify_pullback(const BottomUpHypercube& cube, const Embedding& e) {
  if (!(e.source() == cube.field())) throw FieldMismatch("embedding source is not the cube's field");
  const auto& E = e.target();
  if (E.order() > kMaxPullbackField) throw BoundExceeded("pullback check limited to fields of order <= 4096");
  CheckReport report{"pullback"};
  std::map<SubsetPair, std::vector<std::uint32_t>> tables;
  auto table = [&](Subset from, Subset to) -> const std::vector<std::uint32_t>& {
    auto it = tables.find({from, to});
    if (it == tables.end()) it = tables.emplace(SubsetPair{from, to}, value_table(cube.edge(from, to), e)).first;
    return it->second;
  };
  const Subset top = cube.full();
  const std::uint64_t q = E.order();
  for (Subset a = 0; a <= top; ++a) {
    for (Subset b = a; b <= top; ++b) {
      const Subset meet = a & b;
      const Subset join = a | b;
      const std::string square = "square " + subset_key(a) + ", " + subset_key(b);
      ++report.checked;
      if (!is_subset(a, b) && !is_subset(b, a)) ++report.nontrivial;
      const auto& left = table(meet, a);
      const auto& right = table(meet, b);
      const auto& up_left = table(a, join);
      const auto& up_right = table(b, join);
      // Image of E in the fiber product: must commute and be injective.
      std::vector<std::uint64_t> image;
      image.reserve(q);
      bool commutes = true;
      for (std::uint32_t w = 0; w < q; ++w) {
        const std::uint32_t u = left[w];
        const std::uint32_t v = right[w];
        commutes = commutes && up_left[u] == up_right[v];
        image.push_back(std::uint64_t{u} * q + v);
      }
      std::sort(image.begin(), image.end());
      const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      // Count compatible pairs through the fibers of the two upper legs.
      std::vector<std::uint64_t> fiber_left(q, 0);
      std::vector<std::uint64_t> fiber_right(q, 0);
      for (std::uint32_t x = 0; x < q; ++x) {
        ++fiber_left[up_left[x]];
        ++fiber_right[up_right[x]];
      }
      std::uint64_t compatible = 0;
      for (std::uint32_t c = 0; c < q; ++c) compatible += fiber_left[c] * fiber_right[c];
      if (!commutes) report.fail(square + " does not commute");
      if (!injective) report.fail(square + ": F_{A^B} -> F_A x F_B is not injective");
      if (compatible != q) {
        report.fail(square + ": " + std::to_string(compatible) + " compatible pairs, expected " + std::to_string(q));
      }
    }
  }
  return report;
}

CheckReport verify_geometric_surjectivity(const BottomUpHypercube& cube, const Embedding& e) {
  if (!(e.source() == cube.field())) throw FieldMismatch("embedding source is not the cube's field");
  const auto& E = e.target();
  const FiniteField wider = extension_by_p(E);
  const Embedding lift = gf::build_embedding(E, wider);
  const Embedding through = Embedding(cube.field(), wider, lift.apply(e.image_of_generator()));
  CheckReport report{"surjective"};
  for (const auto& [key, h] : cube.edges()) {
    const auto [s, t] = key;
    ++report.checked;
    std::vector<char> hit(E.order(), 0);
    for (auto v : value_table(h, e)) hit[v] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) continue;
    ++report.nontrivial;  // needed the extension
    const AdditivePolynomial g = h.base_change(through);
    for (std::uint32_t i = 0; i < wider.order(); ++i) {
      if (auto down = lift.preimage(g(wider.element(i)))) hit[down->index()] = 1;
    }
    const auto missing = std::find(hit.begin(), hit.end(), 0);
    if (missing != hit.end()) {
      report.fail("edge " + edge_key(s, t) + " misses " +
                  E.element(static_cast<std::uint32_t>(missing - hit.begin())).to_string() +
                  " in the degree-p extension");
    }
  }
  return report;
}

BaldwinSaxlReport baldwin_saxl_failure(const BottomUpHypercube& cube, const Embedding& e) {
  if (!(e.source() == cube.field())) throw FieldMismatch("embedding source is not the cube's field");
  const auto& K = e.target();
  if (K.order() > gf::kMaxFieldOrder) throw BoundExceeded("field too large to enumerate");
  const std::size_t n = cube.n();
  const Subset top = cube.full();
  // images[i] marks G_i = image of F_{[n]-{i}}(K) -> F_{[n]}(K).
  std::vector<std::vector<char>> images(n, std::vector<char>(K.order(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    const Subset rest = top & ~(Subset{1} << i);
    for (auto v : value_table(cube.edge(rest, top), e)) images[i][v] = 1;
  }
  BaldwinSaxlReport report;
  report.failure_everywhere = true;
  report.equivalence_holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    BaldwinSaxlEntry entry;
    entry.index = i + 1;
    std::vector<char> onto(K.order(), 0);
    for (auto v : value_table(cube.edge(0, Subset{1} << i), e)) onto[v] = 1;
    entry.edge_surjective = std::all_of(onto.begin(), onto.end(), [](char c) { return c != 0; });
    entry.contains_intersection = true;
    for (std::uint32_t x = 0; x < K.order(); ++x) {
      bool in_others = true;
      for (std::size_t j = 0; j < n && in_others; ++j) {
        if (j != i) in_others = images[j][x] != 0;
      }
      if (!in_others) continue;
      ++entry.intersection_size;
      if (!images[i][x]) entry.contains_intersection = false;
    }
    entry.image_size = static_cast<std::uint64_t>(std::count(images[i].begin(), images[i].end(), 1));
    if (entry.contains_intersection) report.failure_everywhere = false;
    if (entry.edge_surjective != entry.contains_intersection) report.equivalence_holds = false;
    report.entries.push_back(entry);
  }
  ensure(report.equivalence_holds,
         "surjectivity of F_empty -> F_{i} and containment of the intersection disagree");
  return report;
}

// ---- top-down --------------------------------------------------------------------

TopDownGroup top_down_group(std::span<const Element> coefficients, std::vector<std::size_t> indices) {
  if (coefficients.size() != indices.size()) throw InvalidArgument("one index per coefficient");
  if (coefficients.empty()) throw InvalidArgument("top_down_group needs the field through a coefficient");
  const auto& E = coefficients.front().field();
  const std::uint32_t p = E.characteristic();
  for (const auto& c : coefficients) {
    if (!(c.field() == E)) throw FieldMismatch("coefficients in different fields");
    if (c.is_zero()) throw InvalidArgument("top-down coefficients must be nonzero");
  }
  // fibers[v] lists every x with wp(x) = v.
  std::vector<std::vector<std::uint32_t>> fibers(E.order());
  for (std::uint32_t x = 0; x < E.order(); ++x) fibers[E.sub(E.pow(x, p), x)].push_back(x);
  TopDownGroup group{std::move(indices), {}};
  const std::size_t m = coefficients.size();
  std::vector<std::uint32_t> inverse;
  for (const auto& c : coefficients) inverse.push_back(E.inv(c.index()));
  for (std::uint32_t t = 0; t < E.order(); ++t) {
    std::vector<const std::vector<std::uint32_t>*> choices;
    bool empty = false;
    for (std::size_t j = 0; j < m && !empty; ++j) {
      choices.push_back(&fibers[E.mul(t, inverse[j])]);
      empty = choices.back()->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> cursor(m, 0);
    for (;;) {
      std::vector<Element> point{E.element(t)};
      for (std::size_t j = 0; j < m; ++j) point.push_back(E.element((*choices[j])[cursor[j]]));
      group.points.push_back(std::move(point));
      std::size_t pos = m;
      while (pos > 0 && ++cursor[pos - 1] == choices[pos - 1]->size()) cursor[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return group;
}

std::map<Subset, TopDownGroup> build_top_down(std::span<const Element> a, const Embedding& e) {
  const std::size_t n = a.size();
  if (n < 1 || n > kMaxTopDownDim) throw BoundExceeded("top-down cube dimension must be 1..3");
  if (e.target().order() > kMaxTopDownField) throw BoundExceeded("top-down enumeration limited to |E| <= 256");
  const Subset top = (Subset{1} << n) - 1;
  std::map<Subset, TopDownGroup> out;
  for (Subset s = 0; s <= top; ++s) {
    std::vector<Element> coefficients;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (Subset{1} << i)) continue;
      coefficients.push_back(e.apply(a[i]));
      indices.push_back(i + 1);
    }
    if (coefficients.empty()) {
      TopDownGroup whole{{}, {}};
      for (const auto& t : e.target().elements()) whole.points.push_back({t});
      out.emplace(s, std::move(whole));
    } else {
      out.emplace(s, top_down_group(coefficients, std::move(indices)));
    }
  }
  return out;
}

bool hempel_condition(std::span<const Element> a) {
  if (a.empty()) throw InvalidArgument("empty tuple");
  std::vector<Element> inverses;
  for (const auto& x : a) {
    if (x.is_zero()) throw InvalidArgument("Hempel condition needs nonzero entries");
    inverses.push_back(x.inverse());
  }
  return FpSubspace::from_generators(a.front().field(), inverses).dim() == a.size();
}

PointCountReport point_count_check(std::span<const Element> a, const Embedding& e) {
  const std::size_t n = a.size();
  if (n < 1 || n > kMaxTopDownDim) throw BoundExceeded("top-down cube dimension must be 1..3");
  if (e.target().order() > kMaxTopDownField) throw BoundExceeded("top-down enumeration limited to |E| <= 256");
  std::vector<Element> coefficients;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < n; ++i) {
    coefficients.push_back(e.apply(a[i]));
    indices.push_back(i + 1);
  }
  PointCountReport report;
  report.count = top_down_group(coefficients, indices).points.size();
  report.field_order = e.target().order();
  report.hempel = hempel_condition(a);
  report.matches = report.count == report.field_order;
  if (report.hempel) ensure(report.matches, "|G_a(E)| != |E| although (1/a_i) is F_p-independent");
  return report;
}

CrossCheckReport cross_check_witness(const contrary::ContraryCertificate& cert) {
  const auto replay = contrary::verify_certificate_detailed(cert);
  if (!replay.valid) throw InvalidArgument("cross-check needs a valid certificate: " + replay.failure);
  const auto& e = cert.ext.embedding;
  const std::size_t n = cert.b.size();
  CrossCheckReport report;
  report.passed = true;
  for (std::size_t i = 0; i < n; ++i) {
    WitnessCheck check;
    check.slot = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) check.order.push_back(j);
    }
    check.order.push_back(i);
    const auto& slot = cert.slots[i];
    const Element t = e.apply(slot.y);
    bool ok = e.contains(t);
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t j = check.order[m];
      const Element& x = slot.x[j];
      ok = ok && t == e.apply(cert.b[j]) * asext::wp(x);
      ok = ok && e.contains(x) == (m + 1 < n);
    }
    check.passed = ok;
    report.passed = report.passed && ok;
    report.slots.push_back(std::move(check));
  }
  return report;
}

}  // namespace aslab::hypercube
