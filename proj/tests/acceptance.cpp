// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Suites 4 to 9 return canonical JSON
// reports (no timings) so that criterion 10 can compare reruns byte for byte.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aslab/addpoly.hpp"
#include "aslab/asext.hpp"
#include "aslab/contrary.hpp"
#include "aslab/error.hpp"
#include "aslab/hypercube.hpp"
#include "aslab/serialize.hpp"

namespace {

using namespace aslab;
using addpoly::AdditivePolynomial;
using addpoly::FpSubspace;
using gf::Element;
using gf::Embedding;
using gf::FiniteField;
using serialize::Json;

constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool passed = true;
  std::string detail;
  Json report;  // deterministic body, compared by criterion 10
};

// Counts checks and keeps the first failure message.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  // Runs body; a thrown library error counts as one failure.
  void guard(const std::function<void()>& body, const std::function<std::string()>& where) {
    try {
      body();
    } catch (const aslab::Error& err) {
      ++checks;
      if (failures++ == 0) first = where() + ": " + err.what();
    }
  }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    if (failures) s += "; first: " + first;
    return s;
  }
};

std::vector<std::uint32_t> table(const AdditivePolynomial& f) {
  const auto& F = f.field();
  std::vector<std::uint32_t> out(F.order());
  for (std::uint32_t i = 0; i < F.order(); ++i) out[i] = f(F.element(i)).index();
  return out;
}

// c * x as an additive polynomial.
AdditivePolynomial scalar(const Element& c) { return AdditivePolynomial(c.field(), {c}); }

// ---- criterion 1 ---------------------------------------------------------------

Outcome decomposition_suite() {
  Tally t;
  std::uint64_t pairs = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const FiniteField F(p, 4);
    const auto subspaces = addpoly::enumerate_subspaces(F, 4);
    std::vector<AdditivePolynomial> f;
    for (const auto& s : subspaces) f.push_back(addpoly::f_of_subgroup(s));
    for (std::size_t h = 0; h < subspaces.size(); ++h) {
      for (std::size_t g = 0; g < subspaces.size(); ++g) {
        if (!subspaces[h].contains(subspaces[g])) continue;
        ++pairs;
        auto where = [&] { return "p=" + std::to_string(p) + " pair " + std::to_string(g) + "<=" + std::to_string(h); };
        t.guard(
            [&] {
              const auto d = addpoly::decompose(subspaces[g], subspaces[h]);
              t.expect(d.quotient.size() * subspaces[g].size() == subspaces[h].size(), where);
              t.expect(addpoly::compose(d.f_quotient, f[g]) == f[h], where);
              t.expect(d.f_quotient == addpoly::f_of_subgroup(d.quotient), where);
            },
            where);
      }
    }
  }
  return {t.failures == 0, std::to_string(pairs) + " nested pairs, " + t.summary(), {}};
}

// ---- criterion 2 ---------------------------------------------------------------

Outcome addp_facts() {
  Tally t;
  std::mt19937_64 rng(kSeed);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},  {2, 8},  {3, 2},  {3, 3},  {3, 4}, {3, 5}, {5, 2},
      {5, 3}, {7, 2}, {2, 9}, {2, 10}, {2, 11}, {2, 12}, {3, 6}, {3, 7}, {5, 4}, {5, 5}, {7, 3}, {7, 4}};
  std::uint64_t sampled_pairs = 0;
  for (auto [p, k] : fields) {
    const FiniteField F(p, k);
    const std::string name = std::to_string(p) + "^" + std::to_string(k);
    // Subgroups: the span of 1, g, ..., g^{d-1} and a seeded random span, d = 1..3.
    std::vector<FpSubspace> groups{FpSubspace(F)};
    for (std::uint32_t d = 1; d <= std::min<std::uint32_t>(k, 3); ++d) {
      std::vector<Element> powers;
      std::vector<Element> random;
      for (std::uint32_t i = 0; i < d; ++i) {
        powers.push_back(F.generator().pow(i));
        random.push_back(F.element(static_cast<std::uint32_t>(rng() % F.order())));
      }
      groups.push_back(FpSubspace::from_generators(F, powers));
      groups.push_back(FpSubspace::from_generators(F, random));
    }
    for (const auto& G : groups) {
      const auto values = table(addpoly::f_of_subgroup(G));
      auto where = [&] { return "additivity over " + name; };
      if (F.order() <= 256) {
        for (std::uint32_t x = 0; x < F.order(); ++x) {
          for (std::uint32_t y = 0; y < F.order(); ++y) {
            t.expect(values[F.add(x, y)] == F.add(values[x], values[y]), where);
          }
        }
      } else {
        for (int i = 0; i < 10000; ++i) {
          const auto x = static_cast<std::uint32_t>(rng() % F.order());
          const auto y = static_cast<std::uint32_t>(rng() % F.order());
          t.expect(values[F.add(x, y)] == F.add(values[x], values[y]), where);
          ++sampled_pairs;
        }
      }
    }
    t.expect(addpoly::f_of_subgroup(FpSubspace::prime_field(F)) == AdditivePolynomial::artin_schreier(F),
             [&] { return "f_{F_p} != wp over " + name; });
    if (F.order() > 256) continue;
    const auto wp = AdditivePolynomial::artin_schreier(F);
    for (std::uint32_t i = 1; i < F.order(); ++i) {
      const Element b = F.element(i);
      // b^p * wp(x / b), composed literally.
      const auto literal = addpoly::compose(scalar(b.pow(p)), addpoly::compose(wp, scalar(b.inverse())));
      const auto f_line = addpoly::f_of_subgroup(FpSubspace::line(b));
      t.expect(literal == f_line && addpoly::twist_of_line(b) == f_line,
               [&] { return "twist identity fails at b = " + b.to_string() + " over " + name; });
    }
  }
  return {t.failures == 0, std::to_string(sampled_pairs) + " sampled pairs, " + t.summary(), {}};
}

// ---- criterion 3 ---------------------------------------------------------------

// flags[s][a] = f_{G_s}(a) lies in K, for every subspace s of K and a in L.
std::vector<std::vector<char>> membership_flags(const std::vector<FpSubspace>& subspaces, const Embedding& e) {
  std::vector<std::vector<char>> flags;
  const auto& L = e.target();
  for (const auto& G : subspaces) {
    const auto f = addpoly::f_of_subgroup(G).base_change(e);
    std::vector<char> row(L.order());
    for (std::uint32_t i = 0; i < L.order(); ++i) row[i] = e.contains(f(L.element(i))) ? 1 : 0;
    flags.push_back(std::move(row));
  }
  return flags;
}

Outcome up_and_down() {
  Tally t;
  // Going up: G <= H <= K = GF(2^4) inside L = GF(2^8).
  std::uint64_t up_pairs = 0;
  {
    const FiniteField K(2, 4);
    const FiniteField L(2, 8);
    const auto e = gf::build_embedding(K, L);
    const auto subspaces = addpoly::enumerate_subspaces(K, 4);
    const auto flags = membership_flags(subspaces, e);
    for (std::size_t g = 0; g < subspaces.size(); ++g) {
      for (std::size_t h = 0; h < subspaces.size(); ++h) {
        if (!subspaces[h].contains(subspaces[g])) continue;
        ++up_pairs;
        for (std::uint32_t a = 0; a < L.order(); ++a) {
          t.expect(!flags[g][a] || flags[h][a], [&] {
            return "f_G(a) in K but f_H(a) not, a = " + L.element(a).to_string();
          });
        }
      }
    }
  }
  // Going down: families {G_1, G_2} in K = GF(2^3) with trivial intersection.
  std::uint64_t families = 0;
  std::uint64_t hypotheses_met = 0;
  {
    const FiniteField K(2, 3);
    const FiniteField L(2, 6);
    const auto e = gf::build_embedding(K, L);
    const auto subspaces = addpoly::enumerate_subspaces(K, 3);
    const auto flags = membership_flags(subspaces, e);
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
      for (std::size_t j = i; j < subspaces.size(); ++j) {
        if (subspaces[i].intersect(subspaces[j]).dim() != 0) continue;
        ++families;
        const std::vector family{subspaces[i], subspaces[j]};
        for (std::uint32_t a = 0; a < L.order(); ++a) {
          const Element x = L.element(a);
          auto where = [&] { return "descend at a = " + x.to_string(); };
          t.guard(
              [&] {
                const auto outcome = addpoly::descend(family, x, e);
                const bool met = flags[i][a] && flags[j][a];
                t.expect(met == (outcome == addpoly::DescendOutcome::kInSubfield), where);
                if (met) {
                  ++hypotheses_met;
                  t.expect(e.contains(x), where);
                }
              },
              where);
        }
      }
    }
  }
  return {t.failures == 0,
          std::to_string(up_pairs) + " chains up, " + std::to_string(families) + " families down (" +
              std::to_string(hypotheses_met) + " with hypotheses met), " + t.summary(),
          {}};
}

// ---- criteria 4 to 9 -------------------------------------------------------------

struct Batch {
  asext::ArtinSchreierExtension ext;
  std::size_t n;
  bool enumerated;
  std::vector<contrary::ContraryCertificate> certs;
};

// Shared state for suites 4 to 9 within one run.
struct Corpus {
  std::vector<Batch> batches;
  std::optional<contrary::ContraryCertificate> golden;
};

Json tuple_json(const std::vector<Element>& xs) { return serialize::to_json(std::span<const Element>(xs)); }

std::uint64_t independent_tuple_count(std::uint64_t q, std::uint64_t p, std::size_t n) {
  std::uint64_t count = 1;
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= q - span;
    span *= p;
  }
  return count;
}

std::vector<std::vector<Element>> choose_tuples(const FiniteField& K, std::size_t n, std::mt19937_64& rng,
                                                bool& enumerated) {
  constexpr std::size_t kWanted = 20;
  std::vector<std::vector<Element>> out;
  enumerated = independent_tuple_count(K.order(), K.characteristic(), n) < kWanted;
  if (enumerated) {
    std::vector<std::uint32_t> idx(n, 0);
    for (;;) {
      std::vector<Element> a;
      for (auto i : idx) a.push_back(K.element(i));
      if (FpSubspace::from_generators(K, a).dim() == n) out.push_back(a);
      std::size_t pos = n;
      while (pos > 0 && ++idx[pos - 1] == K.order()) idx[--pos] = 0;
      if (pos == 0) break;
    }
    return out;
  }
  std::set<std::vector<std::uint32_t>> seen;
  while (out.size() < kWanted) {
    auto a = contrary::sample_independent_tuple(K, n, rng);
    std::vector<std::uint32_t> key;
    for (const auto& x : a) key.push_back(x.index());
    if (seen.insert(key).second) out.push_back(std::move(a));
  }
  return out;
}

Outcome generator_soundness(Corpus& corpus) {
  Tally t;
  Json report = Json::array();
  std::mt19937_64 rng(kSeed);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  std::uint64_t certificates = 0;
  for (auto [p, k] : cases) {
    const FiniteField K(p, k);
    const auto ext = asext::build_as_extension(K);
    const contrary::ContraryOracle oracle(ext);
    for (std::size_t n = 2; n <= std::min<std::size_t>(k, 3); ++n) {
      Batch batch{ext, n, false, {}};
      const auto tuples = choose_tuples(K, n, rng, batch.enumerated);
      Json rows = Json::array();
      for (const auto& a : tuples) {
        auto where = [&] { return K.spec() + " a = " + tuple_json(a).dump(); };
        t.guard(
            [&] {
              auto cert = contrary::generate_contrary(ext, a, &oracle);
              const bool verified = contrary::verify_certificate(cert);
              const bool contrary_bf = oracle.is_contrary(cert.b);
              t.expect(verified && contrary_bf, where);
              rows.push_back(Json{{"a", tuple_json(a)},
                                  {"b", tuple_json(cert.b)},
                                  {"verified", verified},
                                  {"contrary", contrary_bf}});
              batch.certs.push_back(std::move(cert));
              ++certificates;
            },
            where);
      }
      t.expect(batch.enumerated || batch.certs.size() >= 20, [&] { return K.spec() + ": fewer than 20 tuples"; });
      report.push_back(Json{{"K", K.spec()},
                            {"L", ext.L.spec()},
                            {"n", n},
                            {"seed", kSeed},
                            {"selection", batch.enumerated ? "all independent tuples" : "seeded sample"},
                            {"tuples", std::move(rows)}});
      corpus.batches.push_back(std::move(batch));
    }
  }
  return {t.failures == 0, std::to_string(certificates) + " certificates, " + t.summary(), std::move(report)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome golden_example(Corpus& corpus) {
  Tally t;
  const FiniteField K(2, 2);
  const Element w = K.generator();
  const Element one = K.one();
  const auto ext = asext::build_as_extension(K);
  const auto& e = ext.embedding;
  auto cert = contrary::generate_contrary(ext, std::vector{one, w});
  const auto& s = cert.slots[0];
  t.expect(K.modulus() == gf::Digits{1, 1, 1}, [] { return "K modulus is not x^2+x+1"; });
  t.expect(cert.b == std::vector{w, one}, [] { return "b != (w, 1)"; });
  t.expect(s.beta == ext.alpha && s.y == one, [] { return "slot 1 beta or y"; });
  t.expect(s.x[0] == ext.alpha + e.apply(w * w) && s.x[1] == e.apply(w), [] { return "slot 1 x values"; });
  const std::string text = serialize::dump(serialize::to_json(cert));
  const std::string golden = read_file(std::string(ASLAB_GOLDEN_DIR) + "/contrary_gf4_a1w.json");
  t.expect(!golden.empty() && text == golden, [] { return "certificate JSON differs from the golden file"; });
  corpus.golden = std::move(cert);
  return {t.failures == 0, "GF(4) in GF(16), a = (1, w): " + t.summary(), Json{{"certificate", text == golden}}};
}

Outcome disjointness(const Corpus& corpus) {
  Tally t;
  std::vector<asext::ArtinSchreierExtension> exts;
  for (const auto& b : corpus.batches) exts.push_back(b.ext);
  if (corpus.golden) exts.push_back(corpus.golden->ext);
  std::set<std::string> seen;
  Json report = Json::array();
  for (const auto& ext : exts) {
    if (!seen.insert(ext.K.spec() + ext.L.spec()).second) continue;
    auto where = [&] { return "A and U meet for " + ext.K.spec(); };
    t.guard(
        [&] {
          const auto A = asext::wp_image(ext.K);
          const auto U = asext::wp_outside_image(ext);
          std::vector<Element> both;
          std::set_intersection(A.begin(), A.end(), U.begin(), U.end(), std::back_inserter(both));
          t.expect(both.empty(), where);
          report.push_back(Json{{"K", ext.K.spec()},
                                {"L", ext.L.spec()},
                                {"image_size", A.size()},
                                {"outside_size", U.size()},
                                {"intersection_size", both.size()}});
        },
        where);
  }
  return {t.failures == 0, std::to_string(seen.size()) + " extensions, " + t.summary(), std::move(report)};
}

Outcome hypercube_suite() {
  Tally t;
  const FiniteField K(2, 3);
  const Element g = K.generator();
  const std::vector a{K.one(), g, g * g};
  Json report = Json::object();
  t.guard(
      [&] {
        const auto cube = hypercube::build_bottom_up(K, a);
        const FiniteField E(2, 6);
        const auto into_e = gf::build_embedding(K, E);
        const auto pull = hypercube::verify_pullback(cube, into_e);
        t.expect(pull.passed && pull.nontrivial == 9, [&] { return "pullback: " + pull.counterexample; });
        const auto fun = hypercube::check_functoriality(cube);
        t.expect(fun.passed, [&] { return "functoriality: " + fun.counterexample; });
        const auto edges = hypercube::check_edges(cube);
        t.expect(edges.passed, [&] { return "edges: " + edges.counterexample; });
        // Every covering edge equals the twist from by_one, coefficient-wise.
        std::uint64_t covering = 0;
        for (const auto& [key, h] : cube.edges()) {
          const auto [s, u] = key;
          if (std::popcount(u) != std::popcount(s) + 1) continue;
          ++covering;
          auto span = [&](hypercube::Subset m) {
            std::vector<Element> gens;
            for (std::size_t i = 0; i < a.size(); ++i) {
              if (m & (1u << i)) gens.push_back(a[i]);
            }
            return FpSubspace::from_generators(K, gens);
          };
          t.expect(h == addpoly::twist_of_line(addpoly::by_one(span(s), span(u))),
                   [&] { return "covering edge " + hypercube::edge_key(s, u) + " is not a twist"; });
        }
        const auto surj_k = hypercube::verify_geometric_surjectivity(cube, Embedding::identity(K));
        const auto surj_e = hypercube::verify_geometric_surjectivity(cube, into_e);
        t.expect(surj_k.passed && surj_e.passed, [&] { return "surjectivity: " + surj_k.counterexample + surj_e.counterexample; });
        const auto bs = hypercube::baldwin_saxl_failure(cube, Embedding::identity(K));
        t.expect(bs.entries.size() == 3 && bs.failure_everywhere && bs.equivalence_holds,
                 [] { return "Baldwin-Saxl failure report"; });
        for (const auto& entry : bs.entries) {
          t.expect(!entry.contains_intersection && !entry.edge_surjective,
                   [&] { return "G_" + std::to_string(entry.index) + " contains the intersection"; });
        }
        report = Json{{"covering_edges", covering},
                      {"pullback", serialize::to_json(pull)},
                      {"functorial", serialize::to_json(fun)},
                      {"edges", serialize::to_json(edges)},
                      {"surjective_K", serialize::to_json(surj_k)},
                      {"surjective_E", serialize::to_json(surj_e)},
                      {"baldwin_saxl", serialize::to_json(bs)}};
      },
      [] { return "GF(8) cube"; });
  return {t.failures == 0, "n = 3 cube over GF(8), pullback over GF(64): " + t.summary(), std::move(report)};
}

Outcome top_down_counts() {
  Tally t;
  Json report = Json::array();
  const FiniteField F4(2, 2);
  const FiniteField F8(2, 3);
  const Element w = F4.generator();
  const Element g = F8.generator();
  struct Case {
    std::vector<Element> a;
    FiniteField E;
    std::uint64_t expected;
  };
  const std::vector<Case> cases{{{F4.one(), w}, F4, 4},
                                {{F4.one(), w}, FiniteField(2, 4), 16},
                                {{F8.one(), g, g * g}, F8, 8},
                                {{F8.one(), g, g * g}, FiniteField(2, 6), 64},
                                {{F4.one(), F4.one()}, F4, 8}};
  for (const auto& c : cases) {
    const auto field = c.a.front().field();
    const Embedding e = c.E == field ? Embedding::identity(field) : gf::build_embedding(field, c.E);
    auto where = [&] { return "a = " + tuple_json(c.a).dump() + " over " + c.E.spec(); };
    t.guard(
        [&] {
          const auto r = hypercube::point_count_check(c.a, e);
          t.expect(r.count == c.expected, where);
          report.push_back(Json{{"a", tuple_json(c.a)}, {"E", c.E.spec()}, {"report", serialize::to_json(r)}});
        },
        where);
  }
  return {t.failures == 0, "5 counts, " + t.summary(), std::move(report)};
}

Outcome construction_equivalence(const Corpus& corpus) {
  Tally t;
  Json report = Json::array();
  for (const auto& batch : corpus.batches) {
    for (const auto& cert : batch.certs) {
      auto where = [&] { return "cross-check for " + batch.ext.K.spec() + " b = " + tuple_json(cert.b).dump(); };
      t.guard(
          [&] {
            const auto r = hypercube::cross_check_witness(cert);
            t.expect(r.passed, where);
            report.push_back(serialize::to_json(r));
          },
          where);
    }
  }
  return {t.failures == 0, std::to_string(report.size()) + " certificates, " + t.summary(), std::move(report)};
}

// ---- driver ------------------------------------------------------------------------

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
};

bool print(const Criterion& c, const Outcome& o, double seconds) {
  const bool within = seconds < c.limit_seconds;
  const bool ok = o.passed && within;
  std::printf("%s  criterion %2d  %-28s %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name,
              o.detail.c_str(), seconds, c.limit_seconds);
  std::fflush(stdout);
  return ok;
}

template <typename F>
std::pair<Outcome, double> timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = f();
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  return {std::move(o), took.count()};
}

// Suites 4 to 9 in order, with their reports concatenated.
std::vector<std::pair<Outcome, double>> run_corpus_suites() {
  Corpus corpus;
  std::vector<std::pair<Outcome, double>> out;
  out.push_back(timed([&] { return generator_soundness(corpus); }));
  out.push_back(timed([&] { return golden_example(corpus); }));
  out.push_back(timed([&] { return disjointness(corpus); }));
  out.push_back(timed(hypercube_suite));
  out.push_back(timed(top_down_counts));
  out.push_back(timed([&] { return construction_equivalence(corpus); }));
  return out;
}

std::string report_bytes(const std::vector<std::pair<Outcome, double>>& runs) {
  Json all = Json::array();
  for (const auto& [o, seconds] : runs) all.push_back(o.report);
  return serialize::dump(all);
}

}  // namespace

int main() {
  bool all = true;
  const Criterion c1{1, "quotient decomposition", 60};
  const Criterion c2{2, "additive-polynomial facts", 30};
  const Criterion c3{3, "going up and down", 60};
  {
    auto [o, s] = timed(decomposition_suite);
    all = print(c1, o, s) && all;
  }
  {
    auto [o, s] = timed(addp_facts);
    all = print(c2, o, s) && all;
  }
  {
    auto [o, s] = timed(up_and_down);
    all = print(c3, o, s) && all;
  }

  const std::vector<Criterion> corpus_criteria{{4, "generator soundness", 300},
                                               {5, "golden worked example", 60},
                                               {6, "image disjointness", 60},
                                               {7, "hypercube suite", 120},
                                               {8, "top-down point counts", 30},
                                               {9, "construction equivalence", 60}};
  const auto first = run_corpus_suites();
  for (std::size_t i = 0; i < first.size(); ++i) {
    all = print(corpus_criteria[i], first[i].first, first[i].second) && all;
  }

  const auto [second, rerun_seconds] = timed([] {
    auto again = run_corpus_suites();
    return Outcome{true, report_bytes(again), {}};
  });
  const std::string bytes = report_bytes(first);
  Outcome determinism;
  determinism.passed = bytes == second.detail;
  determinism.detail = "rerun of suites 4-9: " + std::to_string(bytes.size()) + " report bytes, " +
                       (determinism.passed ? "identical" : "DIFFERENT");
  all = print({10, "determinism", 600}, determinism, rerun_seconds) && all;
  return all ? 0 : 1;
}
