// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "aslab/addpoly.hpp"
#include "aslab/asext.hpp"
#include "aslab/contrary.hpp"
#include "aslab/error.hpp"
#include "aslab/hypercube.hpp"
#include "aslab/serialize.hpp"

namespace aslab::cli {

namespace {

using gf::Element;
using gf::FiniteField;
using serialize::Json;
using serialize::to_json;

class IoError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A failed replay of user-supplied data; the report is still emitted and the
// exit status is 1.
class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& what, Json report) : Error(what), report_(std::move(report)) {}
  const Json& report() const { return report_; }

 private:
  Json report_;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw InvalidArgument("no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FiniteField require_field(const RunConfig& config) {
  if (config.field_spec.empty()) throw InvalidArgument("--field is required");
  return FiniteField::parse(config.field_spec);
}

std::vector<Element> parse_tuple(const FiniteField& field, const std::string& spec) {
  std::vector<Element> out;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    out.push_back(field.parse_element(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  if (out.empty()) throw InvalidArgument("--a lists no elements");
  return out;
}

// Explicit --a, or a seeded independent sample of length --n.
std::vector<Element> tuple_from(const RunConfig& config, const FiniteField& field) {
  if (config.a_spec) {
    auto a = parse_tuple(field, *config.a_spec);
    if (config.n && *config.n != a.size()) throw InvalidArgument("--n disagrees with the length of --a");
    return a;
  }
  if (!config.n) throw InvalidArgument("give --a or --n");
  std::mt19937_64 rng(config.seed);
  return contrary::sample_independent_tuple(field, *config.n, rng);
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive() || (x.is_array() && is_flat(x)); });
}

// One "path  value" line per leaf; element vectors stay on one line.
void render_text(const Json& j, const std::string& path, std::ostream& out) {
  if (is_flat(j)) {
    out << (path.empty() ? "value" : path) << "  " << scalar_text(j) << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, path.empty() ? key : path + "." + key, out);
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
}

Json field_report(const RunConfig& config) {
  const FiniteField field = require_field(config);
  Json doc{{"spec", field.spec()},
           {"characteristic", field.characteristic()},
           {"degree", field.degree()},
           {"order", field.order()},
           {"modulus", field.modulus()},
           {"generator", to_json(field.generator())},
           {"as_closed", asext::is_as_closed(field)}};
  return doc;
}

Json asext_report(const RunConfig& config) {
  const FiniteField K = require_field(config);
  const auto ext = asext::build_as_extension(K);
  const auto image = asext::wp_image(K);
  const auto outside = asext::wp_outside_image(ext);
  return Json{{"extension", to_json(ext)},
              {"wp_image_size", image.size()},
              {"outside_image_size", outside.size()},
              {"disjoint", true}};
}

Json wp_image_report(const RunConfig& config) {
  const FiniteField K = require_field(config);
  const auto image = asext::wp_image(K);
  Json doc{{"field", K.spec()}, {"wp_image", to_json(std::span<const Element>(image))}, {"size", image.size()}};
  std::uint64_t extension_order = 1;
  for (std::uint32_t i = 0; i < K.characteristic(); ++i) extension_order *= K.order();
  if (extension_order <= gf::kMaxFieldOrder) {
    const auto ext = asext::build_as_extension(K);
    const auto outside = asext::wp_outside_image(ext);
    doc["extension_field"] = ext.L.spec();
    doc["outside_image"] = to_json(std::span<const Element>(outside));
  }
  return doc;
}

Json contrary_gen_report(const RunConfig& config) {
  const FiniteField K = require_field(config);
  const auto a = tuple_from(config, K);
  const auto ext = asext::build_as_extension(K);
  return to_json(contrary::generate_contrary(ext, a));
}

Json contrary_verify_report(const RunConfig& config) {
  const auto cert = serialize::certificate_from_json(serialize::parse(read_file(config.cert_path)));
  const auto result = contrary::verify_certificate_detailed(cert);
  Json doc = to_json(result);
  if (!result.valid) throw VerificationFailed("certificate rejected: " + result.failure, doc);
  return doc;
}

Json hypercube_build_report(const RunConfig& config) {
  const FiniteField field = require_field(config);
  const auto a = tuple_from(config, field);
  return to_json(hypercube::build_bottom_up(field, a));
}

Json hypercube_verify_report(const RunConfig& config) {
  const auto cube = serialize::hypercube_from_json(serialize::parse(read_file(config.file_path)));
  const FiniteField E = config.eval_field.empty() ? cube.field() : FiniteField::parse(config.eval_field);
  const gf::Embedding e = E == cube.field() ? gf::Embedding::identity(E) : gf::build_embedding(cube.field(), E);
  const auto& known = hypercube_checks();
  std::vector<std::string> checks = config.checks.empty() ? known : config.checks;
  for (const auto& name : checks) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InvalidArgument("unknown check '" + name + "'");
    }
  }
  Json reports = Json::object();
  std::string first_failure;
  auto record = [&](const hypercube::CheckReport& r) {
    reports[r.name] = to_json(r);
    if (!r.passed && first_failure.empty()) first_failure = r.name + ": " + r.counterexample;
  };
  for (const auto& name : checks) {
    if (name == "nodes") record(hypercube::check_nodes(cube));
    if (name == "edges") record(hypercube::check_edges(cube));
    if (name == "functorial") record(hypercube::check_functoriality(cube));
    if (name == "pullback") record(hypercube::verify_pullback(cube, e));
    if (name == "surjective") record(hypercube::verify_geometric_surjectivity(cube, e));
    if (name == "baldwin-saxl") reports[name] = to_json(hypercube::baldwin_saxl_failure(cube, e));
  }
  Json doc{{"eval_field", E.spec()}, {"checks", std::move(reports)}, {"passed", first_failure.empty()}};
  if (!first_failure.empty()) throw VerificationFailed("hypercube check failed: " + first_failure, doc);
  return doc;
}

Json census_report(const RunConfig& config) {
  const FiniteField K = require_field(config);
  const auto ext = asext::build_as_extension(K);
  const contrary::ContraryOracle oracle(ext);
  Json doc = to_json(contrary::census(oracle, config.n.value_or(2)));
  doc["field"] = K.spec();
  doc["extension_field"] = ext.L.spec();
  return doc;
}

Json dispatch(const RunConfig& config) {
  const auto& c = config.command;
  if (c == "field") return field_report(config);
  if (c == "asext") return asext_report(config);
  if (c == "wp-image") return wp_image_report(config);
  if (c == "contrary-gen") return contrary_gen_report(config);
  if (c == "contrary-verify") return contrary_verify_report(config);
  if (c == "hypercube-build") return hypercube_build_report(config);
  if (c == "hypercube-verify") return hypercube_verify_report(config);
  if (c == "census") return census_report(config);
  throw InvalidArgument("unknown command '" + c + "'");
}

void emit(const RunConfig& config, const Json& doc, std::ostream& out) {
  std::string body;
  if (config.format == "json") {
    body = serialize::dump(doc);
  } else if (config.format == "text") {
    std::ostringstream text;
    render_text(doc, "", text);
    body = text.str();
  } else {
    throw InvalidArgument("--format must be json or text");
  }
  if (config.output_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!(file << body)) throw IoError("cannot write '" + config.output_path + "'");
}

int fail(std::ostream& err, int code, const char* kind, const std::string& what) {
  std::string line = what;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
  return code;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"field",           "asext",           "contrary-gen",
                                              "contrary-verify", "hypercube-build", "hypercube-verify",
                                              "wp-image",        "census"};
  return names;
}

const std::vector<std::string>& hypercube_checks() {
  static const std::vector<std::string> names{"nodes",    "edges",      "functorial",
                                              "pullback", "surjective", "baldwin-saxl"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "text") throw InvalidArgument("--format must be json or text");
    emit(config, dispatch(config), out);
    return kOk;
  } catch (const VerificationFailed& e) {
    try {
      emit(config, e.report(), out);
    } catch (const IoError& io) {
      return fail(err, kUsageError, "io_error", io.what());
    }
    return fail(err, kVerificationFailed, "verification_failed", e.what());
  } catch (const LemmaViolation& e) {
    return fail(err, kVerificationFailed, "lemma_violation", e.what());
  } catch (const BoundExceeded& e) {
    return fail(err, kBoundExceeded, "bound_exceeded", e.what());
  } catch (const IoError& e) {
    return fail(err, kUsageError, "io_error", e.what());
  } catch (const MalformedInput& e) {
    return fail(err, kUsageError, "malformed_input", e.what());
  } catch (const FieldMismatch& e) {
    return fail(err, kUsageError, "field_mismatch", e.what());
  } catch (const InvalidArgument& e) {
    return fail(err, kUsageError, "invalid_argument", e.what());
  }
}

}  // namespace aslab::cli
