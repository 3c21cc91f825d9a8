// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using aslab::cli::RunConfig;
  RunConfig config;
  CLI::App app{"Exact Artin-Schreier and additive-polynomial laboratory"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> about{
      {"field", "describe a finite field"},
      {"asext", "build the canonical Artin-Schreier extension of a field"},
      {"wp-image", "list the image of x^p - x and its complement in the extension"},
      {"contrary-gen", "generate a contrary-tuple certificate"},
      {"contrary-verify", "replay a certificate"},
      {"hypercube-build", "build the bottom-up Artin-Schreier hypercube"},
      {"hypercube-verify", "check a stored hypercube"},
      {"census", "brute-force count of contrary tuples"}};

  std::size_t n = 0;
  std::string a_spec;
  for (const auto& name : aslab::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--field", config.field_spec, "field spec p^k or p^k/[c0,...,1]");
    sub->add_option("--n", n, "tuple length");
    sub->add_option("--a", a_spec, "explicit tuple, elements separated by ';'");
    sub->add_option("--seed", config.seed, "seed for sampled tuples");
    sub->add_option("-o,--output", config.output_path, "write the report here instead of stdout");
    sub->add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cert", config.cert_path, "certificate file");
    sub->add_option("--file", config.file_path, "hypercube file");
    sub->add_option("--checks", config.checks, "comma-separated hypercube checks")->delimiter(',');
    sub->add_option("--eval-field", config.eval_field, "evaluation field for hypercube checks");
    sub->callback([&, sub, name] {
      config.command = name;
      if (sub->count("--n") > 0) config.n = n;
      if (sub->count("--a") > 0) config.a_spec = a_spec;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return aslab::cli::kUsageError;
  }
  return aslab::cli::run(config, std::cout, std::cerr);
}
