// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aslab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBoundExceeded = 3,
};

struct RunConfig {
  std::string command;
  std::string field_spec;
  std::optional<std::size_t> n;
  std::optional<std::string> a_spec;  // "[d..];[d..]"
  std::uint64_t seed = 0;
  std::string output_path;  // empty means the output stream
  std::string format = "json";
  std::string cert_path;
  std::string file_path;
  std::vector<std::string> checks;  // empty means every check
  std::string eval_field;
};

const std::vector<std::string>& commands();
const std::vector<std::string>& hypercube_checks();

/// Runs one command. The report goes to `out` (or the output file), a single
/// "error: <kind>: <reason>" line goes to `err` on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace aslab::cli
