#pragma once

#include <cstdint>
#include <string>

#include "blockfact/io.hpp"

namespace blockfact {
namespace cli {

struct Options {
  std::uint64_t seed = 0;
  int attempts = 64;
  long long cap = kDefaultSizeCap;
  bool machine = false;  // machine (JSON) vs human text report
};

/// A finished command: the rendered report, the exit status, and any
/// artifact document to be written alongside it.
struct Outcome {
  std::string report;
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 input error
  Json artifact;      // null unless the command produced a document
};

Outcome cmd_analyze(const std::string& path, const Options& opts);
Outcome cmd_factorize(const std::string& path, const Options& opts);
Outcome cmd_resolve(const std::string& path, int depth, bool verify, const Options& opts);
Outcome cmd_verify(const std::string& path, const Options& opts);

struct ZooRequest {
  std::string family;  // dual | matrix | exterior | upper | triplet | sf
  int p = 0, d = 0, n = 0, two_d = 0;
  bool scrambled = false;
  std::uint64_t scramble_seed = 0;
};

/// Emits the requested constructor output as an algebra document.
Outcome cmd_zoo(const ZooRequest& req);

/// In-memory core of cmd_analyze, shared with the test suites.
Json analyze_to_json(const Algebra& a, const std::string& digest, const Options& opts);

}  // namespace cli
}  // namespace blockfact
