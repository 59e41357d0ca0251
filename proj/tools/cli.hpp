#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "aec/generate.hpp"

namespace aec::cli {

// Exit codes shared by every subcommand, for scriptable CI gates.
inline constexpr int kOk = 0;
inline constexpr int kInputRejected = 2;
inline constexpr int kVerificationFailed = 3;
inline constexpr int kTheoremAbort = 4;

struct ColorArgs {
  std::string input;
  std::string mode = "auto";  // auto | theorem | corollary
  bool checked = false;
  std::string trace_path;     // emit the extension traces as JSON
  std::string format = "text";  // text | structured
  std::string output;           // stdout when empty
};
int cmd_color(const ColorArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string graph;
  std::string coloring;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct OracleArgs {
  std::string graph;
  int kmax = 0;  // 0: delta + 2
  long budget = 200'000'000;
  int max_edges = 18;
  bool witness = false;
};
int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);

struct GenArgs {
  std::string family;  // k4 k33 path cycle star biregular random
  int n = 0;
  int a = 0;
  int delta = 0;
  int delta_cap = 4;
  int m = 0;
  uint64_t seed = 1;
  bool require_qualifying = true;
  std::string output;        // stdout when empty
  int corpus_count = 0;      // with --manifest-out: number of corpus entries
  std::string manifest_out;  // write a bench manifest instead of a graph
};
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::string manifest;
  int jobs = 1;
  std::string format = "text";  // text | structured
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Parameter map of the standard random corpus: n <= 60, degree caps in
/// [4,8], edge target about 1.5 n, qualifying edge required.
Random3SparseParams corpus_params(uint64_t seed);

}  // namespace aec::cli
