// Brute-force termination oracle for small widths.
//
// Interprets the typed program directly (calls inlined), exploring every
// nondeterministic choice. An input terminates when its reachable state graph
// is acyclic; failed assertions and blocked assumptions end a path.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrapterm/frontend/ast.hpp"

namespace wrapterm::oracle {

class OracleLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputResult {
  std::vector<std::uint64_t> input;  // raw bits, one per entry parameter
  bool terminates = false;
  std::uint64_t states = 0;  // distinct states explored for this input
};

struct OracleResult {
  std::vector<std::string> input_names;
  std::vector<unsigned> input_widths;
  std::vector<InputResult> inputs;
  bool all_terminate() const;
  bool none_terminate() const;
};

/// Variables wider than 16 bits or more than `state_limit` states overall
/// raise OracleLimit.
OracleResult run(const frontend::Program& prog, std::uint64_t state_limit = std::uint64_t{1} << 24);

}  // namespace wrapterm::oracle
