// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPOLY_CLI_HPP_
#define QPOLY_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qpoly {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitTooLarge = 2;

struct RunConfig {
  std::string command;  // e.g. "polytope vertices"
  int q = 2;
  int n = 2;
  int k = -1;
  int m = -1;
  int d = -1;
  int d2 = -1;
  std::string point_path;
  std::string spec_path;
  std::string code_path;
  std::string out_path;  // stdout when empty
  std::string mu;        // principal denominator when empty
  std::string lambda;
  std::vector<std::string> lambdas;
  bool unreduced = false;
  bool json_errors = false;
  bool random = false;
  bool pretty = false;
  bool vector_code = false;
  std::uint64_t seed = 0;
  long max_t = 1000;
  int max_dim = 15;
  int max_q = 9;
  std::uint64_t scan_cap = std::uint64_t{1} << 20;
};

// Runs one command line (without the program name). Returns kExitOk,
// kExitInvalid on validation failures or kExitTooLarge when a cap is hit.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qpoly

#endif  // QPOLY_CLI_HPP_
