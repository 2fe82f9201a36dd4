#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mtree {

// Exit-code contract shared by every command:
//   0 success, 1 parse error, 2 invalid decomposition (validator rejects),
//   3 unmet precondition (wrong algorithm/input combination, oracle budget).
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitPrecondition = 3;

struct DecomposeArgs {
  std::string algo;     // tree | naive | spanning2g | cactus-sm | exact
  std::string variant = "m";
  std::string input;
  std::string output;
};

struct GenArgs {
  std::string kind;  // tree | cactus | planted | sc1 | vc
  std::uint64_t seed = 0;
  int size = 6;
  int k = -1;  // unset; each kind picks its own default
  std::string output;
};

// Each command reads/writes the files named in its arguments, prints its
// report to `out` and diagnostics to `err`, and returns an exit code.
int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);
int run_validate(const std::string& graph_path, const std::string& decomposition_path,
                 const std::string& variant_override,  // "" keeps the file's variant
                 std::ostream& out, std::ostream& err);
int run_stats(const std::string& input_path, std::ostream& out, std::ostream& err);
int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int run_export_dot(const std::string& graph_path, const std::string& decomposition_path,
                   const std::string& output_path, std::ostream& out, std::ostream& err);

}  // namespace mtree
