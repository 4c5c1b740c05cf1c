#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ortho/group.hpp"

namespace ortho::cli {

enum class Command { enumerate, classify, graph, clique, verify, latin };
enum class OutputFormat { text, json, dot, cycles };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBoundExceeded = 3;
}  // namespace exit_code

/// Parsed group description: a direct product of cyclic factors, in order.
struct GroupSpec {
  std::vector<std::size_t> cyclic_factors;

  std::size_t order() const;
  GroupPtr build() const;
};

/// Accepts `cyclic:N`, `product:<factor>,<factor>`, `z2xz4` and `klein`; a factor is
/// `cyclic:N` or an alias. Throws std::invalid_argument on anything else.
GroupSpec parse_group_spec(std::string_view spec);

std::optional<Command> parse_command(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::string group_spec;
  Command command = Command::enumerate;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  std::size_t max_order = 12;
  /// 0 means hardware concurrency.
  std::size_t jobs = 0;
};

/// Executes one command. Normal output goes to `out` (or to output_path when set),
/// diagnostics to `err`. Returns one of the exit_code constants.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ortho::cli
