#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "output_record.hpp"

namespace anth::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kBudget = 3,
  kChecksFailed = 4,
};

enum class Format { kTable, kJson };

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // stdout
  std::string err;  // stderr
};

/// Division steps of sqrt(n) with each remainder written in terms of a and
/// b, followed by the logos that closes the period. `steps` defaults to
/// the steps needed to reach the witness.
CommandResult cmd_expand(const std::string& n, std::optional<std::size_t> steps, Format format,
                         std::optional<std::size_t> max_steps = {});

/// The JSON record cmd_expand emits (exposed for tests).
OutputRecord build_record(const std::string& n, std::optional<std::size_t> steps,
                          std::optional<std::size_t> max_steps = {});

CommandResult cmd_convergents(const std::string& n, std::size_t count,
                              std::optional<std::size_t> max_steps = {});

/// Exit kOk iff every non-square N <= max_n is palindromically periodic.
CommandResult cmd_palindrome(long long max_n, unsigned workers = 0);

CommandResult cmd_theodorus();

CommandResult cmd_gcd(const std::string& a, const std::string& b);

}  // namespace anth::cli
