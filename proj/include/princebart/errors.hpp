#pragma once

#include <stdexcept>
#include <string>

namespace princebart {

// Error taxonomy mirrors the CLI exit codes: usage 2, data 3, adequacy 4.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when the data cannot support the requested inference (degenerate
// cells, no retained draws, non-convergent configuration).
struct AdequacyError : std::runtime_error {
  explicit AdequacyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace princebart
