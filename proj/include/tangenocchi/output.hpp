#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tangenocchi/nat.hpp"

namespace tangenocchi::cli {

/// One table cell: either text (shape serializations, check names, blanks)
/// or an exact integer. Integers render as full decimal strings everywhere;
/// JSON keeps them as numbers only while they survive a double-precision
/// parser (|v| <= 2^53) and switches to strings beyond that.
using Cell = std::variant<std::string, Nat>;

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<bool> status;  // set by verification commands only
};

enum class Format { Table, Csv, Json };

/// Accepts "table", "csv" or "json".
Format parse_format(std::string_view name);

std::string render(const OutputRecord& record, Format format);

/// Exit-code contract: 0 success, 1 verification failure, 2 usage error,
/// 3 budget/resource error.
int exit_code_for(const std::exception& error);

}  // namespace tangenocchi::cli
