#include "tangenocchi/output.hpp"

#include <json.hpp>

namespace tangenocchi::cli {

namespace {

// Largest integer a double-backed JSON parser keeps exact.
const Nat kJsonNumberLimit = Nat(1) << 53;

std::string cell_text(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return to_decimal(std::get<Nat>(cell));
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(record.columns[i]);
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string render_table(const OutputRecord& record) {
  std::string out = "# command: " + record.command + "\n";
  for (const auto& [key, value] : record.parameters)
    out += "# " + key + ": " + value + "\n";

  std::vector<std::size_t> widths(record.columns.size(), 0);
  for (std::size_t i = 0; i < record.columns.size(); ++i)
    widths[i] = record.columns[i].size();
  for (const auto& row : record.rows)
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], cell_text(row[i]).size());

  auto emit_row = [&](auto&& text_of, auto&& right_align) {
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
      std::string text = text_of(i);
      bool last = i + 1 == record.columns.size();
      if (right_align(i))
        out += std::string(widths[i] - text.size(), ' ') + text;
      else if (last)
        out += text;  // no trailing padding
      else
        out += text + std::string(widths[i] - text.size(), ' ');
      out += last ? "\n" : "  ";
    }
  };

  emit_row([&](std::size_t i) { return record.columns[i]; },
           [](std::size_t) { return false; });
  for (const auto& row : record.rows)
    emit_row([&](std::size_t i) { return i < row.size() ? cell_text(row[i]) : ""; },
             [&](std::size_t i) {
               return i < row.size() && std::holds_alternative<Nat>(row[i]);
             });

  if (record.status.has_value())
    out += std::string("# status: ") + (*record.status ? "pass" : "fail") + "\n";
  return out;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const Nat& v = std::get<Nat>(cell);
  if (abs(v) <= kJsonNumberLimit) return v.get_si();
  return to_decimal(v);
}

std::string render_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < record.columns.size(); ++i)
      obj[record.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  if (record.status.has_value()) j["status"] = *record.status ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (expected table, csv or json)");
}

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::Table:
      return render_table(record);
    case Format::Csv:
      return render_csv(record);
    case Format::Json:
      return render_json(record);
  }
  throw std::logic_error("render: unreachable format");
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const BudgetError*>(&error) != nullptr) return 3;
  if (dynamic_cast<const VerificationError*>(&error) != nullptr) return 1;
  if (dynamic_cast<const std::invalid_argument*>(&error) != nullptr) return 2;
  return 1;  // internal failures count as verification-grade errors
}

}  // namespace tangenocchi::cli
