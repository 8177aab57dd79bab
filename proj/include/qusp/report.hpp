#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qusp {

using ordered_json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

std::string_view to_string(Format format) noexcept;

/// A column-oriented table keyed by an integer index (n, s, k or N).
struct Table {
  std::string name;
  std::string index_name;
  std::vector<long long> index;
  std::vector<std::pair<std::string, std::vector<double>>> columns;

  Table(std::string table_name, std::string index_label)
      : name(std::move(table_name)), index_name(std::move(index_label)) {}

  /// Appends a column; the index grows to the longest column seen so far.
  Table& add(std::string column, std::vector<double> values);
};

struct Report {
  ordered_json config = ordered_json::object();
  ordered_json scalars = ordered_json::object();
  std::vector<Table> tables;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::string> warnings;
  std::optional<std::pair<std::string, std::string>> error;  // kind, message
  double tol = 0.0;

  void add_residual(std::string name, double value) {
    residuals.emplace_back(std::move(name), value);
  }

  /// Pass iff no error and every residual is finite and <= tol.
  bool passed() const;

  ordered_json to_json() const;
};

/// Numbers use the shortest decimal that round-trips (the JSON serializer's
/// rule) in every format, so csv and table cells match the json values.
std::string format_number(double value);

std::string render(const Report& report, Format format);

}  // namespace qusp
