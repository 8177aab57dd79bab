#include "qusp/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qusp {

std::string_view to_string(Format format) noexcept {
  switch (format) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Table:
      return "table";
  }
  return "unknown";
}

Table& Table::add(std::string column, std::vector<double> values) {
  while (index.size() < values.size()) index.push_back(static_cast<long long>(index.size()));
  columns.emplace_back(std::move(column), std::move(values));
  return *this;
}

bool Report::passed() const {
  if (error) return false;
  return std::all_of(residuals.begin(), residuals.end(), [&](const auto& r) {
    return std::isfinite(r.second) && r.second <= tol;
  });
}

std::string format_number(double value) { return ordered_json(value).dump(); }

ordered_json Report::to_json() const {
  ordered_json out = ordered_json::object();
  out["config"] = config;
  if (error) {
    out["error"] = {{"kind", error->first}, {"message", error->second}};
  } else {
    ordered_json payload = scalars;
    ordered_json tables_json = ordered_json::object();
    for (const Table& table : tables) {
      ordered_json t = ordered_json::object();
      t[table.index_name] = table.index;
      for (const auto& [name, values] : table.columns) t[name] = values;
      tables_json[table.name] = std::move(t);
    }
    if (!tables.empty()) payload["tables"] = std::move(tables_json);
    out["payload"] = std::move(payload);
    ordered_json res = ordered_json::object();
    for (const auto& [name, value] : residuals) res[name] = value;
    out["residuals"] = std::move(res);
  }
  if (!warnings.empty()) out["warnings"] = warnings;
  out["status"] = passed() ? "pass" : "fail";
  return out;
}

namespace {

std::string cell(const std::vector<double>& column, std::size_t row) {
  return row < column.size() ? format_number(column[row]) : std::string();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  const bool labelled = report.tables.size() > 1;
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const Table& table = report.tables[t];
    if (t > 0) os << '\n';
    if (labelled) os << "# " << table.name << '\n';
    os << table.index_name;
    for (const auto& [name, values] : table.columns) os << ',' << name;
    os << '\n';
    for (std::size_t row = 0; row < table.index.size(); ++row) {
      os << table.index[row];
      for (const auto& [name, values] : table.columns) os << ',' << cell(values, row);
      os << '\n';
    }
  }
  return os.str();
}

std::string render_table(const Report& report) {
  std::ostringstream os;
  os << "config: " << report.config.dump() << '\n';
  if (report.error) {
    os << "error: " << report.error->first << ": " << report.error->second << '\n';
  }
  for (const auto& [key, value] : report.scalars.items()) {
    os << key << ": " << value.dump() << '\n';
  }
  for (const Table& table : report.tables) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{table.index_name};
    for (const auto& [name, values] : table.columns) header.push_back(name);
    rows.push_back(header);
    for (std::size_t row = 0; row < table.index.size(); ++row) {
      std::vector<std::string> line{std::to_string(table.index[row])};
      for (const auto& [name, values] : table.columns) line.push_back(cell(values, row));
      rows.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : rows)
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    os << '\n' << "[" << table.name << "]\n";
    for (const auto& line : rows) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
      }
      os << '\n';
    }
  }
  if (!report.residuals.empty()) os << '\n';
  for (const auto& [name, value] : report.residuals) {
    os << "residual " << name << ": " << format_number(value) << '\n';
  }
  for (const auto& warning : report.warnings) os << "warning: " << warning << '\n';
  os << "status: " << (report.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return report.to_json().dump(2) + "\n";
    case Format::Csv:
      return render_csv(report);
    case Format::Table:
      return render_table(report);
  }
  return {};
}

}  // namespace qusp
