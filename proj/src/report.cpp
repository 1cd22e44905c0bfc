#include "qglab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace qglab {
namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string param_text(const ParamValue& v) {
  if (const double* d = std::get_if<double>(&v)) return format_number(*d);
  return std::get<std::string>(v);
}

// Numbers go through the 15-digit text form so CSV and JSON agree.
ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return ordered_json::parse(format_number(x));
}

ordered_json param_json(const ParamValue& v) {
  if (const double* d = std::get_if<double>(&v)) return number(*d);
  return std::get<std::string>(v);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json" || name == "jsonl") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

std::string extension(Format f) { return f == Format::Csv ? "csv" : "jsonl"; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

Record to_record(const BoundReport& r) {
  Record out;
  out.id = r.id;
  out.params = {{"graph", r.graph}, {"L", r.L}, {"D", r.D}, {"beta", static_cast<double>(r.beta)},
                {"k", static_cast<double>(r.k)}, {"variant", r.variant}};
  for (const auto& [key, value] : r.extra) out.params.emplace_back(key, value);
  if (!r.note.empty()) out.params.emplace_back("note", r.note);
  out.value = r.value;
  out.bound = r.bound;
  out.verdict = to_string(r.verdict);
  out.margin = r.margin;
  return out;
}

void write_records(std::ostream& os, const std::vector<Record>& records, Format f) {
  if (f == Format::Csv) {
    os << "id,params,value,bound,verdict,margin\n";
    for (const Record& r : records) {
      std::string params;
      for (const auto& [key, value] : r.params) {
        if (!params.empty()) params += ';';
        params += key + "=" + param_text(value);
      }
      os << csv_field(r.id) << ',' << csv_field(params) << ',' << format_number(r.value) << ','
         << format_number(r.bound) << ',' << r.verdict << ',' << format_number(r.margin) << '\n';
    }
    return;
  }
  for (const Record& r : records) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = param_json(value);
    ordered_json j;
    j["id"] = r.id;
    j["params"] = std::move(params);
    j["value"] = number(r.value);
    j["bound"] = number(r.bound);
    j["verdict"] = r.verdict;
    j["margin"] = number(r.margin);
    os << j.dump() << '\n';
  }
}

void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
      os << '\n';
    }
    return;
  }
  std::vector<Record> rows;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Record rec;
    rec.id = t.id + "/" + std::to_string(r);
    for (std::size_t i = 0; i < t.columns.size() && i < t.rows[r].size(); ++i)
      rec.params.emplace_back(t.columns[i], t.rows[r][i]);
    rec.value = t.rows[r].size() > 1 ? t.rows[r][1] : std::nan("");
    rec.bound = std::nan("");
    rec.verdict = "row";
    rec.margin = std::nan("");
    rows.push_back(std::move(rec));
  }
  Record summary;
  summary.id = t.id;
  summary.params = {{"note", t.note}};
  summary.value = std::nan("");
  summary.bound = std::nan("");
  summary.verdict = to_string(t.verdict);
  summary.margin = t.margin;
  rows.push_back(std::move(summary));
  write_records(os, rows, f);
}

}  // namespace qglab
