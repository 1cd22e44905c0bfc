#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qglab/verify.hpp"

namespace qglab {

using ParamValue = std::variant<double, std::string>;

/// One output row: the common shape of every CSV and JSON-lines result.
struct Record {
  std::string id;
  std::vector<std::pair<std::string, ParamValue>> params;
  double value = 0.0;
  double bound = 0.0;
  std::string verdict;
  double margin = 0.0;
};

enum class Format { Csv, Json };
Format parse_format(const std::string& name);
std::string extension(Format f);

/// 15 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);

Record to_record(const BoundReport& r);

/// CSV: header `id,params,value,bound,verdict,margin`, params as `k=v;k=v`.
void write_records(std::ostream& os, const std::vector<Record>& records, Format f);

/// CSV: the table's own columns. JSON: one record per row with the row in
/// `params`, followed by a summary record.
void write_table(std::ostream& os, const Table& t, Format f);

}  // namespace qglab
