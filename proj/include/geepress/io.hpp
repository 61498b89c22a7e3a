#ifndef GEEPRESS_IO_HPP
#define GEEPRESS_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "geepress/data.hpp"

namespace geepress {

/// Reads a long-format dataset: header `id,time,y,x1,...,xp`, one row per
/// observation.  Rows are grouped by id (first-appearance order) and sorted
/// by time within a cluster; duplicate times within a cluster are an error.
/// All structural problems throw InputError naming the offending row.
LongitudinalDataset read_long_csv(std::istream& in);
LongitudinalDataset read_long_csv_file(const std::string& path);

/// Writes the same long format.  `precision` is the significant-digit count
/// for numeric fields; the default round-trips doubles exactly.
void write_long_csv(std::ostream& out, const LongitudinalDataset& data,
                    int precision = 17);
void write_long_csv_file(const std::string& path,
                         const LongitudinalDataset& data, int precision = 17);

/// RFC-4180 quoting: wraps the field in quotes (doubling embedded quotes)
/// only when it contains a comma, quote, or line break.
std::string csv_field(const std::string& value);

/// Splits one CSV record honoring RFC-4180 quoting.
std::vector<std::string> split_csv_record(const std::string& line);

/// `%.*g` formatting with a fixed significant-digit count.
std::string format_g(double value, int precision);

/// Parses a `key = value` config file with `#` comments.  Unknown keys are
/// the caller's problem; duplicate keys keep the last value.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace geepress

#endif  // GEEPRESS_IO_HPP
