#include "geepress/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& field, int row, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    std::ostringstream msg;
    msg << "row " << row << ": cannot parse " << what << " '" << field << "'";
    throw InputError(msg.str());
  }
}

}  // namespace

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string format_g(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

LongitudinalDataset read_long_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError("empty input: expected a header row id,time,y,x1,...");
  }
  const std::vector<std::string> header = split_csv_record(line);
  if (header.size() < 4 || trim(header[0]) != "id" ||
      trim(header[1]) != "time" || trim(header[2]) != "y") {
    throw InputError(
        "header must be id,time,y,x1,...,xp (got '" + trim(line) + "')");
  }
  const int p = static_cast<int>(header.size()) - 3;
  for (int j = 0; j < p; ++j) {
    const std::string expected = "x" + std::to_string(j + 1);
    if (trim(header[3 + j]) != expected) {
      throw InputError("header covariate column " + std::to_string(j + 4) +
                       " must be named " + expected);
    }
  }

  struct Row {
    double time, y;
    Eigen::VectorXd x;
  };
  std::vector<std::string> order;           // ids in first appearance order
  std::map<std::string, std::vector<Row>> rows;
  int row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_record(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << row_no << ": expected " << header.size()
          << " fields, got " << fields.size();
      throw InputError(msg.str());
    }
    const std::string id = trim(fields[0]);
    if (id.empty()) {
      throw InputError("row " + std::to_string(row_no) + ": empty id");
    }
    Row r;
    r.time = parse_double(trim(fields[1]), row_no, "time");
    r.y = parse_double(trim(fields[2]), row_no, "response");
    r.x.resize(p);
    for (int j = 0; j < p; ++j) {
      r.x[j] = parse_double(trim(fields[3 + j]), row_no, "covariate");
    }
    if (rows.find(id) == rows.end()) order.push_back(id);
    rows[id].push_back(std::move(r));
  }
  if (order.empty()) {
    throw InputError("no data rows after the header");
  }

  LongitudinalDataset data;
  data.p = p;
  data.clusters.reserve(order.size());
  for (const std::string& id : order) {
    std::vector<Row>& rr = rows[id];
    std::stable_sort(rr.begin(), rr.end(),
                     [](const Row& a, const Row& b) { return a.time < b.time; });
    for (std::size_t t = 1; t < rr.size(); ++t) {
      if (rr[t].time == rr[t - 1].time) {
        std::ostringstream msg;
        msg << "cluster '" << id << "' has duplicate time " << rr[t].time;
        throw InputError(msg.str());
      }
    }
    Cluster c;
    c.id = id;
    const int n = static_cast<int>(rr.size());
    c.y.resize(n);
    c.X.resize(n, p);
    c.waves.resize(n);
    for (int t = 0; t < n; ++t) {
      c.y[t] = rr[t].y;
      c.X.row(t) = rr[t].x.transpose();
      c.waves[t] = rr[t].time;
    }
    data.clusters.push_back(std::move(c));
  }
  data.rebuild_wave_grid();
  return data;
}

LongitudinalDataset read_long_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open data file '" + path + "'");
  }
  return read_long_csv(in);
}

void write_long_csv(std::ostream& out, const LongitudinalDataset& data,
                    int precision) {
  out << "id,time,y";
  for (int j = 1; j <= data.p; ++j) out << ",x" << j;
  out << "\n";
  for (const auto& c : data.clusters) {
    for (int t = 0; t < c.size(); ++t) {
      out << csv_field(c.id) << ',' << format_g(c.waves[t], precision) << ','
          << format_g(c.y[t], precision);
      for (int j = 0; j < data.p; ++j) {
        out << ',' << format_g(c.X(t, j), precision);
      }
      out << "\n";
    }
  }
}

void write_long_csv_file(const std::string& path,
                         const LongitudinalDataset& data, int precision) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open output file '" + path + "'");
  }
  write_long_csv(out, data, precision);
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(row) +
                       ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw InputError("config line " + std::to_string(row) + ": empty key");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

}  // namespace geepress
