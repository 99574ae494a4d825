#include "snd/core/demand_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "snd/core/errors.hpp"

namespace snd::core {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line_no, const std::string& what) {
  throw ValidationError(source + ":" + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& source, std::size_t line_no, const std::string& text) {
  if (text.empty()) fail(source, line_no, "empty numeric field");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(source, line_no, "bad number '" + text + "'");
  }
  if (used != text.size()) fail(source, line_no, "bad number '" + text + "'");
  return v;
}

}  // namespace

std::vector<DailyDemandRecord> read_daily_demand(std::istream& in,
                                                 const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line))
    throw ValidationError(source_name + ": empty file, expected a CSV header");
  const std::vector<std::string> header = split_csv_line(line);
  bool with_feet = false;
  if (header == std::vector<std::string>{"date", "commodity_id", "count"}) {
    with_feet = false;
  } else if (header == std::vector<std::string>{"date", "commodity_id", "count", "feet"}) {
    with_feet = true;
  } else {
    throw ValidationError(source_name +
                          ":1: header must be 'date,commodity_id,count[,feet]'");
  }

  std::vector<DailyDemandRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      fail(source_name, line_no,
           "expected " + std::to_string(header.size()) + " fields, got " +
               std::to_string(fields.size()));

    DailyDemandRecord rec;
    try {
      rec.date = parse_iso_date(fields[0]);
    } catch (const ValidationError& e) {
      fail(source_name, line_no, e.what());
    }
    const double id = parse_number(source_name, line_no, fields[1]);
    if (id < 0 || id != std::floor(id))
      fail(source_name, line_no, "commodity_id must be a non-negative integer");
    rec.commodity_id = static_cast<int>(id);

    double count = parse_number(source_name, line_no, fields[2]);
    if (count < 0.0) fail(source_name, line_no, "count must be non-negative");
    if (with_feet) {
      if (count != std::floor(count))
        fail(source_name, line_no, "box count must be an integer");
      const double feet = parse_number(source_name, line_no, fields[3]);
      if (feet == 20.0)
        count *= 0.5;  // two 20-foot boxes ride one 40-foot slot
      else if (feet != 40.0 && feet != 45.0 && feet != 48.0 && feet != 53.0)
        fail(source_name, line_no, "feet must be one of 20, 40, 45, 48, 53");
    } else {
      const double doubled = count * 2.0;
      if (std::abs(doubled - std::round(doubled)) > 1e-9)
        fail(source_name, line_no, "count must be a multiple of 0.5");
    }
    rec.count = count;
    records.push_back(rec);
  }
  return records;
}

std::vector<DailyDemandRecord> load_daily_demand(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open demand file '" + path + "'");
  return read_daily_demand(in, path);
}

void write_daily_demand(std::ostream& out, const std::vector<DailyDemandRecord>& records) {
  out << "date,commodity_id,count\n";
  char buf[64];
  for (const DailyDemandRecord& r : records) {
    if (r.count == std::floor(r.count))
      std::snprintf(buf, sizeof(buf), "%.0f", r.count);
    else
      std::snprintf(buf, sizeof(buf), "%.1f", r.count);
    out << format_iso_date(r.date) << ',' << r.commodity_id << ',' << buf << '\n';
  }
}

void save_daily_demand(const std::string& path, const std::vector<DailyDemandRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write demand file '" + path + "'");
  write_daily_demand(out, records);
  if (!out) throw IoError("failed writing demand file '" + path + "'");
}

}  // namespace snd::core
