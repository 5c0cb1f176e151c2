#include "risnoma/bench/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace risnoma::bench {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one record starting at `pos`; advances `pos` past the line end.
std::vector<std::string> split_record(const std::string& text, std::size_t& pos, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
      continue;
    }
    if (c == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else if (c == '\n') {
      fields.push_back(std::move(cur));
      return fields;
    } else if (c == '\r' && pos < text.size() && text[pos] == '\n') {
      continue;
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

std::string file_stem(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '.' || c == '=' || c == '_';
    out += ok ? c : '_';
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const SweepRow& r : rows) {
    out += quote(r.axis) + ',' + format_double(r.axis_value) + ',' + quote(r.variant) + ',' + quote(r.user) + ',' +
           quote(r.metric) + ',' + quote(r.engine) + ',' + format_double(r.value) + ',' +
           format_double(r.std_error) + ',' + quote(r.meta) + '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
  std::size_t pos = 0;
  std::size_t line_no = 1;
  const auto header = split_record(text, pos, line_no);
  std::string joined;
  for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
  if (joined != kCsvHeader) throw std::invalid_argument("csv line 1: unexpected header '" + joined + "'");

  std::vector<SweepRow> rows;
  while (pos < text.size()) {
    ++line_no;
    const auto f = split_record(text, pos, line_no);
    if (f.size() != 9) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 fields, got " +
                                  std::to_string(f.size()));
    }
    try {
      rows.push_back({f[0], parse_double(f[1]), f[2], f[3], f[4], f[5], parse_double(f[6]), parse_double(f[7]), f[8]});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << to_csv(rows);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<SweepRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_csv(ss.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> emit_plotdata(const std::vector<SweepRow>& rows,
                                                 const std::filesystem::path& dir) {
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  std::vector<Key> order;
  std::map<Key, std::string> body;
  for (const SweepRow& r : rows) {
    const Key k{r.metric, r.variant, r.user, r.engine};
    auto [it, inserted] = body.try_emplace(k, "# " + r.axis + " value std_error\n");
    if (inserted) order.push_back(k);
    it->second += format_double(r.axis_value) + ' ' + format_double(r.value) + ' ' + format_double(r.std_error) + '\n';
  }

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const Key& k : order) {
    const auto& [metric, variant, user, engine] = k;
    const auto path = dir / (file_stem(metric + "_" + variant + "_" + user + "_" + engine) + ".dat");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << body[k];
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
    written.push_back(path);
  }
  return written;
}

}  // namespace risnoma::bench
