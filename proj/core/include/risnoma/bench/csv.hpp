#pragma once

#include "risnoma/bench/sweep.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace risnoma::bench {

inline constexpr const char* kCsvHeader = "axis,axis_value,variant,user,metric,engine,value,std_error,meta";

/// Shortest decimal that parses back to the same double; "nan", "inf",
/// "-inf" for the non-finite values.
std::string format_double(double v);

/// Inverse of format_double. Throws std::invalid_argument on junk.
double parse_double(const std::string& s);

/// Header line plus one line per row, LF endings. Fields containing a comma,
/// quote or newline are quoted.
std::string to_csv(const std::vector<SweepRow>& rows);

/// Parses text produced by to_csv. Throws std::invalid_argument with a line
/// number on malformed input or a wrong header.
std::vector<SweepRow> parse_csv(const std::string& text);

/// Writes to_csv(rows) to `path`, creating parent directories. I/O failures
/// throw std::runtime_error naming the path.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

std::vector<SweepRow> read_csv(const std::filesystem::path& path);

/// One whitespace-separated "axis_value value std_error" file per curve,
/// i.e. per (metric, variant, user, engine), in first-appearance order.
/// Returns the paths written.
std::vector<std::filesystem::path> emit_plotdata(const std::vector<SweepRow>& rows,
                                                 const std::filesystem::path& dir);

}  // namespace risnoma::bench
