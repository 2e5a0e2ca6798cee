#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmc::cli {

// Output failures; mapped to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits, enough to read the same double back.
std::string csv_number(double v);
// Six significant digits for terminal summaries.
std::string terminal_number(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header row plus one line per row, LF endings.
std::string to_csv(const Table& t);
// Array of {column: value} objects.
std::string to_json(const Table& t);
// Parses what to_csv wrote; throws IoError on malformed input.
Table parse_csv(const std::string& text);

// Writes to a sibling temporary file and renames it over the target.
void write_atomically(const std::filesystem::path& path, const std::string& content);

// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "CMC_OUTPUT_DIR";

// The explicit path if given, else default_name inside $CMC_OUTPUT_DIR, else
// empty (meaning standard output).
std::filesystem::path resolve_output(const std::string& explicit_path,
                                     const std::string& default_name);

}  // namespace cmc::cli
