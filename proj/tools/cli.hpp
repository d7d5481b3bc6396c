#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace purex::cli {

using Cell = std::variant<std::monostate, double, std::string>;

/// One machine-readable result table: run metadata plus named columns.
struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Doubles rendered with 12 significant digits, '.' decimal separator.
std::string format_value(double v);

void write_csv(const OutputRecord& rec, std::ostream& out);
void write_json(const OutputRecord& rec, std::ostream& out);

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgError = 2;
inline constexpr int kExitNonPurifiable = 3;

/// Parse and run one CLI invocation (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace purex::cli
