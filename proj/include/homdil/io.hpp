#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homdil/dilation.hpp"
#include "homdil/linsys.hpp"

namespace homdil {

/// {"builtin": "full_matrix"|"upper_triangular", "n"} or
/// {"custom": {"dim", "unit", "structure_constants": [[i, j, k, "p/q"], ...], "labels"?}}.
AlgebraPtr algebra_from_json(const nlohmann::json& j, const std::string& where = "algebra");

/// {"algebra", "dim_v", "phi": [matrix per basis element]} or {"builtin", "params"}.
LinearSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const LinearSystem& sys);

/// {"pi": [matrix per basis element], "S", "T"}. Instead of "pi", a display
/// form is accepted: "pi_symbolic" is one matrix of linear forms such as
/// "a", "-2b", "a+1/2d", with "symbols" mapping each symbol to a basis label.
DilationSystem dilation_from_json(const nlohmann::json& j, const LinearSystem& sys);
/// The input shape plus "dim_w", "linearly_minimal", "irreducible".
nlohmann::json dilation_to_json(const DilationSystem& d);

/// Expands a symbolic display matrix into one matrix per basis element.
/// Entries that reference unknown symbols are reported through `unparsed`
/// (row, col, text) when it is non-null, and throw otherwise.
struct UnparsedEntry {
  std::size_t row = 0, col = 0;
  std::string text;
};
std::vector<Matrix> expand_symbolic(const nlohmann::json& display, const nlohmann::json& symbols, const Algebra& alg,
                                    const std::string& where, std::vector<UnparsedEntry>* unparsed = nullptr);

/// Reads and parses a JSON file; errors carry the path and parser position.
nlohmann::json load_json_file(const std::filesystem::path& path);
/// Parses JSON text; `name` labels diagnostics.
nlohmann::json parse_json_text(std::string_view text, const std::string& name);

/// Worked-example input files compiled into the binary (paths relative to data/examples).
std::string_view example_file(std::string_view path);
std::vector<std::string> example_files();

}  // namespace homdil
