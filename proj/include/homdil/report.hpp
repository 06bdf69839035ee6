#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homdil/classify.hpp"
#include "homdil/dilation.hpp"
#include "homdil/linsys.hpp"

namespace homdil {

/// pass/fail: a claim the computation confirms or refutes where the
/// definitions and displayed matrices agree. discrepancy: the computation
/// contradicts a sentence in the source text. info: experiment output with
/// nothing to compare against.
enum class Status { pass, fail, discrepancy, info };
std::string to_string(Status s);

struct ReportEntry {
  std::string id;
  Status status = Status::info;
  std::string claim;
  std::string finding;
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  std::string example;
  std::string title;
  std::uint64_t seed = 0;
  std::vector<ReportEntry> entries;

  /// No entry has status fail.
  bool ok() const;
  std::size_t count(Status s) const;
  const ReportEntry* find(std::string_view id) const;
};

std::vector<std::string> report_ids();
/// Throws std::invalid_argument for an unknown id.
Report cmd_report(std::string_view example_id, std::uint64_t seed = 0);

std::string render_text(const Report& r);
nlohmann::json to_json(const Report& r);

/// "{0}" or "span{e2, e1 - e3}" with 1-based coordinates.
std::string describe(const Subspace& s);

/// Bundled example inputs, by path relative to data/examples.
LinearSystem bundled_system(std::string_view path);
DilationSystem bundled_dilation(std::string_view path, const LinearSystem& sys);

/// Documents behind the CLI commands. Each carries "ok": false exactly when
/// the command should exit nonzero.
nlohmann::json info_document(const LinearSystem& sys);
nlohmann::json verify_document(const LinearSystem& sys, const DilationSystem& d);
nlohmann::json equiv_document(const LinearSystem& sys, const DilationSystem& d1, const DilationSystem& d2);
nlohmann::json strong_iso_document(const LinearSystem& sys, const Subspace& k1, const Subspace& k2,
                                   std::uint64_t seed);
/// ker S_u, M, character lines inside `within` (default M), the candidate
/// invariant subspaces {0}, M, eigenspaces, basis lines of eigenspaces and
/// closures of M's basis vectors, and their pairwise strong-isomorphism verdicts.
nlohmann::json classification_document(const LinearSystem& sys, const std::optional<Subspace>& within,
                                       std::uint64_t seed);

}  // namespace homdil
