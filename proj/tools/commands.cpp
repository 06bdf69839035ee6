#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "homdil/io.hpp"
#include "homdil/json_util.hpp"
#include "homdil/report.hpp"

namespace homdil::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  std::uint64_t seed = 0;
  std::string system;
  std::string dilation;
  std::vector<std::string> dilations;
  std::string k1, k2;
  std::string lines_within;
  std::string example;
};

void indent_matrix(std::ostream& out, const std::string& name, const json& m) {
  std::istringstream lines(format(matrix_from_json(m, name)));
  bool first = true;
  for (std::string l; std::getline(lines, l);) {
    out << "  " << (first ? name : std::string(name.size(), ' ')) << " " << l << "\n";
    first = false;
  }
}

void print_dilation_text(std::ostream& out, const LinearSystem& sys, const json& doc) {
  out << "dim_w: " << doc["dim_w"] << "\n";
  out << "linearly minimal: " << (doc["linearly_minimal"].get<bool>() ? "yes" : "no") << "\n";
  out << "irreducible: " << (doc["irreducible"].get<bool>() ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < sys.dim_a(); ++i) indent_matrix(out, "pi(" + sys.algebra->label(i) + ")", doc["pi"][i]);
  indent_matrix(out, "S", doc["S"]);
  indent_matrix(out, "T", doc["T"]);
}

std::string span_of(const json& subspace) { return subspace["span"].get<std::string>(); }

int emit(std::ostream& out, const Options& opt, const json& doc, const std::function<void()>& text) {
  if (opt.json_output) {
    out << doc.dump(2) << "\n";
  } else {
    text();
  }
  return doc.value("ok", true) ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json_output, "Emit JSON instead of text");
  cmd->add_option("--seed", opt.seed, "Seed for randomized invertibility trials")->default_val(0);
}

void add_system(CLI::App* cmd, Options& opt) {
  cmd->add_option("--system", opt.system, "Linear system JSON file")->required()->check(CLI::ExistingFile);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"homdil: homomorphism dilation systems of linear maps on finite-dimensional algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* info = app.add_subcommand("info", "Summarize a linear system");
  auto* universal = app.add_subcommand("universal", "Construct the universal dilation");
  auto* canonical = app.add_subcommand("canonical", "Construct the canonical dilation");
  auto* principle = app.add_subcommand("principle", "Universal dilation reduced by its maximal invariant subspace");
  auto* verify = app.add_subcommand("verify", "Check a dilation against a system");
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two dilations");
  auto* classify = app.add_subcommand("classify", "Invariant subspaces of ker S_u and their strong isomorphism");
  auto* strong = app.add_subcommand("strong-iso", "Decide strong isomorphism of two invariant subspaces");
  auto* report = app.add_subcommand("report", "Run a worked example end to end");

  for (auto* cmd : {info, universal, canonical, principle, verify, equiv, classify, strong, report}) {
    add_common(cmd, opt);
  }
  for (auto* cmd : {info, universal, canonical, principle, verify, equiv, classify, strong}) add_system(cmd, opt);
  verify->add_option("--dilation", opt.dilation, "Dilation JSON file")->required()->check(CLI::ExistingFile);
  equiv->add_option("dilations", opt.dilations, "Two dilation JSON files")
      ->required()
      ->expected(2)
      ->check(CLI::ExistingFile);
  classify->add_option("--lines-within", opt.lines_within, "Subspace JSON file (default: M)")
      ->check(CLI::ExistingFile);
  strong->add_option("--k1", opt.k1, "Subspace JSON file")->required()->check(CLI::ExistingFile);
  strong->add_option("--k2", opt.k2, "Subspace JSON file")->required()->check(CLI::ExistingFile);
  std::string ids;
  for (const auto& id : report_ids()) ids += (ids.empty() ? "" : ", ") + id;
  report->add_option("example", opt.example, "Example id (" + ids + ") or all")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed()) {
      std::vector<std::string> which;
      if (opt.example == "all") {
        which = report_ids();
      } else {
        which.push_back(opt.example);
      }
      bool ok = true;
      json docs = json::array();
      for (const auto& id : which) {
        const Report r = cmd_report(id, opt.seed);
        ok = ok && r.ok();
        if (opt.json_output) {
          docs.push_back(to_json(r));
        } else {
          out << render_text(r);
        }
      }
      if (opt.json_output) out << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
      return ok ? 0 : 1;
    }

    const LinearSystem sys = system_from_json(load_json_file(opt.system));

    if (info->parsed()) {
      const json doc = info_document(sys);
      return emit(out, opt, doc, [&] {
        out << "algebra: " << doc["algebra"]["name"].get<std::string>() << " (dim " << doc["algebra"]["dim"] << ")\n";
        out << "dim_v: " << doc["dim_v"] << "\n";
        out << "universal dilation dim: " << doc["universal_dim"] << "\n";
        out << "canonical dilation dim: " << doc["canonical_dim"] << "\n";
        out << "ker S_u dim: " << doc["ker_S_dim"] << "\n";
        out << "M: " << span_of(doc["M_basis"]) << "\n";
        out << "largest left ideal in ker(phi): " << span_of(doc["largest_left_ideal_in_kernel"]) << "\n";
        out << "unique dilation class: " << (doc["unique_dilation_class"].get<bool>() ? "yes" : "no") << "\n";
      });
    }
    if (universal->parsed() || canonical->parsed() || principle->parsed()) {
      const DilationSystem d = universal->parsed()   ? universal_dilation(sys)
                               : canonical->parsed() ? canonical_dilation(sys)
                                                     : principle_dilation(sys);
      const json doc = dilation_to_json(d);
      return emit(out, opt, doc, [&] { print_dilation_text(out, sys, doc); });
    }
    if (verify->parsed()) {
      const DilationSystem d = dilation_from_json(load_json_file(opt.dilation), sys);
      const json doc = verify_document(sys, d);
      return emit(out, opt, doc, [&] {
        if (!doc["valid"].get<bool>()) {
          out << "INVALID: " << doc["errors"].get<std::string>() << "\n";
          return;
        }
        out << "VALID dilation of dimension " << doc["dim_w"] << "\n";
        out << "linearly minimal: " << (doc["linearly_minimal"].get<bool>() ? "yes" : "no") << "\n";
        out << "irreducible: " << (doc["irreducible"].get<bool>() ? "yes" : "no") << "\n";
        out << "principle: " << (doc["principle"].get<bool>() ? "yes" : "no") << "\n";
        if (doc.contains("reduced_subspace")) out << "reduced subspace: " << span_of(doc["reduced_subspace"]) << "\n";
      });
    }
    if (equiv->parsed()) {
      const DilationSystem d1 = dilation_from_json(load_json_file(opt.dilations[0]), sys);
      const DilationSystem d2 = dilation_from_json(load_json_file(opt.dilations[1]), sys);
      const json doc = equiv_document(sys, d1, d2);
      return emit(out, opt, doc, [&] {
        if (!doc["ok"].get<bool>()) {
          out << "ERROR: " << doc["error"].get<std::string>() << "\n";
          return;
        }
        out << doc["verdict"].get<std::string>() << "\n";
        if (doc.contains("R")) {
          indent_matrix(out, "R", doc["R"]);
        } else {
          out << "  K1 = " << span_of(doc["K1"]) << "\n  K2 = " << span_of(doc["K2"]) << "\n";
        }
      });
    }
    if (classify->parsed()) {
      std::optional<Subspace> within;
      if (!opt.lines_within.empty()) within = subspace_from_json(load_json_file(opt.lines_within), "lines-within");
      const json doc = classification_document(sys, within, opt.seed);
      return emit(out, opt, doc, [&] {
        out << "ker S_u dim: " << doc["ker_S_dim"] << "\n";
        out << "M: " << doc["M"].get<std::string>() << "\n";
        out << "character lines in " << span_of(doc["lines_within"]) << ":\n";
        for (const auto& l : doc["character_lines"]) {
          out << "  " << l["form"].get<std::string>() << " on " << span_of(l["eigenspace"]) << "\n";
        }
        for (const auto& u : doc["unresolved"]) {
          out << "  unresolved: " << u["factor"].get<std::string>() << " for " << u["generator"].get<std::string>()
              << " on " << span_of(u["subspace"]) << "\n";
        }
        out << "candidate classes:\n";
        const auto& table = doc["strong_isomorphism_matrix"];
        for (std::size_t i = 0; i < doc["classes"].size(); ++i) {
          const auto& c = doc["classes"][i];
          out << "  [" << i << "] K = " << c["K"].get<std::string>() << ", dilation dim " << c["dilation_dim"]
              << ", strongly isomorphic to:";
          for (std::size_t j = 0; j < table[i].size(); ++j) {
            if (j != i && table[i][j] == "yes") out << " [" << j << "]";
            if (table[i][j] == "unknown") out << " [" << j << "]?";
          }
          out << "\n";
        }
      });
    }
    if (strong->parsed()) {
      const Subspace k1 = subspace_from_json(load_json_file(opt.k1), "k1");
      const Subspace k2 = subspace_from_json(load_json_file(opt.k2), "k2");
      const json doc = strong_iso_document(sys, k1, k2, opt.seed);
      return emit(out, opt, doc, [&] {
        out << "strongly isomorphic: " << doc["verdict"].get<std::string>() << " (" << doc["reason"].get<std::string>()
            << ")\n";
        if (doc.contains("R")) indent_matrix(out, "R", doc["R"]);
      });
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace homdil::cli
