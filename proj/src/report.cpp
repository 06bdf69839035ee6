#include "homdil/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "homdil/io.hpp"
#include "homdil/json_util.hpp"

namespace homdil {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::discrepancy: return "DISCREPANCY";
    case Status::info: return "INFO";
  }
  return "INFO";
}

bool Report::ok() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

const ReportEntry* Report::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::string describe(const Subspace& s) {
  if (s.is_zero()) return "{0}";
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r > 0) out += ", ";
    bool first = true;
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
      Rational v = s.basis()(r, c);
      if (is_zero(v)) continue;
      if (first) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (v < 0) v = -v;
      if (v != 1) out += to_string(v) + "*";
      out += "e" + std::to_string(c + 1);
      first = false;
    }
  }
  return out + "}";
}

LinearSystem bundled_system(std::string_view path) {
  return system_from_json(parse_json_text(example_file(path), std::string(path)));
}

DilationSystem bundled_dilation(std::string_view path, const LinearSystem& sys) {
  return dilation_from_json(parse_json_text(example_file(path), std::string(path)), sys);
}

namespace {

json subspace_json(const Subspace& s) {
  json j = to_json(s);
  j["span"] = describe(s);
  return j;
}

Subspace coordinate_span(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> idx;
  for (auto i : one_based) idx.push_back(i - 1);
  return Subspace::coordinate(n, idx);
}

Subspace line(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v(n);
  for (auto [i, c] : terms) v[i - 1] = c;
  const std::vector<Vector> vs{v};
  return Subspace::span(n, vs);
}

/// Entry letters a, b, c, ... in row-major order over the entries an
/// algebra of matrix units occupies, as the worked examples write A.
std::vector<std::string> entry_symbols(const Algebra& alg) {
  std::vector<std::string> out(alg.dim());
  const auto& layout = alg.matrix_units();
  if (!layout || alg.dim() > 26) return alg.labels();
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> order;
  for (std::size_t i = 0; i < alg.dim(); ++i) order.push_back({layout->units[i], i});
  std::sort(order.begin(), order.end());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r].second] = std::string(1, static_cast<char>('a' + r));
  return out;
}

std::string character_form(const Algebra& alg, const Vector& character) {
  const auto names = entry_symbols(alg);
  // A = sum_i x_i g_i acts by sum_i character_i x_i.
  std::string out;
  std::vector<std::size_t> idx(alg.dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return names[x] < names[y]; });
  for (auto i : idx) {
    Rational v = character[i];
    if (is_zero(v)) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (v < 0) v = -v;
    if (v != 1) out += to_string(v) + "*";
    out += names[i];
  }
  return "A -> " + (out.empty() ? std::string("0") : out);
}

json character_lines_json(const Algebra& alg, const CharacterLines& cl) {
  json lines = json::array();
  for (const auto& l : cl.lines) {
    lines.push_back({{"character", to_json(l.character)},
                     {"form", character_form(alg, l.character)},
                     {"eigenspace", subspace_json(l.eigenspace)}});
  }
  json unresolved = json::array();
  for (const auto& u : cl.unresolved) {
    unresolved.push_back({{"generator", alg.label(u.generator)},
                          {"factor", format(u.factor)},
                          {"subspace", subspace_json(u.subspace)}});
  }
  return {{"lines", lines}, {"unresolved", unresolved}};
}

json dilation_summary(const DilationSystem& d) {
  json pi = json::array();
  for (const auto& m : d.rep.pi) pi.push_back(to_json(m));
  return {{"dim_w", d.dim_w()}, {"pi", pi}, {"S", to_json(d.s)}, {"T", to_json(d.t)}};
}

std::vector<Subspace> candidate_subspaces(const DilationSystem& u, const Subspace& m, const CharacterLines& cl) {
  std::vector<Subspace> out{Subspace::zero(u.dim_w()), m};
  for (const auto& l : cl.lines) {
    out.push_back(l.eigenspace);
    for (const auto& v : l.eigenspace.basis_vectors()) {
      const std::vector<Vector> vs{v};
      out.push_back(Subspace::span(u.dim_w(), vs));
    }
  }
  for (const auto& v : m.basis_vectors()) {
    const std::vector<Vector> vs{v};
    out.push_back(invariant_closure(u.rep, vs));
  }
  std::vector<Subspace> unique;
  for (auto& s : out) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(std::move(s));
  }
  std::stable_sort(unique.begin(), unique.end(),
                   [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  return unique;
}

json strong_iso_matrix(const std::vector<Subspace>& ks, const LinearSystem& sys, std::uint64_t seed) {
  const std::size_t n = ks.size();
  std::vector<std::vector<std::string>> table(n, std::vector<std::string>(n, "yes"));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = to_string(are_strongly_isomorphic(ks[i], ks[j], sys, seed).verdict);
      table[i][j] = table[j][i] = v;
    }
  return table;
}

// "A ~ B; C" from a verdict table: connected components of the "yes" relation.
std::string strong_iso_classes(const json& labels, const json& table) {
  const std::size_t n = labels.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> group{i};
    seen[i] = true;
    for (std::size_t g = 0; g < group.size(); ++g)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && table[group[g]][j] == "yes") {
          seen[j] = true;
          group.push_back(j);
        }
    std::sort(group.begin(), group.end());
    std::string part;
    for (auto k : group) part += (part.empty() ? "" : " ~ ") + labels[k].get<std::string>();
    out += (out.empty() ? "" : "; ") + part;
  }
  return out;
}

/// Reads entries such as "a3" or "gamma1" as params[name][index - 1].
Matrix instantiate(const json& tmpl, const json& params, const std::string& where) {
  const std::size_t rows = tmpl.size();
  const std::size_t cols = rows ? tmpl[0].size() : 0;
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string text = tmpl[r][c].get<std::string>();
      const auto split = text.find_first_of("0123456789");
      if (split == 0) {
        out(r, c) = parse_rational(text);
        continue;
      }
      if (split == std::string::npos) throw std::invalid_argument(where + ": bad template entry " + text);
      const std::string name = text.substr(0, split);
      const std::size_t index = std::stoul(text.substr(split));
      if (!params.contains(name) || index == 0 || index > params[name].size()) {
        throw std::invalid_argument(where + ": no parameter for " + text);
      }
      out(r, c) = rational_from_json(params[name][index - 1], where + "." + text);
    }
  }
  return out;
}

class Builder {
 public:
  explicit Builder(Report& r) : report_(r) {}

  void add(std::string id, Status s, std::string claim, std::string finding, json data = json::object()) {
    report_.entries.push_back({std::move(id), s, std::move(claim), std::move(finding), std::move(data)});
  }
  /// Definitions and displays: pass or fail.
  bool expect(std::string id, bool ok, std::string claim, std::string finding, json data = json::object()) {
    add(std::move(id), ok ? Status::pass : Status::fail, std::move(claim), std::move(finding), std::move(data));
    return ok;
  }
  /// Prose claims: pass or discrepancy.
  bool prose(std::string id, bool agrees, std::string claim, std::string finding, json data = json::object()) {
    add(std::move(id), agrees ? Status::pass : Status::discrepancy, std::move(claim), std::move(finding),
        std::move(data));
    return agrees;
  }
  void info(std::string id, std::string claim, std::string finding, json data = json::object()) {
    add(std::move(id), Status::info, std::move(claim), std::move(finding), std::move(data));
  }

  /// validates / linearly minimal / (ir)reducible entries; true when usable for classification.
  bool dilation(const std::string& prefix, const std::string& name, const DilationSystem& d, const LinearSystem& sys,
                std::optional<bool> irreducible = std::nullopt) {
    const Check c = validate_dilation(d, sys);
    expect(prefix + ".valid", c.ok, name + " is a homomorphism dilation of the system",
           c.ok ? "S pi(g) T = phi(g) on every basis element; T injective; S surjective" : c.message);
    if (!c.ok) return false;
    const bool minimal = is_linearly_minimal(d);
    expect(prefix + ".linearly_minimal", minimal, name + " is linearly minimal",
           "rank of the spanning map is " + std::to_string(rank(spanning_map(d))) + " of dim_w " +
               std::to_string(d.dim_w()));
    if (irreducible) {
      const bool irr = is_irreducible(d);
      expect(prefix + (*irreducible ? ".irreducible" : ".reducible"), irr == *irreducible,
             name + (*irreducible ? " is irreducible" : " is reducible"),
             irr ? "ker S contains no nonzero invariant subspace"
                 : "maximal invariant subspace of ker S is " +
                       describe(maximal_invariant_subspace_in_kernel(d.rep, d.s)));
    }
    return minimal;
  }

  void equivalent(const std::string& id, const std::string& claim, const DilationSystem& d1, const DilationSystem& d2,
                  const LinearSystem& sys) {
    const auto w = are_equivalent(d1, d2, sys);
    json data = json::object();
    std::string finding = "reduced subspaces differ";
    if (w) {
      data["R"] = to_json(w->r);
      finding = "witness R with R T1 = T2, S2 R = S1, R pi1 = pi2 R";
    }
    expect(id, w.has_value(), claim, finding, data);
  }

  /// Exact equality of a constructed system with a display.
  void matches(const std::string& id, const std::string& claim, const DilationSystem& built,
               const DilationSystem& shown) {
    std::vector<std::string> diffs;
    if (built.rep.pi != shown.rep.pi) diffs.push_back("pi");
    if (built.s != shown.s) diffs.push_back("S");
    if (built.t != shown.t) diffs.push_back("T");
    std::string finding = "pi, S and T agree entry for entry";
    if (!diffs.empty()) {
      finding = "differs in";
      for (const auto& d : diffs) finding += " " + d;
    }
    expect(id, diffs.empty(), claim, finding, {{"constructed", dilation_summary(built)}});
  }

 private:
  Report& report_;
};

// Systems in the fixed algebra-major basis, seen in the vector-major layout some displays use.
Matrix display_permutation(const LinearSystem& sys) { return tensor_permutation(sys.dim_a(), sys.dim_v); }

void report_4_4(Builder& b, std::uint64_t) {
  const auto sys = bundled_system("4.4/system.json");
  const auto u = universal_dilation(sys);
  const auto shown = bundled_dilation("4.4/displayed.json", sys);
  b.expect("universal.dim", u.dim_w() == 4, "the universal dilation acts on Q^4",
           "dim_w = " + std::to_string(u.dim_w()));
  b.expect("universal.pi", u.rep.pi == shown.rep.pi, "displayed pi(A) = diag(A, A) is the universal representation",
           u.rep.pi == shown.rep.pi ? "equal in the column-major basis E11, E21, E12, E22" : "representations differ");
  if (b.dilation("displayed", "displayed (pi, S, T) with S = (1/2, -1/2, 1/2, 1/2)", shown, sys, true)) {
    b.equivalent("displayed.equivalent_universal", "displayed system is equivalent to the constructed universal",
                 shown, u, sys);
  }
  const Subspace m = maximal_invariant_subspace(u.rep, kernel(u.s));
  b.expect("M", m.is_zero(), "no nonzero pi_u-invariant subspace in ker S_u", "M = " + describe(m),
           {{"M", subspace_json(m)}});
  const Subspace ideal = largest_left_ideal_in_kernel(sys);
  b.prose("left_ideal", ideal.is_zero(), "ker(phi) contains no proper left ideal",
          "largest left ideal in ker(phi) = " + describe(ideal));
  b.expect("unique_class", has_unique_dilation_class(sys), "only one class of linearly minimal dilations",
           "has_unique_dilation_class = true");
  const auto c = canonical_dilation(sys);
  b.expect("canonical.dim", c.dim_w() == 4, "the canonical dilation is 4-dimensional",
           "dim_w = " + std::to_string(c.dim_w()));
  b.equivalent("canonical.equivalent_universal", "universal and canonical dilations coincide up to equivalence", c, u,
               sys);
}

void report_4_5i(Builder& b, std::uint64_t seed) {
  const auto sys = bundled_system("4.5i/system.json");
  const auto u = universal_dilation(sys);
  const auto c = canonical_dilation(sys);
  b.expect("universal.dim", u.dim_w() == 3, "universal dilation on Q^3", "dim_w = " + std::to_string(u.dim_w()));
  b.matches("universal.display", "constructed (pi_u, S_u, T_u) equals the display", u,
            bundled_dilation("4.5i/universal.json", sys));
  b.expect("canonical.dim", c.dim_w() == 2, "canonical dilation on Q^2", "dim_w = " + std::to_string(c.dim_w()));
  b.matches("canonical.display", "constructed (pi_c, S_c, T_c) equals the display", c,
            bundled_dilation("4.5i/canonical.json", sys));
  const Subspace ker = kernel(u.s);
  b.expect("ker_S", ker == Subspace::span_rows(3, Matrix{{1, 0, -1}, {0, 1, 0}}),
           "ker S_u = span{e2, e1 - e3}", "ker S_u = " + describe(ker));
  const Subspace m = maximal_invariant_subspace(u.rep, ker);
  b.expect("M", m == coordinate_span(3, {2}), "maximal invariant subspace of ker S_u is span{e2}",
           "M = " + describe(m), {{"M", subspace_json(m)}});
  const auto cl = character_lines(u.rep, m);
  const bool covered = cl.unresolved.empty() && cl.lines.size() == 1 && cl.lines[0].eigenspace == m;
  b.expect("invariant_subspaces", covered && m.dim() == 1,
           "the only pi_u-invariant subspaces of ker S_u are {0} and span{e2}",
           "every invariant subspace of ker S_u lies in M = " + describe(m) +
               "; character lines inside M: " + std::to_string(cl.lines.size()),
           character_lines_json(*sys.algebra, cl));
  const bool two = reduced_subspace(u, sys).is_zero() && reduced_subspace(c, sys) == m;
  b.prose("two_classes", two && m.dim() == 1, "these are the only two linearly minimal dilations",
          "reduced subspaces: universal {0}, canonical " + describe(reduced_subspace(c, sys)));
  b.expect("unique_class", !has_unique_dilation_class(sys), "universal and canonical are inequivalent",
           "has_unique_dilation_class = false");
  b.equivalent("canonical.equivalent_principle", "canonical dilation is equivalent to universal reduced by M", c,
               principle_dilation(sys), sys);
  const auto v = are_strongly_isomorphic(Subspace::zero(3), m, sys, seed);
  b.expect("strong_iso", v.verdict == Verdict::no, "{0} and span{e2} are not strongly isomorphic",
           to_string(v.verdict) + ": " + v.reason);
}

void report_4_5ii(Builder& b, std::uint64_t seed) {
  const auto sys = bundled_system("4.5ii/system.json");
  const auto u = universal_dilation(sys);
  const auto c = canonical_dilation(sys);
  constexpr std::size_t n = 6;
  b.expect("universal.dim", u.dim_w() == n, "universal dilation on Q^6", "dim_w = " + std::to_string(u.dim_w()));
  b.matches("universal.display", "constructed (pi_u, S_u, T_u) equals the display", u,
            bundled_dilation("4.5ii/universal.json", sys));
  b.expect("canonical.dim", c.dim_w() == 3, "canonical dilation on Q^3", "dim_w = " + std::to_string(c.dim_w()));
  b.matches("canonical.display", "constructed (pi_c, S_c, T_c) equals the display", c,
            bundled_dilation("4.5ii/canonical.json", sys));

  const Subspace ker = kernel(u.s);
  const Subspace e245 = coordinate_span(n, {2, 4, 5});
  b.prose("ker_S", ker == e245, "ker S_u = span{e2, e4, e5}",
          "ker S_u = " + describe(ker) + " has dimension " + std::to_string(ker.dim()) +
              " (S_u has rank 1); span{e2, e4, e5} is the maximal invariant subspace, not the kernel",
          {{"ker_S", subspace_json(ker)}});
  const Subspace m = maximal_invariant_subspace(u.rep, ker);
  const Subspace e24 = coordinate_span(n, {2, 4});
  b.prose("M.stated", m == e24, "the maximal pi_u-invariant subspace is span{e2, e4}",
          "computed M = " + describe(m) + " (dimension " + std::to_string(m.dim()) +
              "), consistent with dim W_c = 6 - 3",
          {{"M", subspace_json(m)}});
  b.expect("M", m.dim() == 3 && m == maximal_invariant_subspace_in_kernel(u.rep, u.s),
           "maximal invariant subspace has dimension 3 (fixed point and joint-kernel formula agree)",
           "M = " + describe(m));
  b.equivalent("quotient.equivalent_canonical", "universal reduced by M is equivalent to the displayed canonical",
               reduce(u, m), bundled_dilation("4.5ii/canonical.json", sys), sys);

  const struct {
    const char* file;
    const char* name;
    Subspace k;
  } shown[] = {{"4.5ii/pi4.json", "pi4", e24},
               {"4.5ii/pi5_1.json", "pi5_1", coordinate_span(n, {2})},
               {"4.5ii/pi5_2.json", "pi5_2", coordinate_span(n, {4})}};
  std::vector<DilationSystem> systems;
  for (const auto& s : shown) {
    const auto d = bundled_dilation(s.file, sys);
    systems.push_back(d);
    if (!b.dilation(s.name, std::string("displayed ") + s.name, d, sys)) continue;
    const Subspace k = reduced_subspace(d, sys);
    b.expect(std::string(s.name) + ".reduced_subspace", k == s.k,
             std::string(s.name) + " has reduced subspace " + describe(s.k), "computed " + describe(k));
  }
  if (validate_dilation(systems[1], sys) && validate_dilation(systems[2], sys)) {
    const auto w = are_equivalent(systems[1], systems[2], sys);
    b.expect("pi5.inequivalent", !w, "pi5_1 and pi5_2 are inequivalent",
             w ? "witness found" : "reduced subspaces span{e2} and span{e4} differ");
  }

  const auto cl = character_lines(u.rep, m);
  bool line24 = false;
  for (const auto& l : cl.lines) line24 = line24 || l.eigenspace == e24;
  b.prose("lines_in_e2_e4", line24, "every one-dimensional subspace of span{e2, e4} is pi_u-invariant",
          line24 ? "span{e2, e4} is a character eigenspace" : "span{e2, e4} is not a character eigenspace",
          character_lines_json(*sys.algebra, cl));

  // 2-dimensional invariant subspaces of M give the 4-dimensional classes.
  const auto candidates = candidate_subspaces(u, m, cl);
  std::vector<Subspace> planes;
  for (const auto& k : candidates)
    if (k.dim() == 2 && reduced_subspace(reduce(u, k), sys) == k) planes.push_back(k);
  json plane_json = json::array();
  std::string listed;
  for (const auto& p : planes) {
    plane_json.push_back(subspace_json(p));
    listed += (listed.empty() ? "" : ", ") + describe(p);
  }
  b.prose("four_dim_classes", planes.size() == 1, "only one equivalence class of 4-dimensional dilations",
          std::to_string(planes.size()) + " distinct 2-dimensional invariant subspaces of ker S_u: " + listed +
              "; each is the reduced subspace of its own 4-dimensional dilation",
          {{"K", plane_json}});

  std::vector<Subspace> lines;
  for (auto [alpha, beta] : {std::pair{1L, 0L}, {0L, 1L}, {1L, 1L}, {1L, 2L}}) {
    Subspace k = line(n, {{2, alpha}, {4, beta}});
    lines.push_back(reduced_subspace(reduce(u, k), sys));
  }
  bool distinct = true;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) distinct = distinct && lines[i] != lines[j];
  b.prose("five_dim_classes", distinct, "infinitely many inequivalent 5-dimensional dilations",
          "K_{a,b} = span{a e2 + b e4} for (a, b) = (1,0), (0,1), (1,1), (1,2) give pairwise distinct reduced "
          "subspaces");

  const Subspace ideal = largest_left_ideal_in_kernel(sys);
  const Subspace strict = Subspace::coordinate(n, std::vector<std::size_t>{1, 3, 4});
  b.prose("left_ideal", ideal.contains(strict) && !ideal.is_zero(),
          "the strictly upper triangular matrices form a proper ideal inside ker(phi)",
          "largest left ideal in ker(phi) = " + describe(ideal));
  b.expect("unique_class", !has_unique_dilation_class(sys), "universal and canonical are inequivalent",
           "has_unique_dilation_class = false");

  const auto v = are_strongly_isomorphic(coordinate_span(n, {2}), coordinate_span(n, {4}), sys, seed);
  json data = {{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
  if (v.r) data["R"] = to_json(*v.r);
  b.info("strong_iso.e2_e4", "are span{e2} and span{e4} strongly isomorphic?",
         to_string(v.verdict) + ": " + v.reason +
             (v.verdict == Verdict::no ? "; pi5_2(E13) = 0 while pi5_1(E13) != 0, so no similarity exists" : ""),
         data);
  json labels = json::array();
  for (const auto& k : candidates) labels.push_back(describe(k));
  const json table = strong_iso_matrix(candidates, sys, seed);
  b.info("strong_iso.matrix", "strong isomorphism among the candidate invariant subspaces",
         std::to_string(candidates.size()) + " candidates, classes: " + strong_iso_classes(labels, table),
         {{"K", labels}, {"verdicts", table}});
}

void report_4_6(Builder& b, std::uint64_t) {
  const json display = parse_json_text(example_file("4.6/universal_display.json"), "4.6/universal_display.json");
  for (const char* which : {"tau", "sigma"}) {
    const std::string path = std::string("4.6/") + which + ".json";
    const json spec = parse_json_text(example_file(path), path);
    const auto sys = system_from_json(spec);
    const std::string name = which;
    const auto u = universal_dilation(sys);
    b.expect(name + ".universal.dim", u.dim_w() == 8, name + ": universal dilation on Q^8",
             "dim_w = " + std::to_string(u.dim_w()));
    const Subspace m = maximal_invariant_subspace(u.rep, kernel(u.s));
    b.prose(name + ".M", m.is_zero(), name + ": no nontrivial pi_u-invariant subspace in ker S_u",
            "M = " + describe(m) + ", ker S_u has dimension " + std::to_string(kernel(u.s).dim()));
    const auto c = canonical_dilation(sys);
    b.expect(name + ".canonical", c.dim_w() == 8, name + ": the universal formula also gives the canonical dilation",
             "canonical dim_w = " + std::to_string(c.dim_w()));
    b.equivalent(name + ".canonical.equivalent", name + ": canonical is equivalent to universal", c, u, sys);

    const Matrix p = display_permutation(sys);
    const auto shown_u = change_basis(u, p);
    std::vector<UnparsedEntry> stray;
    const auto pi = expand_symbolic(display["pi_symbolic"], display["symbols"], *sys.algebra,
                                    "4.6/universal_display.json.pi_symbolic", &stray);
    b.expect(name + ".pi", pi == shown_u.rep.pi,
             name + ": displayed pi_u, without its stray entries, is the constructed pi_u in vector-major order",
             pi == shown_u.rep.pi ? "equal" : "differs");
    const Matrix s = instantiate(display["S_template"], spec["params"], "S_template");
    const Matrix t = matrix_from_json(display["T"], "T");
    b.expect(name + ".S", s == shown_u.s, name + ": displayed S_u (with this map's coefficients) verifies",
             s == shown_u.s ? "equal to the constructed S_u" : "differs");
    b.expect(name + ".T", t == shown_u.t, name + ": displayed T_u verifies",
             t == shown_u.t ? "equal to the constructed T_u (the display prints its transpose)" : "differs");
    b.dilation(name + ".displayed", name + ": displayed (pi_u, S_u, T_u)", DilationSystem{{sys.algebra, 8, pi}, s, t},
               sys, true);
    if (std::string(which) == "tau") {
      json entries = json::array();
      std::string listed;
      for (const auto& e : stray) {
        entries.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"text", e.text}});
        listed += (listed.empty() ? "" : ", ") + e.text + " at (" + std::to_string(e.row + 1) + "," +
                  std::to_string(e.col + 1) + ")";
      }
      b.add("display.stray_entries", stray.empty() ? Status::pass : Status::discrepancy,
            "displayed pi_u is block diagonal diag(A, A, A, A)",
            stray.empty() ? "no stray entries"
                          : "stray entries " + listed + " are not linear in the entries of A; treated as typos",
            {{"entries", entries}});
    }
  }
}

void report_4_7i(Builder& b, std::uint64_t seed) {
  const auto sys = bundled_system("4.7i/system.json");
  const auto u = universal_dilation(sys);
  const Matrix p = display_permutation(sys);
  const Matrix p_inv = p.transpose();
  const auto shown_u = change_basis(u, p);
  constexpr std::size_t n = 6;
  auto to_display = [&](const Subspace& s) { return apply(p, s); };
  auto from_display = [&](const Subspace& s) { return apply(p_inv, s); };

  b.expect("universal.dim", u.dim_w() == n, "universal dilation on Q^6", "dim_w = " + std::to_string(u.dim_w()));
  b.matches("universal.display", "constructed (pi_u, S_u, T_u) in vector-major order equals the display", shown_u,
            bundled_dilation("4.7i/universal.json", sys));
  const Subspace ker = to_display(kernel(u.s));
  const Subspace ker_stated = Subspace::span_rows(n, Matrix{{0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, 0, 0},
                                                           {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}});
  b.expect("ker_S", ker == ker_stated, "ker S_u = span{e2 - e6, e3, e4, e5}", "ker S_u = " + describe(ker),
           {{"ker_S", subspace_json(ker)}});
  const Subspace m_alg = maximal_invariant_subspace(u.rep, kernel(u.s));
  const Subspace m = to_display(m_alg);
  b.expect("M", m == coordinate_span(n, {4, 5}), "M = span{e4, e5}", "M = " + describe(m),
           {{"M", subspace_json(m)}});
  const Subspace e3 = coordinate_span(n, {3});
  b.expect("e3.not_invariant", !is_invariant(shown_u.rep, e3), "span{e3} is not invariant",
           "pi_u(E12) e3 = e2");
  const std::vector<Vector> seeds{e3.basis_vectors()};
  const Subspace closure = invariant_closure(shown_u.rep, seeds);
  b.expect("e3.closure", closure == coordinate_span(n, {2, 3}), "the invariant closure of e3 is span{e2, e3}",
           "closure = " + describe(closure));

  const auto c = canonical_dilation(sys);
  const auto shown_c = bundled_dilation("4.7i/canonical.json", sys);
  b.expect("canonical.dim", c.dim_w() == 4, "canonical dilation on Q^4", "dim_w = " + std::to_string(c.dim_w()));
  if (b.dilation("canonical.displayed", "displayed (pi_c, S_c, T_c)", shown_c, sys, true)) {
    b.equivalent("canonical.equivalent", "displayed canonical is equivalent to the constructed one", shown_c, c, sys);
  }
  b.expect("canonical.reduced_subspace", to_display(reduced_subspace(c, sys)) == m,
           "the canonical dilation is the universal reduced by M",
           "reduced subspace = " + describe(to_display(reduced_subspace(c, sys))));

  std::vector<DilationSystem> fives;
  std::vector<Subspace> five_k;
  for (const char* f : {"five_1", "five_2"}) {
    const auto d = bundled_dilation(std::string("4.7i/") + f + ".json", sys);
    if (!b.dilation(f, std::string("displayed 5-dimensional system ") + f, d, sys)) continue;
    fives.push_back(d);
    five_k.push_back(to_display(reduced_subspace(d, sys)));
    b.info(std::string(f) + ".reduced_subspace", std::string("reduced subspace of ") + f,
           describe(five_k.back()) + " in the displayed basis", {{"K", subspace_json(five_k.back())}});
  }
  if (fives.size() == 2) {
    const auto w = are_equivalent(fives[0], fives[1], sys);
    b.expect("five.inequivalent", !w, "the two displayed 5-dimensional systems are inequivalent",
             w ? "witness found" : "reduced subspaces " + describe(five_k[0]) + " and " + describe(five_k[1]) +
                                       " differ");
    const bool k10 = five_k[0] == coordinate_span(n, {4}) || five_k[1] == coordinate_span(n, {4});
    const bool k01 = five_k[0] == coordinate_span(n, {5}) || five_k[1] == coordinate_span(n, {5});
    b.prose("five.K", k10 && k01, "the displayed systems correspond to K_{1,0} and K_{0,1}",
            "reduced subspaces " + describe(five_k[0]) + ", " + describe(five_k[1]));
  }

  const auto cl = character_lines(u.rep, m_alg);
  const bool plane = cl.unresolved.empty() && cl.lines.size() == 1 && cl.lines[0].eigenspace == m_alg;
  b.expect("character_lines", plane, "every line span{a e4 + b e5} is invariant",
           plane ? "one character line, " + character_form(*sys.algebra, cl.lines[0].character) +
                       ", with eigenspace the whole plane M"
                 : std::to_string(cl.lines.size()) + " character lines",
           character_lines_json(*sys.algebra, cl));

  std::vector<Subspace> ks;
  json labels = json::array();
  bool round_trip = true;
  for (auto [alpha, beta] : {std::pair{1L, 0L}, {0L, 1L}, {1L, 1L}, {1L, 2L}}) {
    const Subspace k = from_display(line(n, {{4, alpha}, {5, beta}}));
    const Subspace back = reduced_subspace(reduce(u, k), sys);
    round_trip = round_trip && back == k;
    ks.push_back(k);
    labels.push_back("K_{" + std::to_string(alpha) + "," + std::to_string(beta) + "}");
  }
  bool distinct = true;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      distinct = distinct && ks[i] != ks[j];
      if (are_equivalent(reduce(u, ks[i]), reduce(u, ks[j]), sys)) distinct = false;
    }
  b.prose("five_dim_classes", distinct && round_trip, "infinitely many inequivalent 5-dimensional dilations",
          "K_{a,b} for (a, b) = (1,0), (0,1), (1,1), (1,2): reduced dilations recover K and are pairwise "
          "inequivalent");
  const json table = strong_iso_matrix(ks, sys, seed);
  b.info("strong_iso.lines", "strong isomorphism among K_{1,0}, K_{0,1}, K_{1,1}, K_{1,2}",
         "classes: " + strong_iso_classes(labels, table), {{"K", labels}, {"verdicts", table}});
}

void report_4_7ii(Builder& b, std::uint64_t) {
  const auto sys = bundled_system("4.7ii/system.json");
  const auto u = universal_dilation(sys);
  b.expect("universal.dim", u.dim_w() == 18, "universal dilation has dimension 6 x 3 = 18",
           "dim_w = " + std::to_string(u.dim_w()));
  const auto c = canonical_dilation(sys);
  b.expect("canonical.dim", c.dim_w() == 10, "canonical dilation on Q^10", "dim_w = " + std::to_string(c.dim_w()));
  const auto shown = bundled_dilation("4.7ii/canonical.json", sys);
  if (b.dilation("canonical.displayed", "displayed (pi_c, S_c, T_c)", shown, sys, true)) {
    b.equivalent("canonical.equivalent_principle", "displayed canonical is equivalent to the principle dilation",
                 shown, principle_dilation(sys), sys);
    b.equivalent("canonical.equivalent_constructed", "displayed canonical is equivalent to the constructed canonical",
                 shown, c, sys);
  }
  const Subspace m = maximal_invariant_subspace(u.rep, kernel(u.s));
  b.expect("M", m.dim() == 8, "universal reduced by M is 10-dimensional",
           "M has dimension " + std::to_string(m.dim()));
}

void report_4_8(Builder& b, std::uint64_t) {
  const json tmpl = parse_json_text(example_file("4.8/dilation_template.json"), "4.8/dilation_template.json");
  const struct {
    const char* name;
    const char* system;
    const char* dilation;
    json params;
    std::function<Matrix(const Rational&, const Rational&, const Rational&, const Rational&)> formula;
  } cases[] = {
      {"d", "4.8/system_d.json", "4.8/dilation_d.json",
       {{"alpha", {1, 0}}, {"beta", {0, 1}}, {"xi", {1, 0}}, {"gamma", {0, 1}}},
       [](const Rational& a, const Rational&, const Rational&, const Rational& d) { return Matrix{{a, 0}, {0, d}}; }},
      {"phi", "4.8/system_phi.json", "4.8/dilation_phi.json",
       {{"alpha", {1, 0}}, {"beta", {1, 0}}, {"xi", {1, 0}}, {"gamma", {1, 0}}},
       [](const Rational& a, const Rational&, const Rational&, const Rational&) { return Matrix{{a, 0}, {0, a}}; }},
  };
  for (const auto& cs : cases) {
    const std::string name = cs.name;
    const auto sys = bundled_system(cs.system);
    bool formula = true;
    for (std::size_t i = 0; i < sys.dim_a(); ++i) {
      const Matrix a = to_matrix(*sys.algebra, sys.algebra->basis_vector(i));
      formula = formula && sys.phi[i] == cs.formula(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    }
    b.expect(name + ".map", formula, "the parameter instantiation gives the map " + name,
             formula ? "phi agrees with the displayed formula on every matrix unit" : "differs");
    const auto d = bundled_dilation(cs.dilation, sys);
    const Matrix s = instantiate(tmpl["S_template"], cs.params, "S_template");
    const Matrix t = instantiate(tmpl["T_template"], cs.params, "T_template");
    b.expect(name + ".template", s == d.s && t == d.t, "displayed S and T instantiate to the bundled " + name + " file",
             s == d.s && t == d.t ? "equal" : "differs");
    if (b.dilation(name, "displayed (pi, S, T) for " + name, d, sys, true)) {
      b.equivalent(name + ".principle", "displayed system is the principle dilation of " + name, d,
                   principle_dilation(sys), sys);
    }
  }
  b.add("display.domain", Status::discrepancy, "the dilation is displayed as pi: T2 -> M4",
        "pi is the representation diag(A, A) of M2 (A has a nonzero (2,1) entry c); the domain is M2");
}

const std::map<std::string, std::pair<std::string, void (*)(Builder&, std::uint64_t)>, std::less<>>& reports() {
  static const std::map<std::string, std::pair<std::string, void (*)(Builder&, std::uint64_t)>, std::less<>> table{
      {"4.4", {"normalized trace on M2", report_4_4}},
      {"4.5i", {"normalized trace on T2", report_4_5i}},
      {"4.5ii", {"normalized trace on T3", report_4_5ii}},
      {"4.6", {"transpose and scaled trace on M2", report_4_6}},
      {"4.7i", {"transpose T2 -> M2", report_4_7i}},
      {"4.7ii", {"transpose T3 -> M3", report_4_7ii}},
      {"4.8", {"diagonal compressions d and phi on M2", report_4_8}},
  };
  return table;
}

}  // namespace

std::vector<std::string> report_ids() {
  std::vector<std::string> out;
  for (const auto& [id, v] : reports()) out.push_back(id);
  return out;
}

Report cmd_report(std::string_view example_id, std::uint64_t seed) {
  const auto it = reports().find(example_id);
  if (it == reports().end()) {
    std::string known;
    for (const auto& id : report_ids()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("unknown example id \"" + std::string(example_id) + "\" (known: " + known + ")");
  }
  Report report{it->first, it->second.first, seed, {}};
  Builder b(report);
  try {
    it->second.second(b, seed);
  } catch (const std::exception& e) {
    b.add("internal", Status::fail, "the pipeline runs to completion", e.what());
  }
  return report;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "example " << r.example << ": " << r.title << " (seed " << r.seed << ")\n";
  for (const auto& e : r.entries) {
    out << "  [" << to_string(e.status) << "] " << e.id << ": " << e.claim << "\n";
    out << "      " << e.finding << "\n";
    if (e.data.contains("R")) {
      std::istringstream lines(format(matrix_from_json(e.data["R"], "R")));
      for (std::string l; std::getline(lines, l);) out << "      R " << l << "\n";
    }
    if (e.data.contains("verdicts") && e.data.contains("K")) {
      const auto& table = e.data["verdicts"];
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << "      [" << i << "] " << e.data["K"][i].get<std::string>() << ":";
        for (const auto& v : table[i]) out << " " << v.get<std::string>();
        out << "\n";
      }
    }
  }
  out << "  summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::discrepancy) << " discrepancy, " << r.count(Status::info) << " info\n";
  return out.str();
}

json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(
        {{"id", e.id}, {"status", to_string(e.status)}, {"claim", e.claim}, {"finding", e.finding}, {"data", e.data}});
  }
  return {{"example", r.example},
          {"title", r.title},
          {"seed", r.seed},
          {"entries", entries},
          {"summary",
           {{"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"discrepancy", r.count(Status::discrepancy)},
            {"info", r.count(Status::info)}}},
          {"ok", r.ok()}};
}

json info_document(const LinearSystem& sys) {
  const Algebra& alg = *sys.algebra;
  const auto u = universal_dilation(sys);
  const auto c = canonical_dilation(sys);
  const Subspace ker = kernel(u.s);
  const Subspace m = maximal_invariant_subspace(u.rep, ker);
  json phi = json::array();
  for (const auto& p : sys.phi) phi.push_back(to_json(p));
  return {{"algebra", {{"name", alg.name()}, {"dim", alg.dim()}, {"labels", alg.labels()}, {"unit", to_json(alg.unit())}}},
          {"dim_v", sys.dim_v},
          {"phi", phi},
          {"universal_dim", u.dim_w()},
          {"canonical_dim", c.dim_w()},
          {"ker_S_dim", ker.dim()},
          {"M_basis", subspace_json(m)},
          {"largest_left_ideal_in_kernel", subspace_json(largest_left_ideal_in_kernel(sys))},
          {"unique_dilation_class", has_unique_dilation_class(sys)},
          {"ok", true}};
}

json verify_document(const LinearSystem& sys, const DilationSystem& d) {
  const Check c = validate_dilation(d, sys);
  const std::size_t bound = sys.dim_a() * sys.dim_v;
  json doc = {{"valid", c.ok}, {"dim_w", d.dim_w()}, {"dimension_bound", bound}};
  if (!c.ok) {
    doc["errors"] = c.message;
    doc["ok"] = false;
    return doc;
  }
  const bool minimal = is_linearly_minimal(d);
  const bool irreducible = is_irreducible(d);
  doc["linearly_minimal"] = minimal;
  doc["irreducible"] = irreducible;
  doc["principle"] = minimal && irreducible;
  doc["ker_S_invariant_part"] = subspace_json(maximal_invariant_subspace_in_kernel(d.rep, d.s));
  if (minimal) {
    doc["reduced_subspace"] = subspace_json(reduced_subspace(d, sys));
    doc["within_dimension_bound"] = d.dim_w() <= bound;
  }
  doc["ok"] = !minimal || d.dim_w() <= bound;
  return doc;
}

json equiv_document(const LinearSystem& sys, const DilationSystem& d1, const DilationSystem& d2) {
  json doc = json::object();
  int index = 1;
  for (const auto* d : {&d1, &d2}) {
    const std::string which = "dilation " + std::to_string(index++);
    if (const auto c = validate_dilation(*d, sys); !c) {
      return {{"ok", false}, {"error", which + " is invalid: " + c.message}};
    }
    if (!is_linearly_minimal(*d)) return {{"ok", false}, {"error", which + " is not linearly minimal"}};
  }
  const auto w = are_equivalent(d1, d2, sys);
  doc["verdict"] = w ? "EQUIVALENT" : "INEQUIVALENT";
  doc["K1"] = subspace_json(reduced_subspace(d1, sys));
  doc["K2"] = subspace_json(reduced_subspace(d2, sys));
  if (w) doc["R"] = to_json(w->r);
  doc["ok"] = true;
  return doc;
}

json strong_iso_document(const LinearSystem& sys, const Subspace& k1, const Subspace& k2, std::uint64_t seed) {
  const auto v = are_strongly_isomorphic(k1, k2, sys, seed);
  json doc = {{"verdict", to_string(v.verdict)},
              {"reason", v.reason},
              {"K1", subspace_json(k1)},
              {"K2", subspace_json(k2)},
              {"seed", seed},
              {"ok", true}};
  if (v.r) doc["R"] = to_json(*v.r);
  if (v.quotient_intertwiner) doc["quotient_intertwiner"] = to_json(*v.quotient_intertwiner);
  return doc;
}

json classification_document(const LinearSystem& sys, const std::optional<Subspace>& within, std::uint64_t seed) {
  const auto u = universal_dilation(sys);
  const Subspace ker = kernel(u.s);
  const Subspace m = maximal_invariant_subspace(u.rep, ker);
  if (m != maximal_invariant_subspace_in_kernel(u.rep, u.s)) {
    throw std::logic_error("maximal invariant subspace: iteration and joint-kernel formula disagree");
  }
  const Subspace region = within.value_or(m);
  if (region.ambient_dim() != u.dim_w()) {
    throw std::invalid_argument("--lines-within: ambient dimension " + std::to_string(region.ambient_dim()) +
                                ", expected " + std::to_string(u.dim_w()));
  }
  const auto cl = character_lines(u.rep, region);
  const auto candidates = candidate_subspaces(u, m, character_lines(u.rep, m));
  json classes = json::array();
  for (const auto& k : candidates) {
    classes.push_back({{"K_basis", to_json(k.basis())}, {"K", describe(k)}, {"dilation_dim", u.dim_w() - k.dim()}});
  }
  const auto lines_json = character_lines_json(*sys.algebra, cl);
  return {{"universal_dim", u.dim_w()},
          {"ker_S_dim", ker.dim()},
          {"ker_S", subspace_json(ker)},
          {"M_basis", to_json(m.basis())},
          {"M", describe(m)},
          {"unique_dilation_class", m.is_zero()},
          {"lines_within", subspace_json(region)},
          {"character_lines", lines_json["lines"]},
          {"unresolved", lines_json["unresolved"]},
          {"classes", classes},
          {"strong_isomorphism_matrix", strong_iso_matrix(candidates, sys, seed)},
          {"seed", seed},
          {"ok", true}};
}

}  // namespace homdil
