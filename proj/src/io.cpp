#include "homdil/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "homdil/json_util.hpp"

namespace homdil {

using nlohmann::json;

AlgebraPtr algebra_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  if (j.contains("builtin")) {
    const std::string kind = j["builtin"].get<std::string>();
    if (!j.contains("n") || !is_nonnegative_integer(j["n"])) {
      throw std::invalid_argument(where + ".n: expected a positive integer");
    }
    const auto n = j["n"].get<std::size_t>();
    if (kind == "full_matrix") return full_matrix_algebra(n);
    if (kind == "upper_triangular") return upper_triangular_algebra(n);
    throw std::invalid_argument(where + ".builtin: unknown algebra \"" + kind + "\"");
  }
  if (j.contains("custom")) {
    const json& c = j["custom"];
    const std::string cw = where + ".custom";
    if (!c.contains("dim") || !is_nonnegative_integer(c["dim"])) throw std::invalid_argument(cw + ".dim: expected an integer");
    const auto dim = c["dim"].get<std::size_t>();
    if (!c.contains("unit")) throw std::invalid_argument(cw + ".unit: missing");
    Vector unit = vector_from_json(c["unit"], cw + ".unit");
    if (unit.size() != dim) throw std::invalid_argument(cw + ".unit: expected " + std::to_string(dim) + " entries");
    std::vector<StructureConstant> constants;
    const json& list = c.value("structure_constants", json::array());
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::string ew = cw + ".structure_constants[" + std::to_string(e) + "]";
      const json& t = list[e];
      if (!t.is_array() || t.size() != 4 || !is_nonnegative_integer(t[0]) || !is_nonnegative_integer(t[1]) ||
          !is_nonnegative_integer(t[2])) {
        throw std::invalid_argument(ew + ": expected [i, j, k, value]");
      }
      constants.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>(),
                           rational_from_json(t[3], ew + "[3]")});
    }
    std::vector<std::string> labels;
    if (c.contains("labels")) labels = c["labels"].get<std::vector<std::string>>();
    auto alg = custom_algebra(dim, std::move(unit), constants, std::move(labels));
    if (const auto check = validate_algebra(*alg); !check) throw std::invalid_argument(cw + ": " + check.check.message);
    return alg;
  }
  throw std::invalid_argument(where + ": expected \"builtin\" or \"custom\"");
}

LinearSystem system_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("system: expected an object");
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw std::invalid_argument("system.builtin: expected a name");
    return builtin_system(j["builtin"].get<std::string>(), j.value("params", json::object()));
  }
  if (!j.contains("algebra")) throw std::invalid_argument("system: missing \"algebra\" (or \"builtin\")");
  LinearSystem sys;
  sys.algebra = algebra_from_json(j["algebra"], "system.algebra");
  if (!j.contains("dim_v") || !is_nonnegative_integer(j["dim_v"])) {
    throw std::invalid_argument("system.dim_v: expected a positive integer");
  }
  sys.dim_v = j["dim_v"].get<std::size_t>();
  if (!j.contains("phi") || !j["phi"].is_array()) throw std::invalid_argument("system.phi: expected an array of matrices");
  for (std::size_t i = 0; i < j["phi"].size(); ++i) {
    sys.phi.push_back(matrix_from_json(j["phi"][i], "system.phi[" + std::to_string(i) + "]"));
  }
  if (const auto check = validate_system(sys); !check) throw std::invalid_argument("system: " + check.message);
  return sys;
}

json system_to_json(const LinearSystem& sys) {
  const Algebra& alg = *sys.algebra;
  json algebra;
  if (alg.matrix_units() && (alg.name()[0] == 'M' || alg.name()[0] == 'T')) {
    algebra = {{"builtin", alg.name()[0] == 'M' ? "full_matrix" : "upper_triangular"}, {"n", alg.matrix_units()->n}};
  } else {
    json constants = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        for (std::size_t k = 0; k < alg.dim(); ++k)
          if (!is_zero(alg.constant(i, j, k))) constants.push_back({i, j, k, to_string(alg.constant(i, j, k))});
    algebra = {{"custom",
                {{"dim", alg.dim()}, {"unit", to_json(alg.unit())}, {"structure_constants", constants},
                 {"labels", alg.labels()}}}};
  }
  json phi = json::array();
  for (const auto& m : sys.phi) phi.push_back(to_json(m));
  return {{"algebra", algebra}, {"dim_v", sys.dim_v}, {"phi", phi}};
}

namespace {

struct LinearForm {
  std::map<std::size_t, Rational> terms;
};

// Parses sums like "a", "-2b", "a+1/2d", "3*c", "0".
std::optional<LinearForm> parse_linear_form(std::string_view text, const std::map<std::string, std::size_t>& symbols) {
  LinearForm form;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) return std::nullopt;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      return std::nullopt;
    }
    first = false;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational coeff = 1;
    const bool has_number = pos > start;
    if (has_number) {
      try {
        coeff = parse_rational(text.substr(start, pos - start));
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    }
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
    }
    start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    const std::string name(text.substr(start, pos - start));
    if (name.empty()) {
      if (!has_number || !is_zero(coeff)) return std::nullopt;  // only the constant 0 is allowed
    } else {
      const auto it = symbols.find(name);
      if (it == symbols.end()) return std::nullopt;
      form.terms[it->second] += coeff * sign;
    }
    skip();
  }
  return form;
}

}  // namespace

std::vector<Matrix> expand_symbolic(const json& display, const json& symbols, const Algebra& alg,
                                    const std::string& where, std::vector<UnparsedEntry>* unparsed) {
  if (!symbols.is_object()) throw std::invalid_argument(where + ".symbols: expected an object");
  std::map<std::string, std::size_t> table;
  for (const auto& [name, label] : symbols.items()) {
    const auto index = alg.index_of(label.get<std::string>());
    if (!index) {
      throw std::invalid_argument(where + ".symbols." + name + ": unknown basis label " + label.get<std::string>());
    }
    table[name] = *index;
  }
  if (!display.is_array() || display.empty()) throw std::invalid_argument(where + ": expected a square matrix");
  const std::size_t n = display.size();
  std::vector<Matrix> out(alg.dim(), Matrix(n, n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!display[r].is_array() || display[r].size() != n) {
      throw std::invalid_argument(where + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& cell = display[r][c];
      const std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
      const auto form = parse_linear_form(text, table);
      if (!form) {
        if (unparsed) {
          unparsed->push_back({r, c, text});
          continue;
        }
        throw std::invalid_argument(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                    "]: cannot parse linear form \"" + text + "\"");
      }
      for (const auto& [index, coeff] : form->terms) out[index](r, c) += coeff;
    }
  }
  return out;
}

DilationSystem dilation_from_json(const json& j, const LinearSystem& sys) {
  if (!j.is_object()) throw std::invalid_argument("dilation: expected an object");
  DilationSystem d;
  d.rep.algebra = sys.algebra;
  if (j.contains("pi")) {
    if (!j["pi"].is_array()) throw std::invalid_argument("dilation.pi: expected an array of matrices");
    for (std::size_t i = 0; i < j["pi"].size(); ++i) {
      d.rep.pi.push_back(matrix_from_json(j["pi"][i], "dilation.pi[" + std::to_string(i) + "]"));
    }
  } else if (j.contains("pi_symbolic")) {
    d.rep.pi = expand_symbolic(j["pi_symbolic"], j.value("symbols", json::object()), *sys.algebra,
                               "dilation.pi_symbolic");
  } else {
    throw std::invalid_argument("dilation: missing \"pi\" (or \"pi_symbolic\")");
  }
  if (d.rep.pi.size() != sys.dim_a()) {
    throw std::invalid_argument("dilation.pi: " + std::to_string(d.rep.pi.size()) + " matrices, algebra has dimension " +
                                std::to_string(sys.dim_a()));
  }
  d.rep.dim_w = d.rep.pi.front().rows();
  for (std::size_t i = 0; i < d.rep.pi.size(); ++i) {
    if (d.rep.pi[i].rows() != d.rep.dim_w || d.rep.pi[i].cols() != d.rep.dim_w) {
      throw std::invalid_argument("dilation.pi[" + std::to_string(i) + "]: expected " + std::to_string(d.rep.dim_w) +
                                  "x" + std::to_string(d.rep.dim_w));
    }
  }
  if (!j.contains("S")) throw std::invalid_argument("dilation.S: missing");
  if (!j.contains("T")) throw std::invalid_argument("dilation.T: missing");
  d.s = matrix_from_json(j["S"], "dilation.S");
  d.t = matrix_from_json(j["T"], "dilation.T");
  if (d.s.rows() != sys.dim_v || d.s.cols() != d.rep.dim_w) {
    throw std::invalid_argument("dilation.S: shape " + std::to_string(d.s.rows()) + "x" + std::to_string(d.s.cols()) +
                                ", expected dim_v x dim_w = " + std::to_string(sys.dim_v) + "x" +
                                std::to_string(d.rep.dim_w));
  }
  if (d.t.rows() != d.rep.dim_w || d.t.cols() != sys.dim_v) {
    throw std::invalid_argument("dilation.T: shape " + std::to_string(d.t.rows()) + "x" + std::to_string(d.t.cols()) +
                                ", expected dim_w x dim_v = " + std::to_string(d.rep.dim_w) + "x" +
                                std::to_string(sys.dim_v));
  }
  return d;
}

json dilation_to_json(const DilationSystem& d) {
  json pi = json::array();
  for (const auto& m : d.rep.pi) pi.push_back(to_json(m));
  const bool minimal = is_linearly_minimal(d);
  return {{"pi", pi},
          {"S", to_json(d.s)},
          {"T", to_json(d.t)},
          {"dim_w", d.dim_w()},
          {"linearly_minimal", minimal},
          {"irreducible", is_irreducible(d)}};
}

json parse_json_text(std::string_view text, const std::string& name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(name + ": " + e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

}  // namespace homdil
