#include "tenring/scenario.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tenring {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "1 0 / 0 1" -> row-major entry strings, validated against rows*cols
std::vector<std::string> parse_matrix_entries(const std::string& text, std::size_t rows,
                                              std::size_t cols, std::size_t line) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  std::size_t row_count = rows == 0 ? 0 : 1;
  std::size_t in_row = 0;
  while (is >> tok) {
    if (tok == "/") {
      if (in_row != cols) parse_fail(line, "expected " + std::to_string(cols) + " entries per row");
      ++row_count;
      in_row = 0;
    } else {
      out.push_back(tok);
      ++in_row;
    }
  }
  if (rows == 0 || cols == 0) {
    if (!out.empty()) parse_fail(line, "expected an empty matrix");
    return out;
  }
  if (in_row != cols) parse_fail(line, "expected " + std::to_string(cols) + " entries per row");
  if (row_count != rows) parse_fail(line, "expected " + std::to_string(rows) + " rows");
  return out;
}

std::vector<std::size_t> parse_relation(const std::string& text, const Quiver& q,
                                        std::size_t line) {
  // '*'-joined arrow names in right-to-left order -> traversal order
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == '*') {
      names.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  names.push_back(trim(cur));
  std::vector<std::size_t> rel;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    if (it->empty()) parse_fail(line, "empty arrow name in relation");
    try {
      rel.push_back(q.arrow_index(*it));
    } catch (const Error&) {
      parse_fail(line, "unknown arrow '" + *it + "' in relation");
    }
  }
  return rel;
}

Matrix matrix_from_entries(FieldSpec f, std::size_t rows, std::size_t cols,
                           const std::vector<std::string>& entries) {
  require(entries.size() == rows * cols, Errc::ValidationError, "matrix entry count");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_from_string(i, j, entries[i * cols + j]);
  return m;
}

const std::vector<std::string> kCheckNames = {
    "adjunction",       "standard-sequence", "ind-dual",
    "perfectness",      "gorenstein-contexts", "thm2-equality",
    "thm2-induction",   "thm3-sandwich",     "cor1-sandwich",
    "lemma-per1",       "frobenius-embedding"};

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
  Scenario s;
  s.name = name;
  s.checks.clear();

  enum class Sec { None, Field, Algebra, Bimodule, Bounds, Checks, Module };
  Sec sec = Sec::None;
  std::string module_name;
  bool algebra_raw = false, bimodule_explicit = false;
  bool field_seen = false;

  std::istringstream is(text);
  std::string raw_line;
  std::size_t ln = 0;
  while (std::getline(is, raw_line)) {
    ++ln;
    std::string line = raw_line;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(ln, "unterminated section header");
      std::string head = trim(line.substr(1, line.size() - 2));
      if (head == "field") sec = Sec::Field;
      else if (head == "algebra") sec = Sec::Algebra;
      else if (head == "bimodule") sec = Sec::Bimodule;
      else if (head == "bounds") sec = Sec::Bounds;
      else if (head == "checks") sec = Sec::Checks;
      else if (head.rfind("module ", 0) == 0) {
        sec = Sec::Module;
        module_name = trim(head.substr(7));
        if (module_name.empty()) parse_fail(ln, "module section needs a name");
        s.modules[module_name] = ModuleLiteral{};
      } else {
        parse_fail(ln, "unknown section [" + head + "]");
      }
      continue;
    }

    std::string key = line, value;
    std::size_t colon = line.find(':');
    if (colon != std::string::npos) {
      key = trim(line.substr(0, colon));
      value = trim(line.substr(colon + 1));
    }

    switch (sec) {
      case Sec::None:
        parse_fail(ln, "content before the first section");
      case Sec::Field: {
        auto toks = split_ws(line);
        if (toks.size() == 1 && (toks[0] == "rationals" || toks[0] == "q")) {
          s.field = FieldSpec::rationals();
        } else if (toks.size() == 2 && toks[0] == "prime") {
          try {
            s.field = FieldSpec::prime(std::stoll(toks[1]));
          } catch (const Error& e) {
            parse_fail(ln, e.what());
          } catch (const std::logic_error&) {
            parse_fail(ln, "bad modulus '" + toks[1] + "'");
          }
        } else {
          parse_fail(ln, "expected 'rationals' or 'prime <p>'");
        }
        field_seen = true;
        break;
      }
      case Sec::Algebra: {
        if (line == "raw") {
          algebra_raw = true;
          s.algebra.kind = AlgebraSpec::Kind::Raw;
          break;
        }
        if (!algebra_raw) {
          s.algebra.kind = AlgebraSpec::Kind::Quiver;
          if (key == "vertices") {
            try {
              s.algebra.presentation.quiver.vertex_count = std::stoul(value);
            } catch (const std::logic_error&) {
              parse_fail(ln, "bad vertex count");
            }
          } else if (key == "arrow") {
            // "name src -> tgt" with 1-based vertices
            auto toks = split_ws(value);
            if (toks.size() != 4 || toks[2] != "->")
              parse_fail(ln, "expected 'arrow: name src -> tgt'");
            try {
              std::size_t src = std::stoul(toks[1]), tgt = std::stoul(toks[3]);
              if (src == 0 || tgt == 0) parse_fail(ln, "vertices are 1-based");
              s.algebra.presentation.quiver.arrows.push_back({toks[0], src - 1, tgt - 1});
            } catch (const std::logic_error&) {
              parse_fail(ln, "bad arrow endpoints");
            }
          } else if (key == "relation") {
            s.algebra.presentation.relations.push_back(
                parse_relation(value, s.algebra.presentation.quiver, ln));
          } else {
            parse_fail(ln, "unknown algebra key '" + key + "'");
          }
        } else {
          RawAlgebraSpec& r = s.algebra.raw;
          if (key == "dim") {
            try {
              r.dim = std::stoul(value);
            } catch (const std::logic_error&) {
              parse_fail(ln, "bad dim");
            }
            r.products.assign(r.dim * r.dim, {});
          } else if (key == "labels") {
            r.labels = split_ws(value);
          } else if (key == "unit") {
            r.unit = split_ws(value);
          } else if (key == "idempotent") {
            r.idempotents.push_back(split_ws(value));
          } else if (key == "radical") {
            r.radical_given = true;
            if (!value.empty()) r.radical_columns.push_back(split_ws(value));
          } else if (key.rfind("product ", 0) == 0) {
            auto toks = split_ws(key.substr(8));
            if (toks.size() != 2) parse_fail(ln, "expected 'product i j: entries'");
            std::size_t i = 0, j = 0;
            try {
              i = std::stoul(toks[0]);
              j = std::stoul(toks[1]);
            } catch (const std::logic_error&) {
              parse_fail(ln, "bad product indices");
            }
            if (r.dim == 0 || i >= r.dim || j >= r.dim)
              parse_fail(ln, "product index out of range (set dim first)");
            r.products[i * r.dim + j] = split_ws(value);
          } else {
            parse_fail(ln, "unknown raw-algebra key '" + key + "'");
          }
        }
        break;
      }
      case Sec::Bimodule: {
        if (line == "zero") {
          s.bimodule.kind = BimoduleSpec::Kind::Zero;
        } else if (line == "explicit") {
          bimodule_explicit = true;
          s.bimodule.kind = BimoduleSpec::Kind::Explicit;
        } else if (key == "outer") {
          if (bimodule_explicit) parse_fail(ln, "cannot mix outer and explicit");
          s.bimodule.kind = BimoduleSpec::Kind::OuterSum;
          auto toks = split_ws(value);
          if (toks.size() != 2) parse_fail(ln, "expected 'outer: e<i> e<j>'");
          s.bimodule.outer_pairs.push_back({toks[0], toks[1]});
        } else if (bimodule_explicit && key == "dim") {
          try {
            s.bimodule.dim = std::stoul(value);
          } catch (const std::logic_error&) {
            parse_fail(ln, "bad bimodule dim");
          }
        } else if (bimodule_explicit && (key.rfind("left ", 0) == 0 || key.rfind("right ", 0) == 0)) {
          bool left = key[0] == 'l';
          std::size_t idx = 0;
          try {
            idx = std::stoul(key.substr(left ? 5 : 6));
          } catch (const std::logic_error&) {
            parse_fail(ln, "bad action index");
          }
          auto& rows = left ? s.bimodule.left_rows : s.bimodule.right_rows;
          if (rows.size() <= idx) rows.resize(idx + 1);
          rows[idx] = parse_matrix_entries(value, s.bimodule.dim, s.bimodule.dim, ln);
        } else {
          parse_fail(ln, "unknown bimodule line '" + line + "'");
        }
        break;
      }
      case Sec::Bounds: {
        try {
          if (key == "pd_bound") s.bounds.pd_bound = std::stoul(value);
          else if (key == "nilpotency_cap") s.bounds.nilpotency_cap = std::stoul(value);
          else if (key == "dim_cap") s.bounds.dim_cap = std::stoul(value);
          else if (key == "iso_trials") s.bounds.iso_trials = std::stoul(value);
          else if (key == "seed") s.bounds.seed = std::stoull(value);
          else parse_fail(ln, "unknown bound '" + key + "'");
        } catch (const std::logic_error&) {
          parse_fail(ln, "bad number for '" + key + "'");
        }
        break;
      }
      case Sec::Checks: {
        for (const std::string& c : split_ws(line)) {
          if (c != "all" &&
              std::find(kCheckNames.begin(), kCheckNames.end(), c) == kCheckNames.end())
            parse_fail(ln, "unknown check '" + c + "'");
          s.checks.push_back(c);
        }
        break;
      }
      case Sec::Module: {
        ModuleLiteral& m = s.modules[module_name];
        if (key == "dimvec") {
          try {
            for (const std::string& tok : split_ws(value)) m.dimvec.push_back(std::stoul(tok));
          } catch (const std::logic_error&) {
            parse_fail(ln, "bad dimvec");
          }
        } else if (key.rfind("arrow ", 0) == 0) {
          std::string arrow = trim(key.substr(6));
          m.arrow_entries[arrow] = split_ws(value);  // shape checked at realize time
        } else {
          parse_fail(ln, "unknown module key '" + key + "'");
        }
        break;
      }
    }
  }
  if (!field_seen) fail(Errc::ValidationError, "scenario has no [field] section");
  if (s.checks.empty()) s.checks.push_back("all");

  // bounds sanity
  require(s.bounds.pd_bound >= 1 && s.bounds.nilpotency_cap >= 1 && s.bounds.iso_trials >= 1,
          Errc::ValidationError, "bounds must be positive");
  return s;
}

Scenario parse_scenario_json(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("json: ") + e.what());
  }
  try {
    Scenario s;
    s.name = name;
    s.checks.clear();
    const json& field = j.at("field");
    if (field.at("kind") == "rationals")
      s.field = FieldSpec::rationals();
    else
      s.field = FieldSpec::prime(field.at("p").get<std::int64_t>());

    const json& alg = j.at("algebra");
    if (alg.contains("vertices")) {
      s.algebra.kind = AlgebraSpec::Kind::Quiver;
      s.algebra.presentation.quiver.vertex_count = alg.at("vertices").get<std::size_t>();
      for (const json& a : alg.value("arrows", json::array()))
        s.algebra.presentation.quiver.arrows.push_back(
            {a.at("name").get<std::string>(), a.at("source").get<std::size_t>() - 1,
             a.at("target").get<std::size_t>() - 1});
      for (const json& r : alg.value("relations", json::array()))
        s.algebra.presentation.relations.push_back(
            parse_relation(r.get<std::string>(), s.algebra.presentation.quiver, 0));
    } else {
      s.algebra.kind = AlgebraSpec::Kind::Raw;
      RawAlgebraSpec& raw = s.algebra.raw;
      raw.dim = alg.at("dim").get<std::size_t>();
      raw.labels = alg.value("labels", std::vector<std::string>{});
      raw.products.assign(raw.dim * raw.dim, {});
      const json& prods = alg.at("products");
      for (std::size_t i = 0; i < raw.dim; ++i)
        for (std::size_t jx = 0; jx < raw.dim; ++jx)
          raw.products[i * raw.dim + jx] =
              prods.at(i).at(jx).get<std::vector<std::string>>();
      raw.unit = alg.at("unit").get<std::vector<std::string>>();
      for (const json& e : alg.at("idempotents"))
        raw.idempotents.push_back(e.get<std::vector<std::string>>());
      if (alg.contains("radical")) {
        raw.radical_given = true;
        for (const json& c : alg.at("radical"))
          raw.radical_columns.push_back(c.get<std::vector<std::string>>());
      }
    }

    const json& bim = j.at("bimodule");
    std::string kind = bim.at("kind").get<std::string>();
    if (kind == "zero") {
      s.bimodule.kind = BimoduleSpec::Kind::Zero;
    } else if (kind == "outer") {
      s.bimodule.kind = BimoduleSpec::Kind::OuterSum;
      for (const json& p : bim.at("pairs"))
        s.bimodule.outer_pairs.push_back(
            {p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    } else if (kind == "explicit") {
      s.bimodule.kind = BimoduleSpec::Kind::Explicit;
      s.bimodule.dim = bim.at("dim").get<std::size_t>();
      for (const json& row : bim.at("left"))
        s.bimodule.left_rows.push_back(row.get<std::vector<std::string>>());
      for (const json& row : bim.at("right"))
        s.bimodule.right_rows.push_back(row.get<std::vector<std::string>>());
    } else {
      fail(Errc::ParseError, "unknown bimodule kind '" + kind + "'");
    }

    if (j.contains("bounds")) {
      const json& b = j.at("bounds");
      s.bounds.pd_bound = b.value("pd_bound", s.bounds.pd_bound);
      s.bounds.nilpotency_cap = b.value("nilpotency_cap", s.bounds.nilpotency_cap);
      s.bounds.dim_cap = b.value("dim_cap", s.bounds.dim_cap);
      s.bounds.iso_trials = b.value("iso_trials", s.bounds.iso_trials);
      s.bounds.seed = b.value("seed", s.bounds.seed);
    }
    s.checks = j.value("checks", std::vector<std::string>{"all"});
    if (s.checks.empty()) s.checks.push_back("all");
    return s;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("json structure: ") + e.what());
  }
}

Scenario parse_scenario(const std::string& text, const std::string& name) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_scenario_json(text, name);
    break;
  }
  return parse_scenario_text(text, name);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "[field]\n";
  os << (s.field.is_rationals() ? "rationals" : "prime " + std::to_string(s.field.p)) << "\n";
  os << "[algebra]\n";
  if (s.algebra.kind == AlgebraSpec::Kind::Quiver) {
    const Presentation& p = s.algebra.presentation;
    os << "vertices: " << p.quiver.vertex_count << "\n";
    for (const Arrow& a : p.quiver.arrows)
      os << "arrow: " << a.name << " " << a.source + 1 << " -> " << a.target + 1 << "\n";
    for (const auto& rel : p.relations) {
      os << "relation: ";
      for (std::size_t t = rel.size(); t-- > 0;) {
        os << p.quiver.arrows[rel[t]].name;
        if (t != 0) os << "*";
      }
      os << "\n";
    }
  } else {
    const RawAlgebraSpec& r = s.algebra.raw;
    os << "raw\n";
    os << "dim: " << r.dim << "\n";
    if (!r.labels.empty()) {
      os << "labels:";
      for (const auto& l : r.labels) os << " " << l;
      os << "\n";
    }
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j) {
        if (r.products[i * r.dim + j].empty()) continue;
        os << "product " << i << " " << j << ":";
        for (const auto& e : r.products[i * r.dim + j]) os << " " << e;
        os << "\n";
      }
    os << "unit:";
    for (const auto& e : r.unit) os << " " << e;
    os << "\n";
    for (const auto& idem : r.idempotents) {
      os << "idempotent:";
      for (const auto& e : idem) os << " " << e;
      os << "\n";
    }
    if (r.radical_given) {
      if (r.radical_columns.empty()) os << "radical:\n";
      for (const auto& col : r.radical_columns) {
        os << "radical:";
        for (const auto& e : col) os << " " << e;
        os << "\n";
      }
    }
  }
  os << "[bimodule]\n";
  switch (s.bimodule.kind) {
    case BimoduleSpec::Kind::Zero:
      os << "zero\n";
      break;
    case BimoduleSpec::Kind::OuterSum:
      for (const auto& [a, b] : s.bimodule.outer_pairs) os << "outer: " << a << " " << b << "\n";
      break;
    case BimoduleSpec::Kind::Explicit: {
      os << "explicit\n";
      os << "dim: " << s.bimodule.dim << "\n";
      auto emit = [&](const char* tag, const std::vector<std::vector<std::string>>& rows) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
          os << tag << " " << k << ":";
          for (std::size_t t = 0; t < rows[k].size(); ++t) {
            if (t > 0 && t % s.bimodule.dim == 0) os << " /";
            os << " " << rows[k][t];
          }
          os << "\n";
        }
      };
      emit("left", s.bimodule.left_rows);
      emit("right", s.bimodule.right_rows);
      break;
    }
  }
  os << "[bounds]\n";
  os << "pd_bound: " << s.bounds.pd_bound << "\n";
  os << "nilpotency_cap: " << s.bounds.nilpotency_cap << "\n";
  os << "dim_cap: " << s.bounds.dim_cap << "\n";
  os << "iso_trials: " << s.bounds.iso_trials << "\n";
  os << "seed: " << s.bounds.seed << "\n";
  os << "[checks]\n";
  for (const auto& c : s.checks) os << c << "\n";
  for (const auto& [name, m] : s.modules) {
    os << "[module " << name << "]\n";
    os << "dimvec:";
    for (std::size_t d : m.dimvec) os << " " << d;
    os << "\n";
    for (const auto& [arrow, entries] : m.arrow_entries) {
      os << "arrow " << arrow << ":";
      for (const auto& e : entries) os << " " << e;
      os << "\n";
    }
  }
  return os.str();
}

namespace {

const std::map<std::string, std::string> kBuiltins = {
    {"paper-example-1",
     "# radical-square-zero 3-cycle Nakayama algebra with M = R e1 (x) e3 R\n"
     "[field]\n"
     "prime 2\n"
     "[algebra]\n"
     "vertices: 3\n"
     "arrow: a1 1 -> 2\n"
     "arrow: a2 2 -> 3\n"
     "arrow: a3 3 -> 1\n"
     "relation: a2*a1\n"
     "relation: a3*a2\n"
     "relation: a1*a3\n"
     "[bimodule]\n"
     "outer: e1 e3\n"
     "[bounds]\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
    {"formal-matrix-A2",
     "# R = k x k with the (1,2)-bimodule k; the tensor ring is the A2 path algebra\n"
     "[field]\n"
     "prime 2\n"
     "[algebra]\n"
     "vertices: 2\n"
     "[bimodule]\n"
     "explicit\n"
     "dim: 1\n"
     "left 0: 1\n"
     "left 1: 0\n"
     "right 0: 0\n"
     "right 1: 1\n"
     "[bounds]\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
    {"zero-bimodule",
     "# degenerate case M = 0 over the 3-cycle algebra: T = R\n"
     "[field]\n"
     "prime 2\n"
     "[algebra]\n"
     "vertices: 3\n"
     "arrow: a1 1 -> 2\n"
     "arrow: a2 2 -> 3\n"
     "arrow: a3 3 -> 1\n"
     "relation: a2*a1\n"
     "relation: a3*a2\n"
     "relation: a1*a3\n"
     "[bimodule]\n"
     "zero\n"
     "[bounds]\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
    {"a2-path",
     "# the hereditary A2 path algebra with M = 0\n"
     "[field]\n"
     "prime 2\n"
     "[algebra]\n"
     "vertices: 2\n"
     "arrow: a 1 -> 2\n"
     "[bimodule]\n"
     "zero\n"
     "[bounds]\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
    {"loop-x2",
     "# k[x]/(x^2) with M = 0\n"
     "[field]\n"
     "rationals\n"
     "[algebra]\n"
     "vertices: 1\n"
     "arrow: x 1 -> 1\n"
     "relation: x*x\n"
     "[bimodule]\n"
     "zero\n"
     "[bounds]\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
    {"loop-x2-simple",
     "# k[x]/(x^2) with the simple bimodule k: not nilpotent, audits are inconclusive\n"
     "[field]\n"
     "rationals\n"
     "[algebra]\n"
     "vertices: 1\n"
     "arrow: x 1 -> 1\n"
     "relation: x*x\n"
     "[bimodule]\n"
     "explicit\n"
     "dim: 1\n"
     "left 0: 1\n"
     "left 1: 0\n"
     "right 0: 1\n"
     "right 1: 0\n"
     "[bounds]\n"
     "nilpotency_cap: 6\n"
     "seed: 2024\n"
     "[checks]\n"
     "all\n"},
};

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : kBuiltins) out.push_back(k);
    return out;
  }();
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  auto it = kBuiltins.find(name);
  if (it == kBuiltins.end()) {
    std::string known;
    for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
    fail(Errc::ValidationError, "unknown builtin '" + name + "' (known: " + known + ")");
  }
  return parse_scenario_text(it->second, name);
}

Realized realize(const Scenario& s) {
  Realized rz;
  rz.scenario = s;
  if (s.algebra.kind == AlgebraSpec::Kind::Quiver) {
    rz.algebra = build_from_quiver(s.algebra.presentation, s.field);
  } else {
    const RawAlgebraSpec& r = s.algebra.raw;
    require(r.dim > 0, Errc::ValidationError, "raw algebra needs dim");
    std::vector<std::string> labels = r.labels;
    if (labels.empty())
      for (std::size_t i = 0; i < r.dim; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<Matrix> left(r.dim, Matrix(s.field, r.dim, r.dim));
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j) {
        const auto& entries = r.products[i * r.dim + j];
        if (entries.empty()) continue;  // zero product
        require(entries.size() == r.dim, Errc::ValidationError,
                "product " + std::to_string(i) + " " + std::to_string(j) +
                    " needs dim entries");
        for (std::size_t k = 0; k < r.dim; ++k)
          left[i].set_from_string(k, j, entries[k]);
      }
    Matrix unit = matrix_from_entries(s.field, r.dim, 1, r.unit);
    std::vector<Matrix> idems;
    for (const auto& e : r.idempotents)
      idems.push_back(matrix_from_entries(s.field, r.dim, 1, e));
    std::optional<Matrix> rad;
    if (r.radical_given) {
      Matrix m(s.field, r.dim, r.radical_columns.size());
      for (std::size_t c = 0; c < r.radical_columns.size(); ++c) {
        require(r.radical_columns[c].size() == r.dim, Errc::ValidationError,
                "radical column needs dim entries");
        for (std::size_t k = 0; k < r.dim; ++k)
          m.set_from_string(k, c, r.radical_columns[c][k]);
      }
      rad = std::move(m);
    }
    rz.algebra = build_from_structure_constants(s.field, std::move(labels), std::move(left),
                                                std::move(unit), std::move(idems),
                                                std::move(rad));
  }

  switch (s.bimodule.kind) {
    case BimoduleSpec::Kind::Zero:
      rz.bimodule = zero_bimodule(rz.algebra);
      break;
    case BimoduleSpec::Kind::OuterSum: {
      std::vector<Bimodule> parts;
      for (const auto& [li, rj] : s.bimodule.outer_pairs) {
        std::size_t i = rz.algebra->idempotent_index_of_label(li);
        std::size_t j = rz.algebra->idempotent_index_of_label(rj);
        Module p = simples_and_projectives(rz.algebra).projectives[i];
        Module q = simples_and_projectives(rz.algebra, Side::Right).projectives[j];
        parts.push_back(outer_tensor(p, q));
      }
      rz.bimodule = bimodule_direct_sum(parts, rz.algebra, rz.algebra);
      break;
    }
    case BimoduleSpec::Kind::Explicit: {
      require(s.bimodule.left_rows.size() == rz.algebra->dim() &&
                  s.bimodule.right_rows.size() == rz.algebra->dim(),
              Errc::ValidationError, "explicit bimodule needs one matrix per basis element");
      std::vector<Matrix> left, right;
      for (const auto& rows : s.bimodule.left_rows)
        left.push_back(matrix_from_entries(s.field, s.bimodule.dim, s.bimodule.dim, rows));
      for (const auto& rows : s.bimodule.right_rows)
        right.push_back(matrix_from_entries(s.field, s.bimodule.dim, s.bimodule.dim, rows));
      rz.bimodule = Bimodule::make(rz.algebra, rz.algebra, std::move(left), std::move(right));
      break;
    }
  }
  return rz;
}

Module realize_module(const Realized& rz, const std::string& name) {
  auto it = rz.scenario.modules.find(name);
  require(it != rz.scenario.modules.end(), Errc::ValidationError,
          "no module literal named '" + name + "'");
  require(rz.algebra->is_quiver_presented(), Errc::ValidationError,
          "module literals need a quiver-presented algebra");
  const ModuleLiteral& lit = it->second;
  const Presentation& pres = *rz.algebra->origin().presentation;
  const Quiver& q = pres.quiver;
  require(lit.dimvec.size() == q.vertex_count, Errc::ValidationError,
          "dimvec length must equal the vertex count");
  const FieldSpec f = rz.algebra->field();

  std::vector<std::size_t> offset(q.vertex_count, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    offset[v] = total;
    total += lit.dimvec[v];
  }
  std::vector<Matrix> arrow_mat;
  for (const Arrow& ar : q.arrows) {
    auto ent = lit.arrow_entries.find(ar.name);
    std::size_t rows = lit.dimvec[ar.target], cols = lit.dimvec[ar.source];
    Matrix m(f, rows, cols);
    if (ent != lit.arrow_entries.end()) {
      std::vector<std::string> cleaned;
      for (const auto& e : ent->second)
        if (e != "/") cleaned.push_back(e);
      require(cleaned.size() == rows * cols, Errc::ValidationError,
              "arrow " + ar.name + " matrix entry count");
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_from_string(i, j, cleaned[i * cols + j]);
    }
    arrow_mat.push_back(std::move(m));
  }
  const std::vector<Path>& paths = rz.algebra->basis_paths();
  std::vector<Matrix> act(rz.algebra->dim(), Matrix(f, total, total));
  for (std::size_t b = 0; b < rz.algebra->dim(); ++b) {
    const Path& path = paths[b];
    Matrix block = Matrix::identity(f, lit.dimvec[path.source]);
    for (std::size_t step : path.arrows) block = arrow_mat[step] * block;
    std::size_t tv = path.target(q);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        act[b].copy_entry(offset[tv] + i, offset[path.source] + j, block, i, j);
  }
  Module m = Module::make_unchecked(rz.algebra, Side::Left, total, std::move(act));
  m.validate();  // catches relation violations in the literal
  return m;
}

}  // namespace tenring
