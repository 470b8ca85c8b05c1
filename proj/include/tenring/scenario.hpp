#ifndef TENRING_SCENARIO_HPP
#define TENRING_SCENARIO_HPP

#include <map>
#include <string>

#include "tenring/gorenstein.hpp"

namespace tenring {

// Declarative input for one verification run. The text format is
// line-oriented with [field] / [algebra] / [bimodule] / [bounds] / [checks]
// sections and '#' comments; an equivalent JSON form is accepted for machine
// use. See the README for the grammar.
struct Bounds {
  std::size_t pd_bound = 24;
  std::size_t nilpotency_cap = 16;
  std::size_t dim_cap = 6;
  std::size_t iso_trials = 8;
  std::uint64_t seed = 0;

  HomologyOptions homology(std::uint64_t salt = 0) const {
    return HomologyOptions{pd_bound, iso_trials, seed ^ salt};
  }
};

struct RawAlgebraSpec {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  // entries of b_i * b_j as dim strings, keyed row-major by (i, j)
  std::vector<std::vector<std::string>> products;
  std::vector<std::string> unit;
  std::vector<std::vector<std::string>> idempotents;
  std::vector<std::vector<std::string>> radical_columns;
  bool radical_given = false;
};

struct AlgebraSpec {
  enum class Kind { Quiver, Raw } kind = Kind::Quiver;
  Presentation presentation;
  RawAlgebraSpec raw;
};

struct BimoduleSpec {
  enum class Kind { Zero, OuterSum, Explicit } kind = Kind::Zero;
  std::vector<std::pair<std::string, std::string>> outer_pairs;
  std::size_t dim = 0;
  std::vector<std::vector<std::string>> left_rows;   // per basis element, row-major
  std::vector<std::vector<std::string>> right_rows;
};

struct ModuleLiteral {
  std::vector<std::size_t> dimvec;
  std::map<std::string, std::vector<std::string>> arrow_entries;  // row-major
};

struct Scenario {
  std::string name;
  FieldSpec field = FieldSpec::prime(2);
  AlgebraSpec algebra;
  BimoduleSpec bimodule;
  Bounds bounds;
  std::vector<std::string> checks{"all"};
  std::map<std::string, ModuleLiteral> modules;
};

Scenario parse_scenario_text(const std::string& text, const std::string& name);
Scenario parse_scenario_json(const std::string& text, const std::string& name);
// dispatches on a leading '{'
Scenario parse_scenario(const std::string& text, const std::string& name);
Scenario load_scenario(const std::string& path);

// canonical serialization; parse(serialize(s)) == s and serialize is stable
std::string serialize_scenario(const Scenario& s);

const std::vector<std::string>& builtin_names();
Scenario builtin_scenario(const std::string& name);

// a scenario with its algebra and bimodule constructed and validated
struct Realized {
  Scenario scenario;
  AlgebraPtr algebra;
  Bimodule bimodule;
};
Realized realize(const Scenario& s);
Module realize_module(const Realized& rz, const std::string& name);

}  // namespace tenring

#endif
