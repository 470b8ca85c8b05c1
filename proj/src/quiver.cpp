#include "tenring/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tenring {

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  fail(Errc::MalformedRelation, "unknown arrow '" + name + "'");
}

void Quiver::validate() const {
  require(vertex_count > 0, Errc::ValidationError, "quiver needs at least one vertex");
  std::set<std::string> names;
  for (const Arrow& a : arrows) {
    require(!a.name.empty(), Errc::ValidationError, "empty arrow name");
    require(names.insert(a.name).second, Errc::ValidationError,
            "duplicate arrow name '" + a.name + "'");
    require(a.source < vertex_count && a.target < vertex_count, Errc::ValidationError,
            "arrow '" + a.name + "' endpoint out of range");
  }
}

std::string Path::label(const Quiver& q) const {
  if (arrows.empty()) return "e" + std::to_string(source + 1);
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[*it].name;
  }
  return s;
}

void Presentation::validate() const {
  quiver.validate();
  for (const auto& rel : relations) {
    require(rel.size() >= 2, Errc::MalformedRelation,
            "relation of length " + std::to_string(rel.size()) + " (need >= 2)");
    for (std::size_t t = 0; t < rel.size(); ++t) {
      require(rel[t] < quiver.arrows.size(), Errc::MalformedRelation,
              "relation uses an unknown arrow");
      if (t > 0)
        require(quiver.arrows[rel[t - 1]].target == quiver.arrows[rel[t]].source,
                Errc::MalformedRelation, "relation path is not composable");
    }
  }
}

Presentation Presentation::reversed() const {
  Presentation r;
  r.quiver.vertex_count = quiver.vertex_count;
  for (const Arrow& a : quiver.arrows) r.quiver.arrows.push_back({a.name, a.target, a.source});
  for (const auto& rel : relations) {
    std::vector<std::size_t> rev(rel.rbegin(), rel.rend());
    r.relations.push_back(std::move(rev));
  }
  return r;
}

bool path_contains_relation_suffix(const Presentation& p,
                                   const std::vector<std::size_t>& arrows) {
  for (const auto& rel : p.relations) {
    if (rel.size() > arrows.size()) continue;
    if (std::equal(rel.begin(), rel.end(), arrows.end() - rel.size())) return true;
  }
  return false;
}

namespace {

// State of the suffix automaton: current end vertex plus the last
// (max relation length - 1) arrows. A transition that completes a relation
// window is forbidden; a reachable cycle yields infinitely many clean paths.
struct SuffixState {
  std::size_t vertex;
  std::vector<std::size_t> suffix;
  friend auto operator<=>(const SuffixState&, const SuffixState&) = default;
};

void detect_infinite(const Presentation& p) {
  std::size_t window = 0;
  for (const auto& rel : p.relations) window = std::max(window, rel.size());
  const std::size_t keep = window == 0 ? 0 : window - 1;

  std::map<SuffixState, std::size_t> ids;
  std::vector<SuffixState> states;
  std::vector<std::vector<std::size_t>> next;
  auto intern = [&](SuffixState s) {
    auto [it, fresh] = ids.emplace(std::move(s), states.size());
    if (fresh) {
      states.push_back(it->first);
      next.emplace_back();
    }
    return it->second;
  };

  for (std::size_t v = 0; v < p.quiver.vertex_count; ++v) intern({v, {}});
  for (std::size_t s = 0; s < states.size(); ++s) {
    SuffixState cur = states[s];
    for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
      if (p.quiver.arrows[a].source != cur.vertex) continue;
      std::vector<std::size_t> ext = cur.suffix;
      ext.push_back(a);
      if (path_contains_relation_suffix(p, ext)) continue;
      if (ext.size() > keep) ext.erase(ext.begin(), ext.end() - keep);
      // intern may reallocate `next`; take the id before indexing into it
      std::size_t id = intern({p.quiver.arrows[a].target, std::move(ext)});
      next[s].push_back(id);
    }
  }

  // cycle detection by iterative DFS with colors
  std::vector<int> color(states.size(), 0);
  for (std::size_t root = 0; root < states.size(); ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i < next[s].size()) {
        std::size_t t = next[s][i++];
        if (color[t] == 1)
          fail(Errc::InfiniteDimensional,
               "a relation-free cyclic path exists; the algebra is infinite-dimensional");
        if (color[t] == 0) {
          color[t] = 1;
          stack.push_back({t, 0});
        }
      } else {
        color[s] = 2;
        stack.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<Path> enumerate_relation_free_paths(const Presentation& p) {
  p.validate();
  detect_infinite(p);

  std::vector<Path> basis;
  for (std::size_t v = 0; v < p.quiver.vertex_count; ++v) basis.push_back({v, {}});
  std::size_t frontier_begin = 0;
  while (frontier_begin < basis.size()) {
    std::size_t frontier_end = basis.size();
    for (std::size_t t = frontier_begin; t < frontier_end; ++t) {
      Path cur = basis[t];
      std::size_t end = cur.target(p.quiver);
      for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
        if (p.quiver.arrows[a].source != end) continue;
        Path ext = cur;
        ext.arrows.push_back(a);
        if (!path_contains_relation_suffix(p, ext.arrows)) basis.push_back(std::move(ext));
      }
    }
    frontier_begin = frontier_end;
  }
  return basis;
}

}  // namespace tenring
