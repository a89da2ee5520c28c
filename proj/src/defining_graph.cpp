#include "artin/defining_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "artin/errors.hpp"

namespace artin {

int DefiningGraph::add_vertex(std::string_view id) {
  if (id.empty()) throw std::invalid_argument("empty vertex identifier");
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  const int idx = vertex_count();
  names_.emplace_back(id);
  index_.emplace(std::string(id), idx);
  adj_.emplace_back();
  return idx;
}

void DefiningGraph::add_edge(std::string_view a, std::string_view b, int label) {
  if (a == b) throw std::invalid_argument("self-loop on vertex '" + std::string(a) + "'");
  if (label < 2) throw std::invalid_argument("label " + std::to_string(label) + " < 2");
  const int u = add_vertex(a);
  const int v = add_vertex(b);
  add_edge(u, v, label);
}

void DefiningGraph::add_edge(int u, int v, int label) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex '" + names_[u] + "'");
  if (label < 2) throw std::invalid_argument("label " + std::to_string(label) + " < 2");
  if (u > v) std::swap(u, v);
  if (labels_.count({u, v}))
    throw std::invalid_argument("duplicate edge {" + names_[u] + ", " + names_[v] + "}");
  labels_.emplace(std::pair{u, v}, label);
  edges_.push_back({u, v, label});
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

std::optional<int> DefiningGraph::index_of(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<int> DefiningGraph::label(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (auto it = labels_.find({u, v}); it != labels_.end()) return it->second;
  return std::nullopt;
}

std::vector<int> CycleSubgraph::labels(const DefiningGraph& g) const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto m = g.label(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!m) throw std::invalid_argument("cycle uses a non-edge");
    out.push_back(*m);
  }
  return out;
}

void CycleSubgraph::validate(const DefiningGraph& g) const {
  if (vertices.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats a vertex");
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("cycle vertex out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int a = vertices[i];
    const int b = vertices[(i + 1) % vertices.size()];
    if (!g.adjacent(a, b))
      throw std::invalid_argument("{" + g.name(a) + ", " + g.name(b) + "} is not an edge");
  }
}

DefiningGraph parse_graph(std::string_view text) {
  DefiningGraph g;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "expected `vertex <id>`");
      g.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "expected `edge <id> <id> <label>`");
      int label = 0;
      const auto& s = tok[3];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), label);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line_no, "non-integer label '" + s + "'");
      if (tok[1] == tok[2]) throw ParseError(line_no, "self-loop on vertex '" + tok[1] + "'");
      if (label < 2) throw ParseError(line_no, "label " + s + " < 2");
      const auto u = g.index_of(tok[1]);
      const auto v = g.index_of(tok[2]);
      if (u && v && g.adjacent(*u, *v))
        throw ParseError(line_no, "duplicate edge {" + tok[1] + ", " + tok[2] + "}");
      g.add_edge(tok[1], tok[2], label);
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  return g;
}

ExtendedLength girth(const DefiningGraph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return ExtendedLength::infinite();
  return ExtendedLength::finite(best);
}

DefiningGraph subdivide_big(const DefiningGraph& g) {
  DefiningGraph out;
  for (const auto& name : g.vertices()) out.add_vertex(name);
  for (const auto& e : g.edges()) {
    if (e.label < 3) {
      out.add_edge(e.u, e.v, 2);
      continue;
    }
    std::string a = g.name(e.u), b = g.name(e.v);
    if (b < a) std::swap(a, b);
    std::string mid = a + "__" + b + "__mid";
    while (out.index_of(mid)) mid += "_";
    const int m = out.add_vertex(mid);
    out.add_edge(e.u, m, 2);
    out.add_edge(m, e.v, 2);
  }
  return out;
}

ExtendedLength weighted_girth(const DefiningGraph& g) { return girth(subdivide_big(g)); }

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Groups vertices by representative, classes ordered by least member.
OddPartition partition_from(DisjointSets& ds, int n) {
  OddPartition p;
  p.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = ds.find(v);
    if (p.class_of[r] < 0) {
      p.class_of[r] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[v] = p.class_of[r];
    p.classes[p.class_of[v]].push_back(v);
  }
  return p;
}

}  // namespace

OddPartition odd_classes(const DefiningGraph& g) {
  DisjointSets ds(g.vertex_count());
  for (const auto& e : g.edges())
    if (e.label % 2 == 1) ds.unite(e.u, e.v);
  return partition_from(ds, g.vertex_count());
}

int abelianization_rank(const DefiningGraph& g) {
  return static_cast<int>(odd_classes(g).classes.size());
}

std::vector<int> leaves(const DefiningGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> connected_components(const DefiningGraph& g) {
  DisjointSets ds(g.vertex_count());
  for (const auto& e : g.edges()) ds.unite(e.u, e.v);
  return partition_from(ds, g.vertex_count()).classes;
}

int component_count(const DefiningGraph& g) {
  return static_cast<int>(connected_components(g).size());
}

bool is_connected(const DefiningGraph& g) { return component_count(g) <= 1; }

std::vector<CycleSubgraph> induced_cycles(const DefiningGraph& g, int max_length) {
  std::vector<CycleSubgraph> out;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // path is an induced path starting at its least vertex; extend by one vertex.
  std::function<void()> extend = [&]() {
    const int s = path.front();
    const int last = path.back();
    for (int w : g.neighbours(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(w, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      const bool closes = path.size() >= 2 && g.adjacent(w, s);
      if (closes) {
        if (path[1] < w) {
          CycleSubgraph c{path};
          c.vertices.push_back(w);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_length) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend();
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const CycleSubgraph& a, const CycleSubgraph& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

std::optional<std::vector<int>> labelled_isomorphic(const DefiningGraph& g, const DefiningGraph& h) {
  if (g.vertex_count() > kIsomorphismVertexBudget || h.vertex_count() > kIsomorphismVertexBudget)
    throw BudgetError("labelled isomorphism search limited to " +
                      std::to_string(kIsomorphismVertexBudget) + " vertices");
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  auto label_multiset = [](const DefiningGraph& x) {
    std::vector<int> ls;
    for (const auto& e : x.edges()) ls.push_back(e.label);
    std::sort(ls.begin(), ls.end());
    return ls;
  };
  if (label_multiset(g) != label_multiset(h)) return std::nullopt;

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || g.degree(i) != h.degree(j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = g.label(i, k) == h.label(j, map[k]);
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (place(i + 1)) return true;
      used[j] = 0;
    }
    map[i] = -1;
    return false;
  };
  if (place(0)) return map;
  return std::nullopt;
}

std::string to_text(const DefiningGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.vertices()) out << "vertex " << name << '\n';
  std::vector<std::tuple<std::string, std::string, int>> es;
  for (const auto& e : g.edges()) {
    std::string a = g.name(e.u), b = g.name(e.v);
    if (b < a) std::swap(a, b);
    es.emplace_back(a, b, e.label);
  }
  std::sort(es.begin(), es.end());
  for (const auto& [a, b, m] : es) out << "edge " << a << ' ' << b << ' ' << m << '\n';
  return out.str();
}

std::string graph_hash(const DefiningGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_text(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace artin
