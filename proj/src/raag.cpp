#include "artin/raag.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "artin/classification.hpp"
#include "artin/errors.hpp"

namespace artin {

RaagWord RaagWord::inverse() const {
  RaagWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

RaagWord operator*(const RaagWord& a, const RaagWord& b) {
  RaagWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Raag::Raag(DefiningGraph graph) : graph_(std::move(graph)) {
  if (!is_right_angled(graph_)) throw ScopeError("right-angled");
}

RaagWord Raag::parse_word(std::string_view text) const {
  RaagWord w;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    int sign = 1;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    const auto idx = graph_.index_of(tok);
    if (!idx) throw std::invalid_argument("unknown generator '" + tok + "'");
    w.letters.push_back({*idx, sign});
  }
  return w;
}

std::string Raag::format(const RaagWord& w) const {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += graph_.name(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

namespace {

// Cancels one pair s^e ... s^-e whose separating letters all commute with s.
bool cancel_one(const Raag& host, std::vector<Letter>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[j] == ls[i].inverse()) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(j));
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      if (!host.commute(ls[i].gen, ls[j].gen)) break;
    }
  }
  return false;
}

// Least shuffle: repeatedly emit the least letter that commutes with everything before it.
std::vector<Letter> least_shuffle(const Raag& host, std::vector<Letter> rest) {
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      bool front = true;
      for (std::size_t q = 0; q < p && front; ++q) front = host.commute(rest[q].gen, rest[p].gen);
      if (front && rest[p] < rest[best]) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

void check_letters(const Raag& host, const RaagWord& w) {
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= host.rank()) throw std::invalid_argument("unknown generator index");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

}  // namespace

RaagWord normal_form(const Raag& host, const RaagWord& w) {
  check_letters(host, w);
  auto ls = w.letters;
  while (cancel_one(host, ls)) {
  }
  return RaagWord{least_shuffle(host, std::move(ls))};
}

bool commutes(const Raag& host, const RaagWord& a, const RaagWord& b) {
  return normal_form(host, a * b * a.inverse() * b.inverse()).empty();
}

RaagWord canonical_conjugator(const Raag& host, int base, const RaagWord& g) {
  auto ls = normal_form(host, g).letters;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::size_t p = 0; p < ls.size(); ++p) {
      if (!host.in_star(base, ls[p].gen)) continue;
      bool front = true;
      for (std::size_t q = 0; q < p && front; ++q) front = host.commute(ls[q].gen, ls[p].gen);
      if (front) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p));
        stripped = true;
        break;
      }
    }
  }
  return normal_form(host, RaagWord{std::move(ls)});
}

ExtVertex make_ext_vertex(const Raag& host, int base, const RaagWord& g) {
  if (base < 0 || base >= host.rank()) throw std::invalid_argument("unknown base generator");
  return {base, canonical_conjugator(host, base, g)};
}

RaagWord ext_element(const ExtVertex& v) {
  return v.conjugator.inverse() * RaagWord{{{v.base, 1}}} * v.conjugator;
}

bool ExtBall::adjacent(int a, int b) const {
  const auto& n = adjacency.at(a);
  return std::binary_search(n.begin(), n.end(), b);
}

std::size_t ExtBall::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency) twice += n.size();
  return twice / 2;
}

ExtBall ext_ball(const Raag& host, int radius, std::size_t budget) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::set<RaagWord> elements{RaagWord{}};
  std::vector<RaagWord> frontier{RaagWord{}};
  std::set<ExtVertex> found;

  auto add_vertices = [&](const std::vector<RaagWord>& words) {
    for (const auto& g : words)
      for (int v = 0; v < host.rank(); ++v) {
        found.insert(make_ext_vertex(host, v, g));
        if (found.size() > budget)
          throw BudgetError("extension ball exceeds the budget of " + std::to_string(budget) +
                            " vertices (reached " + std::to_string(found.size()) + ")");
      }
  };
  add_vertices(frontier);

  for (int len = 1; len <= radius; ++len) {
    std::vector<RaagWord> next;
    for (const auto& g : frontier)
      for (int s = 0; s < host.rank(); ++s)
        for (int sign : {1, -1}) {
          auto w = normal_form(host, g * RaagWord{{{s, sign}}});
          if (static_cast<int>(w.size()) != len || !elements.insert(w).second) continue;
          next.push_back(std::move(w));
          if (elements.size() > budget * static_cast<std::size_t>(std::max(1, host.rank())))
            throw BudgetError("extension ball exceeds the budget of " + std::to_string(budget) +
                              " vertices (reached " + std::to_string(found.size()) + ")");
        }
    add_vertices(next);
    frontier = std::move(next);
  }

  ExtBall ball;
  ball.radius = radius;
  ball.vertices.assign(found.begin(), found.end());
  ball.adjacency.assign(ball.vertices.size(), {});
  std::vector<RaagWord> elems;
  elems.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) elems.push_back(ext_element(v));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (commutes(host, elems[i], elems[j])) {
        ball.adjacency[i].push_back(static_cast<int>(j));
        ball.adjacency[j].push_back(static_cast<int>(i));
      }
  for (auto& n : ball.adjacency) std::sort(n.begin(), n.end());
  return ball;
}

AdjacencyLists adjacency_of(const DefiningGraph& g) {
  AdjacencyLists adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    adj[v] = g.neighbours(v);
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

std::optional<std::vector<int>> find_induced(const AdjacencyLists& pattern, const AdjacencyLists& host) {
  const int np = static_cast<int>(pattern.size());
  const int nh = static_cast<int>(host.size());
  if (np > nh) return std::nullopt;
  auto linked = [](const AdjacencyLists& g, int a, int b) {
    return std::binary_search(g[a].begin(), g[a].end(), b);
  };

  // Visit pattern vertices component by component in BFS order, highest degree first.
  std::vector<int> order;
  std::vector<char> seen(np, 0);
  while (static_cast<int>(order.size()) < np) {
    int root = -1;
    for (int v = 0; v < np; ++v)
      if (!seen[v] && (root < 0 || pattern[v].size() > pattern[root].size())) root = v;
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (int w : pattern[order[head]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> anchor(np, -1);  // an earlier-placed neighbour, if any
  std::vector<int> position(np);
  for (int i = 0; i < np; ++i) position[order[i]] = i;
  for (int i = 0; i < np; ++i)
    for (int w : pattern[order[i]])
      if (position[w] < i && (anchor[i] < 0 || position[w] < position[anchor[i]])) anchor[i] = w;

  std::vector<int> image(np, -1);
  std::vector<char> used(nh, 0);
  std::vector<int> all(nh);
  for (int h = 0; h < nh; ++h) all[h] = h;

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == np) return true;
    const int p = order[i];
    const auto& candidates = anchor[i] >= 0 ? host[image[anchor[i]]] : all;
    for (int h : candidates) {
      if (used[h] || host[h].size() < pattern[p].size()) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int q = order[j];
        ok = linked(pattern, p, q) == linked(host, h, image[q]);
      }
      if (!ok) continue;
      image[p] = h;
      used[h] = 1;
      if (place(i + 1)) return true;
      used[h] = 0;
      image[p] = -1;
    }
    return false;
  };
  if (place(0)) return image;
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced(const DefiningGraph& pattern, const ExtBall& ball) {
  return find_induced(adjacency_of(pattern), ball.adjacency);
}

std::optional<EmbeddingCertificate> certify_raag_embedding(const DefiningGraph& pattern, const DefiningGraph& host,
                                                           int radius, std::size_t budget) {
  Raag raag(host);
  if (!triangle_census(host).empty()) throw ScopeError("triangle-free");
  const auto ball = ext_ball(raag, radius, budget);
  auto injection = find_induced(pattern, ball);
  if (!injection) return std::nullopt;
  EmbeddingCertificate cert{radius, *injection, {}};
  for (int h : cert.injection) cert.images.push_back(ball.vertices[h]);
  return cert;
}

}  // namespace artin
