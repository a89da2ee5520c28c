#include "artin/tree_cycles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "artin/classification.hpp"
#include "artin/curvature.hpp"
#include "artin/errors.hpp"

namespace artin {

namespace {

char mark_char(Mark m) { return m == Mark::Big ? 'B' : 'S'; }

std::string marks_to_string(const std::vector<Mark>& ms) {
  std::string s;
  for (Mark m : ms) s += mark_char(m);
  return s;
}

std::vector<Mark> parse_marks(std::string_view s) {
  std::vector<Mark> out;
  for (char c : s) {
    if (c == 'S' || c == 's') out.push_back(Mark::Small);
    else if (c == 'B' || c == 'b') out.push_back(Mark::Big);
    else throw std::invalid_argument(std::string("unknown mark '") + c + "' (expected S or B)");
  }
  return out;
}

std::vector<Mark> least_reversal(std::vector<Mark> path) {
  std::vector<Mark> rev(path.rbegin(), path.rend());
  return std::min(path, rev);
}

std::vector<std::vector<Mark>> binary_words(int length, int ones) {
  std::vector<std::vector<Mark>> out;
  if (ones < 0 || ones > length) return out;
  for (unsigned mask = 0; mask < (1u << length); ++mask) {
    if (std::popcount(mask) != ones) continue;
    std::vector<Mark> w(length, Mark::Small);
    for (int i = 0; i < length; ++i)
      if (mask & (1u << i)) w[i] = Mark::Big;
    out.push_back(std::move(w));
  }
  return out;
}

bool is_minimal_triangle(const TreeCycleConfig& c) { return c.k() == 3 && c.big_count() == 0; }

}  // namespace

std::vector<Mark> canonical_necklace(const std::vector<Mark>& marks) {
  const std::size_t k = marks.size();
  std::vector<Mark> best = marks;
  std::vector<Mark> cand(k);
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < k; ++i)
        cand[i] = dir == 0 ? marks[(r + i) % k] : marks[(r + k - i) % k];
      if (cand < best) best = cand;
    }
  return best;
}

TreeCycleConfig::TreeCycleConfig(std::vector<Mark> marks, bool simple)
    : marks_(canonical_necklace(marks)), simple_(simple) {
  if (marks_.size() < 3) throw std::invalid_argument("a cycle of standard trees needs k >= 3");
}

TreeCycleConfig TreeCycleConfig::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<int> k;
  std::optional<std::vector<Mark>> marks;
  for (std::string tok; in >> tok;) {
    if (tok.rfind("k=", 0) == 0) {
      k = std::stoi(tok.substr(2));
    } else if (tok.rfind("marks=", 0) == 0) {
      marks = parse_marks(tok.substr(6));
    } else {
      marks = parse_marks(tok);
    }
  }
  if (!marks) throw std::invalid_argument("config needs a mark string such as SSBS");
  if (k && *k != static_cast<int>(marks->size()))
    throw std::invalid_argument("k=" + std::to_string(*k) + " disagrees with " + std::to_string(marks->size()) + " marks");
  return TreeCycleConfig(*marks);
}

int TreeCycleConfig::big_count() const {
  return static_cast<int>(std::count(marks_.begin(), marks_.end(), Mark::Big));
}

std::string TreeCycleConfig::marks_string() const { return marks_to_string(marks_); }

std::string TreeCycleConfig::to_string() const {
  return "k=" + std::to_string(k()) + " marks=" + marks_string();
}

int config_wg(const TreeCycleConfig& c) { return c.k() + c.big_count(); }

std::vector<TreeCycleConfig> enumerate_simple_configs(int w) {
  std::set<TreeCycleConfig> found;
  for (int k = std::max(3, (w + 1) / 2); k <= w; ++k)
    for (auto& word : binary_words(k, w - k)) found.insert(TreeCycleConfig(std::move(word)));
  return {found.begin(), found.end()};
}

WedgeConfig::WedgeConfig(std::vector<Mark> first_path, std::vector<Mark> second_path, Mark gluing)
    : first_(least_reversal(std::move(first_path))),
      second_(least_reversal(std::move(second_path))),
      gluing_(gluing) {
  if (first_.size() < 2 || second_.size() < 2)
    throw std::invalid_argument("each lobe of a wedge needs at least 3 trees");
  auto key = [](const std::vector<Mark>& p) { return std::pair{p.size(), p}; };
  if (key(second_) < key(first_)) std::swap(first_, second_);
}

int WedgeConfig::tree_count() const {
  return static_cast<int>(first_.size() + second_.size());
}

TreeCycleConfig WedgeConfig::first() const {
  auto ms = first_;
  ms.push_back(gluing_);
  return TreeCycleConfig(std::move(ms));
}

TreeCycleConfig WedgeConfig::second() const {
  auto ms = second_;
  ms.push_back(gluing_);
  return TreeCycleConfig(std::move(ms));
}

std::string WedgeConfig::to_string() const {
  return "wedge trees=" + std::to_string(tree_count()) + " lobes=" + marks_to_string(first_) + "|" +
         marks_to_string(second_) + " glue=" + mark_char(gluing_);
}

int wedge_wg(const WedgeConfig& c) {
  const auto big = [](const std::vector<Mark>& p) {
    return static_cast<int>(std::count(p.begin(), p.end(), Mark::Big));
  };
  return c.tree_count() + big(c.first_path()) + big(c.second_path());
}

std::vector<WedgeConfig> enumerate_wedge_configs(int w) {
  std::set<WedgeConfig> found;
  for (int n = 4; n <= w; ++n) {
    const int bigs = w - n;
    // lobe sizes k1 + k2 = n + 2; path lengths k1 - 1 and k2 - 1 sum to n
    for (int p1 = 2; p1 <= n - 2; ++p1) {
      for (const auto& word : binary_words(n, bigs))
        for (Mark glue : {Mark::Small, Mark::Big}) {
          WedgeConfig c({word.begin(), word.begin() + p1}, {word.begin() + p1, word.end()}, glue);
          const auto a = c.first(), b = c.second();
          if (std::min(config_wg(a), config_wg(b)) >= w) continue;
          if (is_minimal_triangle(a) || is_minimal_triangle(b)) continue;
          found.insert(std::move(c));
        }
    }
  }
  return {found.begin(), found.end()};
}

BudgetVerdict budget_check(const TreeCycleConfig& c, const ClassBudget& b) {
  if (b.type0_cap && *b.type0_cap >= 2) throw std::invalid_argument("type-0 cap must be < 2");
  BudgetVerdict v;
  std::ostringstream cert;
  cert << c.small_count() << "*(" << to_string(b.small_cap) << ") + " << c.big_count() << "*("
       << to_string(b.big_cap) << ") + ";
  if (!b.type0_cap) {
    cert << "(-inf) = -inf < 2";
    v.feasible = false;
    v.certificate = cert.str();
    return v;
  }
  const Rational lhs = b.small_cap * c.small_count() + b.big_cap * c.big_count() + *b.type0_cap;
  v.lhs = lhs;
  v.feasible = !(lhs < 2);
  cert << "(" << to_string(*b.type0_cap) << ") = " << to_string(lhs) << (v.feasible ? " >= 2" : " < 2");
  v.certificate = cert.str();
  return v;
}

namespace {

// Whether g has an induced cycle with at least `min_length` vertices. Returns true
// when the step budget runs out, which only loosens the resulting cap.
bool has_long_induced_cycle(const DefiningGraph& g, int min_length, long step_budget = 2'000'000) {
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  long steps = 0;
  bool found = false;

  std::function<void()> extend = [&]() {
    const int s = path.front();
    for (int w : g.neighbours(path.back())) {
      if (found) return;
      if (++steps > step_budget) {
        found = true;
        return;
      }
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, s)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) found = true;
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend();
    on_path[s] = 0;
  }
  return found;
}

}  // namespace

ClassBudget class_budget_from_graph(const DefiningGraph& g, Metric metric) {
  if (!is_two_dimensional(g)) throw ScopeError("two-dimensional");
  ClassBudget b;
  if (metric == Metric::Cubical) {
    const auto gi = girth(g);
    if (gi == ExtendedLength::finite(3)) throw ScopeError("girth >= 4");
    if (gi.is_finite()) b.type0_cap = Rational(4 - gi.value(), 2);
    return b;
  }
  for (const auto& c : induced_cycles(g, 6)) {
    const Rational bound = type0_bound_simplicial(g, c);
    if (!b.type0_cap || bound > *b.type0_cap) b.type0_cap = bound;
  }
  if (has_long_induced_cycle(g, 7) && (!b.type0_cap || *b.type0_cap < -1)) b.type0_cap = Rational(-1);
  return b;
}

LowerBoundReport lower_bound_report(const DefiningGraph& g) {
  if (!is_two_dimensional(g)) throw ScopeError("two-dimensional");
  LowerBoundReport r;
  r.length_bound = girth(g);
  const bool triangle_free = r.length_bound > ExtendedLength::finite(3);
  if (triangle_free || is_hyperbolic_type(g)) {
    r.wg_bound = weighted_girth(g);
  } else {
    r.wg_omitted_reason = "neither triangle-free nor of hyperbolic type";
  }
  return r;
}

}  // namespace artin
