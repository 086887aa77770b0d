#include "mellinop/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mellinop/errors.hpp"

namespace mellinop {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InputError("group: order must be positive");
  if (static_cast<int>(labels_.size()) != n) throw InputError("group: label count differs from table size");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("group: element labels must be distinct");
  }
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("group: Cayley table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("group: table entry out of range");
      if (seen[v]++) throw InputError("group: table row is not a permutation");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw InputError("group: index 0 is not a two-sided identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          std::ostringstream msg;
          msg << "group: table is not associative at (" << a << ", " << b << ", " << c << ")";
          throw InputError(msg.str());
        }
  inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverses_[a] = b;
  modular_.assign(n, 1.0);
}

int FiniteGroup::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic_group: n must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
    for (int j = 0; j < n; ++j) table[k][j] = (k + j) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral_group: n must be positive");
  const int order = 2 * n;
  std::vector<std::string> labels;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b) {
      std::string r = b == 0 ? "" : b == 1 ? "r" : "r^" + std::to_string(b);
      std::string s = a == 0 ? "" : "s";
      std::string lab = s + r;
      labels.push_back(lab.empty() ? "e" : lab);
    }
  // (s^a r^b)(s^c r^d) = s^{a+c} r^{(-1)^c b + d}
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x / n, b = x % n, c = y / n, d = y % n;
      const int rb = c == 0 ? b : (n - b) % n;
      table[x][y] = ((a + c) % 2) * n + (rb + d) % n;
    }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table));
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  // (p*q)(i) = p(q(i))
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_notation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr permutation_group(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw InputError("permutation_group: need at least one generator");
  const std::size_t m = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != m) throw InputError("permutation_group: generators act on different sets");
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < m; ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("permutation_group: generator is not a permutation");
  }
  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> elems{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Permutation y = compose(g, x);
        if (elems.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> list(elems.begin(), elems.end());  // lexicographic; identity first
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  const int n = static_cast<int>(list.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(cycle_notation(list[a]));
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(list[a], list[b]));
  }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric_group: supported for 1 <= n <= 5");
  if (n == 1) return cyclic_group(1);
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permutation_group({swap, cycle});
}

GroupPtr builtin_group(const std::string& name) {
  if (name.size() < 2) throw InputError("unknown built-in group '" + name + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw InputError("");
  } catch (...) {
    throw InputError("unknown built-in group '" + name + "'");
  }
  switch (name[0]) {
    case 'Z': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    case 'S': return symmetric_group(n);
    default: throw InputError("unknown built-in group '" + name + "'");
  }
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> elems{g.identity()};
  std::vector<int> frontier{g.identity()};
  for (int x : generators)
    if (x < 0 || x >= g.order()) throw InputError("generated_subgroup: element index out of range");
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : generators) {
        const int y = g.multiply(x, s);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int x : subset) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int a : subset) {
    if (!in[g.inverse(a)]) return false;
    for (int b : subset)
      if (!in[g.multiply(a, b)]) return false;
  }
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<int> members;
    for (int h = 0; h < g.order(); ++h) members.insert(g.multiply(g.multiply(h, x), g.inverse(h)));
    for (int y : members) cls[y] = static_cast<int>(out.size());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

int element_order(const FiniteGroup& grp, int g) {
  int k = 1;
  for (int x = g; x != grp.identity(); x = grp.multiply(x, g)) ++k;
  return k;
}

}  // namespace mellinop
