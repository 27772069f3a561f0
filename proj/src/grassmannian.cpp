#include "lrc/grassmannian.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lrc {

namespace {

bool is_edge(const Triangulation& t, int a, int b, int vertices) {
  if (a > b) std::swap(a, b);
  if (b - a == 1 || (a == 1 && b == vertices)) return true;
  return t.count({a, b}) > 0;
}

void triangulate(int i, int j, std::map<std::pair<int, int>, std::vector<Triangulation>>& memo) {
  if (memo.count({i, j})) return;
  std::vector<Triangulation> out;
  if (j - i < 2) {
    out.push_back({});
  } else {
    for (int k = i + 1; k < j; ++k) {
      triangulate(i, k, memo);
      triangulate(k, j, memo);
      for (const auto& left : memo.at({i, k})) {
        for (const auto& right : memo.at({k, j})) {
          Triangulation t = left;
          t.insert(right.begin(), right.end());
          if (k - i > 1) t.insert({i, k});
          if (j - k > 1) t.insert({k, j});
          out.push_back(std::move(t));
        }
      }
    }
  }
  memo.emplace(std::make_pair(i, j), std::move(out));
}

std::string expected_relation(const Chord& old_d, const Chord& new_d, int vertices) {
  std::vector<int> q{old_d.first, old_d.second, new_d.first, new_d.second};
  std::sort(q.begin(), q.end());
  auto name = [&](int x, int y) { return chord_name({x, y}, vertices); };
  auto mono = [&](std::string x, std::string y) {
    if (y < x) std::swap(x, y);
    return x + "*" + y;
  };
  std::string p = mono(name(q[0], q[1]), name(q[2], q[3]));
  std::string r = mono(name(q[0], q[3]), name(q[1], q[2]));
  if (r < p) std::swap(p, r);
  return name(old_d.first, old_d.second) + "*" + name(new_d.first, new_d.second) + " = " + p + " + " + r;
}

}  // namespace

std::string chord_name(const Chord& c, int vertices) {
  if (vertices < 10) return "x" + std::to_string(c.first) + std::to_string(c.second);
  return "x" + std::to_string(c.first) + "_" + std::to_string(c.second);
}

GrassmannianSeed grassmannian_seed(int n) {
  if (n < 1) throw DomainError("Gr(2, n+3) needs n >= 1");
  const int vertices = n + 3;
  GrassmannianSeed g;
  for (int k = 3; k < vertices; ++k) g.diagonals.push_back({1, k});
  for (int i = 1; i < vertices; ++i) g.sides.push_back({i, i + 1});
  g.sides.push_back({1, vertices});

  std::vector<Chord> all = g.diagonals;
  all.insert(all.end(), g.sides.begin(), g.sides.end());
  std::map<Chord, int> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i]] = static_cast<int>(i);
  const int m = static_cast<int>(all.size());
  IntMatrix full(m, std::vector<int>(m, 0));
  auto arrow = [&](const Chord& from, const Chord& to) {
    full[pos.at(from)][pos.at(to)] += 1;
    full[pos.at(to)][pos.at(from)] -= 1;
  };
  for (int k = 2; k < vertices; ++k) {
    const int a = 1, b = k, c = k + 1;
    arrow({a, b}, {a, c});
    arrow({a, c}, {b, c});
    arrow({b, c}, {a, b});
  }
  IntMatrix entries(m, std::vector<int>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) entries[i][j] = full[i][j];
  }
  std::vector<std::string> names;
  for (const auto& c : all) names.push_back(chord_name(c, vertices));
  g.seed = Seed::initial(ExchangeMatrix(std::move(entries)), std::move(names));
  return g;
}

std::vector<Triangulation> triangulations(int vertices) {
  if (vertices < 3) throw DomainError("a polygon needs at least 3 vertices");
  std::map<std::pair<int, int>, std::vector<Triangulation>> memo;
  triangulate(1, vertices, memo);
  auto out = memo.at({1, vertices});
  std::sort(out.begin(), out.end());
  return out;
}

Chord flip(const Triangulation& t, const Chord& d, int vertices) {
  if (!t.count(d)) throw DomainError("diagonal is not part of the triangulation");
  const auto [a, c] = d;
  int inside = 0, outside = 0;
  for (int v = 1; v <= vertices; ++v) {
    if (v == a || v == c) continue;
    if (!is_edge(t, a, v, vertices) || !is_edge(t, v, c, vertices)) continue;
    (v > a && v < c ? inside : outside) = v;
  }
  if (inside == 0 || outside == 0) throw InternalError("diagonal does not bound two triangles");
  return {std::min(inside, outside), std::max(inside, outside)};
}

GrassmannianReport check_grassmannian(int n, ExplorationCaps caps) {
  const int vertices = n + 3;
  GrassmannianSeed start = grassmannian_seed(n);
  GrassmannianReport report;

  std::vector<std::string> side_names;
  for (const auto& s : start.sides) side_names.push_back(chord_name(s, vertices));

  struct Node {
    Seed seed;
    std::vector<Chord> labels;
  };
  std::map<Triangulation, std::size_t> index;
  std::vector<Node> nodes{{start.seed, start.diagonals}};
  index.emplace(Triangulation(start.diagonals.begin(), start.diagonals.end()), 0);
  std::map<Chord, LaurentPoly> polys;
  for (std::size_t i = 0; i < start.diagonals.size(); ++i) {
    polys.emplace(start.diagonals[i], start.seed.cluster[i]);
  }
  std::set<std::pair<Triangulation, Triangulation>> graph_edges;
  std::set<std::string> relations;

  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (nodes.size() > caps.max_seeds) throw ResourceError("Grassmannian walk exceeds the seed cap");
    const Triangulation here(nodes[s].labels.begin(), nodes[s].labels.end());
    for (int k = 1; k <= n; ++k) {
      const Node& cur = nodes[s];
      const Chord old_d = cur.labels[k - 1];
      const Chord new_d = flip(here, old_d, vertices);
      std::vector<std::string> cluster_names;
      for (const auto& c : cur.labels) cluster_names.push_back(chord_name(c, vertices));
      const std::string text = exchange_relation_text(cluster_names, side_names, cur.seed.matrix, k,
                                                      chord_name(new_d, vertices));
      relations.insert(text);
      if (text != expected_relation(old_d, new_d, vertices)) {
        report.relations_match = false;
        report.mismatches.push_back("relation: " + text);
      }
      Node next{mutate_seed(cur.seed, k), cur.labels};
      next.labels[k - 1] = new_d;
      auto [pit, fresh] = polys.try_emplace(new_d, next.seed.cluster[k - 1]);
      if (!fresh && !(pit->second == next.seed.cluster[k - 1])) {
        report.labels_consistent = false;
        report.mismatches.push_back("two variables for " + chord_name(new_d, vertices));
      }
      Triangulation there(next.labels.begin(), next.labels.end());
      graph_edges.insert(std::minmax(here, there));
      if (index.try_emplace(there, nodes.size()).second) nodes.push_back(std::move(next));
    }
  }

  // Distinct diagonals must carry distinct variables.
  std::set<LaurentPoly> distinct;
  for (const auto& [c, p] : polys) distinct.insert(p);
  if (distinct.size() != polys.size()) {
    report.labels_consistent = false;
    report.mismatches.push_back("two diagonals share a cluster variable");
  }

  const auto all = triangulations(vertices);
  std::set<std::pair<Triangulation, Triangulation>> flips;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      std::vector<Chord> diff;
      std::set_symmetric_difference(all[i].begin(), all[i].end(), all[j].begin(), all[j].end(),
                                    std::back_inserter(diff));
      if (diff.size() == 2) flips.insert(std::minmax(all[i], all[j]));
    }
  }
  std::vector<Triangulation> found;
  for (const auto& [t, id] : index) found.push_back(t);
  report.clusters_match = found == all;
  report.edges_match = graph_edges == flips;
  if (!report.clusters_match) report.mismatches.push_back("clusters differ from triangulations");
  if (!report.edges_match) report.mismatches.push_back("exchange edges differ from flips");

  report.clusters = nodes.size();
  report.triangulation_count = all.size();
  report.variables = polys.size();
  report.edges = graph_edges.size();
  report.flips = flips.size();
  report.relations.assign(relations.begin(), relations.end());
  return report;
}

}  // namespace lrc
