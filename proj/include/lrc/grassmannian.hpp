#pragma once

// The cluster structure on the homogeneous coordinate ring of Gr(2, n+3):
// Pluecker coordinates x_ab are labelled by sides and diagonals of a convex
// (n+3)-gon, clusters by triangulations.

#include "lrc/cluster.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

using Chord = std::pair<int, int>;  // a < b, vertices 1..N
using Triangulation = std::set<Chord>;

std::string chord_name(const Chord& c, int vertices);

struct GrassmannianSeed {
  Seed seed;
  /// Diagonal labelling each cluster variable.
  std::vector<Chord> diagonals;
  /// Side labelling each coefficient row.
  std::vector<Chord> sides;
};

/// Fan triangulation from vertex 1 of the (n+3)-gon. n >= 1.
GrassmannianSeed grassmannian_seed(int n);

/// Every triangulation of the N-gon, as sets of diagonals, sorted.
std::vector<Triangulation> triangulations(int vertices);

/// The diagonal replacing `d` in the triangulation t.
Chord flip(const Triangulation& t, const Chord& d, int vertices);

struct GrassmannianReport {
  bool relations_match = true;   // every exchange relation matches x_ac x_bd = x_ab x_cd + x_ad x_bc
  bool labels_consistent = true; // one Laurent polynomial per diagonal
  bool clusters_match = true;    // clusters <-> triangulations is a bijection
  bool edges_match = true;       // exchange edges <-> flips
  std::size_t clusters = 0;
  std::size_t triangulation_count = 0;
  std::size_t variables = 0;
  std::size_t edges = 0;
  std::size_t flips = 0;
  std::vector<std::string> relations;  // distinct exchange relations, sorted
  std::vector<std::string> mismatches;

  bool pass() const { return relations_match && labels_consistent && clusters_match && edges_match; }
};

/// Walks the exchange graph of grassmannian_seed(n) with diagonal labels and
/// compares it with the independently enumerated flip graph.
GrassmannianReport check_grassmannian(int n, ExplorationCaps caps = {});

}  // namespace lrc
