#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fpltri/combinat.hpp"
#include "fpltri/numbers.hpp"

namespace fpltri::fpl {

// A grid fragment whose edges are either internal (two vertex endpoints) or
// boundary stubs (one vertex endpoint). Configurations select a subset of
// edges so that every vertex has degree exactly two.
struct Net {
  struct Edge {
    int a;  // vertex
    int b;  // vertex, or -1 - stub_index for a boundary stub
  };

  int nv = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;
  std::vector<signed char> fixed;  // per edge: -1 free, 0 empty, 1 occupied
  int stubs = 0;

  int add_vertex() {
    incident.emplace_back();
    return nv++;
  }

  int add_edge(int a, int b, signed char state = -1) {
    int id = static_cast<int>(edges.size());
    edges.push_back({a, b});
    fixed.push_back(state);
    incident[a].push_back(id);
    if (b >= 0) incident[b].push_back(id);
    return id;
  }

  int add_stub(int v, signed char state = -1) {
    int s = stubs++;
    add_edge(v, -1 - s, state);
    return s;
  }
};

// Enumerate all valid configurations; the callback receives the per-edge
// occupation vector.
void enumerate(const Net& net, const std::function<void(const std::vector<signed char>&)>& cb);

// Pairing of occupied stubs along open paths: pair[s] is the stub reached
// from stub s, or -1 when stub s is empty. Closed loops in the bulk are
// legal and simply not reported.
std::vector<int> trace_paths(const Net& net, const std::vector<signed char>& state);

// Square n x n grid with the alternating boundary condition. Counts
// configurations by the link pattern of the 2n occupied terminals, labeled
// counterclockwise from the bottom-left corner.
std::map<LinkPattern, Int> enumerate_square(int n);

Int square_total(int n);

struct TriKey {
  Diagram sigma, tau;
  LinkPattern pi;
  bool operator<(const TriKey& o) const {
    if (!(sigma == o.sigma)) return sigma < o.sigma;
    if (!(tau == o.tau)) return tau < o.tau;
    return pi < o.pi;
  }
};

// Triangular geometry of order n. Keys carry the diagram sigma labeling the
// left staircase, tau labeling the right one (each the transpose of the
// occupied positions of its boundary word), and the link pattern pi of the
// 2n bottom terminals, numbered left to right. Configurations whose side
// stubs do not cross strictly left to right, or whose bottom terminals leak
// into a side, are discarded. Calibrated against the bracket-side tensor
// for n <= 3; totals are 1, 5, 109.
std::map<TriKey, Int> enumerate_triangle(int n);

Int triangle_total(int n);

}  // namespace fpltri::fpl
