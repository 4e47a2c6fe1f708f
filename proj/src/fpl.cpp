#include "fpltri/fpl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fpltri::fpl {

namespace {

class Solver {
 public:
  Solver(const Net& net, const std::function<void(const std::vector<signed char>&)>& cb)
      : net_(net), cb_(cb), st_(net.edges.size(), -1), occ_(net.nv, 0), undec_(net.nv, 0) {
    for (const auto& e : net_.edges) {
      ++undec_[e.a];
      if (e.b >= 0) ++undec_[e.b];
    }
  }

  void run() {
    std::vector<int> trail;
    bool ok = true;
    for (size_t e = 0; e < net_.fixed.size() && ok; ++e)
      if (net_.fixed[e] >= 0) ok = set(static_cast<int>(e), net_.fixed[e], trail);
    if (ok) ok = propagate(trail);
    if (ok) dfs(0);
    // No undo needed at the top level.
  }

 private:
  const Net& net_;
  const std::function<void(const std::vector<signed char>&)>& cb_;
  std::vector<signed char> st_;
  std::vector<int> occ_, undec_;
  std::deque<int> dirty_;

  bool set(int e, signed char v, std::vector<int>& trail) {
    if (st_[e] >= 0) return st_[e] == v;
    st_[e] = v;
    trail.push_back(e);
    const auto& ed = net_.edges[e];
    touch(ed.a, v);
    if (ed.b >= 0) touch(ed.b, v);
    return true;
  }

  void touch(int vertex, signed char v) {
    --undec_[vertex];
    if (v == 1) ++occ_[vertex];
    dirty_.push_back(vertex);
  }

  bool propagate(std::vector<int>& trail) {
    while (!dirty_.empty()) {
      int v = dirty_.front();
      dirty_.pop_front();
      if (occ_[v] > 2) return false;
      if (occ_[v] + undec_[v] < 2) return false;
      if (undec_[v] == 0) continue;
      if (occ_[v] == 2) {
        for (int e : net_.incident[v])
          if (st_[e] < 0 && !set(e, 0, trail)) return false;
      } else if (occ_[v] + undec_[v] == 2) {
        for (int e : net_.incident[v])
          if (st_[e] < 0 && !set(e, 1, trail)) return false;
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int e : trail) {
      signed char v = st_[e];
      st_[e] = -1;
      const auto& ed = net_.edges[e];
      ++undec_[ed.a];
      if (v == 1) --occ_[ed.a];
      if (ed.b >= 0) {
        ++undec_[ed.b];
        if (v == 1) --occ_[ed.b];
      }
    }
  }

  void dfs(int hint) {
    int e = -1;
    for (int i = hint; i < static_cast<int>(st_.size()); ++i)
      if (st_[i] < 0) {
        e = i;
        break;
      }
    if (e < 0) {
      cb_(st_);
      return;
    }
    for (signed char v : {static_cast<signed char>(1), static_cast<signed char>(0)}) {
      std::vector<int> trail;
      dirty_.clear();
      if (set(e, v, trail) && propagate(trail)) dfs(e + 1);
      dirty_.clear();
      undo(trail);
    }
  }
};

}  // namespace

void enumerate(const Net& net, const std::function<void(const std::vector<signed char>&)>& cb) {
  Solver(net, cb).run();
}

std::vector<int> trace_paths(const Net& net, const std::vector<signed char>& state) {
  // Stub s sits on edge stub_edge[s].
  std::vector<int> stub_edge(net.stubs, -1);
  for (size_t e = 0; e < net.edges.size(); ++e)
    if (net.edges[e].b < 0) stub_edge[-1 - net.edges[e].b] = static_cast<int>(e);

  std::vector<int> pair(net.stubs, -1);
  for (int s = 0; s < net.stubs; ++s) {
    if (pair[s] >= 0) continue;
    int e = stub_edge[s];
    if (state[e] != 1) continue;
    int v = net.edges[e].a;
    int cur = e;
    while (true) {
      int next = -1;
      for (int cand : net.incident[v])
        if (cand != cur && state[cand] == 1) {
          next = cand;
          break;
        }
      if (next < 0) throw std::logic_error("open path dead-ends at a vertex");
      cur = next;
      const auto& ed = net.edges[cur];
      if (ed.b < 0) {
        int other = -1 - ed.b;
        pair[s] = other;
        pair[other] = s;
        break;
      }
      v = (ed.a == v) ? ed.b : ed.a;
    }
  }
  return pair;
}

namespace {

struct SquareNet {
  Net net;
  std::vector<int> terminal_stub;  // point label -> stub index
};

SquareNet build_square(int n) {
  SquareNet sq;
  Net& net = sq.net;
  for (int i = 0; i < n * n; ++i) net.add_vertex();
  auto id = [n](int x, int y) { return y * n + x; };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x + 1 < n) net.add_edge(id(x, y), id(x + 1, y));
      if (y + 1 < n) net.add_edge(id(x, y), id(x, y + 1));
    }
  // Perimeter stubs counterclockwise from the bottom-left corner, occupied
  // at even positions.
  std::vector<int> order;
  for (int x = 0; x < n; ++x) order.push_back(id(x, 0));
  for (int y = 0; y < n; ++y) order.push_back(id(n - 1, y));
  for (int x = n - 1; x >= 0; --x) order.push_back(id(x, n - 1));
  for (int y = n - 1; y >= 0; --y) order.push_back(id(0, y));
  for (size_t k = 0; k < order.size(); ++k) {
    int stub = net.add_stub(order[k], k % 2 == 0 ? 1 : 0);
    if (k % 2 == 0) sq.terminal_stub.push_back(stub);
  }
  return sq;
}

}  // namespace

std::map<LinkPattern, Int> enumerate_square(int n) {
  SquareNet sq = build_square(n);
  std::map<LinkPattern, Int> counts;
  enumerate(sq.net, [&](const std::vector<signed char>& st) {
    std::vector<int> pair = trace_paths(sq.net, st);
    // Stub indices of terminals coincide with the counterclockwise order, so
    // the point labels are just positions in terminal_stub.
    std::vector<int> stub_to_point(sq.net.stubs, -1);
    for (size_t p = 0; p < sq.terminal_stub.size(); ++p)
      stub_to_point[sq.terminal_stub[p]] = static_cast<int>(p);
    std::vector<int> partner(sq.terminal_stub.size());
    for (size_t p = 0; p < sq.terminal_stub.size(); ++p) {
      int q = pair[sq.terminal_stub[p]];
      if (q < 0 || stub_to_point[q] < 0) throw std::logic_error("terminal pairs with a non-terminal");
      partner[p] = stub_to_point[q];
    }
    LinkPattern lp{std::move(partner)};
    if (!lp.noncrossing()) throw std::logic_error("open paths cross");
    counts[lp] += 1;
  });
  return counts;
}

Int square_total(int n) {
  Int total = 0;
  for (const auto& [lp, c] : enumerate_square(n)) total += c;
  return total;
}

namespace {

struct TriNet {
  Net net;
  std::vector<int> bottom_stub;                 // stub index per bottom position x = 0..4n-2
  std::vector<int> left_h_stub, right_h_stub;   // side stub index per row y = 1..2n-1, [0] unused
  std::vector<int> left_h_edge, right_h_edge;   // edge ids of those stubs
  std::vector<int> left_word_edge, right_word_edge;  // edge ids read by the boundary words
};

// Staircase triangle: rows y = 0..2n-1, row y holding vertices x = y..4n-2-y,
// so the width shrinks by one on each side per row. Every bottom vertex
// carries a stub below it, occupied at even x; the 2n occupied ones are the
// points of the bottom link pattern. Each staircase corner (y, y) carries a
// free horizontal stub pointing left, mirrored at (4n-2-y, y) on the right.
// The boundary word of a side consists of the corner stub at its base plus
// the vertical boundary edges (y, y)-(y, y-1) read up the staircase.
TriNet build_triangle(int n) {
  TriNet tri;
  Net& net = tri.net;
  int width = 4 * n - 1;
  int height = 2 * n;
  auto in_dom = [&](int x, int y) { return y >= 0 && y < height && x >= y && x <= width - 1 - y; };
  std::vector<std::vector<int>> id(height, std::vector<int>(width, -1));
  for (int y = 0; y < height; ++y)
    for (int x = y; x <= width - 1 - y; ++x) id[y][x] = net.add_vertex();
  std::map<std::pair<int, int>, int> vert;  // (x, y) -> edge id of (x,y)-(x,y+1)
  for (int y = 0; y < height; ++y)
    for (int x = y; x <= width - 1 - y; ++x) {
      if (in_dom(x + 1, y)) net.add_edge(id[y][x], id[y][x + 1]);
      if (in_dom(x, y + 1)) vert[{x, y}] = net.add_edge(id[y][x], id[y + 1][x]);
    }
  for (int x = 0; x < width; ++x)
    tri.bottom_stub.push_back(net.add_stub(id[0][x], x % 2 == 0 ? 1 : 0));
  tri.left_h_stub.assign(height, -1);
  tri.right_h_stub.assign(height, -1);
  tri.left_h_edge.assign(height, -1);
  tri.right_h_edge.assign(height, -1);
  tri.left_word_edge.assign(height, -1);
  tri.right_word_edge.assign(height, -1);
  for (int y = 1; y < height; ++y) {
    tri.left_h_edge[y] = static_cast<int>(net.edges.size());
    tri.left_h_stub[y] = net.add_stub(id[y][y]);
    tri.right_h_edge[y] = static_cast<int>(net.edges.size());
    tri.right_h_stub[y] = net.add_stub(id[y][width - 1 - y]);
    tri.left_word_edge[y] = vert.at({y, y - 1});
    tri.right_word_edge[y] = vert.at({width - 1 - y, y - 1});
  }
  return tri;
}

}  // namespace

std::map<TriKey, Int> enumerate_triangle(int n) {
  TriNet tri = build_triangle(n);
  const Net& net = tri.net;
  int width = 4 * n - 1;
  int height = 2 * n;
  enum Role : signed char { kOther = 0, kBottom, kLeft, kRight };
  std::vector<signed char> role(net.stubs, kOther);
  for (int x = 0; x < width; ++x) role[tri.bottom_stub[x]] = kBottom;
  for (int y = 1; y < height; ++y) {
    role[tri.left_h_stub[y]] = kLeft;
    role[tri.right_h_stub[y]] = kRight;
  }
  std::map<TriKey, Int> counts;
  enumerate(net, [&](const std::vector<signed char>& st) {
    std::vector<int> pair = trace_paths(net, st);
    // Admission: bottom terminals pair among themselves, and every occupied
    // side stub crosses to a stub on the opposite side. How many side stubs
    // are occupied is not prescribed; in the surviving configurations all
    // but one per side end up occupied, and which one is empty varies.
    for (int x = 0; x < width; x += 2)
      if (role[pair[tri.bottom_stub[x]]] != kBottom) return;
    for (int y = 1; y < height; ++y) {
      if (st[tri.left_h_edge[y]] == 1 && role[pair[tri.left_h_stub[y]]] != kRight) return;
      if (st[tri.right_h_edge[y]] == 1 && role[pair[tri.right_h_stub[y]]] != kLeft) return;
    }
    // Boundary words, read from the bottom corner upward; the corner stub is
    // prescribed occupied and contributes the initial up-step. The occupied
    // positions spell the conjugate of the side label, so the key stores the
    // transpose. A word failing the Dyck condition would mean the geometry
    // itself is wrong, hence the throw inside Diagram.
    auto side_diagram = [&](const std::vector<int>& word_edge) {
      std::vector<int> ups{0};
      for (int y = 1; y < height; ++y)
        if (st[word_edge[y]] == 1) ups.push_back(y);
      if (static_cast<int>(ups.size()) != n)
        throw std::logic_error("boundary word has the wrong weight");
      return Diagram(std::move(ups)).transpose();
    };
    Diagram sigma = side_diagram(tri.left_word_edge);
    Diagram tau = side_diagram(tri.right_word_edge);

    std::vector<int> stub_to_point(net.stubs, -1);
    for (int x = 0; x < width; x += 2) stub_to_point[tri.bottom_stub[x]] = x / 2;
    std::vector<int> partner(2 * n);
    for (int x = 0; x < width; x += 2) partner[x / 2] = stub_to_point[pair[tri.bottom_stub[x]]];
    LinkPattern pi{std::move(partner)};
    if (!pi.noncrossing()) throw std::logic_error("bottom paths cross");

    counts[TriKey{sigma, tau, pi}] += 1;
  });
  return counts;
}

Int triangle_total(int n) {
  Int total = 0;
  for (const auto& [key, c] : enumerate_triangle(n)) total += c;
  return total;
}

}  // namespace fpltri::fpl
