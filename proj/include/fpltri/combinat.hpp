#pragma once

#include <string>
#include <vector>

namespace fpltri {

// A Young diagram fitting inside the staircase (n-1, n-2, ..., 0), encoded as
// the strictly increasing sequence alpha_0 < ... < alpha_{n-1} with
// alpha_i <= 2i. The correspondence with partitions is
// lambda_{n-i} = alpha_i - i (lambda listed weakly decreasing).
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<int> seq);
  static Diagram from_partition(int n, const std::vector<int>& lambda);
  static Diagram empty(int n);
  static Diagram column(int n, int height);  // partition (1^height)
  static Diagram staircase(int n);           // (n-1, n-2, ..., 1)

  int n() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  std::vector<int> partition() const;  // length n, weakly decreasing, zeros kept
  int boxes() const;
  bool contains(const Diagram& other) const;

  Diagram transpose() const;
  Diagram embed(int m) const;  // prepend an m-step staircase, size n+m

  std::string str() const;  // "0,1,3"
  static Diagram parse(const std::string& text);

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.seq_ == b.seq_; }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.seq_ < b.seq_; }

 private:
  std::vector<int> seq_;
};

// A noncrossing perfect matching of 2n points labeled 0..2n-1.
class LinkPattern {
 public:
  LinkPattern() = default;
  explicit LinkPattern(std::vector<int> partner);
  static LinkPattern from_diagram(const Diagram& d);

  int points() const { return static_cast<int>(partner_.size()); }
  int n() const { return points() / 2; }
  int partner(int i) const { return partner_[i]; }
  const std::vector<int>& partners() const { return partner_; }
  bool noncrossing() const;

  Diagram to_diagram() const;
  LinkPattern rotate(int k = 1) const;  // point i moves to i+k mod 2n
  LinkPattern mirror() const;           // point i moves to 2n-1-i
  LinkPattern embed(int m = 1) const;   // m nested arches appended around

  std::string str() const;  // "(0,5)(1,4)(2,3)", pairs sorted by opener

  friend bool operator==(const LinkPattern& a, const LinkPattern& b) {
    return a.partner_ == b.partner_;
  }
  friend bool operator!=(const LinkPattern& a, const LinkPattern& b) { return !(a == b); }
  friend bool operator<(const LinkPattern& a, const LinkPattern& b) {
    return a.partner_ < b.partner_;
  }

 private:
  std::vector<int> partner_;
};

// All diagrams of size n, graded by box count and then by partition in
// ascending lexicographic order. This fixed order indexes every vector and
// matrix in the project.
std::vector<Diagram> enumerate_basis(int n);
int basis_index(const std::vector<Diagram>& basis, const Diagram& d);

std::vector<LinkPattern> basis_patterns(const std::vector<Diagram>& basis);

// Catalan number, the basis size.
long long catalan(int n);

}  // namespace fpltri
