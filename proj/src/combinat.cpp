#include "fpltri/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpltri {

namespace {

void check_seq(const std::vector<int>& seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] > 2 * static_cast<int>(i))
      throw std::invalid_argument("diagram entry out of staircase range");
    if (i > 0 && seq[i] <= seq[i - 1])
      throw std::invalid_argument("diagram sequence not strictly increasing");
  }
}

}  // namespace

Diagram::Diagram(std::vector<int> seq) : seq_(std::move(seq)) { check_seq(seq_); }

Diagram Diagram::from_partition(int n, const std::vector<int>& lambda) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw std::invalid_argument("partition not weakly decreasing");
  for (size_t i = n; i < lambda.size(); ++i)
    if (lambda[i] != 0) throw std::invalid_argument("partition has more than n rows");
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) {
    int row = n - 1 - i;  // lambda_{n-i} pairs with alpha_i
    int part = row < static_cast<int>(lambda.size()) ? lambda[row] : 0;
    seq[i] = part + i;
  }
  return Diagram(std::move(seq));
}

Diagram Diagram::empty(int n) { return from_partition(n, {}); }

Diagram Diagram::column(int n, int height) {
  return from_partition(n, std::vector<int>(height, 1));
}

Diagram Diagram::staircase(int n) {
  std::vector<int> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = n - 1 - i;
  return from_partition(n, lambda);
}

std::vector<int> Diagram::partition() const {
  int m = n();
  std::vector<int> lambda(m);
  for (int i = 0; i < m; ++i) lambda[m - 1 - i] = seq_[i] - i;
  return lambda;
}

int Diagram::boxes() const {
  int total = 0;
  for (int i = 0; i < n(); ++i) total += seq_[i] - i;
  return total;
}

bool Diagram::contains(const Diagram& other) const {
  if (n() != other.n()) throw std::invalid_argument("size mismatch in contains");
  auto a = partition(), b = other.partition();
  for (int i = 0; i < n(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Diagram Diagram::transpose() const {
  int m = n();
  std::vector<bool> taken(2 * m, false);
  for (int v : seq_) taken[2 * m - 1 - v] = true;
  std::vector<int> seq;
  seq.reserve(m);
  for (int v = 0; v < 2 * m; ++v)
    if (!taken[v]) seq.push_back(v);
  return Diagram(std::move(seq));
}

Diagram Diagram::embed(int m) const {
  std::vector<int> seq;
  seq.reserve(n() + m);
  for (int i = 0; i < m; ++i) seq.push_back(i);
  for (int v : seq_) seq.push_back(v + m);
  return Diagram(std::move(seq));
}

std::string Diagram::str() const {
  std::ostringstream out;
  for (int i = 0; i < n(); ++i) {
    if (i) out << ",";
    out << seq_[i];
  }
  return out.str();
}

Diagram Diagram::parse(const std::string& text) {
  std::vector<int> seq;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) seq.push_back(std::stoi(tok));
  return Diagram(std::move(seq));
}

LinkPattern::LinkPattern(std::vector<int> partner) : partner_(std::move(partner)) {
  int p = points();
  if (p % 2 != 0) throw std::invalid_argument("odd number of points");
  for (int i = 0; i < p; ++i) {
    int j = partner_[i];
    if (j < 0 || j >= p || j == i || partner_[j] != i)
      throw std::invalid_argument("not an involution without fixed points");
  }
}

LinkPattern LinkPattern::from_diagram(const Diagram& d) {
  int m = d.n();
  // Word of openers and closers: positions alpha_i open, the rest close.
  std::vector<bool> open(2 * m, false);
  for (int v : d.seq()) open[v] = true;
  std::vector<int> partner(2 * m, -1), stack;
  for (int i = 0; i < 2 * m; ++i) {
    if (open[i]) {
      stack.push_back(i);
    } else {
      if (stack.empty()) throw std::logic_error("unbalanced diagram word");
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::logic_error("unbalanced diagram word");
  return LinkPattern(std::move(partner));
}

bool LinkPattern::noncrossing() const {
  int p = points();
  for (int i = 0; i < p; ++i) {
    int j = partner_[i];
    if (j < i) continue;
    for (int k = i + 1; k < j; ++k) {
      int l = partner_[k];
      if (l < i || l > j) return false;
    }
  }
  return true;
}

Diagram LinkPattern::to_diagram() const {
  std::vector<int> seq;
  for (int i = 0; i < points(); ++i)
    if (partner_[i] > i) seq.push_back(i);
  return Diagram(std::move(seq));
}

LinkPattern LinkPattern::rotate(int k) const {
  int p = points();
  k = ((k % p) + p) % p;
  std::vector<int> partner(p);
  for (int i = 0; i < p; ++i) partner[(i + k) % p] = (partner_[i] + k) % p;
  return LinkPattern(std::move(partner));
}

LinkPattern LinkPattern::mirror() const {
  int p = points();
  std::vector<int> partner(p);
  for (int i = 0; i < p; ++i) partner[p - 1 - i] = p - 1 - partner_[i];
  return LinkPattern(std::move(partner));
}

LinkPattern LinkPattern::embed(int m) const {
  int p = points();
  std::vector<int> partner(p + 2 * m);
  for (int i = 0; i < p; ++i) partner[i + m] = partner_[i] + m;
  for (int i = 0; i < m; ++i) {
    partner[m - 1 - i] = p + m + i;
    partner[p + m + i] = m - 1 - i;
  }
  return LinkPattern(std::move(partner));
}

std::string LinkPattern::str() const {
  std::ostringstream out;
  for (int i = 0; i < points(); ++i)
    if (partner_[i] > i) out << "(" << i << "," << partner_[i] << ")";
  return out.str();
}

std::vector<Diagram> enumerate_basis(int n) {
  std::vector<Diagram> basis;
  std::vector<int> seq(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      basis.emplace_back(seq);
      return;
    }
    int lo = i == 0 ? 0 : seq[i - 1] + 1;
    for (int v = lo; v <= 2 * i; ++v) {
      seq[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::stable_sort(basis.begin(), basis.end(), [](const Diagram& a, const Diagram& b) {
    if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
    return a.partition() < b.partition();
  });
  return basis;
}

int basis_index(const std::vector<Diagram>& basis, const Diagram& d) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == d) return static_cast<int>(i);
  throw std::invalid_argument("diagram not in basis: " + d.str());
}

std::vector<LinkPattern> basis_patterns(const std::vector<Diagram>& basis) {
  std::vector<LinkPattern> pats;
  pats.reserve(basis.size());
  for (const auto& d : basis) pats.push_back(LinkPattern::from_diagram(d));
  return pats;
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace fpltri
