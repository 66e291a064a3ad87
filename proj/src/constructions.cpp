#include "booklab/constructions.hpp"

#include <string>
#include <vector>

#include "booklab/error.hpp"
#include "booklab/patterns.hpp"

namespace booklab {

namespace {

std::vector<int> part_sizes(int n, int t) {
  std::vector<int> sizes(t, n / t);
  for (int i = 0; i < n % t; ++i) ++sizes[i];
  return sizes;
}

void require(bool ok, ErrorKind kind, const std::string& why) {
  if (!ok) throw Error(kind, why);
}

}  // namespace

Graph book_extremal(int n, int r, int s) {
  BookSpec::make(r, s);
  require(r >= 2 * s + 1, ErrorKind::kUnsupportedRegime,
          "book_extremal needs r >= 2s+1 (got r=" + std::to_string(r) +
              ", s=" + std::to_string(s) + "); use gp_construction");
  require(n >= r, ErrorKind::kInvalidParameter,
          "book_extremal needs n >= r (got n=" + std::to_string(n) +
              ", r=" + std::to_string(r) + ")");
  return join(complete_graph(s + 1), turan_graph(n - s - 1, r - s - 1));
}

Graph k4_packing(int n) {
  require(n >= 0, ErrorKind::kInvalidParameter, "k4_packing needs n >= 0");
  Graph g(0);
  for (int i = 0; i < n / 4; ++i) g = disjoint_union(g, complete_graph(4));
  return disjoint_union(g, complete_graph(n % 4));
}

Count k4_packing_value(int n) {
  require(n >= 0, ErrorKind::kInvalidParameter, "n must be non-negative");
  switch (n % 4) {
    case 0: return static_cast<Count>(n);
    case 1: return static_cast<Count>(n - 1);
    default: return static_cast<Count>(n - 2);
  }
}

Graph gp_construction(int n, const Partition& p, int s) {
  const int r = p.total();
  require(p.length() > 0, ErrorKind::kInvalidParameter, "empty partition");
  require(s >= 1 && s < r, ErrorKind::kInvalidParameter,
          "gp_construction needs 1 <= s < r (got s=" + std::to_string(s) +
              ", r=" + std::to_string(r) + ")");
  if (const auto bad = offending_subset(p, s); !bad.empty()) {
    std::string parts;
    for (int i : bad) {
      if (!parts.empty()) parts += ",";
      parts += "a_" + std::to_string(i + 1) + "=" + std::to_string(p[i]);
    }
    throw Error(ErrorKind::kInvalidParameter,
                "partition " + to_string(p) + " is not " + std::to_string(s) +
                    "-sum-free: subset {" + parts + "} sums to " +
                    std::to_string(s));
  }
  require(n >= r, ErrorKind::kInvalidParameter,
          "gp_construction needs n >= r (got n=" + std::to_string(n) +
              ", r=" + std::to_string(r) + ")");

  const int t = p.length();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u % t != v % t) b.add_edge(u, v);
  for (int i = 0; i < t; ++i) {
    // Members of X_i in increasing order are i, i+t, i+2t, ...; consecutive
    // runs of a_i form the blocks.
    std::vector<Vertex> members;
    for (Vertex v = i; v < n; v += t) members.push_back(v);
    const int a = p[i];
    const int blocks = static_cast<int>(members.size()) / a;
    for (int blk = 0; blk < blocks; ++blk)
      for (int x = 0; x < a; ++x)
        for (int y = x + 1; y < a; ++y)
          b.add_edge(members[blk * a + x], members[blk * a + y]);
  }
  return std::move(b).build();
}

Count gp_predicted_count(int n, const Partition& p) {
  require(p.length() > 0, ErrorKind::kInvalidParameter, "empty partition");
  require(n >= 0, ErrorKind::kInvalidParameter, "n must be non-negative");
  const auto sizes = part_sizes(n, p.length());
  Count product = 1;
  for (int i = 0; i < p.length(); ++i)
    product *= static_cast<Count>(sizes[i] / p[i]);
  return product;
}

Graph b42_construction(int n) {
  require(n >= 0, ErrorKind::kInvalidParameter, "n must be non-negative");
  const int m = n / 6;
  const int triangles = 3 * m;
  GraphBuilder b(n);
  for (int k = 0; k < m; ++k) {
    b.add_edge(3 * k, 3 * k + 1);
    b.add_edge(3 * k, 3 * k + 2);
    b.add_edge(3 * k + 1, 3 * k + 2);
  }
  for (Vertex v = 0; v < triangles; ++v)
    for (Vertex u = triangles; u < n; ++u) b.add_edge(v, u);
  return std::move(b).build();
}

Count b42_predicted_count(int n) {
  require(n >= 0, ErrorKind::kInvalidParameter, "n must be non-negative");
  const Count m = static_cast<Count>(n / 6);
  const Count t = static_cast<Count>(n % 6);
  return m * (3 * m + t);
}

Count turan_clique_count(int n, int t, int s) {
  require(t >= 1, ErrorKind::kInvalidParameter, "turan_clique_count needs t >= 1");
  require(n >= 0 && s >= 0, ErrorKind::kInvalidParameter,
          "turan_clique_count needs n, s >= 0");
  // Elementary symmetric polynomial e_s of the part sizes.
  std::vector<Count> e(s + 1, 0);
  e[0] = 1;
  for (int size : part_sizes(n, t))
    for (int k = s; k >= 1; --k) e[k] += e[k - 1] * static_cast<Count>(size);
  return e[s];
}

}  // namespace booklab
