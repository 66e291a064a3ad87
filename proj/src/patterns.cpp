#include "booklab/patterns.hpp"

#include <cctype>

#include "booklab/cliques.hpp"
#include "booklab/error.hpp"
#include "kernels.hpp"

namespace booklab {

using detail::Bits;

BookSpec BookSpec::make(int r, int s) {
  if (r < 2)
    throw Error(ErrorKind::kInvalidParameter,
                "book B(" + std::to_string(r) + "," + std::to_string(s) +
                    ") needs r >= 2");
  if (s < 0 || s >= r)
    throw Error(ErrorKind::kInvalidParameter,
                "book B(" + std::to_string(r) + "," + std::to_string(s) +
                    ") needs 0 <= s < r");
  return {r, s};
}

ForbiddenFamily& ForbiddenFamily::add_book(int r, int s) {
  books.push_back(BookSpec::make(r, s));
  return *this;
}

ForbiddenFamily& ForbiddenFamily::add_clique(int m) {
  if (m < 1)
    throw Error(ErrorKind::kInvalidParameter,
                "K(" + std::to_string(m) + ") needs m >= 1");
  patterns.push_back({"K(" + std::to_string(m) + ")", complete_graph(m)});
  return *this;
}

ForbiddenFamily& ForbiddenFamily::add_pattern(std::string name, Graph g) {
  if (g.order() == 0)
    throw Error(ErrorKind::kInvalidParameter, "pattern graphs must be nonempty");
  patterns.push_back({std::move(name), std::move(g)});
  return *this;
}

std::string to_string(const ForbiddenFamily& family) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += ',';
    out += term;
  };
  for (const auto& b : family.books)
    append("B(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")");
  for (const auto& p : family.patterns) append(p.name);
  return out;
}

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  ForbiddenFamily parse() {
    ForbiddenFamily family;
    if (src_.empty() || src_ == "none") return family;
    term(family);
    while (pos_ < src_.size()) {
      expect(',');
      term(family);
    }
    return family;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse, "family '" + src_ + "' at offset " +
                                       std::to_string(pos_) + ": " + why);
  }

  void expect(char c) {
    if (pos_ >= src_.size() || src_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  void term(ForbiddenFamily& family) {
    if (pos_ >= src_.size()) fail("expected term");
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(src_[pos_++])));
    if (head == 'B') {
      expect('(');
      const int r = integer();
      expect(',');
      const int s = integer();
      expect(')');
      if (s >= r)
        fail("B(" + std::to_string(r) + "," + std::to_string(s) +
             ") requires s < r");
      if (r < 2) fail("B(r,s) requires r >= 2");
      family.add_book(r, s);
    } else if (head == 'K') {
      expect('(');
      const int m = integer();
      expect(')');
      if (m < 1) fail("K(m) requires m >= 1");
      if (m > kMaxVertices) fail("K(m) exceeds vertex cap");
      family.add_clique(m);
    } else if (head == 'H') {
      const int which = integer();
      if (which == 1) {
        family.add_pattern("H1", h1_graph());
      } else if (which == 2) {
        family.add_pattern("H2", h2_graph());
      } else {
        fail("unknown fixed graph H" + std::to_string(which));
      }
    } else {
      --pos_;
      fail("unknown term");
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
};

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0)) / 2;
}

}  // namespace

ForbiddenFamily parse_family(std::string_view text) {
  return FamilyParser(text).parse();
}

Graph book_pattern_graph(const BookSpec& spec) {
  const auto [r, s] = BookSpec::make(spec.r, spec.s);
  GraphBuilder b(2 * r - s);
  auto clique_on = [&](int first) {
    for (int u = first; u < first + r; ++u)
      for (int v = u + 1; v < first + r; ++v) b.add_edge(u, v);
  };
  clique_on(0);
  clique_on(r - s);
  return std::move(b).build();
}

std::optional<CliqueWitness> book_violation(const Graph& g,
                                            const BookSpec& spec,
                                            std::size_t clique_cap) {
  const auto [r, s] = BookSpec::make(spec.r, spec.s);
  if (2 * r - s > g.order()) return std::nullopt;
  return detail::dispatch_width(
      g.row_words(), [&](auto w) -> std::optional<CliqueWitness> {
        constexpr int W = decltype(w)::value;
        const auto rows = detail::load_rows<W>(g);
        std::vector<Bits<W>> cliques;
        detail::visit_cliques(rows, r, [&](const Bits<W>& c) {
          if (cliques.size() == clique_cap)
            throw Error(ErrorKind::kResourceLimit,
                        "more than " + std::to_string(clique_cap) + " " +
                            std::to_string(r) +
                            "-cliques; raise the clique cap");
          cliques.push_back(c);
          return true;
        });
        for (std::size_t i = 0; i < cliques.size(); ++i) {
          for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if ((cliques[i] & cliques[j]).count() == s) {
              return CliqueWitness{detail::to_vertex_set(cliques[i], g.order()),
                                   detail::to_vertex_set(cliques[j], g.order()),
                                   s};
            }
          }
        }
        return std::nullopt;
      });
}

bool is_free(const Graph& g, const ForbiddenFamily& family) {
  for (const auto& p : family.patterns) {
    const bool hit = is_complete(p.graph) ? has_clique(g, p.graph.order())
                                          : contains_subgraph(g, p.graph);
    if (hit) return false;
  }
  for (const auto& b : family.books)
    if (book_violation(g, b)) return false;
  return true;
}

Graph h1_graph() {
  enum { h, i, j, k, l, m, n };
  const Edge edges[] = {
      {h, i}, {h, j}, {h, k}, {i, j}, {i, k}, {j, k},  // K4 {h,i,j,k}
      {i, m}, {j, m}, {k, m},                          // K4 {i,j,k,m}
      {i, l}, {k, l}, {l, m},                          // K4 {i,k,l,m}
      {j, n}, {k, n}, {m, n},                          // K4 {j,k,m,n}
  };
  return Graph::from_edges(7, edges);
}

Graph h2_graph() {
  enum { a, b, c, d, e, f };
  const Edge edges[] = {
      {a, b}, {a, c}, {a, d}, {a, e}, {b, c}, {b, d}, {b, e},
      {c, d}, {c, e}, {d, e}, {c, f}, {d, f}, {e, f},
  };
  return Graph::from_edges(6, edges);
}

}  // namespace booklab
