#include "booklab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "booklab/error.hpp"

namespace booklab {

namespace {

constexpr int kOffset = 63;

[[noreturn]] void bad_graph6(const std::string& why) {
  throw Error(ErrorKind::kParse, "graph6: " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) bad_graph6("empty input");
  for (char c : text)
    if (c < kOffset || c > 126) bad_graph6("byte outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126)
      bad_graph6("eight-byte order header exceeds vertex cap");
    if (text.size() < 4) bad_graph6("truncated order header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kOffset);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Error(ErrorKind::kCapacityExceeded,
                "graph6 order " + std::to_string(n) + " exceeds vertex cap");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    bad_graph6("expected " + std::to_string(body) + " data bytes, found " +
               std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kOffset;
    if (last & ((1 << (6 - bits % 6)) - 1)) bad_graph6("nonzero padding bits");
  }
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> numbers;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      if (!std::all_of(token.begin(), token.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::kParse, "edge list: bad token '" + token + "'");
      numbers.push_back(std::stoll(token));
    }
  }
  if (numbers.empty()) throw Error(ErrorKind::kParse, "edge list: empty input");
  if (numbers.size() % 2 == 0)
    throw Error(ErrorKind::kParse, "edge list: dangling endpoint");
  if (numbers[0] > kMaxVertices)
    throw Error(ErrorKind::kCapacityExceeded,
                "edge list order exceeds vertex cap");
  const int n = static_cast<int>(numbers[0]);
  GraphBuilder b(n);
  for (std::size_t i = 1; i < numbers.size(); i += 2) {
    if (numbers[i] >= n || numbers[i + 1] >= n)
      throw Error(ErrorKind::kParse, "edge list: vertex out of range");
    if (numbers[i] == numbers[i + 1])
      throw Error(ErrorKind::kParse, "edge list: self-loop");
    b.add_edge(static_cast<Vertex>(numbers[i]),
               static_cast<Vertex>(numbers[i + 1]));
  }
  return std::move(b).build();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    const auto t = trim(text);
    const auto end = std::find_if(t.begin(), t.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    const bool digits =
        !t.empty() && std::all_of(t.begin(), end, [](unsigned char c) {
          return std::isdigit(c);
        });
    format = digits ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
  }
  return format == GraphFormat::kEdgeList ? from_edge_list(text)
                                          : from_graph6(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? to_edge_list(g) : to_graph6(g);
}

}  // namespace booklab
