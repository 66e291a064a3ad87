#include "booklab/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "booklab/error.hpp"

namespace booklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorKind::kInvalidParameter, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::kInvalidParameter,
                  "partition parts must be non-increasing");
    total_ += parts_[i];
  }
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) throw Error(ErrorKind::kParse, "partition: no parts");
  std::vector<int> parts;
  std::istringstream in(body);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::kParse, "partition: bad part '" + token + "' in '" + text + "'");
    parts.push_back(std::stoi(token));
  }
  if (body.back() == ',') throw Error(ErrorKind::kParse, "partition: trailing comma");
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

void for_each_partition(int r,
                        const std::function<void(const Partition&)>& visit) {
  if (r < 1)
    throw Error(ErrorKind::kInvalidParameter, "partitions need r >= 1");
  std::vector<int> a{r};
  while (true) {
    visit(Partition(a));
    // Rightmost part above 1 drops by one; everything after it is refilled
    // greedily with parts no larger than the new value.
    int k = static_cast<int>(a.size()) - 1;
    int spill = 0;
    while (k >= 0 && a[k] == 1) {
      spill += 1;
      --k;
    }
    if (k < 0) return;
    const int cap = a[k] - 1;
    spill += 1;
    a.resize(k + 1);
    a[k] = cap;
    while (spill > 0) {
      const int part = std::min(cap, spill);
      a.push_back(part);
      spill -= part;
    }
  }
}

std::vector<Partition> enumerate_partitions(int r) {
  std::vector<Partition> out;
  for_each_partition(r, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<bool> subset_sums(const Partition& p) {
  const int total = p.total();
  const std::size_t words = static_cast<std::size_t>(total) / 64 + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  for (int a : p.parts()) {
    const std::size_t word_shift = static_cast<std::size_t>(a) / 64;
    const int bit_shift = a % 64;
    for (std::size_t i = words; i-- > word_shift;) {
      const std::size_t src = i - word_shift;
      std::uint64_t moved = reach[src] << bit_shift;
      if (bit_shift && src > 0) moved |= reach[src - 1] >> (64 - bit_shift);
      reach[i] |= moved;
    }
  }
  std::vector<bool> out(total + 1);
  for (int v = 0; v <= total; ++v) out[v] = (reach[v / 64] >> (v % 64)) & 1U;
  return out;
}

bool is_s_sum_free(const Partition& p, int s) {
  if (s < 1 || s >= p.total())
    throw Error(ErrorKind::kInvalidParameter,
                "s-sum-free test needs 1 <= s < r, got s=" + std::to_string(s) +
                    " r=" + std::to_string(p.total()));
  return !subset_sums(p)[s];
}

std::vector<int> offending_subset(const Partition& p, int s) {
  if (is_s_sum_free(p, s)) return {};
  // reach[i][v]: v is a subset sum of the first i parts.
  const int t = p.length();
  std::vector<std::vector<char>> reach(t + 1, std::vector<char>(s + 1, 0));
  reach[0][0] = 1;
  for (int i = 0; i < t; ++i)
    for (int v = 0; v <= s; ++v)
      reach[i + 1][v] = reach[i][v] || (v >= p[i] && reach[i][v - p[i]]);
  std::vector<int> picked;
  for (int i = t, v = s; v > 0; --i) {
    if (!reach[i - 1][v]) {
      picked.push_back(i - 1);
      v -= p[i - 1];
    }
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

BetaResult beta(int r, int s) {
  if (s < 1 || s >= r)
    throw Error(ErrorKind::kInvalidParameter,
                "beta(r,s) needs 1 <= s < r, got r=" + std::to_string(r) +
                    " s=" + std::to_string(s));
  BetaResult best;
  for_each_partition(r, [&](const Partition& p) {
    if (p.length() <= best.value) return;
    if (is_s_sum_free(p, s)) best = {p.length(), p};
  });
  return best;
}

}  // namespace booklab
