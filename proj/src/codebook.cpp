// Copyright 2026 The latdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latdel/codebook.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "latdel/error.hpp"
#include "latdel/runlength.hpp"

namespace latdel {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Search state: c_i = x_1 + 2 x_i for 2 <= i <= n-1, and the last coordinate
// c_n = T + 4 x_n with T = x_1 + 2 (x_2 + ... + x_{n-1}).
template <typename OnWord>
std::vector<std::uint64_t> tree_search(std::int64_t n, std::int64_t N, std::int64_t r,
                                       OnWord&& on_word) {
  if (n < 2) throw ParameterError("codebook search needs n >= 2");
  if (r < 1) throw ParameterError("codebook search needs r >= 1");
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(n), 0);
  if (N < n * r) return nodes;

  IntVector coords(static_cast<std::size_t>(n), 0);
  const std::int64_t u1 = N - (n - 1) * r;
  for (std::int64_t x1 = r; x1 <= u1; ++x1) {
    ++nodes[0];
    coords[0] = x1;
    // prefix = S_{i-1} = c_1 + ... + c_{i-1}; t = T accumulated so far.
    auto descend = [&](auto&& self, std::int64_t level, std::int64_t prefix,
                       std::int64_t t) -> void {
      if (level < n) {
        const std::int64_t lo = ceil_div(r - x1, 2);
        const std::int64_t hi = floor_div(N - (n - level) * r - prefix - x1, 2);
        for (std::int64_t xi = lo; xi <= hi; ++xi) {
          ++nodes[static_cast<std::size_t>(level - 1)];
          const std::int64_t ci = x1 + 2 * xi;
          coords[static_cast<std::size_t>(level - 1)] = ci;
          self(self, level + 1, prefix + ci, t + 2 * xi);
        }
        return;
      }
      // Level n: c_n = N - prefix must equal t + 4 x_n with l_n <= x_n <= u_n.
      const std::int64_t rest = N - prefix - t;
      if (rest % 4 != 0) return;
      const std::int64_t xn = rest / 4;
      if (xn < ceil_div(r - t, 4) || xn > floor_div(N - (n - 1) * r - t, 4)) return;
      ++nodes[static_cast<std::size_t>(n - 1)];
      coords[static_cast<std::size_t>(n - 1)] = t + 4 * xn;
      on_word(coords);
    };
    descend(descend, 2, x1, x1);
  }
  return nodes;
}

}  // namespace

Codebook generate(std::int64_t n, std::int64_t N, std::int64_t r) {
  Codebook book;
  book.n = n;
  book.N = N;
  book.r = r;
  book.visited_nodes = tree_search(n, N, r, [&](const IntVector& c) { book.words.push_back(c); });
  // DFS order is already lexicographic in (x_1, ..., x_n), hence in c.
  return book;
}

std::vector<std::uint64_t> count_search_nodes(std::int64_t n, std::int64_t N, std::int64_t r) {
  return tree_search(n, N, r, [](const IntVector&) {});
}

BigInt naive_node_bound(std::int64_t n, std::int64_t N, std::int64_t r, std::int64_t level) {
  if (level < 1) throw ParameterError("search levels start at 1");
  const std::int64_t slack = N - n * r;
  if (slack < 0) return 0;
  const BigInt base = (slack + 2) / 2;
  return BigInt(slack + 1) * boost::multiprecision::pow(base, static_cast<unsigned>(level - 1));
}

std::vector<IntVector> ambient_points(std::int64_t n, std::int64_t N, std::int64_t r) {
  std::vector<IntVector> out;
  if (n < 1 || N < n * r) return out;
  IntVector x(static_cast<std::size_t>(n), r);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == x.size()) {
      x[i] = remaining;
      out.push_back(x);
      return;
    }
    const auto later = static_cast<std::int64_t>(x.size() - i - 1) * r;
    for (std::int64_t v = r; v + later <= remaining; ++v) {
      x[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, N);
  return out;
}

namespace {

// Maximum clique with greedy-colouring bounds (Tomita-style) over bitsets.
class MaxClique {
 public:
  explicit MaxClique(std::vector<std::vector<std::uint64_t>> adjacency)
      : adj_(std::move(adjacency)), words_(adj_.empty() ? 0 : adj_[0].size()) {}

  std::size_t solve() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::vector<std::uint64_t> candidates, std::size_t size) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + colour[k] <= best_) return;
      const std::size_t v = order[k];
      std::vector<std::uint64_t> next(words_);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = candidates[w] & adj_[v][w];
        any = any || next[w] != 0;
      }
      if (any) {
        expand(next, size + 1);
      } else if (size + 1 > best_) {
        best_ = size + 1;
      }
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  void colour_sort(const std::vector<std::uint64_t>& candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    std::vector<std::uint64_t> uncoloured = candidates;
    std::size_t c = 0;
    auto any_left = [&] {
      return std::any_of(uncoloured.begin(), uncoloured.end(), [](auto w) { return w != 0; });
    };
    while (any_left()) {
      ++c;
      std::vector<std::uint64_t> q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const auto bitpos = static_cast<std::size_t>(std::countr_zero(q[w]));
          const std::size_t v = w * 64 + bitpos;
          q[w] &= ~(std::uint64_t{1} << bitpos);
          uncoloured[w] &= ~(std::uint64_t{1} << bitpos);
          for (std::size_t u = 0; u < words_; ++u) q[u] &= ~adj_[v][u];
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  std::size_t words_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t exact_packing_number(std::int64_t n, std::int64_t N, std::int64_t r, std::int64_t d) {
  const auto points = ambient_points(n, N, r);
  if (points.size() > kMaxPackingCandidates) {
    throw CapacityError("exact packing search over " + std::to_string(points.size()) +
                        " candidates is too large");
  }
  if (points.empty()) return 0;
  const std::size_t words = (points.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(points.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (manhattan_distance(points[i], points[j]) >= d) {
        adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return MaxClique(std::move(adj)).solve();
}

void write_codebook(std::ostream& out, const Codebook& book) {
  out << "# n=" << book.n << " d=" << book.d << " N=" << book.N << " r=" << book.r
      << " count=" << book.words.size() << '\n';
  for (const auto& w : book.words) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

Codebook read_codebook(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
    throw ParameterError("codebook file must start with a '# n=... ' header");
  }
  Codebook book;
  std::int64_t count = -1;
  std::istringstream hs(header.substr(2));
  std::string field;
  while (hs >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParameterError("bad header field: " + field);
    const std::string key = field.substr(0, eq);
    std::int64_t value = 0;
    try {
      value = std::stoll(field.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParameterError("bad header value: " + field);
    }
    if (key == "n") book.n = value;
    else if (key == "d") book.d = value;
    else if (key == "N") book.N = value;
    else if (key == "r") book.r = value;
    else if (key == "count") count = value;
    else throw ParameterError("unknown header key: " + key);
  }
  if (book.n < 2 || count < 0) throw ParameterError("codebook header lacks n or count");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    IntVector w;
    std::int64_t v = 0;
    while (ls >> v) w.push_back(v);
    if (!ls.eof() || static_cast<std::int64_t>(w.size()) != book.n) {
      throw ParameterError("malformed codeword line: " + line);
    }
    book.words.push_back(std::move(w));
  }
  if (static_cast<std::int64_t>(book.words.size()) != count) {
    throw ParameterError("codebook count does not match the number of codewords");
  }
  return book;
}

}  // namespace latdel
