#include "pants/canonical.hpp"

#include <algorithm>
#include <utility>

#include "pants/error.hpp"

namespace pants {

namespace {

using Matrix = std::vector<std::vector<std::uint8_t>>;
using Colors = std::vector<int>;

Matrix multiplicity_matrix(const TrivalentGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix m(n, std::vector<std::uint8_t>(n, 0));
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [u, v] = g.endpoints(k);
    ++m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (u != v) ++m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  }
  return m;
}

int count_colors(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement; colour indices are ranks of sorted signatures so the
// result depends only on the coloured graph, never on vertex labels.
void refine(const Matrix& m, Colors& colors) {
  const std::size_t n = colors.size();
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::vector<Signature> sig(n);
  int classes = count_colors(colors);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = sig[v].second;
      nb.clear();
      sig[v].first = colors[v];
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v && m[v][u] != 0) nb.emplace_back(colors[u], m[v][u]);
      }
      std::sort(nb.begin(), nb.end());
    }
    std::vector<Signature> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    const int now = static_cast<int>(uniq.size());
    if (now == classes) return;
    classes = now;
  }
}

struct Search {
  const Matrix& m;
  std::size_t n;
  std::vector<std::uint8_t> best_code;
  std::vector<Vertex> best_order;
  bool have_best = false;

  std::vector<std::uint8_t> code_for(const std::vector<Vertex>& order) const {
    std::vector<std::uint8_t> code;
    code.reserve(1 + n * (n + 1) / 2);
    code.push_back(static_cast<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        code.push_back(m[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])]);
      }
    }
    return code;
  }

  void run(Colors colors) {
    refine(m, colors);
    const int classes = count_colors(colors);
    if (static_cast<std::size_t>(classes) == n) {
      std::vector<Vertex> order(n);
      for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(colors[v])] = static_cast<Vertex>(v);
      auto code = code_for(order);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      Colors next(n);
      for (std::size_t x = 0; x < n; ++x) {
        next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
      }
      run(std::move(next));
    }
  }
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (std::uint8_t b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw Error(ErrorCode::ParseError, "odd-length hex form");
  CanonicalForm f;
  f.key.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::ParseError, "bad hex digit in form");
    f.key.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return f;
}

CanonicalLabeling canonical_labeling(const TrivalentGraph& g) {
  if (g.vertex_count() > 255) throw Error(ErrorCode::BadParameters, "canonical form supports <= 255 vertices");
  const Matrix m = multiplicity_matrix(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Colors initial(n);
  for (std::size_t v = 0; v < n; ++v) initial[v] = m[v][v];
  Search search{m, n, {}, {}, false};
  search.run(std::move(initial));
  return {CanonicalForm{std::move(search.best_code)}, std::move(search.best_order)};
}

CanonicalForm canonical_form(const TrivalentGraph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const TrivalentGraph& a, const TrivalentGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

TrivalentGraph canonical_representative(const TrivalentGraph& g) {
  const auto lab = canonical_labeling(g);
  const std::size_t n = lab.order.size();
  EdgeList edges;
  std::size_t pos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++pos) {
      for (int k = 0; k < lab.form.key[pos]; ++k) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return TrivalentGraph::from_edge_list(static_cast<int>(n), edges);
}

std::optional<std::vector<HalfEdge>> find_isomorphism(const TrivalentGraph& a,
                                                      const TrivalentGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const auto la = canonical_labeling(a);
  const auto lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<Vertex> sigma(la.order.size());
  for (std::size_t i = 0; i < la.order.size(); ++i) {
    sigma[static_cast<std::size_t>(la.order[i])] = lb.order[i];
  }
  std::vector<HalfEdge> map(static_cast<std::size_t>(a.half_edge_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.edge_count()), 0);
  for (int s = 0; s < a.edge_count(); ++s) {
    const Vertex x = sigma[static_cast<std::size_t>(a.owner(2 * s))];
    const Vertex y = sigma[static_cast<std::size_t>(a.owner(2 * s + 1))];
    bool matched = false;
    for (int k = 0; k < b.edge_count() && !matched; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      auto [u, v] = b.endpoints(k);
      if (u == x && v == y) {
        map[static_cast<std::size_t>(2 * s)] = 2 * k;
        map[static_cast<std::size_t>(2 * s + 1)] = 2 * k + 1;
      } else if (u == y && v == x) {
        map[static_cast<std::size_t>(2 * s)] = 2 * k + 1;
        map[static_cast<std::size_t>(2 * s + 1)] = 2 * k;
      } else {
        continue;
      }
      used[static_cast<std::size_t>(k)] = 1;
      matched = true;
    }
    if (!matched) throw Error(ErrorCode::BadParameters, "canonical labelings disagree on an edge");
  }
  return map;
}

}  // namespace pants
