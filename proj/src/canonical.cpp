#include "stablejones/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "stablejones/errors.hpp"

namespace stablejones {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by neighbor counts into each cell,
// ordering the pieces by their count signature, until nothing splits.
void refine(const SimpleGraph& g, Partition& cells) {
  const int n = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> cell_masks(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_masks[c] |= std::uint64_t{1} << v;
    Partition next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> pieces;
      for (int v : cell) {
        std::vector<int> sig(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
          sig[c] = std::popcount(g.neighbor_mask(v) & cell_masks[c]);
        pieces[std::move(sig)].push_back(v);
      }
      if (pieces.size() > 1) changed = true;
      for (auto& [sig, vs] : pieces) next.push_back(std::move(vs));
    }
    cells = std::move(next);
  }
}

std::string encode(const SimpleGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::vector<int> inverse(n);
  for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
  std::string code(1, static_cast<char>(n));
  unsigned char byte = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(inverse[i], inverse[j]) ? 1 : 0));
      if (++bits == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  if (bits) code.push_back(static_cast<char>(byte << (8 - bits)));
  return code;
}

struct CanonicalSearch {
  const SimpleGraph& g;
  std::string best;
  std::vector<int> best_perm;

  void search(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> perm(g.vertex_count());
      for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<int>(c);
      std::string code = encode(g, perm);
      if (best_perm.empty() || code > best) {
        best = std::move(code);
        best_perm = std::move(perm);
      }
      return;
    }
    // Twins within the cell are exchanged by an automorphism fixing the
    // partition, so one representative per twin class suffices.
    const std::vector<int> cell = *target;
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cell) {
      bool twin = false;
      for (int w : tried) {
        const std::uint64_t clear = ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
        if ((g.neighbor_mask(v) & clear) == (g.neighbor_mask(w) & clear)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != at) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }
};

}  // namespace

std::string IsoClass::hex() const {
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(kHexDigits[c >> 4]);
    out.push_back(kHexDigits[c & 15]);
  }
  return out;
}

IsoClass IsoClass::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0 || hex.empty()) throw ParseError("bad canonical code hex '" + hex + "'");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError("bad canonical code hex '" + hex + "'");
  };
  IsoClass out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.code.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  const int n = out.vertex_count();
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (out.code.size() != 1 + (bits + 7) / 8) throw ParseError("canonical code has wrong length");
  return out;
}

SimpleGraph IsoClass::graph() const {
  const int n = vertex_count();
  SimpleGraph g(n);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      const auto byte = static_cast<unsigned char>(code.at(1 + bit / 8));
      if ((byte >> (7 - bit % 8)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::vector<int> canonical_labeling(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  CanonicalSearch search{g, {}, {}};
  // Initial cells ordered by degree.
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  Partition cells;
  for (auto& [d, vs] : by_degree) cells.push_back(std::move(vs));
  search.search(std::move(cells));
  return search.best_perm;
}

IsoClass canonical_code(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return IsoClass{std::string(1, '\0')};
  return IsoClass{encode(g, canonical_labeling(g))};
}

std::uint64_t automorphism_count(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> image(n, -1);
  std::uint64_t used = 0, count = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1 || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used |= std::uint64_t{1} << w;
      self(self, v + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace stablejones
