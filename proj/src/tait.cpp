#include "stablejones/tait.hpp"

#include <algorithm>
#include <sstream>

#include "stablejones/errors.hpp"

namespace stablejones {

namespace {

// Passages entered along a face walk ("F") are the over passages. With
// counterclockwise rotations this makes the triangle left-handed.
constexpr bool kForwardOver = true;

struct Vec {
  int x, y;
};

// Local direction of a passage through crossing `dart >> 1`, drawn with the
// even dart pointing east: faces lie to the right of their darts.
Vec direction(bool forward_type, int dart) {
  const bool even = (dart & 1) == 0;
  if (forward_type) return even ? Vec{1, 1} : Vec{-1, -1};
  return even ? Vec{-1, 1} : Vec{1, -1};
}

}  // namespace

LinkDiagram medial_link(const PlaneGraph& pg) {
  if (pg.edge_count() == 0) throw EmptyGraph("medial link needs at least one edge");
  const int darts = pg.dart_count();
  std::vector<int> prev(darts);
  for (int d = 0; d < darts; ++d) prev[pg.next_in_face(d)] = d;

  // A strand state is a face corner (d, next(d)) crossed in walk direction.
  // It passes crossing next(d) into the corner (p, rev next(d)) on the other
  // side, p = prev(rev next(d)), crosses p against the walk and resumes at
  // the corner starting with rev p. The reverse traversal uses the corners p.
  std::vector<char> seen(darts, 0);
  std::vector<std::vector<Passage>> strands;
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<Passage> strand;
    int d = start;
    do {
      seen[d] = 1;
      const int n = pg.next_in_face(d);
      const int p = prev[PlaneGraph::reverse(n)];
      seen[p] = 1;
      strand.push_back({n >> 1, kForwardOver, n});
      strand.push_back({p >> 1, !kForwardOver, p});
      d = PlaneGraph::reverse(p);
    } while (d != start);
    strands.push_back(std::move(strand));
  }

  for (auto& s : strands) {
    std::size_t best = s.size();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].over && (best == s.size() || s[i].crossing < s[best].crossing)) best = i;
    std::rotate(s.begin(), s.begin() + static_cast<long>(best), s.end());
  }
  auto lowest = [](const std::vector<Passage>& s) {
    int m = s.front().crossing;
    for (const auto& x : s) m = std::min(m, x.crossing);
    return m;
  };
  std::sort(strands.begin(), strands.end(),
            [&](const auto& a, const auto& b) { return lowest(a) < lowest(b); });
  return {pg.edge_count(), std::move(strands)};
}

int link_component_count(const PlaneGraph& pg) { return static_cast<int>(medial_link(pg).components.size()); }

int writhe(const LinkDiagram& d) {
  std::vector<int> over_dart(d.crossings, -1), under_dart(d.crossings, -1);
  for (const auto& comp : d.components)
    for (const auto& p : comp) (p.over ? over_dart : under_dart)[p.crossing] = p.dart;
  int w = 0;
  for (int c = 0; c < d.crossings; ++c) {
    const Vec o = direction(kForwardOver, over_dart[c]);
    const Vec u = direction(!kForwardOver, under_dart[c]);
    w += o.x * u.y - o.y * u.x > 0 ? 1 : -1;
  }
  return w;
}

DTCode dt_code(const LinkDiagram& d) {
  std::vector<int> odd(d.crossings, 0), even(d.crossings, 0);
  int label = 0;
  for (const auto& comp : d.components)
    for (const auto& p : comp) {
      ++label;
      (label % 2 ? odd : even)[p.crossing] = label;
    }
  DTCode code;
  code.crossings = d.crossings;
  label = 0;
  for (const auto& comp : d.components) {
    std::vector<int> row;
    for (const auto& p : comp)
      if (++label % 2) row.push_back(even[p.crossing]);
    code.components.push_back(std::move(row));
  }
  return code;
}

LinkDiagram diagram_from_dt(const DTCode& code) {
  const int n = code.crossings;
  std::vector<int> crossing_of_label(2 * n + 1, -1);
  int label = 1, index = 0;
  for (const auto& comp : code.components)
    for (int e : comp) {
      if (e < 2 || e > 2 * n || e % 2 || crossing_of_label[e] >= 0)
        throw InputError("DT code is not a perfect odd-even matching");
      crossing_of_label[label] = index;
      crossing_of_label[e] = index;
      label += 2;
      ++index;
    }
  if (index != n) throw InputError("DT code length does not match the crossing count");
  LinkDiagram d;
  d.crossings = n;
  label = 1;
  for (const auto& comp : code.components) {
    std::vector<Passage> strand;
    for (std::size_t i = 0; i < 2 * comp.size(); ++i, ++label)
      strand.push_back({crossing_of_label[label], label % 2 == 1, 0});
    d.components.push_back(std::move(strand));
  }
  return d;
}

bool same_passage_structure(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.crossings != b.crossings || a.components.size() != b.components.size()) return false;
  std::vector<int> map(a.crossings, -1), inverse(b.crossings, -1);
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto &x = a.components[k], &y = b.components[k];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].over != y[i].over) return false;
      int& m = map[x[i].crossing];
      int& r = inverse[y[i].crossing];
      if (m < 0 && r < 0) {
        m = y[i].crossing;
        r = x[i].crossing;
      } else if (m != y[i].crossing || r != x[i].crossing) {
        return false;
      }
    }
  }
  return true;
}

std::string dt_json(const DTCode& code) {
  std::ostringstream out;
  out << "{\"components\":[";
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    out << (k ? "," : "") << "[";
    for (std::size_t i = 0; i < code.components[k].size(); ++i) out << (i ? "," : "") << code.components[k][i];
    out << "]";
  }
  out << "],\"crossings\":" << code.crossings << "}";
  return out.str();
}

std::string dt_plain(const DTCode& code) {
  std::ostringstream out;
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    if (k) out << " | ";
    for (std::size_t i = 0; i < code.components[k].size(); ++i) out << (i ? " " : "") << code.components[k][i];
  }
  return out.str();
}

}  // namespace stablejones
