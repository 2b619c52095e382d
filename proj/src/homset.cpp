#include "bikei/homset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bikei {

namespace {

/// Backtracking over semiarc colors. At a crossing, a known under end U and
/// a known over end O force the opposite under end to U _* O and the
/// opposite over end to O ^* U; full relation checks run on every leaf.
class ColoringSearch {
 public:
  ColoringSearch(const LinkDiagram& d, const BikeiTable& t) : t_(t) {
    const auto& arcs = d.semiarcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) index_[arcs[i]] = static_cast<int>(i);
    for (const Crossing& c : d.crossings()) {
      std::array<int, 4> q{};
      for (int k = 0; k < 4; ++k) q[static_cast<std::size_t>(k)] = index_.at(c[k]);
      cross_.push_back(q);
    }
    sites_.resize(arcs.size());
    for (std::size_t c = 0; c < cross_.size(); ++c)
      for (int v : cross_[c]) sites_[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
  }

  /// Colorings of the semiarcs extending `start` (0 = unknown).
  std::vector<std::vector<Element>> run(std::vector<Element> start) {
    out_.clear();
    search(std::move(start));
    return out_;
  }

  int index_of(SemiarcId s) const { return index_.at(s); }

 private:
  bool propagate(std::vector<Element>& v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& q : cross_) {
        for (int k = 0; k < 4; ++k) {
          const Element a = v[at(q, k)];
          if (a == 0) continue;
          Element b = v[at(q, k + 1)];
          if (b == 0) b = v[at(q, k + 3)];
          if (b == 0) continue;
          const Element forced = k % 2 == 0 ? t_.under(a, b) : t_.over(a, b);
          Element& target = v[at(q, k + 2)];
          if (target == 0) {
            target = forced;
            changed = true;
          } else if (target != forced) {
            return false;
          }
        }
      }
    }
    return true;
  }

  static std::size_t at(const std::array<int, 4>& q, int k) {
    return static_cast<std::size_t>(q[static_cast<std::size_t>(k & 3)]);
  }

  bool consistent(const std::vector<Element>& v) const {
    for (const auto& q : cross_) {
      const Element ua = v[at(q, 0)], oa = v[at(q, 1)], ub = v[at(q, 2)], ob = v[at(q, 3)];
      if (ub != t_.under(ua, oa) || ua != t_.under(ub, ob) || ob != t_.over(oa, ua) ||
          oa != t_.over(ob, ub))
        return false;
    }
    return true;
  }

  /// Prefer a semiarc sharing a crossing with a colored one, so that the
  /// next propagation has something to work with.
  std::size_t pick(const std::vector<Element>& v) const {
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) continue;
      if (first == v.size()) first = i;
      for (int c : sites_[i])
        for (int k = 0; k < 4; ++k)
          if (v[at(cross_[static_cast<std::size_t>(c)], k)] != 0) return i;
    }
    return first;
  }

  void search(std::vector<Element> v) {
    if (!propagate(v)) return;
    const std::size_t i = pick(v);
    if (i == v.size()) {
      if (consistent(v)) out_.push_back(std::move(v));
      return;
    }
    for (Element x = 1; x <= t_.size(); ++x) {
      v[i] = x;
      search(v);
    }
  }

  const BikeiTable& t_;
  std::map<SemiarcId, int> index_;
  std::vector<std::array<int, 4>> cross_;
  std::vector<std::vector<int>> sites_;
  std::vector<std::vector<Element>> out_;
};

/// Colorings of d agreeing with `fixed`; free loops not in `fixed` range
/// over all of t.
std::vector<Coloring> solve(const LinkDiagram& d, const BikeiTable& t, const Coloring& fixed) {
  ColoringSearch search(d, t);
  std::vector<Element> start(d.semiarcs().size(), 0);
  for (const auto& [x, v] : fixed)
    if (!x.is_loop()) start[static_cast<std::size_t>(search.index_of(x.id))] = v;
  std::vector<Coloring> out;
  for (const auto& vals : search.run(std::move(start))) {
    Coloring c;
    for (std::size_t i = 0; i < vals.size(); ++i)
      c[StrandId::semiarc(d.semiarcs()[i])] = vals[i];
    out.push_back(std::move(c));
  }
  for (int k = 1; k <= d.free_loops(); ++k) {
    const StrandId f = StrandId::loop(k);
    std::vector<Coloring> next;
    for (const Coloring& c : out) {
      if (auto it = fixed.find(f); it != fixed.end()) {
        next.push_back(c);
        next.back()[f] = it->second;
        continue;
      }
      for (Element x = 1; x <= t.size(); ++x) {
        next.push_back(c);
        next.back()[f] = x;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const BikeiTable& t) {
  return solve(d, t, {});
}

std::size_t counting_invariant(const LinkDiagram& d, const BikeiTable& t) {
  return enumerate_colorings(d, t).size();
}

bool is_valid_coloring(const LinkDiagram& d, const Coloring& c, const BikeiTable& t) {
  const auto strands = d.strands();
  if (c.size() != strands.size()) return false;
  for (StrandId x : strands) {
    auto it = c.find(x);
    if (it == c.end() || it->second < 1 || it->second > t.size()) return false;
  }
  auto v = [&](SemiarcId s) { return c.at(StrandId::semiarc(s)); };
  for (const Crossing& q : d.crossings()) {
    if (v(q[2]) != t.under(v(q[0]), v(q[1])) || v(q[0]) != t.under(v(q[2]), v(q[3])) ||
        v(q[3]) != t.over(v(q[1]), v(q[0])) || v(q[1]) != t.over(v(q[3]), v(q[2])))
      return false;
  }
  return true;
}

HomsetElement make_element(const LinkDiagram& d, const Coloring& c) {
  return {d, c, d, c, {}};
}

Coloring transport_coloring(const Coloring& c, const MoveRecord& r, const BikeiTable& t) {
  Coloring fixed;
  for (const auto& [from, to] : r.surviving) {
    auto it = c.find(from);
    if (it == c.end()) throw HomsetError("coloring has no value for " + from.symbol());
    auto [pos, fresh] = fixed.emplace(to, it->second);
    if (!fresh && pos->second != it->second)
      throw IllposedMove("strands merged by the move carry different colors");
  }
  const auto found = solve(r.after, t, fixed);
  if (found.size() != 1)
    throw IllposedMove(std::to_string(found.size()) + " colorings extend the surviving colors after " +
                       format_move(r.spec));
  return found.front();
}

HomsetElement transport(const HomsetElement& e, const MoveRecord& r, const BikeiTable& t) {
  if (!e.current_diagram.same_as(r.before))
    throw HomsetError("move record does not start at the element's current diagram");
  HomsetElement out = e;
  out.current_coloring = transport_coloring(e.current_coloring, r, t);
  out.current_diagram = r.after;
  out.history.push_back(r);
  return out;
}

bool homset_equal(const HomsetElement& a, const HomsetElement& b) {
  if (!a.base_diagram.same_as(b.base_diagram))
    throw HomsetError("homset elements live on different base diagrams");
  return a.base_coloring == b.base_coloring;
}

std::optional<DiagramAutomorphism> same_colored_diagram(const Coloring& c1, const Coloring& c2,
                                                        const LinkDiagram& d,
                                                        SymmetryMode mode) {
  if (c1 == c2) return identity_automorphism(d);
  if (!mode.search) return std::nullopt;
  return find_isomorphism(d, d, {}, mode.flags, &c1, &c2);
}

SymmetryReport symmetry_collisions(const LinkDiagram& d, const BikeiTable& t,
                                   SymmetryMode mode) {
  SymmetryReport rep;
  rep.colorings = enumerate_colorings(d, t);
  const int n = static_cast<int>(rep.colorings.size());
  std::vector<DiagramAutomorphism> group{identity_automorphism(d)};
  if (mode.search) group = automorphisms(d, mode.flags);
  rep.group_order = group.size();

  std::map<Coloring, int> index;
  for (int i = 0; i < n; ++i) index[rep.colorings[static_cast<std::size_t>(i)]] = i;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };

  std::map<std::pair<int, int>, DiagramAutomorphism> pairs;
  for (int i = 0; i < n; ++i) {
    for (const auto& phi : group) {
      if (phi.is_identity()) continue;
      auto it = index.find(push_forward(rep.colorings[static_cast<std::size_t>(i)], phi));
      if (it == index.end() || it->second == i) continue;
      const int j = it->second;
      const int ri = find(i), rj = find(j);
      if (ri != rj) parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
      if (i < j) pairs.emplace(std::make_pair(i, j), phi);
    }
  }
  for (auto& [ij, phi] : pairs) rep.collisions.push_back({ij.first, ij.second, phi});

  std::map<int, std::vector<int>> orbit;
  for (int i = 0; i < n; ++i) orbit[find(i)].push_back(i);
  for (auto& [root, members] : orbit) rep.orbits.push_back(std::move(members));
  std::sort(rep.orbits.begin(), rep.orbits.end());
  return rep;
}

nlohmann::ordered_json coloring_to_json(const Coloring& c) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [x, v] : c) j[x.symbol()] = v;
  return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("coloring must be a JSON object");
  Coloring c;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ParseError("color of " + key + " is not an integer");
    StrandId x = !key.empty() && std::isdigit(static_cast<unsigned char>(key[0]))
                     ? StrandId::from_symbol("s" + key)
                     : StrandId::from_symbol(key);
    c[x] = value.get<Element>();
  }
  return c;
}

nlohmann::ordered_json element_to_json(const HomsetElement& e) {
  nlohmann::ordered_json j;
  j["base"] = coloring_to_json(e.base_coloring);
  j["current"] = coloring_to_json(e.current_coloring);
  j["base_diagram"] = serialize_diagram(e.base_diagram);
  j["current_diagram"] = serialize_diagram(e.current_diagram);
  j["history"] = nlohmann::ordered_json::array();
  for (const auto& r : e.history) j["history"].push_back(format_move(r.spec));
  return j;
}

}  // namespace bikei
