#include "bikei/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace bikei {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

using Visitor = std::function<bool(const DiagramAutomorphism&)>;

class IsoSearch {
 public:
  IsoSearch(const LinkDiagram& from, const LinkDiagram& to, SymmetryFlags flags,
            const Coloring* from_colors, const Coloring* to_colors)
      : from_(from), to_(to), flags_(flags), from_colors_(from_colors), to_colors_(to_colors) {
    for (int c = 0; c < to.crossing_count(); ++c)
      for (int k = 0; k < 4; ++k) to_sites_[to.crossings()[c][k]].push_back(c);
    order_ = bfs_order();
  }

  /// Runs the search; the visitor returns false to stop early.
  void run(const std::map<StrandId, StrandId>& seed, const Visitor& visit) {
    if (from_.crossing_count() != to_.crossing_count() ||
        from_.free_loops() != to_.free_loops() ||
        from_.semiarcs().size() != to_.semiarcs().size())
      return;
    for (const auto& [a, b] : seed) {
      if (a.is_loop() != b.is_loop()) return;
      if (a.is_loop()) {
        loop_seed_[a.id] = b.id;
      } else {
        if (!from_.has_semiarc(a.id) || !to_.has_semiarc(b.id)) return;
        seed_[a.id] = b.id;
      }
    }
    for (bool refl : {false, true}) {
      // Without crossings a reflection acts exactly like the identity.
      if (refl && (!flags_.allow_reflection || from_.crossing_count() == 0)) continue;
      reflected_ = refl;
      fwd_.clear();
      back_.clear();
      if (!load_seed()) continue;
      cmap_.assign(static_cast<std::size_t>(from_.crossing_count()), -1);
      rot_.assign(static_cast<std::size_t>(from_.crossing_count()), 0);
      used_.assign(static_cast<std::size_t>(to_.crossing_count()), false);
      if (!assign(0, visit)) return;
    }
  }

 private:
  std::vector<int> bfs_order() const {
    const int m = from_.crossing_count();
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int start = 0; start < m; ++start) {
      if (seen[start]) continue;
      std::queue<int> q;
      q.push(start);
      seen[start] = true;
      while (!q.empty()) {
        int c = q.front();
        q.pop();
        order.push_back(c);
        for (int k = 0; k < 4; ++k) {
          for (const auto& o : from_.occurrences(from_.crossings()[c][k])) {
            if (!seen[o.crossing]) {
              seen[o.crossing] = true;
              q.push(o.crossing);
            }
          }
        }
      }
    }
    return order;
  }

  bool colors_match(SemiarcId a, SemiarcId b) const {
    if (!from_colors_ || !to_colors_) return true;
    return from_colors_->at(StrandId::semiarc(a)) == to_colors_->at(StrandId::semiarc(b));
  }

  bool bind(SemiarcId a, SemiarcId b, std::vector<SemiarcId>& undo) {
    if (auto it = fwd_.find(a); it != fwd_.end()) return it->second == b;
    if (back_.count(b)) return false;
    if (!colors_match(a, b)) return false;
    fwd_[a] = b;
    back_[b] = a;
    undo.push_back(a);
    return true;
  }

  void unbind(const std::vector<SemiarcId>& undo) {
    for (SemiarcId a : undo) {
      back_.erase(fwd_[a]);
      fwd_.erase(a);
    }
  }

  bool load_seed() {
    std::vector<SemiarcId> undo;
    for (const auto& [a, b] : seed_)
      if (!bind(a, b, undo)) return false;
    return true;
  }

  bool assign(std::size_t depth, const Visitor& visit) {
    if (depth == order_.size()) return finish_loops(visit);
    const int c = order_[depth];
    const Crossing& q = from_.crossings()[c];

    std::vector<int> candidates;
    for (int k = 0; k < 4 && candidates.empty(); ++k) {
      if (auto it = fwd_.find(q[k]); it != fwd_.end()) {
        candidates = to_sites_.at(it->second);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      }
    }
    if (candidates.empty()) {
      candidates.resize(static_cast<std::size_t>(to_.crossing_count()));
      std::iota(candidates.begin(), candidates.end(), 0);
    }

    for (int j : candidates) {
      if (used_[j]) continue;
      for (int r = 0; r < 4; ++r) {
        if (r % 2 == 1 && !flags_.allow_mirror) continue;
        Crossing x = to_.crossings()[j].rotated(-r);
        if (reflected_) x = x.reflected();
        std::vector<SemiarcId> undo;
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) ok = bind(q[k], x[k], undo);
        if (ok) {
          used_[j] = true;
          cmap_[c] = j;
          rot_[c] = r;
          bool go_on = assign(depth + 1, visit);
          used_[j] = false;
          cmap_[c] = -1;
          if (!go_on) {
            unbind(undo);
            return false;
          }
        }
        unbind(undo);
      }
    }
    return true;
  }

  bool finish_loops(const Visitor& visit) {
    const int k = from_.free_loops();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      bool ok = true;
      for (int i = 1; i <= k && ok; ++i) {
        const int img = perm[i - 1];
        if (auto it = loop_seed_.find(i); it != loop_seed_.end() && it->second != img) ok = false;
        if (ok && from_colors_ && to_colors_ &&
            from_colors_->at(StrandId::loop(i)) != to_colors_->at(StrandId::loop(img)))
          ok = false;
      }
      if (!ok) continue;
      DiagramAutomorphism a;
      for (const auto& [s, t] : fwd_) a.strand_map[StrandId::semiarc(s)] = StrandId::semiarc(t);
      for (int i = 1; i <= k; ++i) a.strand_map[StrandId::loop(i)] = StrandId::loop(perm[i - 1]);
      a.crossing_map = cmap_;
      a.rotation = rot_;
      a.reflected = reflected_;
      if (!visit(a)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }

  const LinkDiagram& from_;
  const LinkDiagram& to_;
  SymmetryFlags flags_;
  const Coloring* from_colors_;
  const Coloring* to_colors_;
  std::map<SemiarcId, std::vector<int>> to_sites_;
  std::vector<int> order_;
  std::map<SemiarcId, SemiarcId> seed_;
  std::map<int, int> loop_seed_;

  bool reflected_ = false;
  std::map<SemiarcId, SemiarcId> fwd_, back_;
  std::vector<int> cmap_, rot_;
  std::vector<bool> used_;
};

}  // namespace

bool DiagramAutomorphism::is_identity() const {
  if (reflected) return false;
  for (const auto& [a, b] : strand_map)
    if (a != b) return false;
  for (std::size_t c = 0; c < crossing_map.size(); ++c)
    if (crossing_map[c] != static_cast<int>(c) || rotation[c] != 0) return false;
  return true;
}

DiagramAutomorphism identity_automorphism(const LinkDiagram& d) {
  DiagramAutomorphism a;
  for (StrandId x : d.strands()) a.strand_map[x] = x;
  a.crossing_map.resize(static_cast<std::size_t>(d.crossing_count()));
  std::iota(a.crossing_map.begin(), a.crossing_map.end(), 0);
  a.rotation.assign(static_cast<std::size_t>(d.crossing_count()), 0);
  return a;
}

DiagramAutomorphism compose(const DiagramAutomorphism& second, const DiagramAutomorphism& first) {
  DiagramAutomorphism out;
  for (const auto& [a, b] : first.strand_map) out.strand_map[a] = second.strand_map.at(b);
  const std::size_t m = first.crossing_map.size();
  out.crossing_map.resize(m);
  out.rotation.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    const int mid = first.crossing_map[c];
    out.crossing_map[c] = second.crossing_map[mid];
    const int r1 = first.rotation[c];
    out.rotation[c] = mod4(second.rotation[mid] + (second.reflected ? -r1 : r1));
  }
  out.reflected = first.reflected != second.reflected;
  return out;
}

DiagramAutomorphism inverse(const DiagramAutomorphism& a) {
  DiagramAutomorphism out;
  for (const auto& [x, y] : a.strand_map) out.strand_map[y] = x;
  const std::size_t m = a.crossing_map.size();
  out.crossing_map.resize(m);
  out.rotation.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    const int img = a.crossing_map[c];
    out.crossing_map[img] = static_cast<int>(c);
    out.rotation[img] = a.reflected ? a.rotation[c] : mod4(-a.rotation[c]);
  }
  out.reflected = a.reflected;
  return out;
}

bool is_isomorphism(const LinkDiagram& from, const LinkDiagram& to,
                    const DiagramAutomorphism& a, SymmetryFlags flags) {
  if (from.crossing_count() != to.crossing_count() || from.free_loops() != to.free_loops())
    return false;
  if (a.reflected && !flags.allow_reflection) return false;
  if (a.crossing_map.size() != from.crossings().size()) return false;
  std::vector<bool> hit(from.crossings().size(), false);
  for (std::size_t c = 0; c < a.crossing_map.size(); ++c) {
    const int j = a.crossing_map[c];
    if (j < 0 || j >= to.crossing_count() || hit[j]) return false;
    hit[j] = true;
    if (a.rotation[c] % 2 == 1 && !flags.allow_mirror) return false;
    Crossing img;
    for (int k = 0; k < 4; ++k) {
      auto it = a.strand_map.find(StrandId::semiarc(from.crossings()[c][k]));
      if (it == a.strand_map.end() || it->second.is_loop()) return false;
      img.slot[k] = it->second.id;
    }
    if (a.reflected) img = img.reflected();
    if (!(to.crossings()[j] == img.rotated(a.rotation[c]))) return false;
  }
  std::map<StrandId, int> seen;
  for (StrandId x : from.strands()) {
    auto it = a.strand_map.find(x);
    if (it == a.strand_map.end()) return false;
    if (x.is_loop() != it->second.is_loop()) return false;
    if (it->second.is_loop() && (it->second.id < 1 || it->second.id > to.free_loops()))
      return false;
    if (seen[it->second]++) return false;
  }
  return true;
}

std::vector<DiagramAutomorphism> automorphisms(const LinkDiagram& d, SymmetryFlags flags) {
  std::vector<DiagramAutomorphism> out;
  IsoSearch search(d, d, flags, nullptr, nullptr);
  search.run({}, [&](const DiagramAutomorphism& a) {
    out.push_back(a);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // Identity first, then the rest in sorted order.
  auto id = std::find_if(out.begin(), out.end(), [](const auto& a) { return a.is_identity(); });
  if (id != out.end()) std::rotate(out.begin(), id, id + 1);
  return out;
}

std::optional<DiagramAutomorphism> find_isomorphism(const LinkDiagram& from,
                                                    const LinkDiagram& to,
                                                    const std::map<StrandId, StrandId>& seed,
                                                    SymmetryFlags flags,
                                                    const Coloring* from_colors,
                                                    const Coloring* to_colors) {
  std::optional<DiagramAutomorphism> found;
  IsoSearch search(from, to, flags, from_colors, to_colors);
  search.run(seed, [&](const DiagramAutomorphism& a) {
    found = a;
    return false;
  });
  return found;
}

Coloring push_forward(const Coloring& c, const DiagramAutomorphism& a) {
  Coloring out;
  for (const auto& [x, v] : c) out[a.strand_map.at(x)] = v;
  return out;
}

}  // namespace bikei
