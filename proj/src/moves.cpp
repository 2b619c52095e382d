#include "bikei/moves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "bikei/table.hpp"

namespace bikei {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int mod4(int v) { return ((v % 4) + 4) % 4; }

SlotRef other_end(const LinkDiagram& d, SemiarcId s, SlotRef here) {
  auto occ = d.occurrences(s);
  return occ[0] == here ? occ[1] : occ[0];
}

/// Position of a slot after deleting the crossings in `removed` (sorted).
SlotRef shifted(SlotRef r, const std::vector<int>& removed) {
  int below = 0;
  for (int c : removed)
    if (c < r.crossing) ++below;
  return {r.crossing - below, r.slot};
}

void require_crossing(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count())
    throw MoveError("no crossing " + std::to_string(c + 1));
}

void require_semiarc(const LinkDiagram& d, SemiarcId s) {
  if (!d.has_semiarc(s)) throw MoveError("no semiarc " + std::to_string(s));
}

/// Removes crossings, drops destroyed semiarcs and glues the semiarcs listed
/// in `glue` pairwise. A glued class keeps its smallest label; a class left
/// without crossing slots becomes a new free loop.
struct Surgery {
  LinkDiagram result;
  std::map<StrandId, StrandId> surviving;
  std::map<SemiarcId, StrandId> image;  // every non-destroyed semiarc
};

Surgery remove_and_glue(const LinkDiagram& d, std::vector<int> removed,
                        const std::vector<SemiarcId>& destroyed,
                        const std::vector<std::pair<SemiarcId, SemiarcId>>& glue) {
  std::sort(removed.begin(), removed.end());
  std::map<SemiarcId, SemiarcId> parent;
  std::function<SemiarcId(SemiarcId)> find = [&](SemiarcId x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  for (auto [a, b] : glue) {
    SemiarcId ra = find(a), rb = find(b);
    if (ra == rb) continue;
    if (rb < ra) std::swap(ra, rb);
    parent[ra] = ra;
    parent[rb] = ra;
  }

  std::vector<Crossing> kept;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (std::binary_search(removed.begin(), removed.end(), c)) continue;
    Crossing x = d.crossings()[c];
    for (auto& s : x.slot) s = find(s);
    kept.push_back(x);
  }

  std::map<SemiarcId, int> uses;
  for (const auto& x : kept)
    for (SemiarcId s : x.slot) ++uses[s];

  Surgery out;
  int loops = d.free_loops();
  std::map<SemiarcId, StrandId> root_image;
  std::set<SemiarcId> dead(destroyed.begin(), destroyed.end());
  for (SemiarcId s : d.semiarcs()) {
    if (dead.count(s)) continue;
    SemiarcId r = find(s);
    if (!root_image.count(r))
      root_image[r] = uses[r] == 0 ? StrandId::loop(++loops) : StrandId::semiarc(r);
    out.image[s] = root_image[r];
    out.surviving[StrandId::semiarc(s)] = root_image[r];
  }
  for (int k = 1; k <= d.free_loops(); ++k)
    out.surviving[StrandId::loop(k)] = StrandId::loop(k);
  out.result = LinkDiagram(std::move(kept), loops);
  return out;
}

// Reidemeister I

struct R1Match {
  int crossing;
  int first;  // loop sits in slots first, first+1
  SemiarcId loop;
  SemiarcId p;  // slot first+2
  SemiarcId q;  // slot first+3
};

std::optional<R1Match> match_r1(const LinkDiagram& d, int c, SemiarcId loop) {
  const Crossing& x = d.crossings()[c];
  for (int i = 0; i < 4; ++i)
    if (x[i] == loop && x[i + 1] == loop) return R1Match{c, i, loop, x[i + 2], x[i + 3]};
  return std::nullopt;
}

std::pair<LinkDiagram, MoveRecord> do_r1_add(const LinkDiagram& d, const R1Add& m) {
  if (m.variant != 'A' && m.variant != 'B')
    throw MoveError("R1+ variant must be A or B");
  MoveRecord rec;
  rec.spec = m;
  auto cs = d.crossings();
  const SemiarcId fresh = d.max_label();
  const int new_index = d.crossing_count();

  if (m.target.is_loop()) {
    if (m.target.id < 1 || m.target.id > d.free_loops())
      throw MoveError("no free loop " + std::to_string(m.target.id));
    if (m.flip) throw MoveError("R1+ on a free loop takes no side flag");
    const SemiarcId a = fresh + 1, b = fresh + 2;
    cs.push_back(m.variant == 'A' ? Crossing{{a, a, b, b}} : Crossing{{a, b, b, a}});
    for (SemiarcId s : d.semiarcs())
      rec.surviving[StrandId::semiarc(s)] = StrandId::semiarc(s);
    for (int k = 1; k <= d.free_loops(); ++k) {
      if (k == m.target.id)
        rec.surviving[StrandId::loop(k)] = StrandId::semiarc(a);
      else
        rec.surviving[StrandId::loop(k)] = StrandId::loop(k < m.target.id ? k : k - 1);
    }
    rec.created = {StrandId::semiarc(b)};
    rec.inverse = R1Remove{new_index, b};
    LinkDiagram out(std::move(cs), d.free_loops() - 1);
    rec.before = d;
    rec.after = out;
    return {std::move(out), std::move(rec)};
  }

  const SemiarcId s = m.target.id;
  require_semiarc(d, s);
  const auto occ = d.occurrences(s);
  const SemiarcId loop = fresh + 1, q = fresh + 2;
  cs[occ[1].crossing].slot[occ[1].slot] = q;
  Crossing kink;
  if (m.variant == 'A')
    kink = m.flip ? Crossing{{loop, loop, q, s}} : Crossing{{loop, loop, s, q}};
  else
    kink = m.flip ? Crossing{{loop, q, s, loop}} : Crossing{{loop, s, q, loop}};
  cs.push_back(kink);
  for (StrandId x : d.strands()) rec.surviving[x] = x;
  rec.created = {StrandId::semiarc(loop), StrandId::semiarc(q)};
  rec.inverse = R1Remove{new_index, loop};
  LinkDiagram out(std::move(cs), d.free_loops());
  rec.before = d;
  rec.after = out;
  return {std::move(out), std::move(rec)};
}

std::pair<LinkDiagram, MoveRecord> do_r1_remove(const LinkDiagram& d, const R1Remove& m) {
  require_crossing(d, m.crossing);
  require_semiarc(d, m.loop);
  auto match = match_r1(d, m.crossing, m.loop);
  if (!match)
    throw MoveError("R1-: semiarc " + std::to_string(m.loop) +
                    " does not fill two adjacent slots of crossing " +
                    std::to_string(m.crossing + 1));
  const auto& r = *match;
  Surgery cut = remove_and_glue(d, {r.crossing}, {r.loop}, {{r.p, r.q}});

  MoveRecord rec;
  rec.spec = m;
  rec.surviving = cut.surviving;
  rec.destroyed = {StrandId::semiarc(r.loop)};
  const char variant = r.first % 2 == 0 ? 'A' : 'B';
  const StrandId merged = cut.image.at(r.p);
  if (merged.is_loop()) {
    rec.inverse = R1Add{merged, variant, false};
  } else {
    const SlotRef p_far = shifted(other_end(d, r.p, {r.crossing, (r.first + 2) & 3}),
                                  {r.crossing});
    const auto occ = cut.result.occurrences(merged.id);
    rec.inverse = R1Add{merged, variant, !(occ[0] == p_far)};
  }
  rec.before = d;
  rec.after = cut.result;
  return {cut.result, std::move(rec)};
}

// Reidemeister II

std::pair<LinkDiagram, MoveRecord> do_r2_add(const LinkDiagram& d, const R2Add& m) {
  require_semiarc(d, m.s);
  require_semiarc(d, m.t);
  if (m.s == m.t) throw MoveError("R2+ needs two different semiarcs");
  const SemiarcId over = m.s_over ? m.s : m.t;
  const SemiarcId under = m.s_over ? m.t : m.s;
  const auto o = d.occurrences(over);
  auto u = d.occurrences(under);
  if (m.cross) std::swap(u[0], u[1]);

  const SemiarcId fresh = d.max_label();
  const SemiarcId over2 = fresh + 1, under2 = fresh + 2, mid_o = fresh + 3, mid_u = fresh + 4;
  auto cs = d.crossings();
  cs[o[1].crossing].slot[o[1].slot] = over2;
  cs[u[1].crossing].slot[u[1].slot] = under2;
  const int c1 = d.crossing_count();
  if (!m.flip) {
    cs.push_back(Crossing{{under, mid_o, mid_u, over}});
    cs.push_back(Crossing{{mid_u, mid_o, under2, over2}});
  } else {
    cs.push_back(Crossing{{under, over, mid_u, mid_o}});
    cs.push_back(Crossing{{mid_u, over2, under2, mid_o}});
  }

  MoveRecord rec;
  rec.spec = m;
  for (StrandId x : d.strands()) rec.surviving[x] = x;
  rec.created = {StrandId::semiarc(over2), StrandId::semiarc(under2),
                 StrandId::semiarc(mid_o), StrandId::semiarc(mid_u)};
  rec.inverse = R2Remove{c1, c1 + 1};
  LinkDiagram out(std::move(cs), d.free_loops());
  rec.before = d;
  rec.after = out;
  return {std::move(out), std::move(rec)};
}

struct R2Match {
  SemiarcId mid_u, mid_o;
  std::array<int, 2> slot_u, slot_o;  // slots of mid_u / mid_o at c1, c2
  SemiarcId t1, t2, s1, s2;           // outer under ends, outer over ends
};

std::optional<R2Match> match_r2(const LinkDiagram& d, int c1, int c2) {
  if (c1 == c2) return std::nullopt;
  const Crossing& x1 = d.crossings()[c1];
  const Crossing& x2 = d.crossings()[c2];
  for (int i = 0; i < 4; i += 2) {
    for (int j = 1; j < 4; j += 2) {
      const SemiarcId mu = x1[i], mo = x1[j];
      if (mu == mo) continue;
      const SlotRef fu = other_end(d, mu, {c1, i});
      const SlotRef fo = other_end(d, mo, {c1, j});
      if (fu.crossing != c2 || fu.slot % 2 != 0) continue;
      if (fo.crossing != c2 || fo.slot % 2 != 1) continue;
      // The bigon is a face only if its corners turn opposite ways.
      if (mod4(j - i) == mod4(fo.slot - fu.slot)) continue;
      R2Match r{mu, mo, {i, fu.slot}, {j, fo.slot},
                x1[i + 2], x2[fu.slot + 2], x1[j + 2], x2[fo.slot + 2]};
      std::set<SemiarcId> ends{r.t1, r.t2, r.s1, r.s2};
      if (ends.size() != 4) continue;
      return r;
    }
  }
  return std::nullopt;
}

std::pair<LinkDiagram, MoveRecord> do_r2_remove(const LinkDiagram& d, const R2Remove& m) {
  require_crossing(d, m.c1);
  require_crossing(d, m.c2);
  auto match = match_r2(d, m.c1, m.c2);
  if (!match)
    throw MoveError("R2-: crossings " + std::to_string(m.c1 + 1) + " and " +
                    std::to_string(m.c2 + 1) + " do not bound a removable bigon");
  const auto& r = *match;
  Surgery cut = remove_and_glue(d, {m.c1, m.c2}, {r.mid_u, r.mid_o},
                                {{r.t1, r.t2}, {r.s1, r.s2}});

  MoveRecord rec;
  rec.spec = m;
  rec.surviving = cut.surviving;
  rec.destroyed = {StrandId::semiarc(r.mid_u), StrandId::semiarc(r.mid_o)};

  // Rebuild the R2+ that recreates this bigon.
  const std::vector<int> removed{m.c1, m.c2};
  const SemiarcId over = cut.image.at(r.s1).id;
  const SemiarcId under = cut.image.at(r.t1).id;
  const SlotRef s1_far = shifted(other_end(d, r.s1, {m.c1, (r.slot_o[0] + 2) & 3}), removed);
  const SlotRef t1_far = shifted(other_end(d, r.t1, {m.c1, (r.slot_u[0] + 2) & 3}), removed);
  const SlotRef t2_far = shifted(other_end(d, r.t2, {m.c2, (r.slot_u[1] + 2) & 3}), removed);
  const auto o = cut.result.occurrences(over);
  const auto u = cut.result.occurrences(under);
  const int near = o[0] == s1_far ? 0 : 1;
  const SlotRef near_under = near == 0 ? t1_far : t2_far;
  const bool cross = !(u[0] == near_under);
  const bool flip = mod4(r.slot_o[near] - r.slot_u[near]) == 1;
  rec.inverse = R2Add{over, under, true, flip, cross};
  rec.before = d;
  rec.after = cut.result;
  return {cut.result, std::move(rec)};
}

// Reidemeister III

struct R3Match {
  int tm, tb, mb;  // crossing roles: top/middle, top/bottom, middle/bottom
  bool reflected;
  SemiarcId top, mid, bot;  // inner semiarcs
  SemiarcId t_w, t_e, m_sw, m_ne, b_se, b_nw;
};

std::optional<R3Match> match_r3_roles(const LinkDiagram& d, int tm, int tb, int mb) {
  if (tm == tb || tm == mb || tb == mb) return std::nullopt;
  const Crossing& xtm = d.crossings()[tm];
  const Crossing& xtb = d.crossings()[tb];
  const Crossing& xmb = d.crossings()[mb];
  for (int ti = 1; ti < 4; ti += 2) {
    const SemiarcId top = xtm[ti];
    const SlotRef top_far = other_end(d, top, {tm, ti});
    if (top_far.crossing != tb || top_far.slot % 2 != 1) continue;
    for (int mi = 0; mi < 4; mi += 2) {
      const SemiarcId mid = xtm[mi];
      const SlotRef mid_far = other_end(d, mid, {tm, mi});
      if (mid_far.crossing != mb || mid_far.slot % 2 != 1) continue;
      for (int bi = 0; bi < 4; bi += 2) {
        const SemiarcId bot = xtb[bi];
        const SlotRef bot_far = other_end(d, bot, {tb, bi});
        if (bot_far.crossing != mb || bot_far.slot % 2 != 0) continue;
        const int h_tm = mod4(ti - mi);
        const int h_tb = mod4(top_far.slot - bi);
        const int h_mb = mod4(mid_far.slot - bot_far.slot);
        bool reflected;
        if (h_tm == 3 && h_tb == 1 && h_mb == 3)
          reflected = false;
        else if (h_tm == 1 && h_tb == 3 && h_mb == 1)
          reflected = true;
        else
          continue;
        return R3Match{tm, tb, mb, reflected, top, mid, bot,
                       xtm[ti + 2], xtb[top_far.slot + 2],
                       xtm[mi + 2], xmb[mid_far.slot + 2],
                       xtb[bi + 2], xmb[bot_far.slot + 2]};
      }
    }
  }
  return std::nullopt;
}

std::optional<R3Match> match_r3(const LinkDiagram& d, int c1, int c2, int c3) {
  std::array<int, 3> cs{c1, c2, c3};
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms)
    if (auto m = match_r3_roles(d, cs[p[0]], cs[p[1]], cs[p[2]])) return m;
  return std::nullopt;
}

std::pair<LinkDiagram, MoveRecord> do_r3(const LinkDiagram& d, const R3Move& m) {
  require_crossing(d, m.c1);
  require_crossing(d, m.c2);
  require_crossing(d, m.c3);
  auto match = match_r3(d, m.c1, m.c2, m.c3);
  if (!match)
    throw MoveError("R3: crossings " + std::to_string(m.c1 + 1) + ", " +
                    std::to_string(m.c2 + 1) + ", " + std::to_string(m.c3 + 1) +
                    " do not form a triangle with one strand over both others");
  const auto& r = *match;
  const SemiarcId fresh = d.max_label();
  const SemiarcId top = fresh + 1, mid = fresh + 2, bot = fresh + 3;
  Crossing tm{{mid, r.t_e, r.m_ne, top}};
  Crossing tb{{bot, top, r.b_nw, r.t_w}};
  Crossing mb{{bot, r.m_sw, r.b_se, mid}};
  if (r.reflected) {
    tm = tm.reflected();
    tb = tb.reflected();
    mb = mb.reflected();
  }
  auto cs = d.crossings();
  cs[r.tm] = tm;
  cs[r.tb] = tb;
  cs[r.mb] = mb;

  MoveRecord rec;
  rec.spec = m;
  for (StrandId x : d.strands()) {
    if (x.is_loop() || (x.id != r.top && x.id != r.mid && x.id != r.bot))
      rec.surviving[x] = x;
  }
  rec.created = {StrandId::semiarc(top), StrandId::semiarc(mid), StrandId::semiarc(bot)};
  rec.destroyed = {StrandId::semiarc(r.top), StrandId::semiarc(r.mid),
                   StrandId::semiarc(r.bot)};
  rec.inverse = R3Move{r.tm, r.tb, r.mb};
  LinkDiagram out(std::move(cs), d.free_loops());
  rec.before = d;
  rec.after = out;
  return {std::move(out), std::move(rec)};
}

// Directive parsing

std::map<std::string, std::string> parse_params(std::istringstream& in, const std::string& line) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw ParseError("expected key=value in move directive '" + line + "'");
    if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw ParseError("repeated key in move directive '" + line + "'");
  }
  return kv;
}

}  // namespace

std::string_view move_kind_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::none: return "none";
    case MoveKind::r1_add: return "R1+";
    case MoveKind::r1_remove: return "R1-";
    case MoveKind::r2_add: return "R2+";
    case MoveKind::r2_remove: return "R2-";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

MoveKind kind_of(const MoveSpec& m) noexcept {
  return static_cast<MoveKind>(m.index());
}

std::string format_move(const MoveSpec& m) {
  auto c = [](int i) { return std::to_string(i + 1); };
  return std::visit(
      overloaded{
          [](const NoMove&) { return std::string("none"); },
          [](const R1Add& x) {
            std::string out = "R1+ ";
            out += x.target.is_loop() ? "f=" : "s=";
            out += std::to_string(x.target.id) + " v=" + x.variant;
            if (x.flip) out += " side=R";
            return out;
          },
          [&](const R1Remove& x) {
            return "R1- c=" + c(x.crossing) + " loop=" + std::to_string(x.loop);
          },
          [](const R2Add& x) {
            std::string out = "R2+ s=" + std::to_string(x.s) + " t=" + std::to_string(x.t) +
                              " over=" + (x.s_over ? "s" : "t");
            if (x.flip) out += " side=R";
            if (x.cross) out += " cross=1";
            return out;
          },
          [&](const R2Remove& x) { return "R2- c1=" + c(x.c1) + " c2=" + c(x.c2); },
          [&](const R3Move& x) {
            return "R3 c1=" + c(x.c1) + " c2=" + c(x.c2) + " c3=" + c(x.c3);
          }},
      m);
}

MoveSpec parse_move(std::string_view directive) {
  const std::string line(directive);
  std::istringstream in(line);
  std::string head;
  if (!(in >> head)) throw ParseError("empty move directive");
  auto kv = parse_params(in, line);
  auto num = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing " + key + "= in '" + line + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size() || v < 1)
      throw ParseError("bad value for " + key + " in '" + line + "'");
    kv.erase(it);
    return v;
  };
  auto choice = [&](const std::string& key, std::initializer_list<const char*> allowed,
                    const char* fallback) {
    std::string v = fallback;
    if (auto it = kv.find(key); it != kv.end()) {
      v = it->second;
      kv.erase(it);
    }
    for (const char* a : allowed)
      if (v == a) return v;
    throw ParseError("bad value for " + key + " in '" + line + "'");
  };
  auto done = [&] {
    if (!kv.empty())
      throw ParseError("unexpected key " + kv.begin()->first + " in '" + line + "'");
  };

  MoveSpec out;
  if (head == "none") {
    out = NoMove{};
  } else if (head == "R1+") {
    R1Add m;
    if (kv.count("f"))
      m.target = StrandId::loop(num("f"));
    else
      m.target = StrandId::semiarc(num("s"));
    m.variant = choice("v", {"A", "B"}, "A")[0];
    m.flip = choice("side", {"L", "R"}, "L") == "R";
    out = m;
  } else if (head == "R1-") {
    R1Remove m;
    m.crossing = num("c") - 1;
    m.loop = num("loop");
    out = m;
  } else if (head == "R2+") {
    R2Add m;
    m.s = num("s");
    m.t = num("t");
    m.s_over = choice("over", {"s", "t"}, "s") == "s";
    m.flip = choice("side", {"L", "R"}, "L") == "R";
    m.cross = choice("cross", {"0", "1"}, "0") == "1";
    out = m;
  } else if (head == "R2-") {
    R2Remove m;
    m.c1 = num("c1") - 1;
    m.c2 = num("c2") - 1;
    out = m;
  } else if (head == "R3") {
    R3Move m;
    m.c1 = num("c1") - 1;
    m.c2 = num("c2") - 1;
    m.c3 = num("c3") - 1;
    out = m;
  } else {
    throw ParseError("unknown move '" + head + "'");
  }
  done();
  return out;
}

std::vector<MoveSpec> parse_move_script(std::string_view text) {
  std::vector<MoveSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char ch) { return std::isspace(ch); }))
      continue;
    try {
      out.push_back(parse_move(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::pair<LinkDiagram, MoveRecord> apply_move(const LinkDiagram& d, const MoveSpec& m) {
  return std::visit(
      overloaded{[&](const NoMove&) {
                   MoveRecord rec;
                   rec.spec = NoMove{};
                   rec.inverse = NoMove{};
                   for (StrandId x : d.strands()) rec.surviving[x] = x;
                   rec.before = d;
                   rec.after = d;
                   return std::pair{d, rec};
                 },
                 [&](const R1Add& x) { return do_r1_add(d, x); },
                 [&](const R1Remove& x) { return do_r1_remove(d, x); },
                 [&](const R2Add& x) { return do_r2_add(d, x); },
                 [&](const R2Remove& x) { return do_r2_remove(d, x); },
                 [&](const R3Move& x) { return do_r3(d, x); }},
      m);
}

std::vector<MoveSpec> find_move_sites(const LinkDiagram& d, MoveKind kind) {
  std::vector<MoveSpec> out;
  const auto& cs = d.crossings();
  switch (kind) {
    case MoveKind::none:
      out.push_back(NoMove{});
      break;
    case MoveKind::r1_add:
      for (SemiarcId s : d.semiarcs())
        for (char v : {'A', 'B'})
          for (bool flip : {false, true}) out.push_back(R1Add{StrandId::semiarc(s), v, flip});
      for (int k = 1; k <= d.free_loops(); ++k)
        for (char v : {'A', 'B'}) out.push_back(R1Add{StrandId::loop(k), v, false});
      break;
    case MoveKind::r1_remove:
      for (int c = 0; c < d.crossing_count(); ++c) {
        std::set<SemiarcId> loops;
        for (int i = 0; i < 4; ++i)
          if (cs[c][i] == cs[c][i + 1]) loops.insert(cs[c][i]);
        for (SemiarcId l : loops) out.push_back(R1Remove{c, l});
      }
      break;
    case MoveKind::r2_add: {
      const auto& sa = d.semiarcs();
      for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = i + 1; j < sa.size(); ++j)
          for (bool s_over : {true, false})
            for (bool flip : {false, true})
              for (bool cross : {false, true})
                out.push_back(R2Add{sa[i], sa[j], s_over, flip, cross});
      break;
    }
    case MoveKind::r2_remove:
      for (int c1 = 0; c1 < d.crossing_count(); ++c1) {
        std::set<int> partners;
        for (int k = 0; k < 4; ++k) {
          SlotRef far = other_end(d, cs[c1][k], {c1, k});
          if (far.crossing > c1) partners.insert(far.crossing);
        }
        for (int c2 : partners)
          if (match_r2(d, c1, c2)) out.push_back(R2Remove{c1, c2});
      }
      break;
    case MoveKind::r3: {
      std::set<std::array<int, 3>> seen;
      for (int tm = 0; tm < d.crossing_count(); ++tm) {
        for (int ti = 1; ti < 4; ti += 2) {
          const int tb = other_end(d, cs[tm][ti], {tm, ti}).crossing;
          for (int mi = 0; mi < 4; mi += 2) {
            const int mb = other_end(d, cs[tm][mi], {tm, mi}).crossing;
            auto m = match_r3(d, tm, tb, mb);
            if (!m) continue;
            std::array<int, 3> key{tm, tb, mb};
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back(R3Move{m->tm, m->tb, m->mb});
          }
        }
      }
      std::sort(out.begin(), out.end(), [](const MoveSpec& a, const MoveSpec& b) {
        const auto& x = std::get<R3Move>(a);
        const auto& y = std::get<R3Move>(b);
        std::array<int, 3> kx{x.c1, x.c2, x.c3}, ky{y.c1, y.c2, y.c3};
        std::sort(kx.begin(), kx.end());
        std::sort(ky.begin(), ky.end());
        return kx < ky;
      });
      break;
    }
  }
  return out;
}

std::map<StrandId, StrandId> compose_surviving(const std::map<StrandId, StrandId>& first,
                                               const std::map<StrandId, StrandId>& second) {
  std::map<StrandId, StrandId> out;
  for (const auto& [a, b] : first)
    if (auto it = second.find(b); it != second.end()) out[a] = it->second;
  return out;
}

}  // namespace bikei
