#include "bikei/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "bikei/table.hpp"

namespace bikei {

std::string StrandId::symbol() const {
  return (kind == Kind::semiarc ? "s" : "f") + std::to_string(id);
}

StrandId StrandId::from_symbol(std::string_view sym) {
  if (sym.size() < 2 || (sym[0] != 's' && sym[0] != 'f'))
    throw ParseError("not a strand symbol: " + std::string(sym));
  int v = 0;
  for (char c : sym.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("not a strand symbol: " + std::string(sym));
    v = v * 10 + (c - '0');
  }
  if (v < 1) throw ParseError("not a strand symbol: " + std::string(sym));
  return sym[0] == 's' ? semiarc(v) : loop(v);
}

Crossing Crossing::rotated(int r) const noexcept {
  Crossing out;
  for (int k = 0; k < 4; ++k) out.slot[k] = (*this)[k + r];
  return out;
}

Crossing Crossing::reflected() const noexcept {
  return Crossing{{slot[0], slot[3], slot[2], slot[1]}};
}

bool equivalent(const Crossing& a, const Crossing& b) noexcept {
  return a == b || a == b.rotated(2);
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free loop count");
  std::map<SemiarcId, std::vector<SlotRef>> seen;
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
    for (int k = 0; k < 4; ++k) {
      SemiarcId s = crossings_[c][k];
      if (s < 1)
        throw DiagramError("semiarc labels must be positive, got " + std::to_string(s));
      seen[s].push_back({c, k});
    }
  }
  for (auto& [s, where] : seen) {
    if (where.size() != 2)
      throw DiagramError("semiarc " + std::to_string(s) + " occurs " +
                         std::to_string(where.size()) + " times, expected 2");
    semiarcs_.push_back(s);
    occ_.push_back(where[0]);
    occ_.push_back(where[1]);
  }
}

std::vector<StrandId> LinkDiagram::strands() const {
  std::vector<StrandId> out;
  out.reserve(semiarcs_.size() + static_cast<std::size_t>(free_loops_));
  for (SemiarcId s : semiarcs_) out.push_back(StrandId::semiarc(s));
  for (int k = 1; k <= free_loops_; ++k) out.push_back(StrandId::loop(k));
  return out;
}

bool LinkDiagram::has_semiarc(SemiarcId s) const noexcept {
  return std::binary_search(semiarcs_.begin(), semiarcs_.end(), s);
}

std::array<SlotRef, 2> LinkDiagram::occurrences(SemiarcId s) const {
  auto it = std::lower_bound(semiarcs_.begin(), semiarcs_.end(), s);
  if (it == semiarcs_.end() || *it != s)
    throw DiagramError("unknown semiarc " + std::to_string(s));
  auto i = static_cast<std::size_t>(it - semiarcs_.begin());
  return {occ_[2 * i], occ_[2 * i + 1]};
}

bool LinkDiagram::same_as(const LinkDiagram& other) const noexcept {
  if (free_loops_ != other.free_loops_ || crossings_.size() != other.crossings_.size())
    return false;
  for (std::size_t c = 0; c < crossings_.size(); ++c)
    if (!equivalent(crossings_[c], other.crossings_[c])) return false;
  return true;
}

LinkDiagram parse_diagram(std::string_view text) {
  std::vector<Crossing> crossings;
  int loops = 0;
  bool saw_loops = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    // '/' is accepted as a line separator so one-liners like
    // "X 1 2 3 4 / X 3 4 1 2" work.
    std::replace(line.begin(), line.end(), '/', '\n');
    std::istringstream parts(line);
    std::string piece;
    while (std::getline(parts, piece)) {
      std::istringstream toks(piece);
      std::string head;
      if (!(toks >> head)) continue;
      auto where = " on line " + std::to_string(lineno);
      std::vector<long> nums;
      std::string tok;
      while (toks >> tok) {
        std::size_t used = 0;
        long v = 0;
        try {
          v = std::stol(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size() || v < 0)
          throw ParseError("expected a non-negative integer, got '" + tok + "'" + where);
        nums.push_back(v);
      }
      if (head == "X") {
        if (nums.size() != 4) throw ParseError("X needs 4 semiarc labels" + where);
        Crossing c;
        for (int k = 0; k < 4; ++k) {
          if (nums[k] < 1) throw ParseError("semiarc labels must be positive" + where);
          c.slot[k] = static_cast<SemiarcId>(nums[k]);
        }
        crossings.push_back(c);
      } else if (head == "O") {
        if (saw_loops) throw ParseError("at most one O line is allowed" + where);
        if (nums.size() != 1) throw ParseError("O needs one count" + where);
        saw_loops = true;
        loops = static_cast<int>(nums[0]);
      } else {
        throw ParseError("unknown directive '" + head + "'" + where);
      }
    }
  }
  try {
    return LinkDiagram(std::move(crossings), loops);
  } catch (const DiagramError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.crossings())
    out << "X " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
  if (d.free_loops() > 0) out << "O " << d.free_loops() << '\n';
  return out.str();
}

std::vector<Component> components(const LinkDiagram& d) {
  std::vector<Component> out;
  std::map<SemiarcId, bool> visited;
  for (SemiarcId start : d.semiarcs()) {
    if (visited[start]) continue;
    Component comp;
    SemiarcId cur = start;
    // Leave `cur` through its second occurrence, pass straight through the
    // crossing, and continue on the semiarc found opposite.
    SlotRef exit = d.occurrences(cur)[1];
    while (true) {
      visited[cur] = true;
      comp.semiarcs.push_back(cur);
      SlotRef entry{exit.crossing, (exit.slot + 2) & 3};
      SemiarcId next = d.at(entry);
      if (next == start) break;
      auto occ = d.occurrences(next);
      exit = occ[0] == entry ? occ[1] : occ[0];
      cur = next;
    }
    out.push_back(std::move(comp));
  }
  for (int k = 1; k <= d.free_loops(); ++k) out.push_back(Component{{}, k});
  return out;
}

}  // namespace bikei
