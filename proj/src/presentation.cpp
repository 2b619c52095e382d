#include "bikei/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bikei {

std::string format_relation(const Relation& r) {
  return format_word(r.left) + " = " + format_word(r.right);
}

int Presentation::generator_index(std::string_view symbol) const noexcept {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == symbol) return static_cast<int>(i);
  return -1;
}

std::vector<Relation> crossing_relations(const Crossing& c) {
  auto g = [&](int k) { return Word::gen(StrandId::semiarc(c[k]).symbol()); };
  return {
      {g(2), Word::under(g(0), g(1))},
      {g(0), Word::under(g(2), g(3))},
      {g(3), Word::over(g(1), g(0))},
      {g(1), Word::over(g(3), g(2))},
  };
}

Presentation fundamental_presentation(const LinkDiagram& d) {
  Presentation p;
  for (StrandId x : d.strands()) p.generators.push_back(x.symbol());
  for (const Crossing& c : d.crossings())
    for (auto& r : crossing_relations(c)) p.relations.push_back(std::move(r));
  return p;
}

Element evaluate_word(const Word& w, const std::map<std::string, Element>& assignment,
                      const BikeiTable& t) {
  if (w.is_generator()) {
    auto it = assignment.find(w.symbol());
    if (it == assignment.end())
      throw PresentationError("generator '" + w.symbol() + "' has no value");
    return it->second;
  }
  const Element a = evaluate_word(w.left(), assignment, t);
  const Element b = evaluate_word(w.right(), assignment, t);
  return w.op() == Word::Op::under ? t.under(a, b) : t.over(a, b);
}

bool satisfies(const Relation& r, const std::map<std::string, Element>& assignment,
               const BikeiTable& t) {
  return evaluate_word(r.left, assignment, t) == evaluate_word(r.right, assignment, t);
}

namespace {

/// Backtracking over generator values. A relation whose one side is a bare
/// generator forces that generator once the other side is known.
class Solver {
 public:
  Solver(const Presentation& p, const BikeiTable& t) : t_(t) {
    for (const Relation& r : p.relations) {
      const int l = compile(r.left, p);
      const int rr = compile(r.right, p);
      rels_.push_back({l, rr});
    }
  }

  std::vector<Assignment> run(Assignment start) {
    out_.clear();
    search(std::move(start));
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  struct Node {
    Word::Op op;
    int gen;  // for leaves
    int l, r;
  };

  int compile(const Word& w, const Presentation& p) {
    Node n{w.op(), -1, -1, -1};
    if (w.is_generator()) {
      n.gen = p.generator_index(w.symbol());
      if (n.gen < 0) throw PresentationError("undeclared generator '" + w.symbol() + "'");
    } else {
      n.l = compile(w.left(), p);
      n.r = compile(w.right(), p);
    }
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  Element eval(int node, const Assignment& v) const {
    const Node& n = nodes_[node];
    if (n.op == Word::Op::gen) return v[n.gen];
    const Element a = eval(n.l, v);
    if (a == 0) return 0;
    const Element b = eval(n.r, v);
    if (b == 0) return 0;
    return n.op == Word::Op::under ? t_.under(a, b) : t_.over(a, b);
  }

  bool propagate(Assignment& v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [l, r] : rels_) {
        const Element a = eval(l, v);
        const Element b = eval(r, v);
        if (a != 0 && b != 0) {
          if (a != b) return false;
        } else if (a == 0 && b != 0 && nodes_[l].op == Word::Op::gen) {
          v[nodes_[l].gen] = b;
          changed = true;
        } else if (b == 0 && a != 0 && nodes_[r].op == Word::Op::gen) {
          v[nodes_[r].gen] = a;
          changed = true;
        }
      }
    }
    return true;
  }

  void search(Assignment v) {
    if (!propagate(v)) return;
    auto free = std::find(v.begin(), v.end(), 0);
    if (free == v.end()) {
      out_.push_back(std::move(v));
      return;
    }
    for (Element x = 1; x <= t_.size(); ++x) {
      *free = x;
      search(v);
    }
  }

  const BikeiTable& t_;
  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> rels_;
  std::vector<Assignment> out_;
};

}  // namespace

std::vector<Assignment> solve_presentation(const Presentation& p, const BikeiTable& t,
                                           const std::map<std::string, Element>& fixed) {
  Assignment start(p.generators.size(), 0);
  for (const auto& [sym, v] : fixed) {
    const int i = p.generator_index(sym);
    if (i < 0) throw PresentationError("undeclared generator '" + sym + "'");
    if (v < 1 || v > t.size()) throw PresentationError("value out of range for " + sym);
    start[static_cast<std::size_t>(i)] = v;
  }
  return Solver(p, t).run(std::move(start));
}

std::vector<Assignment> enumerate_presentation_homset(const Presentation& p,
                                                      const BikeiTable& t) {
  return solve_presentation(p, t, {});
}

bool is_short_form(const Presentation& p) {
  auto simple = [](const Word& w) {
    return !w.is_generator() && w.left().is_generator() && w.right().is_generator();
  };
  return std::all_of(p.relations.begin(), p.relations.end(), [&](const Relation& r) {
    return (r.left.is_generator() && simple(r.right)) ||
           (r.right.is_generator() && simple(r.left));
  });
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_gen = false;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      if (head == "gen") {
        std::string sym;
        while (ls >> sym) {
          if (p.generator_index(sym) >= 0) throw ParseError("duplicate generator " + sym);
          Word probe = parse_word(sym);
          if (!probe.is_generator()) throw ParseError("bad generator symbol " + sym);
          p.generators.push_back(sym);
        }
        have_gen = true;
      } else if (head == "rel") {
        std::string rest;
        std::getline(ls, rest);
        const auto eq = rest.find('=');
        if (eq == std::string::npos || rest.find('=', eq + 1) != std::string::npos)
          throw ParseError("relation needs exactly one '='");
        Relation r{parse_word(rest.substr(0, eq)), parse_word(rest.substr(eq + 1))};
        std::set<std::string> syms;
        r.left.collect_symbols(syms);
        r.right.collect_symbols(syms);
        for (const auto& s : syms)
          if (p.generator_index(s) < 0) throw ParseError("undeclared generator " + s);
        p.relations.push_back(std::move(r));
      } else {
        throw ParseError("unknown directive '" + head + "'");
      }
    }
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!have_gen && !p.relations.empty()) throw ParseError("missing gen line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "gen";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relations) out += "rel " + format_relation(r) + "\n";
  return out;
}

bool same_presentation(const Presentation& a, const Presentation& b) {
  auto ga = a.generators, gb = b.generators;
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  if (ga != gb) return false;
  auto ra = a.relations, rb = b.relations;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

Presentation relabel(const Presentation& p, const std::map<std::string, std::string>& names) {
  std::map<std::string, Word> sub;
  for (const auto& [from, to] : names) sub[from] = Word::gen(to);
  Presentation out;
  for (const auto& g : p.generators) {
    auto it = names.find(g);
    out.generators.push_back(it == names.end() ? g : it->second);
  }
  for (const auto& r : p.relations)
    out.relations.push_back({r.left.substitute(sub), r.right.substitute(sub)});
  return out;
}

}  // namespace bikei
