#include "bikei/tietze.hpp"

#include <algorithm>
#include <set>

#include "bikei/fixtures.hpp"

namespace bikei {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::string format_justification(const Justification& j) {
  return std::visit(Overload{
                        [](const std::monostate&) { return std::string("unjustified"); },
                        [](const AxiomInstance& a) {
                          std::string s = "axiom " + std::string(axiom_name(a.axiom));
                          for (const auto& w : a.args) s += " [" + format_word(w) + "]";
                          return s;
                        },
                        [](const SolverVerified& v) {
                          std::string s = "solver";
                          for (int i : v.support) s += " " + std::to_string(i);
                          return s;
                        },
                    },
                    j);
}

std::set<std::string> symbols_of(const Relation& r) {
  std::set<std::string> out;
  r.left.collect_symbols(out);
  r.right.collect_symbols(out);
  return out;
}

/// Index of a relation `sym = W` (either order) with sym absent from W.
bool defines(const Relation& r, const std::string& sym) {
  if (r.left.is_generator() && r.left.symbol() == sym && !r.right.mentions(sym)) return true;
  return r.right.is_generator() && r.right.symbol() == sym && !r.left.mentions(sym);
}

void check_justification(const Presentation& p, const Relation& target,
                         const Justification& j, std::optional<int> excluded) {
  std::visit(Overload{
                 [](const std::monostate&) { throw TietzeError("missing justification"); },
                 [&](const AxiomInstance& a) {
                   const Relation id = axiom_identity(a.axiom, a.args);
                   if (!(target == id) && !(target == Relation{id.right, id.left}))
                     throw TietzeError("relation is not an instance of axiom " +
                                       std::string(axiom_name(a.axiom)));
                 },
                 [&](const SolverVerified& v) {
                   Presentation sub;
                   std::set<std::string> syms = symbols_of(target);
                   for (int i : v.support) {
                     if (i < 0 || i >= static_cast<int>(p.relations.size()))
                       throw TietzeError("support index " + std::to_string(i) + " out of range");
                     if (excluded && i == *excluded)
                       throw TietzeError("a relation cannot support its own removal");
                     sub.relations.push_back(p.relations[static_cast<std::size_t>(i)]);
                     auto s = symbols_of(sub.relations.back());
                     syms.insert(s.begin(), s.end());
                   }
                   sub.generators.assign(syms.begin(), syms.end());
                   for (const BikeiTable& t : fixtures::verified_bikeis()) {
                     for (const Assignment& a : enumerate_presentation_homset(sub, t)) {
                       std::map<std::string, Element> env;
                       for (std::size_t g = 0; g < a.size(); ++g) env[sub.generators[g]] = a[g];
                       if (!satisfies(target, env, t))
                         throw TietzeError("relation " + format_relation(target) +
                                           " does not follow from its support");
                     }
                   }
                 },
             },
             j);
}

void require_declared(const Presentation& p, const Relation& r) {
  for (const auto& s : symbols_of(r))
    if (p.generator_index(s) < 0) throw TietzeError("unknown generator '" + s + "'");
}

void apply_step(Presentation& p, const TietzeStep& step) {
  std::visit(
      Overload{
          [&](const AddGenerator& s) {
            if (p.generator_index(s.symbol) >= 0)
              throw TietzeError("generator '" + s.symbol + "' already exists");
            Relation def{Word::gen(s.symbol), s.definition};
            if (s.definition.mentions(s.symbol))
              throw TietzeError("definition of '" + s.symbol + "' mentions itself");
            p.generators.push_back(s.symbol);
            require_declared(p, def);
            p.relations.push_back(std::move(def));
          },
          [&](const RemoveGenerator& s) {
            const int g = p.generator_index(s.symbol);
            if (g < 0) throw TietzeError("unknown generator '" + s.symbol + "'");
            int via = -1;
            if (s.via) {
              via = *s.via;
              if (via < 0 || via >= static_cast<int>(p.relations.size()) ||
                  !defines(p.relations[static_cast<std::size_t>(via)], s.symbol))
                throw TietzeError("relation " + std::to_string(via) + " does not define '" +
                                  s.symbol + "'");
            } else {
              for (std::size_t i = 0; i < p.relations.size(); ++i) {
                if (!defines(p.relations[i], s.symbol)) continue;
                if (via >= 0)
                  throw TietzeError("several relations define '" + s.symbol + "'");
                via = static_cast<int>(i);
              }
              if (via < 0) throw TietzeError("no relation defines '" + s.symbol + "'");
            }
            const Relation& def = p.relations[static_cast<std::size_t>(via)];
            const Word w = def.left.is_generator() && def.left.symbol() == s.symbol
                               ? def.right
                               : def.left;
            const std::map<std::string, Word> sub{{s.symbol, w}};
            std::vector<Relation> rest;
            for (std::size_t i = 0; i < p.relations.size(); ++i) {
              if (static_cast<int>(i) == via) continue;
              rest.push_back({p.relations[i].left.substitute(sub),
                              p.relations[i].right.substitute(sub)});
            }
            p.relations = std::move(rest);
            p.generators.erase(p.generators.begin() + g);
          },
          [&](const AddRelation& s) {
            require_declared(p, s.relation);
            check_justification(p, s.relation, s.justification, std::nullopt);
            p.relations.push_back(s.relation);
          },
          [&](const RemoveRelation& s) {
            if (s.index < 0 || s.index >= static_cast<int>(p.relations.size()))
              throw TietzeError("no relation " + std::to_string(s.index));
            check_justification(p, p.relations[static_cast<std::size_t>(s.index)],
                                s.justification, s.index);
            p.relations.erase(p.relations.begin() + s.index);
          },
      },
      step);
}

// Script symbols for a move record.
struct Plan {
  std::map<StrandId, std::string> post_sym;  // post strand -> script symbol
  std::map<StrandId, StrandId> keeper;       // merged-away pre strand -> keeper
  std::vector<StrandId> created;             // post strands without a preimage
  std::vector<StrandId> destroyed;           // pre strands without an image
};

Plan make_plan(const MoveRecord& r) {
  Plan plan;
  std::map<StrandId, std::vector<StrandId>> pre_images;
  for (const auto& [from, to] : r.surviving) pre_images[to].push_back(from);
  int fresh = 0;
  for (StrandId y : r.after.strands()) {
    auto it = pre_images.find(y);
    if (it == pre_images.end()) {
      plan.post_sym[y] = "t" + std::to_string(++fresh);
      plan.created.push_back(y);
      continue;
    }
    auto pre = it->second;
    std::sort(pre.begin(), pre.end());
    plan.post_sym[y] = pre.front().symbol();
    for (std::size_t i = 1; i < pre.size(); ++i) plan.keeper[pre[i]] = pre.front();
  }
  for (StrandId x : r.before.strands())
    if (!r.surviving.count(x)) plan.destroyed.push_back(x);
  return plan;
}

/// Fills in words for unknown strands of d from known ones: at a crossing
/// with a known under end U and a known over end O, the opposite under end
/// is U _* O and the opposite over end is O ^* U. A kink loop next to a
/// known end p is p _* p. `on_new` may replace the computed word (e.g. by a
/// fresh generator).
template <class OnNew>
void propagate_words(const LinkDiagram& d, std::map<SemiarcId, Word>& known, OnNew on_new) {
  auto learn = [&](SemiarcId s, Word w) { known[s] = on_new(s, std::move(w)); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Crossing& c : d.crossings()) {
      for (int k = 0; k < 4; ++k) {
        if (known.count(c[k + 2]) || !known.count(c[k])) continue;
        for (int j : {k + 1, k + 3}) {
          if (!known.count(c[j])) continue;
          const Word& a = known.at(c[k]);
          const Word& b = known.at(c[j]);
          learn(c[k + 2], k % 2 == 0 ? Word::under(a, b) : Word::over(a, b));
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;
    for (const Crossing& c : d.crossings()) {
      for (int i = 0; i < 4 && !changed; ++i) {
        if (c[i] != c[i + 1] || known.count(c[i]) || !known.count(c[i + 2])) continue;
        const Word& p = known.at(c[i + 2]);
        learn(c[i], Word::under(p, p));
        changed = true;
      }
      if (changed) break;
    }
  }
}

}  // namespace

Relation axiom_identity(Axiom a, const std::vector<Word>& args) {
  const std::size_t need = a == Axiom::i ? 1 : (a <= Axiom::ii_4 ? 2 : 3);
  if (args.size() != need)
    throw TietzeError("axiom " + std::string(axiom_name(a)) + " takes " +
                      std::to_string(need) + " arguments");
  const Word& x = args[0];
  auto U = [](const Word& p, const Word& q) { return Word::under(p, q); };
  auto O = [](const Word& p, const Word& q) { return Word::over(p, q); };
  switch (a) {
    case Axiom::i:
      return {U(x, x), O(x, x)};
    case Axiom::ii_1:
      return {U(U(x, args[1]), args[1]), x};
    case Axiom::ii_2:
      return {O(O(x, args[1]), args[1]), x};
    case Axiom::ii_3:
      return {U(x, O(args[1], x)), U(x, args[1])};
    case Axiom::ii_4:
      return {O(x, U(args[1], x)), O(x, args[1])};
    case Axiom::iii_1: {
      const Word &y = args[1], &z = args[2];
      return {U(U(x, y), U(z, y)), U(U(x, z), O(y, z))};
    }
    case Axiom::iii_2: {
      const Word &y = args[1], &z = args[2];
      return {O(U(x, y), U(z, y)), U(O(x, z), O(y, z))};
    }
    case Axiom::iii_3: {
      const Word &y = args[1], &z = args[2];
      return {O(O(x, y), O(z, y)), O(O(x, z), U(y, z))};
    }
  }
  throw TietzeError("unknown axiom");
}

std::string format_step(const TietzeStep& s) {
  return std::visit(
      Overload{
          [](const AddGenerator& a) {
            return "add-generator " + a.symbol + " = " + format_word(a.definition);
          },
          [](const RemoveGenerator& a) {
            return "remove-generator " + a.symbol +
                   (a.via ? " via " + std::to_string(*a.via) : std::string());
          },
          [](const AddRelation& a) {
            return "add-relation " + format_relation(a.relation) + " by " +
                   format_justification(a.justification);
          },
          [](const RemoveRelation& a) {
            return "remove-relation " + std::to_string(a.index) + " by " +
                   format_justification(a.justification);
          },
      },
      s);
}

Presentation tietze_apply(const Presentation& p, const TietzeScript& s) {
  Presentation out = p;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    try {
      apply_step(out, s.steps[i]);
    } catch (const TietzeError& e) {
      throw TietzeError("step " + std::to_string(i + 1) + ": " + e.what());
    } catch (const PresentationError& e) {
      throw TietzeError("step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::map<std::string, std::string> tietze_renaming(const MoveRecord& r) {
  std::map<std::string, std::string> out;
  for (const auto& [post, sym] : make_plan(r).post_sym)
    if (sym != post.symbol()) out[sym] = post.symbol();
  return out;
}

TietzeScript move_to_tietze(const MoveRecord& r, const Presentation& before) {
  if (!same_presentation(before, fundamental_presentation(r.before)))
    throw TietzeError("presentation does not match the move's starting diagram");

  const Plan plan = make_plan(r);
  TietzeScript script;
  Presentation cur = before;
  auto emit = [&](TietzeStep step) {
    apply_step(cur, step);
    script.steps.push_back(std::move(step));
  };

  // Target relations in script symbols.
  std::map<std::string, std::string> to_script;
  for (const auto& [post, sym] : plan.post_sym) to_script[post.symbol()] = sym;
  const std::vector<Relation> target = relabel(fundamental_presentation(r.after), to_script).relations;

  // Symbols near the move; justifications draw support from relations on
  // these symbols only, which keeps the finite checks small.
  std::set<std::string> local;
  {
    std::multiset<Relation> a(before.relations.begin(), before.relations.end());
    std::multiset<Relation> b(target.begin(), target.end());
    std::vector<Relation> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    for (const auto& rel : diff) {
      auto s = symbols_of(rel);
      local.insert(s.begin(), s.end());
    }
    for (StrandId x : plan.created) local.insert(plan.post_sym.at(x));
    for (StrandId x : plan.destroyed) local.insert(x.symbol());
    for (const auto& [x, k] : plan.keeper) {
      local.insert(x.symbol());
      local.insert(k.symbol());
    }
  }
  auto support = [&](std::optional<int> skip) {
    SolverVerified v;
    for (std::size_t i = 0; i < cur.relations.size(); ++i) {
      if (skip && static_cast<int>(i) == *skip) continue;
      auto s = symbols_of(cur.relations[i]);
      if (std::includes(local.begin(), local.end(), s.begin(), s.end()))
        v.support.push_back(static_cast<int>(i));
    }
    return v;
  };

  // New strands, defined from the strands that persist.
  {
    std::map<SemiarcId, Word> known;
    std::set<SemiarcId> pending;
    for (StrandId y : r.after.strands()) {
      if (y.is_loop()) continue;
      if (std::find(plan.created.begin(), plan.created.end(), y) != plan.created.end())
        pending.insert(y.id);
      else
        known[y.id] = Word::gen(plan.post_sym.at(y));
    }
    propagate_words(r.after, known, [&](SemiarcId s, Word w) {
      const std::string sym = plan.post_sym.at(StrandId::semiarc(s));
      emit(AddGenerator{sym, std::move(w)});
      pending.erase(s);
      return Word::gen(sym);
    });
    if (!pending.empty())
      throw TietzeError("cannot express new semiarc " + std::to_string(*pending.begin()) +
                        " through surviving ones");
    for (StrandId y : plan.created)
      if (y.is_loop()) throw TietzeError("a move cannot create a free loop from nothing");
  }

  // Definitions of strands that disappear, kept until the very end.
  std::vector<Relation> eliminations;
  for (const auto& [x, k] : plan.keeper) {
    Relation def{Word::gen(x.symbol()), Word::gen(k.symbol())};
    emit(AddRelation{def, support(std::nullopt)});
    eliminations.push_back(def);
  }
  {
    std::map<SemiarcId, Word> known;
    for (StrandId x : r.before.strands()) {
      if (x.is_loop() || !r.surviving.count(x)) continue;
      auto k = plan.keeper.find(x);
      known[x.id] = Word::gen(k == plan.keeper.end() ? x.symbol() : k->second.symbol());
    }
    propagate_words(r.before, known, [](SemiarcId, Word w) { return w; });
    for (StrandId x : plan.destroyed) {
      if (x.is_loop() || !known.count(x.id))
        throw TietzeError("cannot express removed strand " + x.symbol());
      Relation def{Word::gen(x.symbol()), known.at(x.id)};
      emit(AddRelation{def, support(std::nullopt)});
      eliminations.push_back(def);
    }
  }

  std::multiset<Relation> wanted(target.begin(), target.end());
  auto count_in = [](const std::vector<Relation>& v, const Relation& rel) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), rel));
  };
  for (const auto& rel : target) {
    if (count_in(cur.relations, rel) < wanted.count(rel))
      emit(AddRelation{rel, support(std::nullopt)});
  }

  std::multiset<Relation> keep = wanted;
  keep.insert(eliminations.begin(), eliminations.end());
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < cur.relations.size(); ++i) {
      const Relation& rel = cur.relations[i];
      if (count_in(cur.relations, rel) <= keep.count(rel)) continue;
      const int idx = static_cast<int>(i);
      emit(RemoveRelation{idx, support(idx)});
      again = true;
      break;
    }
  }

  auto eliminate = [&](const std::string& sym, const Relation& def) {
    const auto it = std::find(cur.relations.begin(), cur.relations.end(), def);
    emit(RemoveGenerator{sym, static_cast<int>(it - cur.relations.begin())});
  };
  std::size_t e = 0;
  for (const auto& [x, k] : plan.keeper) eliminate(x.symbol(), eliminations[e++]);
  for (StrandId x : plan.destroyed) eliminate(x.symbol(), eliminations[e++]);
  return script;
}

}  // namespace bikei
