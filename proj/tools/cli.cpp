#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bikei/automorphism.hpp"
#include "bikei/fixtures.hpp"
#include "bikei/homset.hpp"
#include "bikei/moves.hpp"
#include "bikei/presentation.hpp"
#include "bikei/tietze.hpp"
#include "fuzz.hpp"

namespace bikei::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  bool json = false;
  std::string fixtures_dir = "fixtures";
};

struct Report {
  ojson data;
  int status = 0;
};

// Input resolution: an existing path, then <fixtures-dir>/<name><ext>, then
// a built-in fixture name.

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec)) return std::nullopt;
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> locate(const Context& ctx, const std::string& name,
                                  std::initializer_list<const char*> exts) {
  if (auto text = read_file(name)) return text;
  if (!ctx.fixtures_dir.empty()) {
    for (const char* ext : exts)
      if (auto text = read_file(std::filesystem::path(ctx.fixtures_dir) / (name + ext)))
        return text;
  }
  return std::nullopt;
}

template <class T, class Parse, class Builtin>
T load(const Context& ctx, const std::string& name, std::initializer_list<const char*> exts,
       const char* what, Parse parse, Builtin builtin) {
  try {
    if (auto text = locate(ctx, name, exts)) return parse(*text);
  } catch (const ParseError& e) {
    throw UsageError(name + ": " + e.what());
  } catch (const DiagramError& e) {
    throw UsageError(name + ": " + e.what());
  }
  if (auto v = builtin(name)) return *v;
  throw UsageError(std::string("no ") + what + " file or fixture named '" + name + "'");
}

BikeiTable load_table(const Context& ctx, const std::string& name) {
  return load<BikeiTable>(ctx, name, {".json", ".csv"}, "bikei",
                          [](const std::string& s) { return parse_bikei(s); },
                          [](const std::string& n) { return fixtures::bikei(n); });
}

LinkDiagram load_diagram(const Context& ctx, const std::string& name) {
  return load<LinkDiagram>(ctx, name, {".diagram"}, "diagram",
                           [](const std::string& s) { return parse_diagram(s); },
                           [](const std::string& n) { return fixtures::diagram(n); });
}

Presentation load_presentation(const Context& ctx, const std::string& name) {
  return load<Presentation>(ctx, name, {".pres"}, "presentation",
                            [](const std::string& s) { return parse_presentation(s); },
                            [](const std::string& n) { return fixtures::presentation(n); });
}

std::vector<MoveSpec> load_script(const Context& ctx, const std::string& name) {
  return load<std::vector<MoveSpec>>(
      ctx, name, {".moves"}, "move script",
      [](const std::string& s) { return parse_move_script(s); },
      [](const std::string&) { return std::optional<std::vector<MoveSpec>>(); });
}

// Text rendering helpers.

std::string cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "✓" : "✗";
  return v.dump();
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

/// Right-aligned columns; `rule_after` puts a '|' after that column.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         int rule_after = -1) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], display_width(r[i]));
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += std::string(width[i] - display_width(r[i]) + (i ? 1 : 0), ' ') + r[i];
      if (static_cast<int>(i) == rule_after) out += " |";
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string join(const ojson& arr, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + cell(arr[i]);
  return out;
}

ojson automorphism_to_json(const DiagramAutomorphism& a) {
  ojson j;
  j["strands"] = ojson::object();
  for (const auto& [x, y] : a.strand_map) j["strands"][x.symbol()] = y.symbol();
  j["crossings"] = ojson::array();
  for (int c : a.crossing_map) j["crossings"].push_back(c + 1);
  j["rotation"] = a.rotation;
  j["reflected"] = a.reflected;
  return j;
}

std::string automorphism_text(const ojson& a) {
  std::string out;
  for (const auto& [x, y] : a["strands"].items())
    if (x != y.get<std::string>()) out += (out.empty() ? "" : " ") + x + "->" + y.get<std::string>();
  if (out.empty()) out = "identity on strands";
  if (a["reflected"].get<bool>()) out += " (reflected)";
  return out;
}

// Commands. Each builds the JSON report; text is rendered from it.

Report cmd_check(const Context& ctx, const std::string& table) {
  const BikeiTable t = load_table(ctx, table);
  const AxiomReport rep = check_bikei(t);
  Report r;
  r.data["command"] = "check";
  r.data["table"] = table;
  r.data["n"] = t.size();
  r.data["valid"] = rep.valid();
  r.data["violations"] = ojson::array();
  for (const auto& v : rep.violations)
    r.data["violations"].push_back({{"axiom", axiom_name(v.axiom)}, {"witness", v.witness}});
  try {
    const auto w = w_map(t);
    r.data["w"] = ojson::array();
    for (Element x = 1; x <= t.size(); ++x) r.data["w"].push_back(w[x]);
  } catch (const AxiomError&) {
    r.data["w"] = nullptr;
  }
  r.status = rep.valid() ? 0 : 1;
  return r;
}

std::string text_check(const ojson& d) {
  std::string out = "table " + cell(d["table"]) + ", " + cell(d["n"]) + " elements\n";
  if (d["valid"].get<bool>()) {
    out += "valid: all axioms hold\n";
  } else {
    out += "invalid: " + std::to_string(d["violations"].size()) + " violations\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : d["violations"])
      rows.push_back({cell(v["axiom"]), "(" + join(v["witness"], ", ") + ")"});
    out += render_table({"axiom", "witness"}, rows);
  }
  if (!d["w"].is_null()) {
    out += "w:";
    for (std::size_t x = 0; x < d["w"].size(); ++x)
      out += " " + std::to_string(x + 1) + "->" + cell(d["w"][x]);
    out += "\n";
  }
  return out;
}

Report cmd_color(const Context& ctx, const std::string& diagram, const std::string& table) {
  const LinkDiagram d = load_diagram(ctx, diagram);
  const BikeiTable t = load_table(ctx, table);
  const Presentation p = fundamental_presentation(d);
  Report r;
  r.data["command"] = "color";
  r.data["diagram"] = diagram;
  r.data["table"] = table;
  r.data["generators"] = p.generators;
  r.data["relations"] = ojson::array();
  for (const auto& rel : p.relations) r.data["relations"].push_back(format_relation(rel));
  const auto cs = enumerate_colorings(d, t);
  r.data["count"] = cs.size();
  r.data["colorings"] = ojson::array();
  r.data["checks"] = ojson::array();
  for (const Coloring& c : cs) {
    r.data["colorings"].push_back(coloring_to_json(c));
    std::map<std::string, Element> env;
    for (const auto& [x, v] : c) env[x.symbol()] = v;
    ojson checks = ojson::array();
    for (const auto& rel : p.relations) checks.push_back(satisfies(rel, env, t));
    r.data["checks"].push_back(std::move(checks));
  }
  return r;
}

std::string text_color(const ojson& d) {
  std::string out = "diagram " + cell(d["diagram"]) + ", table " + cell(d["table"]) + ": " +
                    cell(d["count"]) + " colorings\n";
  std::vector<std::string> header;
  for (const auto& g : d["generators"]) header.push_back(cell(g));
  const int gens = static_cast<int>(header.size());
  for (std::size_t i = 0; i < d["relations"].size(); ++i)
    header.push_back("r" + std::to_string(i + 1));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < d["colorings"].size(); ++i) {
    std::vector<std::string> row;
    for (const auto& [k, v] : d["colorings"][i].items()) row.push_back(cell(v));
    for (const auto& ok : d["checks"][i]) row.push_back(cell(ok));
    rows.push_back(std::move(row));
  }
  out += render_table(header, rows, gens - 1);
  for (std::size_t i = 0; i < d["relations"].size(); ++i)
    out += "r" + std::to_string(i + 1) + ": " + cell(d["relations"][i]) + "\n";
  return out;
}

Report cmd_count(const Context& ctx, const std::string& diagram, const std::string& table) {
  Report r;
  r.data["command"] = "count";
  r.data["diagram"] = diagram;
  r.data["table"] = table;
  r.data["count"] = counting_invariant(load_diagram(ctx, diagram), load_table(ctx, table));
  return r;
}

Report cmd_present(const Context& ctx, const std::string& diagram) {
  const Presentation p = fundamental_presentation(load_diagram(ctx, diagram));
  Report r;
  r.data["command"] = "present";
  r.data["diagram"] = diagram;
  r.data["generators"] = p.generators;
  r.data["relations"] = ojson::array();
  for (const auto& rel : p.relations) r.data["relations"].push_back(format_relation(rel));
  r.data["short_form"] = is_short_form(p);
  return r;
}

std::string text_present(const ojson& d) {
  std::string out = "gen " + join(d["generators"], " ") + "\n";
  for (const auto& rel : d["relations"]) out += "rel " + cell(rel) + "\n";
  out += std::string("# short form: ") + (d["short_form"].get<bool>() ? "yes" : "no") + "\n";
  return out;
}

Report cmd_move(const Context& ctx, const std::string& diagram, const std::string& table,
                const std::string& script, const std::string& colorings_path, bool tietze) {
  const LinkDiagram d = load_diagram(ctx, diagram);
  const BikeiTable t = load_table(ctx, table);
  const auto moves = load_script(ctx, script);

  std::vector<Coloring> start;
  if (colorings_path.empty()) {
    start = enumerate_colorings(d, t);
  } else {
    auto text = read_file(colorings_path);
    if (!text) throw UsageError("cannot read " + colorings_path);
    try {
      const auto j = nlohmann::json::parse(*text);
      if (!j.is_array()) throw ParseError("colorings file must hold a JSON array");
      for (const auto& c : j) start.push_back(coloring_from_json(c));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(colorings_path + ": " + e.what());
    } catch (const ParseError& e) {
      throw UsageError(colorings_path + ": " + e.what());
    }
  }

  Report r;
  r.data["command"] = "move";
  r.data["diagram"] = diagram;
  r.data["table"] = table;
  r.data["count_before"] = counting_invariant(d, t);
  r.data["base_generators"] = ojson::array();
  for (StrandId x : d.strands()) r.data["base_generators"].push_back(x.symbol());
  r.data["steps"] = ojson::array();
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (!is_valid_coloring(d, start[i], t)) {
      r.data["error"] = "supplied coloring " + std::to_string(i + 1) + " is not valid";
      r.status = 1;
      return r;
    }
  }

  std::vector<HomsetElement> elems;
  for (const Coloring& c : start) elems.push_back(make_element(d, c));
  LinkDiagram cur = d;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    ojson step;
    step["index"] = i + 1;
    step["move"] = format_move(moves[i]);
    try {
      auto [next, rec] = apply_move(cur, moves[i]);
      for (auto& e : elems) e = transport(e, rec, t);
      if (tietze) {
        step["tietze"] = ojson::array();
        for (const auto& s : move_to_tietze(rec, fundamental_presentation(cur)).steps)
          step["tietze"].push_back(format_step(s));
        step["renaming"] = tietze_renaming(rec);
      }
      cur = std::move(next);
    } catch (const MoveError& e) {
      r.data["error"] = "step " + std::to_string(i + 1) + ": " + e.what();
      r.status = 1;
      return r;
    } catch (const IllposedMove& e) {
      r.data["error"] = "step " + std::to_string(i + 1) + ": " + e.what();
      r.status = 1;
      return r;
    }
    step["crossings"] = cur.crossing_count();
    step["semiarcs"] = cur.semiarcs().size();
    step["free_loops"] = cur.free_loops();
    step["count"] = counting_invariant(cur, t);
    r.data["steps"].push_back(std::move(step));
  }
  r.data["count_after"] = counting_invariant(cur, t);
  r.data["final_diagram"] = serialize_diagram(cur);
  r.data["current_generators"] = ojson::array();
  for (StrandId x : cur.strands()) r.data["current_generators"].push_back(x.symbol());
  r.data["elements"] = ojson::array();
  for (const auto& e : elems)
    r.data["elements"].push_back(
        {{"base", coloring_to_json(e.base_coloring)},
         {"current", coloring_to_json(e.current_coloring)}});
  // Distinct homset elements that now look the same.
  r.data["coincidences"] = ojson::array();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!homset_equal(elems[i], elems[j]) &&
          same_colored_diagram(elems[i].current_coloring, elems[j].current_coloring, cur,
                               SymmetryMode::none()))
        r.data["coincidences"].push_back({i + 1, j + 1});
  // Elements whose current picture is another element's untouched picture.
  r.data["look_alikes"] = ojson::array();
  if (cur.same_as(d)) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (i != j && !homset_equal(elems[i], elems[j]) &&
            same_colored_diagram(elems[i].current_coloring, elems[j].base_coloring, cur,
                                 SymmetryMode::none()))
          r.data["look_alikes"].push_back({i + 1, j + 1});
  }
  return r;
}

std::string text_move(const ojson& d) {
  std::string out = "diagram " + cell(d["diagram"]) + ", table " + cell(d["table"]) + ": " +
                    cell(d["count_before"]) + " colorings before\n";
  for (const auto& s : d["steps"]) {
    out += "step " + cell(s["index"]) + ": " + cell(s["move"]) + "  (" + cell(s["crossings"]) +
           " crossings, " + cell(s["semiarcs"]) + " semiarcs, " + cell(s["free_loops"]) +
           " free loops, " + cell(s["count"]) + " colorings)\n";
    if (s.contains("tietze")) {
      for (const auto& line : s["tietze"]) out += "    " + cell(line) + "\n";
      for (const auto& [from, to] : s["renaming"].items())
        out += "    rename " + from + " -> " + cell(to) + "\n";
    }
  }
  if (d.contains("error")) return out + "error: " + cell(d["error"]) + "\n";
  out += "colorings after: " + cell(d["count_after"]) + "\n";
  std::vector<std::string> header{"#"};
  for (const auto& g : d["base_generators"]) header.push_back("base " + cell(g));
  const int base_cols = static_cast<int>(header.size());
  for (const auto& g : d["current_generators"]) header.push_back(cell(g));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < d["elements"].size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (const auto& [k, v] : d["elements"][i]["base"].items()) row.push_back(cell(v));
    for (const auto& [k, v] : d["elements"][i]["current"].items()) row.push_back(cell(v));
    rows.push_back(std::move(row));
  }
  out += render_table(header, rows, base_cols - 1);
  if (d["coincidences"].empty()) {
    out += "no two distinct elements share a current colored diagram\n";
  } else {
    for (const auto& p : d["coincidences"])
      out += "elements " + cell(p[0]) + " and " + cell(p[1]) +
             " look identical now but are distinct homset elements\n";
  }
  for (const auto& p : d["look_alikes"])
    out += "element " + cell(p[0]) + " now displays the starting coloring of element " +
           cell(p[1]) + ", yet they are distinct homset elements\n";
  return out;
}

Report cmd_sym(const Context& ctx, const std::string& diagram, const std::string& table,
               bool reflect, bool mirror) {
  const LinkDiagram d = load_diagram(ctx, diagram);
  const BikeiTable t = load_table(ctx, table);
  const auto rep = symmetry_collisions(d, t, SymmetryMode::with({reflect, mirror}));
  Report r;
  r.data["command"] = "sym";
  r.data["diagram"] = diagram;
  r.data["table"] = table;
  r.data["reflect"] = reflect;
  r.data["mirror"] = mirror;
  r.data["group_order"] = rep.group_order;
  r.data["colorings"] = ojson::array();
  for (const auto& c : rep.colorings) r.data["colorings"].push_back(coloring_to_json(c));
  r.data["orbits"] = ojson::array();
  for (const auto& o : rep.orbits) {
    ojson orbit = ojson::array();
    for (int i : o) orbit.push_back(i + 1);
    r.data["orbits"].push_back(std::move(orbit));
  }
  r.data["collisions"] = ojson::array();
  for (const auto& c : rep.collisions)
    r.data["collisions"].push_back({{"first", c.first + 1},
                                    {"second", c.second + 1},
                                    {"witness", automorphism_to_json(c.witness)}});
  return r;
}

std::string text_sym(const ojson& d) {
  std::string out = "diagram " + cell(d["diagram"]) + ", table " + cell(d["table"]) +
                    ": symmetry group of order " + cell(d["group_order"]) + "\n";
  std::vector<std::string> header{"#"};
  if (!d["colorings"].empty())
    for (const auto& [k, v] : d["colorings"][0].items()) header.push_back(k);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < d["colorings"].size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (const auto& [k, v] : d["colorings"][i].items()) row.push_back(cell(v));
    rows.push_back(std::move(row));
  }
  out += render_table(header, rows, 0);
  out += "orbits:";
  for (const auto& o : d["orbits"]) out += " {" + join(o, ",") + "}";
  out += "\n";
  if (d["collisions"].empty()) {
    out += "no collisions\n";
  } else {
    for (const auto& c : d["collisions"])
      out += "collision " + cell(c["first"]) + " ~ " + cell(c["second"]) + " via " +
             automorphism_text(c["witness"]) + "\n";
  }
  return out;
}

Report cmd_homset(const Context& ctx, const std::string& pres, const std::string& table) {
  const Presentation p = load_presentation(ctx, pres);
  const BikeiTable t = load_table(ctx, table);
  Report r;
  r.data["command"] = "homset";
  r.data["presentation"] = pres;
  r.data["table"] = table;
  r.data["generators"] = p.generators;
  r.data["short_form"] = is_short_form(p);
  const auto as = enumerate_presentation_homset(p, t);
  r.data["count"] = as.size();
  r.data["assignments"] = as;
  return r;
}

std::string text_homset(const ojson& d) {
  std::string out = "presentation " + cell(d["presentation"]) + ", table " + cell(d["table"]) +
                    ": " + cell(d["count"]) + " homomorphisms\n";
  std::vector<std::string> header;
  for (const auto& g : d["generators"]) header.push_back(cell(g));
  std::vector<std::vector<std::string>> rows;
  for (const auto& a : d["assignments"]) {
    std::vector<std::string> row;
    for (const auto& v : a) row.push_back(cell(v));
    rows.push_back(std::move(row));
  }
  return out + render_table(header, rows);
}

Report cmd_fuzz(const Context& ctx, const std::string& diagram, const std::string& table,
                int moves, std::uint64_t seed) {
  const LinkDiagram d = load_diagram(ctx, diagram);
  const BikeiTable t = load_table(ctx, table);
  const FuzzResult f = run_fuzz(d, t, moves, seed);
  Report r;
  r.data["command"] = "fuzz";
  r.data["diagram"] = diagram;
  r.data["table"] = table;
  r.data["moves"] = moves;
  r.data["seed"] = seed;
  r.data["count"] = f.initial_count;
  r.data["pass"] = f.pass;
  if (!f.pass) r.data["failure"] = f.failure;
  r.data["trace"] = ojson::array();
  for (const auto& s : f.trace)
    r.data["trace"].push_back(
        {{"step", s.step}, {"move", s.move}, {"crossings", s.crossings}, {"count", s.count}});
  r.status = f.pass ? 0 : 1;
  return r;
}

std::string text_fuzz(const ojson& d) {
  std::string out = "fuzz " + cell(d["diagram"]) + " x " + cell(d["table"]) + ", " +
                    cell(d["moves"]) + " moves, seed " + cell(d["seed"]) + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : d["trace"])
    rows.push_back({cell(s["step"]), cell(s["move"]), cell(s["crossings"]), cell(s["count"])});
  if (!rows.empty()) out += render_table({"step", "move", "crossings", "count"}, rows);
  if (d["pass"].get<bool>())
    out += "pass: count " + cell(d["count"]) + " throughout\n";
  else
    out += "FAIL: " + cell(d["failure"]) + "\n";
  return out;
}

std::string render_text(const ojson& d) {
  const std::string cmd = d["command"].get<std::string>();
  if (cmd == "check") return text_check(d);
  if (cmd == "color") return text_color(d);
  if (cmd == "count") return "count: " + cell(d["count"]) + "\n";
  if (cmd == "present") return text_present(d);
  if (cmd == "move") return text_move(d);
  if (cmd == "sym") return text_sym(d);
  if (cmd == "homset") return text_homset(d);
  return text_fuzz(d);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bikei colorings, homsets and Reidemeister move tracking", "bikei"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_flag("--json", ctx.json, "Print the report as JSON");
  app.add_option("--fixtures-dir", ctx.fixtures_dir, "Directory searched for named inputs (default: ./fixtures)");

  std::string table, diagram, script, colorings, pres;
  bool reflect = false, mirror = false, tietze = false;
  int moves = 100;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Check a bikei table against the axioms");
  check->add_option("table", table, "Bikei file or fixture name")->required();

  auto add_dt = [&](CLI::App* sub) {
    sub->add_option("-d,--diagram", diagram, "Diagram file or fixture name")->required();
    sub->add_option("-t,--table", table, "Bikei file or fixture name")->required();
  };
  auto* color = app.add_subcommand("color", "List all colorings with relation checks");
  add_dt(color);
  auto* count = app.add_subcommand("count", "Counting invariant");
  add_dt(count);
  auto* present = app.add_subcommand("present", "Print the fundamental presentation");
  present->add_option("-d,--diagram", diagram, "Diagram file or fixture name")->required();
  auto* move = app.add_subcommand("move", "Apply a move script and transport colorings");
  add_dt(move);
  move->add_option("-s,--script", script, "Move script file")->required();
  move->add_option("-c,--colorings", colorings, "JSON array of base colorings to transport");
  move->add_flag("--tietze", tietze, "Show the induced Tietze steps");
  auto* sym = app.add_subcommand("sym", "Colorings related by diagram symmetries");
  add_dt(sym);
  sym->add_flag("--reflect", reflect, "Allow reversed cyclic order");
  sym->add_flag("--mirror", mirror, "Allow over/under swaps");
  auto* homset = app.add_subcommand("homset", "Homomorphisms from a presentation");
  homset->add_option("-p,--presentation", pres, "Presentation file or fixture name")->required();
  homset->add_option("-t,--table", table, "Bikei file or fixture name")->required();
  auto* fuzz = app.add_subcommand("fuzz", "Random move walk with invariance checks");
  add_dt(fuzz);
  fuzz->add_option("--moves", moves, "Number of moves")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report r;
  try {
    if (*check) r = cmd_check(ctx, table);
    else if (*color) r = cmd_color(ctx, diagram, table);
    else if (*count) r = cmd_count(ctx, diagram, table);
    else if (*present) r = cmd_present(ctx, diagram);
    else if (*move) r = cmd_move(ctx, diagram, table, script, colorings, tietze);
    else if (*sym) r = cmd_sym(ctx, diagram, table, reflect, mirror);
    else if (*homset) r = cmd_homset(ctx, pres, table);
    else r = cmd_fuzz(ctx, diagram, table, moves, seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (ctx.json)
    out << r.data.dump(2) << "\n";
  else
    out << render_text(r.data);
  return r.status;
}

}  // namespace bikei::cli
