#include "bikei/table.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace bikei {

namespace {

std::vector<Element> flatten(int n, const std::vector<std::vector<Element>>& rows,
                             const char* which) {
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(std::string(which) + " table has " +
                     std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw ParseError(std::string(which) + " table row " +
                       std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(n));
    for (Element e : rows[r]) {
      if (e < 1 || e > n)
        throw ParseError(std::string(which) + " table entry " +
                         std::to_string(e) + " out of range 1.." +
                         std::to_string(n));
      flat.push_back(e);
    }
  }
  return flat;
}

std::vector<std::vector<Element>> unflatten(int n, const std::vector<Element>& flat) {
  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    rows[r].assign(flat.begin() + r * n, flat.begin() + (r + 1) * n);
  return rows;
}

BikeiTable parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed bikei JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("under") ||
      !j.contains("over"))
    throw ParseError("bikei JSON needs keys \"n\", \"under\" and \"over\"");
  try {
    int n = j.at("n").get<int>();
    auto under = j.at("under").get<std::vector<std::vector<Element>>>();
    auto over = j.at("over").get<std::vector<std::vector<Element>>>();
    return BikeiTable(n, std::move(under), std::move(over));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed bikei JSON: ") + e.what());
  }
}

BikeiTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::vector<Element>>> blocks(1);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    std::vector<Element> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(cell, &used);
      } catch (const std::exception&) {
        throw ParseError("bad CSV cell '" + cell + "'");
      }
      for (std::size_t k = used; k < cell.size(); ++k)
        if (!std::isspace(static_cast<unsigned char>(cell[k])))
          throw ParseError("bad CSV cell '" + cell + "'");
      row.push_back(v);
    }
    blocks.back().push_back(std::move(row));
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (blocks.size() != 2)
    throw ParseError("bikei CSV needs exactly two blocks separated by a blank line");
  int n = static_cast<int>(blocks[0].size());
  return BikeiTable(n, std::move(blocks[0]), std::move(blocks[1]));
}

}  // namespace

BikeiTable::BikeiTable(int n, std::vector<std::vector<Element>> under,
                       std::vector<std::vector<Element>> over)
    : n_(n) {
  if (n < 1) throw ParseError("bikei size must be positive");
  under_ = flatten(n, under, "under");
  over_ = flatten(n, over, "over");
}

std::vector<std::vector<Element>> BikeiTable::under_rows() const {
  return unflatten(n_, under_);
}

std::vector<std::vector<Element>> BikeiTable::over_rows() const {
  return unflatten(n_, over_);
}

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::i: return "i";
    case Axiom::ii_1: return "ii.1";
    case Axiom::ii_2: return "ii.2";
    case Axiom::ii_3: return "ii.3";
    case Axiom::ii_4: return "ii.4";
    case Axiom::iii_1: return "iii.1";
    case Axiom::iii_2: return "iii.2";
    case Axiom::iii_3: return "iii.3";
  }
  return "?";
}

BikeiTable parse_bikei(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_csv(text);
  }
  throw ParseError("empty bikei description");
}

std::string serialize_bikei(const BikeiTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.size();
  j["under"] = t.under_rows();
  j["over"] = t.over_rows();
  return j.dump();
}

AxiomReport check_bikei(const BikeiTable& t) {
  const int n = t.size();
  AxiomReport report;
  auto fail = [&](Axiom a, std::vector<Element> w) {
    report.violations.push_back({a, std::move(w)});
  };
  auto u = [&](Element a, Element b) { return t.under(a, b); };
  auto o = [&](Element a, Element b) { return t.over(a, b); };

  for (Element x = 1; x <= n; ++x)
    if (u(x, x) != o(x, x)) fail(Axiom::i, {x});

  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      if (u(u(x, y), y) != x) fail(Axiom::ii_1, {x, y});
      if (o(o(x, y), y) != x) fail(Axiom::ii_2, {x, y});
      if (u(x, o(y, x)) != u(x, y)) fail(Axiom::ii_3, {x, y});
      if (o(x, u(y, x)) != o(x, y)) fail(Axiom::ii_4, {x, y});
    }
  }

  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      for (Element z = 1; z <= n; ++z) {
        if (u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)))
          fail(Axiom::iii_1, {x, y, z});
        if (o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)))
          fail(Axiom::iii_2, {x, y, z});
        if (o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)))
          fail(Axiom::iii_3, {x, y, z});
      }
    }
  }
  return report;
}

std::vector<Element> w_map(const BikeiTable& t) {
  std::vector<Element> w(static_cast<std::size_t>(t.size()) + 1, 0);
  for (Element x = 1; x <= t.size(); ++x) {
    if (t.under(x, x) != t.over(x, x))
      throw AxiomError("axiom i fails at x = " + std::to_string(x), x);
    w[x] = t.under(x, x);
  }
  return w;
}

BikeiTable dihedral_bikei(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_bikei needs n >= 1");
  std::vector<std::vector<Element>> under(n, std::vector<Element>(n));
  std::vector<std::vector<Element>> over(n, std::vector<Element>(n));
  // Element k stands for the residue k mod n, so n plays the role of 0.
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      int r = ((2 * y - x) % n + n) % n;
      under[x - 1][y - 1] = r == 0 ? n : r;
      over[x - 1][y - 1] = x;
    }
  }
  return BikeiTable(n, std::move(under), std::move(over));
}

}  // namespace bikei
