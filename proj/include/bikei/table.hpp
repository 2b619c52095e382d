#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bikei {

/// Element of a finite bikei, numbered 1..n.
using Element = int;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by w_map when x _* x != x ^* x for some x.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(const std::string& what, Element witness)
      : std::runtime_error(what), witness_(witness) {}
  Element witness() const noexcept { return witness_; }

 private:
  Element witness_;
};

/// Finite set {1..n} with the two bikei operations stored as n x n tables.
/// `under(x, y)` is x _* y (underbar), `over(x, y)` is x ^* y (overbar).
/// Immutable after construction; the constructor only checks shape and range.
class BikeiTable {
 public:
  BikeiTable(int n, std::vector<std::vector<Element>> under,
             std::vector<std::vector<Element>> over);

  int size() const noexcept { return n_; }

  Element under(Element x, Element y) const noexcept {
    return under_[idx(x, y)];
  }
  Element over(Element x, Element y) const noexcept {
    return over_[idx(x, y)];
  }

  std::vector<std::vector<Element>> under_rows() const;
  std::vector<std::vector<Element>> over_rows() const;

  friend bool operator==(const BikeiTable&, const BikeiTable&) = default;

 private:
  std::size_t idx(Element x, Element y) const noexcept {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y - 1);
  }

  int n_;
  std::vector<Element> under_;
  std::vector<Element> over_;
};

enum class Axiom { i, ii_1, ii_2, ii_3, ii_4, iii_1, iii_2, iii_3 };

std::string_view axiom_name(Axiom a) noexcept;

struct Violation {
  Axiom axiom;
  std::vector<Element> witness;  // (x), (x,y) or (x,y,z)

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Parses the JSON form ({"n":..,"under":[[..]],"over":[[..]]}) or the CSV
/// form (two n-row blocks separated by a blank line, under first).
BikeiTable parse_bikei(std::string_view text);

/// Serializes to the JSON form.
std::string serialize_bikei(const BikeiTable& t);

/// Exhaustive check of every axiom instance; never stops early.
AxiomReport check_bikei(const BikeiTable& t);

/// The kink map x -> x _* x. Index 0 is unused; w[x] for x in 1..n.
std::vector<Element> w_map(const BikeiTable& t);

/// x _* y = 2y - x (mod n), x ^* y = x.
BikeiTable dihedral_bikei(int n);

}  // namespace bikei
