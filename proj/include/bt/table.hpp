#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bt/clopen.hpp"
#include "bt/words.hpp"

namespace bt {

// One prefix-replacement rule: points v.x map to u.x.
struct TableRow {
  WordTuple v;
  WordTuple u;
};

enum class TableErrorKind { OverlappingCells, MeasureDeficit, SignatureMismatch };

struct ValidationReport {
  bool ok = true;
  TableErrorKind kind = TableErrorKind::OverlappingCells;
  // For OverlappingCells: offending row pair and which row ('v' or 'u').
  int row_i = -1;
  int row_j = -1;
  char which_row = 'v';
  // For MeasureDeficit: 1 - total measure of the offending row.
  Measure deficit = 0;
  std::string message;
};

// Two-row matrix of word tuples. Valid when both the v-words and the
// u-words form a partition of the product space.
struct Table {
  Signature signature;
  std::vector<TableRow> rows;

  ValidationReport validate() const;
};

class Element;

Element compose(const Element& a, const Element& b);  // a after b
Element invert(const Element& e);

// Per-row fixed-point locus of a moved row: coordinates where u_i = v_i are
// free, comparable distinct coordinates pin the unique eventually periodic
// fixed string, and an incomparable coordinate empties the whole row locus.
struct LocusFactor {
  enum Kind { FullFactor, SinglePoint, EmptyFactor } kind = FullFactor;
  std::optional<CoordPoint> point;  // set iff kind == SinglePoint
};

struct RowLocus {
  int row = -1;
  WordTuple cell;  // the row's v-cylinder
  std::vector<LocusFactor> factors;
  bool is_empty() const {
    for (const LocusFactor& f : factors)
      if (f.kind == LocusFactor::EmptyFactor) return true;
    return false;
  }
};

struct FixedLocus {
  std::vector<RowLocus> rows;  // one entry per moved row
};

// A group element of V_{k_1,...,k_m}, held as one valid table
// representative with rows sorted by v-tuple. Equality, supports and
// evaluation are representation independent.
class Element {
 public:
  // Validates; throws bt::error with the report message on failure.
  static Element from_table(Table t);
  static Element identity(const Signature& sig);

  const Signature& signature() const { return table_.signature; }
  const Table& table() const { return table_; }
  int row_count() const { return static_cast<int>(table_.rows.size()); }
  bool is_identity() const { return identity_; }

  RationalPoint apply(const RationalPoint& p) const;

  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

  // Splits row r's cell into its k children along the given coordinate, in
  // both rows consistently. The element is unchanged; used for
  // representation-independence checks.
  Element split_row(int r, int coord) const;

 private:
  friend Element compose(const Element&, const Element&);
  friend Element invert(const Element&);
  friend Element localize(const Element&, const MultiCylinder&);

  Element(Table t, bool trusted);
  void finish();

  Table table_;
  bool identity_ = false;
};

bool is_identity(const Element& e);

// Regular support: the union of u-cylinders (equivalently v-cylinders)
// over rows with u != v, as a normalized clopen set.
Clopen rsupp(const Element& e);

FixedLocus fixed_locus(const Element& e);

bool commutes(const Element& a, const Element& b);
Element conjugate(const Element& a, const Element& g);  // g a g^-1
Element commutator(const Element& a, const Element& b);  // a b a^-1 b^-1
Element power(const Element& a, int n);

// Exact image of a clopen set under the element.
Clopen image_clopen(const Element& e, const Clopen& c);

// Conjugate of e into the cylinder mu: mu.v -> mu.u rows plus the identity
// off mu. A homomorphism into the localized subgroup of mu.
Element localize(const Element& e, const MultiCylinder& mu);

// Deterministic seeded random element: grows two partitions by repeated
// random cell splitting to equal sizes and pairs them by a random
// bijection. depth = number of splits of the v-side.
Element random_element(const Signature& sig, int depth, std::uint64_t seed);

}  // namespace bt
