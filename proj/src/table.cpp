#include "bt/table.hpp"

#include <algorithm>
#include <sstream>

#include "bt/rng.hpp"

namespace bt {

namespace {

// Checks that the given side of the rows is a partition; fills the report
// on failure.
bool check_row_partition(const std::vector<TableRow>& rows, char which, ValidationReport& report) {
  std::vector<MultiCylinder> cells;
  cells.reserve(rows.size());
  for (const TableRow& r : rows) cells.emplace_back(which == 'v' ? r.v : r.u);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (intersect_cylinders(cells[i], cells[j])) {
        report.ok = false;
        report.kind = TableErrorKind::OverlappingCells;
        report.row_i = static_cast<int>(i);
        report.row_j = static_cast<int>(j);
        report.which_row = which;
        std::ostringstream msg;
        msg << "OverlappingCells: rows " << i << " and " << j << " of the " << which << "-row, "
            << cells[i].str() << " meets " << cells[j].str();
        report.message = msg.str();
        return false;
      }
    }
  }
  Measure m = 0;
  for (const MultiCylinder& c : cells) m += c.measure();
  if (m != 1) {
    report.ok = false;
    report.kind = TableErrorKind::MeasureDeficit;
    report.which_row = which;
    report.deficit = Measure(1) - m;
    std::ostringstream msg;
    msg << "MeasureDeficit: " << which << "-row covers measure " << m << " (deficit "
        << report.deficit << ")";
    report.message = msg.str();
    return false;
  }
  return true;
}

}  // namespace

ValidationReport Table::validate() const {
  ValidationReport report;
  if (rows.empty()) {
    report.ok = false;
    report.kind = TableErrorKind::MeasureDeficit;
    report.deficit = 1;
    report.message = "MeasureDeficit: table has no rows";
    return report;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].v.signature() != signature || rows[i].u.signature() != signature) {
      report.ok = false;
      report.kind = TableErrorKind::SignatureMismatch;
      report.row_i = static_cast<int>(i);
      report.message = "SignatureMismatch: row " + std::to_string(i) +
                       " does not match the table signature";
      return report;
    }
  }
  if (!check_row_partition(rows, 'v', report)) return report;
  if (!check_row_partition(rows, 'u', report)) return report;
  return report;
}

Element::Element(Table t, bool trusted) : table_(std::move(t)) {
  if (!trusted) {
    ValidationReport report = table_.validate();
    if (!report.ok) throw error("invalid table: " + report.message);
  }
  finish();
}

void Element::finish() {
  std::sort(table_.rows.begin(), table_.rows.end(),
            [](const TableRow& a, const TableRow& b) { return a.v < b.v; });
  identity_ = true;
  for (const TableRow& r : table_.rows) {
    if (r.v != r.u) {
      identity_ = false;
      break;
    }
  }
}

Element Element::from_table(Table t) { return Element(std::move(t), false); }

Element Element::identity(const Signature& sig) {
  Table t{sig, {TableRow{WordTuple::empty(sig), WordTuple::empty(sig)}}};
  return Element(std::move(t), true);
}

RationalPoint Element::apply(const RationalPoint& p) const {
  if (p.signature() != signature()) throw signature_error("signature mismatch in apply");
  for (const TableRow& r : table_.rows) {
    if (point_has_prefix(p, r.v)) return prepend(r.u, strip_prefix(p, r.v));
  }
  throw error("apply: no row matches the point (invalid table)");
}

Element compose(const Element& a, const Element& b) {
  if (a.signature() != b.signature()) throw signature_error("signature mismatch in compose");
  const Signature& sig = a.signature();
  std::vector<TableRow> rows;
  for (const TableRow& rb : b.table().rows) {
    for (const TableRow& ra : a.table().rows) {
      auto c = intersect_cylinders(MultiCylinder(rb.u), MultiCylinder(ra.v));
      if (!c) continue;
      // c = u_b.w = v_a.w'; the composite maps v_b.w -> u_a.w'.
      std::vector<Word> w, wp;
      w.reserve(static_cast<std::size_t>(sig.arity()));
      wp.reserve(static_cast<std::size_t>(sig.arity()));
      for (int i = 0; i < sig.arity(); ++i) {
        const Word& ci = c->words().word(i);
        w.push_back(ci.suffix(rb.u.word(i).length()));
        wp.push_back(ci.suffix(ra.v.word(i).length()));
      }
      rows.push_back(TableRow{rb.v.concat(WordTuple(sig, std::move(w))),
                              ra.u.concat(WordTuple(sig, std::move(wp)))});
    }
  }
  return Element(Table{sig, std::move(rows)}, true);
}

Element invert(const Element& e) {
  std::vector<TableRow> rows;
  rows.reserve(e.table().rows.size());
  for (const TableRow& r : e.table().rows) rows.push_back(TableRow{r.u, r.v});
  return Element(Table{e.signature(), std::move(rows)}, true);
}

bool Element::operator==(const Element& other) const {
  if (signature() != other.signature()) return false;
  if (table_.rows.size() == other.table_.rows.size()) {
    bool same = true;
    for (std::size_t i = 0; i < table_.rows.size() && same; ++i) {
      same = table_.rows[i].v == other.table_.rows[i].v && table_.rows[i].u == other.table_.rows[i].u;
    }
    if (same) return true;
  }
  return compose(*this, invert(other)).is_identity();
}

Element Element::split_row(int r, int coord) const {
  const TableRow& row = table_.rows.at(static_cast<std::size_t>(r));
  const int k = signature().size(coord);
  std::vector<TableRow> rows;
  rows.reserve(table_.rows.size() + static_cast<std::size_t>(k) - 1);
  for (int i = 0; i < static_cast<int>(table_.rows.size()); ++i) {
    if (i != r) {
      rows.push_back(table_.rows[static_cast<std::size_t>(i)]);
      continue;
    }
    for (int letter = 0; letter < k; ++letter) {
      Word ext(signature().size(coord), {letter});
      rows.push_back(TableRow{row.v.with_word(coord, row.v.word(coord).concat(ext)),
                              row.u.with_word(coord, row.u.word(coord).concat(ext))});
    }
  }
  return Element(Table{signature(), std::move(rows)}, true);
}

bool is_identity(const Element& e) { return e.is_identity(); }

Clopen rsupp(const Element& e) {
  std::vector<MultiCylinder> moved;
  for (const TableRow& r : e.table().rows) {
    if (r.u != r.v) moved.emplace_back(r.u);
  }
  return normalize(Clopen(e.signature(), moved));
}

FixedLocus fixed_locus(const Element& e) {
  FixedLocus out;
  const Signature& sig = e.signature();
  for (int idx = 0; idx < e.row_count(); ++idx) {
    const TableRow& r = e.table().rows[static_cast<std::size_t>(idx)];
    if (r.u == r.v) continue;
    RowLocus locus;
    locus.row = idx;
    locus.cell = r.v;
    for (int i = 0; i < sig.arity(); ++i) {
      const Word& vi = r.v.word(i);
      const Word& ui = r.u.word(i);
      LocusFactor factor;
      switch (prefix_compare(vi, ui)) {
        case PrefixOrder::Equal:
          factor.kind = LocusFactor::FullFactor;
          break;
        case PrefixOrder::Incomparable:
          factor.kind = LocusFactor::EmptyFactor;
          break;
        default: {
          // x_i = w.x_i with w the tail of the longer word, so the fixed
          // coordinate is v_i.w^inf.
          const Word& longer = vi.length() > ui.length() ? vi : ui;
          const int cut = std::min(vi.length(), ui.length());
          Word w = longer.suffix(cut);
          factor.kind = LocusFactor::SinglePoint;
          factor.point = CoordPoint(vi, w);
          break;
        }
      }
      locus.factors.push_back(std::move(factor));
    }
    out.rows.push_back(std::move(locus));
  }
  return out;
}

bool commutes(const Element& a, const Element& b) {
  return compose(compose(a, b), invert(compose(b, a))).is_identity();
}

Element conjugate(const Element& a, const Element& g) {
  return compose(compose(g, a), invert(g));
}

Element commutator(const Element& a, const Element& b) {
  return compose(compose(a, b), compose(invert(a), invert(b)));
}

Element power(const Element& a, int n) {
  if (n < 0) return power(invert(a), -n);
  Element result = Element::identity(a.signature());
  Element base = a;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

Clopen image_clopen(const Element& e, const Clopen& c) {
  if (e.signature() != c.signature()) throw signature_error("signature mismatch in image_clopen");
  const Signature& sig = e.signature();
  std::vector<MultiCylinder> pieces;
  for (const MultiCylinder& cyl : c.cylinders()) {
    for (const TableRow& r : e.table().rows) {
      auto t = intersect_cylinders(cyl, MultiCylinder(r.v));
      if (!t) continue;
      std::vector<Word> w;
      w.reserve(static_cast<std::size_t>(sig.arity()));
      for (int i = 0; i < sig.arity(); ++i)
        w.push_back(t->words().word(i).suffix(r.v.word(i).length()));
      pieces.emplace_back(r.u.concat(WordTuple(sig, std::move(w))));
    }
  }
  return normalize(Clopen(sig, pieces));
}

Element localize(const Element& e, const MultiCylinder& mu) {
  if (e.signature() != mu.signature()) throw signature_error("signature mismatch in localize");
  std::vector<TableRow> rows;
  for (const TableRow& r : e.table().rows)
    rows.push_back(TableRow{mu.words().concat(r.v), mu.words().concat(r.u)});
  for (const MultiCylinder& c : complement(Clopen(e.signature(), {mu})).cylinders())
    rows.push_back(TableRow{c.words(), c.words()});
  return Element(Table{e.signature(), std::move(rows)}, true);
}

namespace {

// Splits cells[index] along the coordinate into its children.
void split_cell(std::vector<WordTuple>& cells, int index, int coord, const Signature& sig) {
  WordTuple cell = cells[static_cast<std::size_t>(index)];
  cells.erase(cells.begin() + index);
  for (int letter = 0; letter < sig.size(coord); ++letter) {
    Word ext(sig.size(coord), {letter});
    cells.push_back(cell.with_word(coord, cell.word(coord).concat(ext)));
  }
}

// Whether gap is a sum of values from increments (with repetition).
bool reachable_gap(int gap, const std::vector<int>& increments) {
  std::vector<char> dp(static_cast<std::size_t>(gap) + 1, 0);
  dp[0] = 1;
  for (int g = 1; g <= gap; ++g) {
    for (int inc : increments) {
      if (g >= inc && dp[static_cast<std::size_t>(g - inc)]) {
        dp[static_cast<std::size_t>(g)] = 1;
        break;
      }
    }
  }
  return dp[static_cast<std::size_t>(gap)] != 0;
}

}  // namespace

Element random_element(const Signature& sig, int depth, std::uint64_t seed) {
  if (depth < 1) throw error("random_element: depth must be >= 1");
  Rng rng(seed);
  const int m = sig.arity();

  std::vector<WordTuple> v_cells{WordTuple::empty(sig)};
  for (int s = 0; s < depth; ++s) {
    const int index = rng.below_int(static_cast<int>(v_cells.size()));
    const int coord = rng.below_int(m);
    split_cell(v_cells, index, coord, sig);
  }

  std::vector<int> increments;
  increments.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) increments.push_back(sig.size(i) - 1);

  // Grow the u-side to exactly the same cell count: only take splits that
  // leave the remaining gap expressible as a sum of available increments.
  std::vector<WordTuple> u_cells{WordTuple::empty(sig)};
  while (u_cells.size() < v_cells.size()) {
    const int gap = static_cast<int>(v_cells.size()) - static_cast<int>(u_cells.size());
    std::vector<int> usable;
    for (int i = 0; i < m; ++i) {
      const int rest = gap - increments[static_cast<std::size_t>(i)];
      if (rest >= 0 && reachable_gap(rest, increments)) usable.push_back(i);
    }
    if (usable.empty()) throw error("random_element: cannot equalize partition sizes");
    const int coord = usable[static_cast<std::size_t>(rng.below_int(static_cast<int>(usable.size())))];
    const int index = rng.below_int(static_cast<int>(u_cells.size()));
    split_cell(u_cells, index, coord, sig);
  }

  // Random bijection between the two partitions.
  std::vector<int> perm(v_cells.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below_int(i + 1))]);
  }

  std::vector<TableRow> rows;
  rows.reserve(v_cells.size());
  for (std::size_t i = 0; i < v_cells.size(); ++i)
    rows.push_back(TableRow{v_cells[i], u_cells[static_cast<std::size_t>(perm[i])]});
  return Element::from_table(Table{sig, std::move(rows)});
}

}  // namespace bt
