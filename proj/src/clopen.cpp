#include "bt/clopen.hpp"

#include <algorithm>
#include <map>

namespace bt {

namespace {

Measure power_of_inverse(int k, int exponent) {
  boost::multiprecision::cpp_int denom = 1;
  for (int i = 0; i < exponent; ++i) denom *= k;
  return Measure(1, denom);
}

}  // namespace

Measure MultiCylinder::measure() const {
  Measure m = 1;
  const Signature& sig = signature();
  for (int i = 0; i < sig.arity(); ++i) m *= power_of_inverse(sig.size(i), words_.word(i).length());
  return m;
}

std::optional<MultiCylinder> intersect_cylinders(const MultiCylinder& a, const MultiCylinder& b) {
  if (a.signature() != b.signature())
    throw signature_error("signature mismatch in intersect_cylinders");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(a.signature().arity()));
  for (int i = 0; i < a.signature().arity(); ++i) {
    const Word& wa = a.words().word(i);
    const Word& wb = b.words().word(i);
    switch (prefix_compare(wa, wb)) {
      case PrefixOrder::Incomparable:
        return std::nullopt;
      case PrefixOrder::AIsPrefix:
        out.push_back(wb);
        break;
      default:
        out.push_back(wa);
        break;
    }
  }
  return MultiCylinder(WordTuple(a.signature(), std::move(out)));
}

std::vector<MultiCylinder> cylinder_minus(const MultiCylinder& a, const MultiCylinder& b) {
  auto common = intersect_cylinders(a, b);
  if (!common) return {a};
  const Signature& sig = a.signature();
  // a \ b = a \ (a cap b); write c := a cap b, which extends a coordinatewise.
  // Peel coordinates left to right: the pieces where coordinate i first
  // deviates from c while coordinates < i carry the full c-word.
  const WordTuple& cw = common->words();
  std::vector<MultiCylinder> parts;
  WordTuple prefix_so_far = a.words();
  for (int i = 0; i < sig.arity(); ++i) {
    const Word& ai = a.words().word(i);
    const Word& ci = cw.word(i);
    // For every proper extension point of a_i below c_i, branch off.
    for (int pos = ai.length(); pos < ci.length(); ++pos) {
      for (int letter = 0; letter < sig.size(i); ++letter) {
        if (letter == ci.letter(pos)) continue;
        std::vector<int> dev = ci.prefix(pos).letters();
        dev.push_back(letter);
        parts.emplace_back(prefix_so_far.with_word(i, Word(sig.size(i), std::move(dev))));
      }
    }
    prefix_so_far = prefix_so_far.with_word(i, ci);
  }
  return parts;
}

Clopen::Clopen(Signature sig, const std::vector<MultiCylinder>& cylinders) : sig_(std::move(sig)) {
  for (const MultiCylinder& c : cylinders) {
    if (c.signature() != sig_) throw signature_error("cylinder signature mismatch");
    std::vector<MultiCylinder> pieces{c};
    for (const MultiCylinder& have : cylinders_) {
      std::vector<MultiCylinder> next;
      for (const MultiCylinder& p : pieces) {
        auto rest = cylinder_minus(p, have);
        next.insert(next.end(), rest.begin(), rest.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    cylinders_.insert(cylinders_.end(), pieces.begin(), pieces.end());
  }
  std::sort(cylinders_.begin(), cylinders_.end());
}

Clopen Clopen::whole(const Signature& sig) {
  Clopen c(sig);
  c.cylinders_.push_back(MultiCylinder::whole(sig));
  return c;
}

Measure Clopen::measure() const {
  Measure m = 0;
  for (const MultiCylinder& c : cylinders_) m += c.measure();
  return m;
}

bool Clopen::contains_point(const RationalPoint& p) const {
  for (const MultiCylinder& c : cylinders_) {
    if (c.contains_point(p)) return true;
  }
  return false;
}

std::string Clopen::str() const {
  std::string out = "{ ";
  for (std::size_t i = 0; i < cylinders_.size(); ++i) {
    if (i) out += "; ";
    out += cylinders_[i].str();
  }
  out += " }";
  return out;
}

Clopen complement(const Clopen& c) {
  Clopen out = Clopen::whole(c.signature());
  for (const MultiCylinder& cyl : c.cylinders()) {
    std::vector<MultiCylinder> next;
    for (const MultiCylinder& p : out.cylinders_) {
      auto rest = cylinder_minus(p, cyl);
      next.insert(next.end(), rest.begin(), rest.end());
    }
    out.cylinders_ = std::move(next);
  }
  std::sort(out.cylinders_.begin(), out.cylinders_.end());
  return out;
}

Clopen set_union(const Clopen& a, const Clopen& b) {
  if (a.signature() != b.signature()) throw signature_error("signature mismatch in union");
  std::vector<MultiCylinder> all = a.cylinders();
  all.insert(all.end(), b.cylinders().begin(), b.cylinders().end());
  return Clopen(a.signature(), all);
}

Clopen set_intersect(const Clopen& a, const Clopen& b) {
  if (a.signature() != b.signature()) throw signature_error("signature mismatch in intersect");
  Clopen out(a.signature());
  for (const MultiCylinder& ca : a.cylinders()) {
    for (const MultiCylinder& cb : b.cylinders()) {
      if (auto c = intersect_cylinders(ca, cb)) out.cylinders_.push_back(*c);
    }
  }
  // Pieces are disjoint: the inputs are disjoint unions.
  std::sort(out.cylinders_.begin(), out.cylinders_.end());
  return out;
}

bool subset(const Clopen& a, const Clopen& b) {
  // Exact: a and a cap b are clopen with a cap b inside a, and a nonempty
  // clopen set has positive measure, so a = a cap b iff measures agree.
  return set_intersect(a, b).measure() == a.measure();
}

bool equals(const Clopen& a, const Clopen& b) {
  const Measure common = set_intersect(a, b).measure();
  return common == a.measure() && common == b.measure();
}

Measure total_measure(const std::vector<MultiCylinder>& cylinders) {
  for (std::size_t i = 0; i < cylinders.size(); ++i) {
    for (std::size_t j = i + 1; j < cylinders.size(); ++j) {
      if (intersect_cylinders(cylinders[i], cylinders[j]))
        throw error("total_measure: cylinders overlap");
    }
  }
  Measure m = 0;
  for (const MultiCylinder& c : cylinders) m += c.measure();
  return m;
}

bool is_partition(const std::vector<MultiCylinder>& cells) {
  if (cells.empty()) return false;
  Measure m = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (intersect_cylinders(cells[i], cells[j])) return false;
    }
    m += cells[i].measure();
  }
  return m == 1;
}

namespace {

// All extensions of the cylinder with coordinate words padded to the given
// per-coordinate lengths.
void refine_to(const MultiCylinder& c, const std::vector<int>& lengths,
               std::vector<MultiCylinder>& out) {
  const Signature& sig = c.signature();
  std::vector<MultiCylinder> frontier{c};
  for (int i = 0; i < sig.arity(); ++i) {
    const int target = lengths[static_cast<std::size_t>(i)];
    bool again = true;
    while (again) {
      again = false;
      std::vector<MultiCylinder> next;
      for (const MultiCylinder& f : frontier) {
        const Word& w = f.words().word(i);
        if (w.length() >= target) {
          next.push_back(f);
          continue;
        }
        for (int letter = 0; letter < sig.size(i); ++letter) {
          std::vector<int> ext = w.letters();
          ext.push_back(letter);
          next.emplace_back(f.words().with_word(i, Word(sig.size(i), std::move(ext))));
        }
        if (w.length() + 1 < target) again = true;
      }
      frontier = std::move(next);
    }
  }
  out.insert(out.end(), frontier.begin(), frontier.end());
}

}  // namespace

Clopen normalize(const Clopen& c) {
  if (c.is_empty()) return c;
  const Signature& sig = c.signature();
  std::vector<int> lengths(static_cast<std::size_t>(sig.arity()), 0);
  for (const MultiCylinder& cyl : c.cylinders()) {
    for (int i = 0; i < sig.arity(); ++i) {
      lengths[static_cast<std::size_t>(i)] =
          std::max(lengths[static_cast<std::size_t>(i)], cyl.words().word(i).length());
    }
  }
  std::vector<MultiCylinder> cells;
  for (const MultiCylinder& cyl : c.cylinders()) refine_to(cyl, lengths, cells);
  std::sort(cells.begin(), cells.end());

  // Merge complete sibling families, coordinate 1 first, until stable.
  bool merged = true;
  while (merged) {
    merged = false;
    for (int i = 0; i < sig.arity() && !merged; ++i) {
      std::map<WordTuple, std::vector<int>> families;
      for (const MultiCylinder& cell : cells) {
        const Word& w = cell.words().word(i);
        if (w.empty()) continue;
        WordTuple parent = cell.words().with_word(i, w.prefix(w.length() - 1));
        families[parent].push_back(w.letter(w.length() - 1));
      }
      for (auto& [parent, letters] : families) {
        if (static_cast<int>(letters.size()) != sig.size(i)) continue;
        std::sort(letters.begin(), letters.end());
        bool all = true;
        for (int l = 0; l < sig.size(i); ++l) all = all && letters[static_cast<std::size_t>(l)] == l;
        if (!all) continue;
        std::vector<MultiCylinder> next;
        for (const MultiCylinder& cell : cells) {
          const Word& w = cell.words().word(i);
          if (!w.empty() && cell.words().with_word(i, w.prefix(w.length() - 1)) == parent) continue;
          next.push_back(cell);
        }
        next.emplace_back(parent);
        cells = std::move(next);
        std::sort(cells.begin(), cells.end());
        merged = true;
        break;
      }
    }
  }

  Clopen out(sig);
  out.cylinders_ = std::move(cells);
  return out;
}

}  // namespace bt
