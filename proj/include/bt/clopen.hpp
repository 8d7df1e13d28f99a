#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "bt/words.hpp"

namespace bt {

// Exact rational, used for the uniform product measure. A multicylinder
// [u_1,...,u_m] has measure prod_i k_i^(-|u_i|); partitions are certified
// by pairwise disjointness plus total measure one.
using Measure = boost::multiprecision::cpp_rational;

// Basic clopen set prod_i u_i X_{k_i}, given by a word tuple.
class MultiCylinder {
 public:
  explicit MultiCylinder(WordTuple words) : words_(std::move(words)) {}

  static MultiCylinder whole(const Signature& sig) { return MultiCylinder(WordTuple::empty(sig)); }

  const WordTuple& words() const { return words_; }
  const Signature& signature() const { return words_.signature(); }

  Measure measure() const;
  bool contains_point(const RationalPoint& p) const { return point_has_prefix(p, words_); }

  std::string str() const { return words_.str(); }

  bool operator==(const MultiCylinder& other) const { return words_ == other.words_; }
  bool operator<(const MultiCylinder& other) const { return words_ < other.words_; }

 private:
  WordTuple words_;
};

// Empty iff some coordinate pair of words is incomparable; otherwise the
// cylinder of the coordinatewise longer words.
std::optional<MultiCylinder> intersect_cylinders(const MultiCylinder& a, const MultiCylinder& b);

// The pieces of a \ b, pairwise disjoint. Empty when a is contained in b.
std::vector<MultiCylinder> cylinder_minus(const MultiCylinder& a, const MultiCylinder& b);

// Clopen subset of the product space, stored as a finite set of pairwise
// disjoint multicylinders. All constructors disjointify; the empty set has
// no cylinders and the whole space is the all-epsilon cylinder.
class Clopen {
 public:
  explicit Clopen(Signature sig) : sig_(std::move(sig)) {}
  // Disjointifies arbitrary (possibly overlapping) cylinders.
  Clopen(Signature sig, const std::vector<MultiCylinder>& cylinders);

  static Clopen whole(const Signature& sig);
  static Clopen empty(const Signature& sig) { return Clopen(sig); }

  const Signature& signature() const { return sig_; }
  const std::vector<MultiCylinder>& cylinders() const { return cylinders_; }
  bool is_empty() const { return cylinders_.empty(); }

  Measure measure() const;
  bool contains_point(const RationalPoint& p) const;

  // "{ [w1,...,wm]; ... }"
  std::string str() const;

 private:
  friend Clopen complement(const Clopen&);
  friend Clopen set_union(const Clopen&, const Clopen&);
  friend Clopen set_intersect(const Clopen&, const Clopen&);
  friend Clopen normalize(const Clopen&);

  Signature sig_;
  std::vector<MultiCylinder> cylinders_;  // pairwise disjoint
};

Clopen complement(const Clopen& c);
Clopen set_union(const Clopen& a, const Clopen& b);
Clopen set_intersect(const Clopen& a, const Clopen& b);
bool subset(const Clopen& a, const Clopen& b);
bool equals(const Clopen& a, const Clopen& b);

// Exact sum of cylinder measures; rejects overlapping input.
Measure total_measure(const std::vector<MultiCylinder>& cylinders);

// True iff the cells are pairwise disjoint and of total measure one,
// i.e. they cover the whole space exactly.
bool is_partition(const std::vector<MultiCylinder>& cells);

// Deterministic representative: refine every cylinder to the maximum word
// length per coordinate, then greedily merge complete sibling families
// (coordinate 1 first) and sort. Equal sets normalize identically.
Clopen normalize(const Clopen& c);

}  // namespace bt
