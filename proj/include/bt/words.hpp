#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bt {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct signature_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

// Alphabet sizes (k_1,...,k_m), each >= 2, of the product space
// X = prod_i {0,...,k_i-1}^N. Immutable.
class Signature {
 public:
  explicit Signature(std::vector<int> sizes);

  int arity() const { return static_cast<int>(sizes_.size()); }
  int size(int coord) const { return sizes_.at(static_cast<std::size_t>(coord)); }
  const std::vector<int>& sizes() const { return sizes_; }

  bool operator==(const Signature& other) const { return sizes_ == other.sizes_; }
  bool operator!=(const Signature& other) const { return !(*this == other); }

 private:
  std::vector<int> sizes_;
};

enum class PrefixOrder { AIsPrefix, BIsPrefix, Equal, Incomparable };

// Finite word over a fixed alphabet {0,...,alphabet-1}. May be empty.
class Word {
 public:
  Word() : alphabet_(2) {}
  Word(int alphabet, std::vector<int> letters);

  static Word parse(const std::string& text, int alphabet);

  int alphabet() const { return alphabet_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  Word concat(const Word& tail) const;
  // Suffix starting at position n (0 <= n <= length).
  Word suffix(int n) const;
  Word prefix(int n) const;

  std::string str() const;

  bool operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && letters_ == other.letters_;
  }
  bool operator!=(const Word& other) const { return !(*this == other); }
  // Total order: by letters lexicographically, prefixes first. Used only
  // for deterministic serialization.
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

 private:
  int alphabet_;
  std::vector<int> letters_;
};

PrefixOrder prefix_compare(const Word& a, const Word& b);

// One word per coordinate of a signature.
class WordTuple {
 public:
  WordTuple(Signature sig, std::vector<Word> words);

  static WordTuple empty(const Signature& sig);
  // Bracketed comma list, e.g. "[01,1]".
  static WordTuple parse(const std::string& text, const Signature& sig);

  const Signature& signature() const { return sig_; }
  int arity() const { return sig_.arity(); }
  const Word& word(int coord) const { return words_[static_cast<std::size_t>(coord)]; }
  const std::vector<Word>& words() const { return words_; }
  int total_length() const;

  WordTuple concat(const WordTuple& tail) const;
  WordTuple with_word(int coord, Word w) const;

  std::string str() const;

  bool operator==(const WordTuple& other) const {
    return sig_ == other.sig_ && words_ == other.words_;
  }
  bool operator!=(const WordTuple& other) const { return !(*this == other); }
  bool operator<(const WordTuple& other) const;

 private:
  Signature sig_;
  std::vector<Word> words_;
};

// Eventually periodic coordinate pre.per^inf, stored in normal form:
// the period is primitive and the preperiod is minimal (its last letter
// never matches the last letter of the period). Two coordinates denote
// the same infinite string iff their normal forms are identical.
class CoordPoint {
 public:
  CoordPoint(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }
  int alphabet() const { return per_.alphabet(); }

  int letter_at(int i) const;
  Word unroll(int n) const;
  bool has_prefix(const Word& w) const;
  // Drops the first n letters.
  CoordPoint drop(int n) const;
  CoordPoint prepend(const Word& w) const;

  std::string str() const;  // "pre(per)"

  bool operator==(const CoordPoint& other) const {
    return pre_ == other.pre_ && per_ == other.per_;
  }
  bool operator!=(const CoordPoint& other) const { return !(*this == other); }

 private:
  Word pre_;
  Word per_;
};

// A rational point of the product space: one eventually periodic string
// per coordinate.
class RationalPoint {
 public:
  RationalPoint(Signature sig, std::vector<CoordPoint> coords);

  // "[1(0),(10)]"
  static RationalPoint parse(const std::string& text, const Signature& sig);

  const Signature& signature() const { return sig_; }
  const CoordPoint& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<CoordPoint>& coords() const { return coords_; }

  std::string str() const;

  bool operator==(const RationalPoint& other) const {
    return sig_ == other.sig_ && coords_ == other.coords_;
  }
  bool operator!=(const RationalPoint& other) const { return !(*this == other); }

 private:
  Signature sig_;
  std::vector<CoordPoint> coords_;
};

bool point_has_prefix(const RationalPoint& p, const WordTuple& w);
RationalPoint strip_prefix(const RationalPoint& p, const WordTuple& w);
RationalPoint prepend(const WordTuple& w, const RationalPoint& p);

namespace detail {
// Longest d with word = q^(length/d) for primitive q of length d.
int primitive_root_length(const std::vector<int>& letters);
std::string render_letters(const std::vector<int>& letters, int alphabet);
std::vector<int> parse_letters(const std::string& text, int alphabet);
}  // namespace detail

}  // namespace bt
