#include "bt/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bt {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw error(msg);
}

char letter_char(int letter) {
  if (letter < 10) return static_cast<char>('0' + letter);
  return static_cast<char>('a' + (letter - 10));
}

int char_letter(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

Signature::Signature(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw error("signature needs at least one coordinate");
  for (int k : sizes_) {
    if (k < 2) throw error("alphabet sizes must be >= 2");
  }
}

Word::Word(int alphabet, std::vector<int> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  if (alphabet_ < 2) throw error("alphabet size must be >= 2");
  for (int l : letters_) {
    if (l < 0 || l >= alphabet_) throw error("letter out of alphabet range");
  }
}

Word Word::parse(const std::string& text, int alphabet) {
  return Word(alphabet, detail::parse_letters(text, alphabet));
}

Word Word::concat(const Word& tail) const {
  if (alphabet_ != tail.alphabet_) throw signature_error("alphabet mismatch in concat");
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::suffix(int n) const {
  require(n >= 0 && n <= length(), "suffix index out of range");
  return Word(alphabet_, std::vector<int>(letters_.begin() + n, letters_.end()));
}

Word Word::prefix(int n) const {
  require(n >= 0 && n <= length(), "prefix index out of range");
  return Word(alphabet_, std::vector<int>(letters_.begin(), letters_.begin() + n));
}

std::string Word::str() const { return detail::render_letters(letters_, alphabet_); }

PrefixOrder prefix_compare(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet()) throw signature_error("alphabet mismatch in prefix_compare");
  const int n = std::min(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    if (a.letter(i) != b.letter(i)) return PrefixOrder::Incomparable;
  }
  if (a.length() == b.length()) return PrefixOrder::Equal;
  return a.length() < b.length() ? PrefixOrder::AIsPrefix : PrefixOrder::BIsPrefix;
}

WordTuple::WordTuple(Signature sig, std::vector<Word> words)
    : sig_(std::move(sig)), words_(std::move(words)) {
  if (static_cast<int>(words_.size()) != sig_.arity())
    throw signature_error("word tuple arity does not match signature");
  for (int i = 0; i < sig_.arity(); ++i) {
    if (words_[static_cast<std::size_t>(i)].alphabet() != sig_.size(i))
      throw signature_error("word alphabet does not match signature coordinate");
  }
}

WordTuple WordTuple::empty(const Signature& sig) {
  std::vector<Word> ws;
  ws.reserve(static_cast<std::size_t>(sig.arity()));
  for (int i = 0; i < sig.arity(); ++i) ws.emplace_back(sig.size(i), std::vector<int>{});
  return WordTuple(sig, std::move(ws));
}

int WordTuple::total_length() const {
  int n = 0;
  for (const Word& w : words_) n += w.length();
  return n;
}

WordTuple WordTuple::concat(const WordTuple& tail) const {
  if (sig_ != tail.sig_) throw signature_error("signature mismatch in concat");
  std::vector<Word> out;
  out.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) out.push_back(words_[i].concat(tail.words_[i]));
  return WordTuple(sig_, std::move(out));
}

WordTuple WordTuple::with_word(int coord, Word w) const {
  std::vector<Word> out = words_;
  out.at(static_cast<std::size_t>(coord)) = std::move(w);
  return WordTuple(sig_, std::move(out));
}

std::string WordTuple::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += ',';
    out += words_[i].str();
  }
  out += ']';
  return out;
}

bool WordTuple::operator<(const WordTuple& other) const {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    if (words_[i] < other.words_[i]) return true;
    if (other.words_[i] < words_[i]) return false;
  }
  return words_.size() < other.words_.size();
}

namespace {

std::vector<std::string> split_top_level(const std::string& inner, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : inner) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_brackets(const std::string& text) {
  std::string t = text;
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw parse_error("expected bracketed tuple: " + text);
  return t.substr(1, t.size() - 2);
}

}  // namespace

WordTuple WordTuple::parse(const std::string& text, const Signature& sig) {
  std::vector<std::string> parts = split_top_level(strip_brackets(text), ',');
  if (static_cast<int>(parts.size()) != sig.arity())
    throw parse_error("tuple arity does not match signature: " + text);
  std::vector<Word> ws;
  ws.reserve(parts.size());
  for (int i = 0; i < sig.arity(); ++i)
    ws.push_back(Word::parse(parts[static_cast<std::size_t>(i)], sig.size(i)));
  return WordTuple(sig, std::move(ws));
}

CoordPoint::CoordPoint(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw error("period must be nonempty");
  if (pre_.alphabet() != per_.alphabet()) throw signature_error("alphabet mismatch in point");
  // Normal form: primitive period, then absorb trailing preperiod letters
  // that are rotations of the period (pre.c (w.c)^inf = pre (c.w)^inf).
  const int root = detail::primitive_root_length(per_.letters());
  if (root < per_.length()) per_ = per_.prefix(root);
  std::vector<int> pre = pre_.letters();
  std::vector<int> per = per_.letters();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
  pre_ = Word(pre_.alphabet(), std::move(pre));
  per_ = Word(per_.alphabet(), std::move(per));
}

int CoordPoint::letter_at(int i) const {
  if (i < pre_.length()) return pre_.letter(i);
  return per_.letter((i - pre_.length()) % per_.length());
}

Word CoordPoint::unroll(int n) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(letter_at(i));
  return Word(alphabet(), std::move(out));
}

bool CoordPoint::has_prefix(const Word& w) const {
  if (w.alphabet() != alphabet()) throw signature_error("alphabet mismatch in has_prefix");
  for (int i = 0; i < w.length(); ++i) {
    if (letter_at(i) != w.letter(i)) return false;
  }
  return true;
}

CoordPoint CoordPoint::drop(int n) const {
  require(n >= 0, "drop count must be nonnegative");
  if (n <= pre_.length()) return CoordPoint(pre_.suffix(n), per_);
  const int excess = (n - pre_.length()) % per_.length();
  // Rotate the period left by excess.
  std::vector<int> rot;
  rot.reserve(static_cast<std::size_t>(per_.length()));
  for (int i = 0; i < per_.length(); ++i) rot.push_back(per_.letter((i + excess) % per_.length()));
  return CoordPoint(Word(alphabet(), {}), Word(alphabet(), std::move(rot)));
}

CoordPoint CoordPoint::prepend(const Word& w) const { return CoordPoint(w.concat(pre_), per_); }

std::string CoordPoint::str() const { return pre_.str() + "(" + per_.str() + ")"; }

RationalPoint::RationalPoint(Signature sig, std::vector<CoordPoint> coords)
    : sig_(std::move(sig)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != sig_.arity())
    throw signature_error("point arity does not match signature");
  for (int i = 0; i < sig_.arity(); ++i) {
    if (coords_[static_cast<std::size_t>(i)].alphabet() != sig_.size(i))
      throw signature_error("point alphabet does not match signature coordinate");
  }
}

RationalPoint RationalPoint::parse(const std::string& text, const Signature& sig) {
  std::vector<std::string> parts = split_top_level(strip_brackets(text), ',');
  if (static_cast<int>(parts.size()) != sig.arity())
    throw parse_error("point arity does not match signature: " + text);
  std::vector<CoordPoint> coords;
  coords.reserve(parts.size());
  for (int i = 0; i < sig.arity(); ++i) {
    const std::string& part = parts[static_cast<std::size_t>(i)];
    auto open = part.find('(');
    auto close = part.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw parse_error("expected pre(per) coordinate: " + part);
    Word pre = Word::parse(part.substr(0, open), sig.size(i));
    Word per = Word::parse(part.substr(open + 1, close - open - 1), sig.size(i));
    coords.emplace_back(std::move(pre), std::move(per));
  }
  return RationalPoint(sig, std::move(coords));
}

std::string RationalPoint::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  out += ']';
  return out;
}

bool point_has_prefix(const RationalPoint& p, const WordTuple& w) {
  if (p.signature() != w.signature()) throw signature_error("signature mismatch in point_has_prefix");
  for (int i = 0; i < w.arity(); ++i) {
    if (!p.coord(i).has_prefix(w.word(i))) return false;
  }
  return true;
}

RationalPoint strip_prefix(const RationalPoint& p, const WordTuple& w) {
  if (!point_has_prefix(p, w)) throw error("strip_prefix: tuple is not a prefix of the point");
  std::vector<CoordPoint> coords;
  coords.reserve(static_cast<std::size_t>(p.signature().arity()));
  for (int i = 0; i < w.arity(); ++i) coords.push_back(p.coord(i).drop(w.word(i).length()));
  return RationalPoint(p.signature(), std::move(coords));
}

RationalPoint prepend(const WordTuple& w, const RationalPoint& p) {
  if (p.signature() != w.signature()) throw signature_error("signature mismatch in prepend");
  std::vector<CoordPoint> coords;
  coords.reserve(static_cast<std::size_t>(p.signature().arity()));
  for (int i = 0; i < w.arity(); ++i) coords.push_back(p.coord(i).prepend(w.word(i)));
  return RationalPoint(p.signature(), std::move(coords));
}

namespace detail {

int primitive_root_length(const std::vector<int>& letters) {
  const int n = static_cast<int>(letters.size());
  for (int d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = letters[static_cast<std::size_t>(i)] ==
                                           letters[static_cast<std::size_t>(i - d)];
    if (ok) return d;
  }
  return n;
}

std::string render_letters(const std::vector<int>& letters, int alphabet) {
  if (alphabet <= 36) {
    std::string out;
    out.reserve(letters.size());
    for (int l : letters) out += letter_char(l);
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<int> parse_letters(const std::string& text, int alphabet) {
  std::vector<int> out;
  if (alphabet <= 36) {
    for (char c : text) {
      if (c == ' ') continue;
      const int l = char_letter(c);
      if (l < 0 || l >= alphabet) throw parse_error(std::string("bad letter '") + c + "'");
      out.push_back(l);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int l = std::stoi(item);
    if (l < 0 || l >= alphabet) throw parse_error("letter out of range: " + item);
    out.push_back(l);
  }
  return out;
}

}  // namespace detail

}  // namespace bt
