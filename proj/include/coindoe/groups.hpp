#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coindoe {

using Element = std::uint32_t;

/// A finite group stored as a full multiplication table over 0..order-1.
///
/// Construction validates closure, associativity, the unit and inverses by a
/// full scan and throws NotAGroup with a witness on the first failure.
class FiniteGroup {
 public:
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table);
  static FiniteGroup cyclic(std::size_t n);
  // (Z/2)^bits with element index = bit code, multiplication = XOR.
  static FiniteGroup elementary_abelian2(unsigned bits);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  bool contains(std::int64_t a) const {
    return a >= 0 && static_cast<std::size_t>(a) < order_;
  }

  // Greedy generating set: scan elements in index order, keep each one not
  // already in the subgroup generated by the earlier picks.
  std::vector<Element> generating_set() const;

  std::vector<std::vector<Element>> table() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

// Plain-text table format: first line m, then m rows of m indices.
FiniteGroup parse_group_table(std::istream& in);
FiniteGroup parse_group_table(std::string_view text);
std::string format_group_table(const FiniteGroup& group);

/// The second free factor H: either a finite group or the integers.
///
/// Integer letters are their own values (identity 0). Anything that lists the
/// elements of H needs an explicit cap when H is infinite.
class FreeFactor {
 public:
  static FreeFactor finite(FiniteGroup group);
  static FreeFactor integers();

  bool is_integers() const { return !group_; }
  const FiniteGroup& group() const;

  std::int64_t identity() const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  bool contains(std::int64_t a) const;

  // Non-identity elements in ascending order. For the integers these are
  // -cap..-1, 1..cap; a missing cap throws std::invalid_argument.
  std::vector<std::int64_t> nontrivial_elements(
      std::optional<std::int64_t> cap) const;
  std::vector<std::int64_t> generators() const;

  std::string describe(std::optional<std::int64_t> cap = std::nullopt) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
};

enum class Tag : std::uint8_t { kG = 0, kH = 1 };

struct Letter {
  Tag tag;
  std::int64_t value;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An element of G*H in reduced normal form: letters alternate between the
/// factors and none is an identity. Only FreeProduct can build one, so every
/// Word in existence is reduced and equality is structural.
class Word {
 public:
  Word() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend class FreeProduct;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// "e" for the identity, otherwise "g:3 h:1 g:2".
std::string format_word(const Word& w);

// One (h, g) pair of the decomposition w = h1 g1 h2 g2 ... hn gn with
// h1 and gn allowed to be identities.
struct Block {
  std::int64_t h;
  Element g;
};

struct CosetSection {
  Word rep;
  Element g;
};

/// Canonical coset representatives of a free product, grouped by coset length.
///
/// reps are ordered by (length, then lexicographically on the tuple
/// g1 h1 g2 h2 ...), and parent(i) is the representative obtained by dropping
/// the trailing g_k h_k block.
class Ball {
 public:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  int depth() const { return depth_; }
  std::size_t size() const { return reps_.size(); }
  const Word& rep(std::size_t i) const { return reps_[i]; }
  const std::vector<Word>& reps() const { return reps_; }
  std::size_t parent(std::size_t i) const { return parents_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  // Number of reps of length <= k.
  std::size_t prefix_size(int k) const;
  std::optional<std::size_t> find(const Word& rep) const;

 private:
  friend class FreeProduct;

  int depth_ = 0;
  std::vector<Word> reps_;
  std::vector<std::size_t> parents_;
  std::vector<int> lengths_;
  std::vector<std::size_t> level_ends_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// The free product G*H with G finite and H a FreeFactor.
class FreeProduct {
 public:
  FreeProduct(FiniteGroup g, FreeFactor h);

  const FiniteGroup& g() const { return g_; }
  const FreeFactor& h() const { return h_; }

  Word identity() const { return Word(); }
  Word g_letter(Element g) const;
  Word h_letter(std::int64_t h) const;

  // Reduces an arbitrary letter sequence; out-of-range letters throw
  // std::invalid_argument.
  Word reduce(std::span<const Letter> letters) const;
  Word multiply(const Word& a, const Word& b) const;
  Word multiply(std::initializer_list<Word> words) const;
  Word invert(const Word& w) const;

  std::vector<Block> blocks(const Word& w) const;
  Word from_blocks(std::span<const Block> blocks) const;

  // Splits w = rep * g where rep is the canonical representative of wG:
  // a reduced word g1 h1 ... gn hn ending in an H-letter (or e).
  CosetSection coset_section(const Word& w) const;
  // Number of H-syllables of the canonical representative of wG.
  int coset_length(const Word& w) const;
  bool is_canonical_rep(const Word& w) const;

  // All canonical representatives of coset length <= depth. h_cap bounds
  // |h| for integer H and is ignored for finite H.
  Ball enumerate_reps(int depth, std::optional<std::int64_t> h_cap) const;

  // Accepts the format_word syntax; the result is reduced.
  Word parse_word(std::string_view text) const;

 private:
  void check_letter(const Letter& l) const;
  std::int64_t letter_mul(Tag tag, std::int64_t a, std::int64_t b) const;
  std::int64_t letter_identity(Tag tag) const;
  // Pushes l onto a reduced stack, merging and cancelling at the top.
  void push_reduced(std::vector<Letter>& stack, Letter l) const;

  FiniteGroup g_;
  FreeFactor h_;
};

}  // namespace coindoe
