#include "coindoe/groups.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "coindoe/errors.hpp"
#include "coindoe/random.hpp"

namespace coindoe {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(
    const std::vector<std::vector<Element>>& table) {
  using Axiom = NotAGroup::Axiom;
  const std::size_t m = table.size();
  if (m == 0) {
    throw NotAGroup(Axiom::kTable, -1, -1, -1, "empty multiplication table");
  }
  FiniteGroup g;
  g.order_ = m;
  g.mul_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) {
      throw NotAGroup(Axiom::kTable, static_cast<std::int64_t>(a), -1, -1,
                      "row " + std::to_string(a) + " has " +
                          std::to_string(table[a].size()) + " entries, " +
                          "expected " + std::to_string(m));
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] >= m) {
        throw NotAGroup(Axiom::kTable, static_cast<std::int64_t>(a),
                        static_cast<std::int64_t>(b), -1,
                        "entry (" + std::to_string(a) + "," +
                            std::to_string(b) + ") out of range");
      }
      g.mul_[a * m + b] = table[a][b];
    }
  }

  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      for (Element c = 0; c < m; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw NotAGroup(Axiom::kAssociativity, a, b, c,
                          "(" + std::to_string(a) + "*" + std::to_string(b) +
                              ")*" + std::to_string(c) + " != " +
                              std::to_string(a) + "*(" + std::to_string(b) +
                              "*" + std::to_string(c) + ")");
        }
      }
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < m && !identity; ++e) {
    bool unit = true;
    for (Element a = 0; a < m && unit; ++a) {
      unit = g.mul(e, a) == a && g.mul(a, e) == a;
    }
    if (unit) identity = e;
  }
  if (!identity) {
    throw NotAGroup(Axiom::kIdentity, -1, -1, -1, "no two-sided identity");
  }
  g.identity_ = *identity;

  g.inv_.resize(m);
  for (Element a = 0; a < m; ++a) {
    bool found = false;
    for (Element b = 0; b < m && !found; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inv_[a] = b;
        found = true;
      }
    }
    if (!found) {
      throw NotAGroup(Axiom::kInverse, a, -1, -1,
                      "element " + std::to_string(a) + " has no inverse");
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return from_table(t);
}

FiniteGroup FiniteGroup::elementary_abelian2(unsigned bits) {
  const std::size_t n = std::size_t{1} << bits;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>(a ^ b);
  return from_table(t);
}

std::vector<Element> FiniteGroup::generating_set() const {
  std::vector<Element> gens;
  std::vector<bool> in_subgroup(order_, false);
  in_subgroup[identity_] = true;
  for (Element cand = 0; cand < order_; ++cand) {
    if (in_subgroup[cand]) continue;
    gens.push_back(cand);
    // In a finite group the right-multiplication closure of {e} is the
    // generated subgroup.
    std::fill(in_subgroup.begin(), in_subgroup.end(), false);
    in_subgroup[identity_] = true;
    std::vector<Element> frontier{identity_};
    while (!frontier.empty()) {
      const Element a = frontier.back();
      frontier.pop_back();
      for (Element s : gens) {
        const Element b = mul(a, s);
        if (!in_subgroup[b]) {
          in_subgroup[b] = true;
          frontier.push_back(b);
        }
      }
    }
  }
  return gens;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup parse_group_table(std::istream& in) {
  long long m = 0;
  if (!(in >> m) || m <= 0) {
    throw ParseError("group table must start with a positive order");
  }
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(m),
                                      std::vector<Element>(m));
  for (auto& row : t) {
    for (auto& entry : row) {
      long long v = 0;
      if (!(in >> v)) {
        throw ParseError("group table truncated: expected " +
                         std::to_string(m * m) + " entries");
      }
      if (v < 0 || v >= m) {
        throw NotAGroup(NotAGroup::Axiom::kTable, v, -1, -1,
                        "table entry " + std::to_string(v) + " out of range");
      }
      entry = static_cast<Element>(v);
    }
  }
  return FiniteGroup::from_table(t);
}

FiniteGroup parse_group_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_group_table(in);
}

std::string format_group_table(const FiniteGroup& group) {
  std::ostringstream out;
  out << group.order() << '\n';
  for (Element a = 0; a < group.order(); ++a) {
    for (Element b = 0; b < group.order(); ++b) {
      if (b) out << ' ';
      out << group.mul(a, b);
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// FreeFactor

FreeFactor FreeFactor::finite(FiniteGroup group) {
  FreeFactor f;
  f.group_ = std::make_shared<const FiniteGroup>(std::move(group));
  return f;
}

FreeFactor FreeFactor::integers() { return FreeFactor(); }

const FiniteGroup& FreeFactor::group() const {
  if (!group_) throw std::logic_error("FreeFactor: integers have no table");
  return *group_;
}

std::int64_t FreeFactor::identity() const {
  return group_ ? group_->identity() : 0;
}

std::int64_t FreeFactor::mul(std::int64_t a, std::int64_t b) const {
  if (!group_) return a + b;
  return group_->mul(static_cast<Element>(a), static_cast<Element>(b));
}

std::int64_t FreeFactor::inv(std::int64_t a) const {
  if (!group_) return -a;
  return group_->inv(static_cast<Element>(a));
}

bool FreeFactor::contains(std::int64_t a) const {
  return !group_ || group_->contains(a);
}

std::vector<std::int64_t> FreeFactor::nontrivial_elements(
    std::optional<std::int64_t> cap) const {
  std::vector<std::int64_t> out;
  if (group_) {
    for (Element a = 0; a < group_->order(); ++a)
      if (a != group_->identity()) out.push_back(a);
    return out;
  }
  if (!cap || *cap < 0) {
    throw std::invalid_argument(
        "enumerating the integer factor requires a non-negative h_cap");
  }
  for (std::int64_t a = -*cap; a <= *cap; ++a)
    if (a != 0) out.push_back(a);
  return out;
}

std::vector<std::int64_t> FreeFactor::generators() const {
  if (!group_) return {1};
  std::vector<std::int64_t> out;
  for (Element a : group_->generating_set()) out.push_back(a);
  return out;
}

std::string FreeFactor::describe(std::optional<std::int64_t> cap) const {
  if (group_) return "finite(order=" + std::to_string(group_->order()) + ")";
  return cap ? "integers(h_cap=" + std::to_string(*cap) + ")" : "integers";
}

// ---------------------------------------------------------------------------
// Words

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const Letter& l : w.letters()) {
    h = mix64(h ^ (static_cast<std::uint64_t>(l.value) * 2 +
                   static_cast<std::uint64_t>(l.tag)));
  }
  return static_cast<std::size_t>(h);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.tag == Tag::kG ? "g:" : "h:";
    out += std::to_string(l.value);
  }
  return out;
}

FreeProduct::FreeProduct(FiniteGroup g, FreeFactor h)
    : g_(std::move(g)), h_(std::move(h)) {}

void FreeProduct::check_letter(const Letter& l) const {
  const bool ok = l.tag == Tag::kG ? g_.contains(l.value) : h_.contains(l.value);
  if (!ok) {
    throw std::invalid_argument(std::string("letter ") +
                                (l.tag == Tag::kG ? "g:" : "h:") +
                                std::to_string(l.value) + " is not in its group");
  }
}

std::int64_t FreeProduct::letter_mul(Tag tag, std::int64_t a,
                                     std::int64_t b) const {
  return tag == Tag::kG
             ? g_.mul(static_cast<Element>(a), static_cast<Element>(b))
             : h_.mul(a, b);
}

std::int64_t FreeProduct::letter_identity(Tag tag) const {
  return tag == Tag::kG ? g_.identity() : h_.identity();
}

void FreeProduct::push_reduced(std::vector<Letter>& stack, Letter l) const {
  if (l.value == letter_identity(l.tag)) return;
  if (!stack.empty() && stack.back().tag == l.tag) {
    const std::int64_t merged = letter_mul(l.tag, stack.back().value, l.value);
    if (merged == letter_identity(l.tag)) {
      stack.pop_back();
    } else {
      stack.back().value = merged;
    }
    return;
  }
  stack.push_back(l);
}

Word FreeProduct::reduce(std::span<const Letter> letters) const {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    check_letter(l);
    push_reduced(stack, l);
  }
  return Word(std::move(stack));
}

Word FreeProduct::g_letter(Element g) const {
  const Letter l{Tag::kG, g};
  return reduce(std::span<const Letter>(&l, 1));
}

Word FreeProduct::h_letter(std::int64_t h) const {
  const Letter l{Tag::kH, h};
  return reduce(std::span<const Letter>(&l, 1));
}

Word FreeProduct::multiply(const Word& a, const Word& b) const {
  std::vector<Letter> stack(a.letters_.begin(), a.letters_.end());
  // Both operands are reduced, so cancellation only happens at the seam; a
  // merge that leaves a non-identity letter stops the cascade.
  for (const Letter& l : b.letters_) push_reduced(stack, l);
  return Word(std::move(stack));
}

Word FreeProduct::multiply(std::initializer_list<Word> words) const {
  Word out;
  for (const Word& w : words) out = multiply(out, w);
  return out;
}

Word FreeProduct::invert(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.push_back({it->tag, it->tag == Tag::kG
                                ? g_.inv(static_cast<Element>(it->value))
                                : h_.inv(it->value)});
  }
  return Word(std::move(out));
}

std::vector<Block> FreeProduct::blocks(const Word& w) const {
  std::vector<Block> out;
  const auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    Block b{h_.identity(), g_.identity()};
    if (letters[i].tag == Tag::kH) b.h = letters[i++].value;
    if (i < letters.size() && letters[i].tag == Tag::kG) {
      b.g = static_cast<Element>(letters[i++].value);
    }
    out.push_back(b);
  }
  return out;
}

Word FreeProduct::from_blocks(std::span<const Block> blocks) const {
  std::vector<Letter> letters;
  letters.reserve(2 * blocks.size());
  for (const Block& b : blocks) {
    letters.push_back({Tag::kH, b.h});
    letters.push_back({Tag::kG, b.g});
  }
  return reduce(letters);
}

CosetSection FreeProduct::coset_section(const Word& w) const {
  if (!w.is_identity() && w.letters_.back().tag == Tag::kG) {
    std::vector<Letter> rep(w.letters_.begin(), w.letters_.end() - 1);
    return {Word(std::move(rep)),
            static_cast<Element>(w.letters_.back().value)};
  }
  return {w, g_.identity()};
}

int FreeProduct::coset_length(const Word& w) const {
  return static_cast<int>(std::count_if(
      w.letters_.begin(), w.letters_.end(),
      [](const Letter& l) { return l.tag == Tag::kH; }));
}

bool FreeProduct::is_canonical_rep(const Word& w) const {
  return w.is_identity() || w.letters_.back().tag == Tag::kH;
}

Ball FreeProduct::enumerate_reps(int depth,
                                 std::optional<std::int64_t> h_cap) const {
  if (depth < 0) throw std::invalid_argument("ball depth must be >= 0");
  const auto hs = h_.nontrivial_elements(h_cap);

  Ball ball;
  ball.depth_ = depth;
  ball.reps_.push_back(Word());
  ball.parents_.push_back(Ball::kNoParent);
  ball.lengths_.push_back(0);
  ball.level_ends_.push_back(1);

  std::size_t level_begin = 0;
  for (int k = 1; k <= depth; ++k) {
    const std::size_t level_end = ball.reps_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (Element g = 0; g < g_.order(); ++g) {
        // Only the first G-letter may be the identity.
        if (k > 1 && g == g_.identity()) continue;
        for (std::int64_t h : hs) {
          std::vector<Letter> letters(ball.reps_[p].letters_.begin(),
                                      ball.reps_[p].letters_.end());
          if (g != g_.identity()) letters.push_back({Tag::kG, g});
          letters.push_back({Tag::kH, h});
          ball.reps_.push_back(Word(std::move(letters)));
          ball.parents_.push_back(p);
          ball.lengths_.push_back(k);
        }
      }
    }
    level_begin = level_end;
    ball.level_ends_.push_back(ball.reps_.size());
  }
  for (std::size_t i = 0; i < ball.reps_.size(); ++i) {
    ball.index_.emplace(ball.reps_[i], i);
  }
  return ball;
}

std::size_t Ball::prefix_size(int k) const {
  if (k < 0) return 0;
  if (k >= static_cast<int>(level_ends_.size())) return reps_.size();
  return level_ends_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> Ball::find(const Word& rep) const {
  auto it = index_.find(rep);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word FreeProduct::parse_word(std::string_view text) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    if (token.size() < 3 || token[1] != ':' ||
        (token[0] != 'g' && token[0] != 'h')) {
      throw ParseError("malformed word token '" + token + "'");
    }
    std::int64_t value = 0;
    const char* first = token.data() + 2;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("malformed word token '" + token + "'");
    }
    const Letter l{token[0] == 'g' ? Tag::kG : Tag::kH, value};
    const bool ok =
        l.tag == Tag::kG ? g_.contains(l.value) : h_.contains(l.value);
    if (!ok) throw ParseError("letter '" + token + "' is not in its group");
    letters.push_back(l);
  }
  return reduce(letters);
}

}  // namespace coindoe
