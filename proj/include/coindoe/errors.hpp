#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coindoe {

// Root of every error the library raises on bad input or violated contracts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A multiplication table that fails the group axioms. The witness is
// (a, b, c) for associativity, (a, e, -) for the unit, (a, -, -) for inverses.
class NotAGroup : public Error {
 public:
  enum class Axiom { kTable, kAssociativity, kIdentity, kInverse };
  NotAGroup(Axiom axiom, std::int64_t a, std::int64_t b, std::int64_t c,
            const std::string& detail);
  Axiom axiom() const { return axiom_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

 private:
  Axiom axiom_;
  std::int64_t a_, b_, c_;
};

class InvalidSpace : public Error {
 public:
  using Error::Error;
};

class NotHomomorphism : public Error {
 public:
  NotHomomorphism(std::uint32_t g1, std::uint32_t g2, std::uint32_t x);
  std::uint32_t g1, g2, x;
};

class NotMeasurePreserving : public Error {
 public:
  NotMeasurePreserving(std::uint32_t g, std::uint32_t x);
  std::uint32_t g, x;
};

class NotFree : public Error {
 public:
  NotFree(int action, std::uint32_t g, std::uint32_t x);
  int action;
  std::uint32_t g, x;
};

class OrbitMismatch : public Error {
 public:
  explicit OrbitMismatch(std::uint32_t x);
  std::uint32_t x;
};

// A cocycle table that disagrees with the pair it claims to describe.
class CocycleInconsistent : public Error {
 public:
  using Error::Error;
};

// Evaluation of a truncated configuration outside its stored ball.
class TruncationExceeded : public Error {
 public:
  TruncationExceeded(const std::string& word, int required, int available);
  std::string word;
  int required;
  int available;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& count, std::uint64_t budget);
  std::string count;
  std::uint64_t budget;
};

class NotAProductSpace : public Error {
 public:
  using Error::Error;
};

// A preimage produced through the inverse cocycle does not map back under the
// forward one. Only reachable when the cocycle table is inconsistent.
class PreimageMismatch : public Error {
 public:
  PreimageMismatch(const std::string& target, const std::string& image);
  std::string target;
  std::string image;
};

}  // namespace coindoe
