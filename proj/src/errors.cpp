#include "coindoe/errors.hpp"

namespace coindoe {

NotAGroup::NotAGroup(Axiom axiom, std::int64_t a, std::int64_t b,
                     std::int64_t c, const std::string& detail)
    : Error("NotAGroup: " + detail), axiom_(axiom), a_(a), b_(b), c_(c) {}

NotHomomorphism::NotHomomorphism(std::uint32_t g1_, std::uint32_t g2_,
                                 std::uint32_t x_)
    : Error("NotHomomorphism: perm(" + std::to_string(g1_) + "*" +
            std::to_string(g2_) + ") differs from perm(" +
            std::to_string(g1_) + ") o perm(" + std::to_string(g2_) +
            ") at point " + std::to_string(x_)),
      g1(g1_),
      g2(g2_),
      x(x_) {}

NotMeasurePreserving::NotMeasurePreserving(std::uint32_t g_, std::uint32_t x_)
    : Error("NotMeasurePreserving: element " + std::to_string(g_) +
            " moves point " + std::to_string(x_) +
            " to a point of different mass"),
      g(g_),
      x(x_) {}

NotFree::NotFree(int action_, std::uint32_t g_, std::uint32_t x_)
    : Error("NotFree: action " + std::to_string(action_) + " element " +
            std::to_string(g_) + " fixes point " + std::to_string(x_)),
      action(action_),
      g(g_),
      x(x_) {}

OrbitMismatch::OrbitMismatch(std::uint32_t x_)
    : Error("OrbitMismatch: the two actions have different orbits through "
            "point " +
            std::to_string(x_)),
      x(x_) {}

TruncationExceeded::TruncationExceeded(const std::string& word_, int required_,
                                       int available_)
    : Error("TruncationExceeded: word '" + word_ + "' needs coset length " +
            std::to_string(required_) + ", configuration has depth " +
            std::to_string(available_)),
      word(word_),
      required(required_),
      available(available_) {}

BudgetExceeded::BudgetExceeded(const std::string& count_, std::uint64_t budget_)
    : Error("BudgetExceeded: " + count_ + " cells exceed the budget of " +
            std::to_string(budget_)),
      count(count_),
      budget(budget_) {}

PreimageMismatch::PreimageMismatch(const std::string& target_,
                                   const std::string& image_)
    : Error("PreimageMismatch: solved preimage of '" + target_ +
            "' maps to '" + image_ + "'"),
      target(target_),
      image(image_) {}

}  // namespace coindoe
