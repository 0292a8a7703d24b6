#pragma once

#include "jc/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <stop_token>
#include <vector>

namespace jc::inv {

/// Monomial order. Variables are ranked x1 > x2 > ... in every kind.
class TermOrder {
 public:
  enum class Kind { lex, grlex, block };

  static TermOrder lex() { return TermOrder(Kind::lex, 0); }
  static TermOrder grlex() { return TermOrder(Kind::grlex, 0); }
  /// Elimination order: the first first_block variables dominate; graded-lex
  /// inside each block.
  static TermOrder block(std::size_t first_block) { return TermOrder(Kind::block, first_block); }

  Kind kind() const { return kind_; }
  std::size_t first_block() const { return first_block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

 private:
  TermOrder(Kind kind, std::size_t first_block) : kind_(kind), first_block_(first_block) {}

  Kind kind_;
  std::size_t first_block_;
};

struct Cancelled : std::runtime_error {
  Cancelled() : std::runtime_error("Groebner basis computation cancelled") {}
};

/// Leading monomial of a nonzero polynomial under order.
Monomial leading_monomial(const Polynomial& p, const TermOrder& order);

/// Reduced Groebner basis: monic, autoreduced, sorted by ascending leading
/// monomial. Uses the normal selection strategy with the coprime and chain
/// criteria. Throws Cancelled if stop is requested between reductions.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                                   std::stop_token stop = {});

/// Full normal form of p with respect to basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order);

}  // namespace jc::inv
