#include "anth/approximation.hpp"

#include <stdexcept>
#include <utility>

#include "anth/errors.hpp"

namespace anth {

Convergent::Convergent(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (sgn(q_) == 0) throw DomainError("convergent with zero denominator");
  if (sgn(q_) < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Int g = gcd(p_, q_);
  if (g != 1) {
    throw std::logic_error("convergent " + p_.get_str() + "/" + q_.get_str() +
                           " is not in lowest terms (gcd " + g.get_str() + ")");
  }
}

std::string to_string(const Convergent& c) { return c.p().get_str() + "/" + c.q().get_str(); }

std::vector<Convergent> convergents(const std::vector<Int>& quotients, std::size_t count) {
  if (quotients.empty()) throw DomainError("convergents: empty quotient list");
  if (count > quotients.size()) {
    throw RangeError("convergents: " + std::to_string(count) + " requested from " +
                     std::to_string(quotients.size()) + " quotients");
  }
  std::vector<Convergent> out;
  out.reserve(count);
  Int p_prev = 1, q_prev = 0;  // k - 1
  Int p_prev2 = 0, q_prev2 = 1;  // k - 2
  for (std::size_t k = 0; k < count; ++k) {
    const Int& quotient = quotients[k];
    if (quotient < 1) {
      throw DomainError("convergents: quotient I_" + std::to_string(k) + " = " +
                        quotient.get_str() + " is not positive");
    }
    Int p = quotient * p_prev + p_prev2;
    Int q = quotient * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
  }
  return out;
}

std::vector<Convergent> convergents(const Expansion& expansion, std::size_t count) {
  return convergents(expansion.unroll(count), count);
}

Int pell_residue(const Int& radicand, const Convergent& c) {
  return c.p() * c.p() - radicand * c.q() * c.q();
}

SideDiameterPair side_diameter(std::size_t k) {
  if (k < 1) throw RangeError("side_diameter: k must be >= 1");
  Int side = 1, diameter = 1;
  for (std::size_t i = 1; i < k; ++i) {
    Int next_side = side + diameter;
    diameter = 2 * side + diameter;
    side = std::move(next_side);
  }
  return {std::move(side), std::move(diameter), k};
}

TrueJudgement true_judgement(const Expansion& expansion, std::size_t level) {
  if (level < 1) throw RangeError("true_judgement: level must be >= 1");
  std::vector<Int> prefix = expansion.unroll(level);
  Convergent approx = convergents(prefix, level).back();
  return {level, std::move(prefix), std::move(approx)};
}

}  // namespace anth
