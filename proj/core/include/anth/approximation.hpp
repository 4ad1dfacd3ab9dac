#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anth/expansion.hpp"
#include "anth/int.hpp"

namespace anth {

/// A coprime pair p/q with q > 0.
class Convergent {
 public:
  /// Reduces to lowest terms. Continued-fraction convergents are already
  /// coprime, so a non-trivial reduction throws std::logic_error.
  Convergent(Int p, Int q);

  const Int& p() const noexcept { return p_; }
  const Int& q() const noexcept { return q_; }

  friend bool operator==(const Convergent&, const Convergent&) = default;

 private:
  Int p_;
  Int q_;
};

/// "p/q"
std::string to_string(const Convergent& c);

/// Side and diameter numbers: s_1 = d_1 = 1, s_{k+1} = s_k + d_k,
/// d_{k+1} = 2 s_k + d_k, so that d_k^2 - 2 s_k^2 = (-1)^k.
struct SideDiameterPair {
  Int side;
  Int diameter;
  std::size_t k = 1;
};

/// A finite anthyphairetic approximation: the first `level` quotients of an
/// expansion together with the convergent they determine.
struct TrueJudgement {
  std::size_t level = 1;
  std::vector<Int> prefix;
  Convergent approx;
};

/// p_k = I_k p_{k-1} + p_{k-2}, q_k = I_k q_{k-1} + q_{k-2}, seeded with
/// p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1.
///
/// Requires a non-empty quotient list with every quotient >= 1; throws
/// DomainError otherwise and RangeError when count > quotients.size().
std::vector<Convergent> convergents(const std::vector<Int>& quotients, std::size_t count);

/// First `count` convergents of an expansion, unrolling its period.
std::vector<Convergent> convergents(const Expansion& expansion, std::size_t count);

/// p^2 - N q^2.
Int pell_residue(const Int& radicand, const Convergent& c);

/// Throws RangeError for k < 1.
SideDiameterPair side_diameter(std::size_t k);

/// Throws RangeError for level < 1 or level beyond a terminated expansion.
TrueJudgement true_judgement(const Expansion& expansion, std::size_t level);

}  // namespace anth
