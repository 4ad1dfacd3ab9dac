#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "anth/int.hpp"
#include "anth/surd.hpp"

namespace anth {

/// Certificate that e_n / e_{n+1} = e_m / e_{m+1}, decided by the
/// cross-multiplication e_n * e_{m+1} = e_m * e_{n+1} in Z[sqrt(N)].
struct LogosWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  SurdElement left;   // e_n * e_{m+1}
  SurdElement right;  // e_m * e_{n+1}
};

/// Quotient sequence [I_0, I_1, ...] of a pair of magnitudes.
///
/// Either terminated (finite, no period) or eventually periodic, in which
/// case the pre-period and cycle are both minimal.
struct Expansion {
  std::vector<Int> initial;
  std::optional<std::vector<Int>> period;
  bool terminated = false;
  std::optional<LogosWitness> witness;

  bool periodic() const noexcept { return period.has_value(); }
  std::size_t preperiod_length() const noexcept { return initial.size(); }

  /// I_index, following the period as far as needed. nullopt past the end
  /// of a terminated expansion.
  std::optional<Int> quotient(std::size_t index) const;

  /// First `count` quotients. Throws RangeError if a terminated expansion
  /// has fewer.
  std::vector<Int> unroll(std::size_t count) const;
};

/// "[4; (2,1,3,1,2,8)]" for periodic, "[1; 2]" for terminated.
std::string to_string(const Expansion& e);

template <class Magnitude>
struct StepResult {
  Int quotient;
  Magnitude remainder;
};

/// One division step larger = quotient * smaller + remainder with
/// 0 <= remainder < smaller. Requires larger > smaller > 0; throws
/// DomainError otherwise.
StepResult<Int> anth_step(const Int& larger, const Int& smaller);
StepResult<SurdElement> anth_step(const SurdElement& larger, const SurdElement& smaller);

struct IntegerExpansion {
  Expansion expansion;
  Int gcd;
};

/// Euclid on a > b >= 1. Always terminates; gcd is the last nonzero remainder.
IntegerExpansion anth_integers(const Int& a, const Int& b);

/// 10 * isqrt(N) * digits(N), at least 64.
std::size_t default_max_steps(const Int& radicand);

/// e_n / e_n1 == e_m / e_m1 for strictly positive elements of one context.
bool logos_equal(const SurdElement& e_n, const SurdElement& e_n1, const SurdElement& e_m,
                 const SurdElement& e_m1);

/// The remainder sequence e_{-1} = larger, e_0 = smaller,
/// e_{k+1} = e_{k-1} - I_k e_k, advanced one division step at a time.
class SurdRun {
 public:
  /// Requires larger > smaller > 0.
  SurdRun(SurdElement larger, SurdElement smaller);
  /// Seeds a = sqrt(N), b = 1.
  explicit SurdRun(const SurdContext& ctx);

  const SurdContext& context() const noexcept { return remainders_.front().context(); }

  /// Computes I_k and e_{k+1} for k = steps(). Returns false (and does
  /// nothing) once a zero remainder has ended the run.
  bool advance();

  /// Number of quotients computed so far.
  std::size_t steps() const noexcept { return quotients_.size(); }
  bool terminated() const noexcept { return terminated_; }

  const std::vector<Int>& quotients() const noexcept { return quotients_; }
  /// e_k for -1 <= k <= steps().
  const SurdElement& remainder(long k) const;

  /// Scans n = 0 .. k-1 for the most recent step k = steps() - 1 and returns
  /// the first n with e_n / e_{n+1} = e_k / e_{k+1}.
  std::optional<LogosWitness> latest_logos() const;

 private:
  std::vector<SurdElement> remainders_;  // remainders_[k + 1] == e_k
  std::vector<Int> quotients_;
  bool terminated_ = false;
};

struct SurdTrace {
  SurdRun run;
  Expansion expansion;
};

/// Logos engine: steps the remainder sequence and tests the logos criterion
/// against every earlier index after each step, stopping at the first hit.
/// The result is canonicalized; the witness records the pair that fired.
/// Throws BudgetExceeded after max_steps steps without a witness.
SurdTrace trace_surd_logos(SurdElement larger, SurdElement smaller, std::size_t max_steps);
SurdTrace trace_surd_logos(const SurdContext& ctx, std::optional<std::size_t> max_steps = {});

Expansion anth_surd_logos(const SurdContext& ctx, std::optional<std::size_t> max_steps = {});
Expansion anth_surd_logos(SurdElement larger, SurdElement smaller, std::size_t max_steps);

/// State engine for (P + sqrt(D)) / Q: I = floor((P + sqrt(D)) / Q),
/// P' = I Q - P, Q' = (D - P'^2) / Q, period at the first repeated (P, Q).
/// Inputs with Q not dividing D - P^2 are rescaled first.
Expansion anth_surd_state(const Int& p, const Int& q, const Int& d,
                          std::optional<std::size_t> max_steps = {});

/// Builds the canonical expansion from a quotient list that is periodic from
/// `period_start` with cycle length `period_length`: rolls the start left
/// while the cycle still matches, then reduces the cycle to its primitive
/// root. Requires period_start + period_length <= quotients.size().
Expansion canonicalize(const std::vector<Int>& quotients, std::size_t period_start,
                       std::size_t period_length);

struct Commensurable {
  Int gcd;
};
struct Incommensurable {
  LogosWitness witness;
};
using Commensurability = std::variant<Commensurable, Incommensurable>;

Commensurability commensurability(const Int& a, const Int& b);
Commensurability commensurability(const SurdContext& ctx,
                                  std::optional<std::size_t> max_steps = {});

}  // namespace anth
