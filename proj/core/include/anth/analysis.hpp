#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "anth/expansion.hpp"
#include "anth/int.hpp"

namespace anth {

/// Palindromic periodicity of sqrt(N) = [I_0; (c_1, ..., c_L)]:
/// c_1 .. c_{L-1} reads the same reversed and c_L = 2 I_0.
struct PalindromeReport {
  Int n;
  Int initial_quotient;
  std::vector<Int> period;
  bool inner_palindrome = false;
  bool last_is_double = false;
  bool holds = false;
};

/// Throws DomainError for perfect squares and N < 2.
PalindromeReport verify_palindrome(const Int& n);

/// Checks every non-square N in [2, max_n], fanning out over `workers`
/// threads (0 picks the hardware concurrency). Reports come back in
/// ascending N.
std::vector<PalindromeReport> palindrome_sweep(unsigned long max_n, unsigned workers = 0);

/// Logos expansions of sqrt(N) for the non-squares 2 .. 17.
std::map<unsigned long, Expansion> theodorus_batch();

/// Anth(scale a, scale b) == Anth(a, b) on the integer engine.
/// Requires a > b >= 1 and scale >= 1; throws DomainError otherwise.
bool topica_check(const Int& a, const Int& b, const Int& scale);

/// The surd analogue: the logos engine started from (t a, t b) produces the
/// same quotients, period and all, as from (a, b).
bool surd_scaling_check(const SurdContext& ctx, const Int& scale);

/// Period length + 1. Throws DomainError for a non-periodic expansion.
std::size_t species_count(const Expansion& expansion);

}  // namespace anth
