#include "anth/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "anth/errors.hpp"

namespace anth {

PalindromeReport verify_palindrome(const Int& n) {
  const SurdContext ctx(n);
  const Expansion e = anth_surd_logos(ctx);

  PalindromeReport report;
  report.n = n;
  report.initial_quotient = e.initial.front();
  report.period = *e.period;

  const auto& cycle = report.period;
  const std::size_t inner = cycle.size() - 1;
  report.inner_palindrome = std::equal(cycle.begin(), cycle.begin() + inner / 2,
                                       cycle.rend() - static_cast<std::ptrdiff_t>(inner));
  report.last_is_double = cycle.back() == 2 * report.initial_quotient;
  // sqrt(N) always has pre-period exactly [I_0]; anything else fails too.
  report.holds = report.inner_palindrome && report.last_is_double && e.initial.size() == 1;
  return report;
}

std::vector<PalindromeReport> palindrome_sweep(unsigned long max_n, unsigned workers) {
  std::vector<unsigned long> targets;
  for (unsigned long n = 2; n <= max_n; ++n) {
    if (!is_perfect_square(Int(n))) targets.push_back(n);
  }
  std::vector<PalindromeReport> reports(targets.size());

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, targets.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < targets.size() && !failed; i = next++) {
        reports[i] = verify_palindrome(Int(targets[i]));
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::map<unsigned long, Expansion> theodorus_batch() {
  std::map<unsigned long, Expansion> out;
  for (unsigned long n = 2; n <= 17; ++n) {
    if (is_perfect_square(Int(n))) continue;
    out.emplace(n, anth_surd_logos(SurdContext(Int(n))));
  }
  return out;
}

bool topica_check(const Int& a, const Int& b, const Int& scale) {
  if (scale < 1) throw DomainError("topica_check: scale must be >= 1");
  const auto base = anth_integers(a, b);
  const auto scaled = anth_integers(scale * a, scale * b);
  return base.expansion.initial == scaled.expansion.initial;
}

bool surd_scaling_check(const SurdContext& ctx, const Int& scale) {
  if (scale < 1) throw DomainError("surd_scaling_check: scale must be >= 1");
  const std::size_t budget = default_max_steps(ctx.radicand());
  const auto base = trace_surd_logos(SurdElement::a(ctx), SurdElement::b(ctx), budget);
  const auto scaled =
      trace_surd_logos(scale * SurdElement::a(ctx), scale * SurdElement::b(ctx), budget);
  return base.run.quotients() == scaled.run.quotients() &&
         base.expansion.initial == scaled.expansion.initial &&
         base.expansion.period == scaled.expansion.period;
}

std::size_t species_count(const Expansion& expansion) {
  if (!expansion.period) {
    throw DomainError("species_count: expansion is not periodic");
  }
  return expansion.period->size() + 1;
}

}  // namespace anth
