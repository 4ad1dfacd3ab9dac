#include "anth/expansion.hpp"

#include <limits>
#include <unordered_map>
#include <utility>

#include "anth/errors.hpp"

namespace anth {

std::optional<Int> Expansion::quotient(std::size_t index) const {
  if (index < initial.size()) return initial[index];
  if (!period) return std::nullopt;
  const auto& cycle = *period;
  return cycle[(index - initial.size()) % cycle.size()];
}

std::vector<Int> Expansion::unroll(std::size_t count) const {
  if (!period && count > initial.size()) {
    throw RangeError("expansion terminates after " + std::to_string(initial.size()) +
                     " quotients; " + std::to_string(count) + " requested");
  }
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(*quotient(i));
  return out;
}

namespace {

std::string join(const std::vector<Int>& values, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ",";
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

std::string to_string(const Expansion& e) {
  std::string out = "[";
  if (!e.initial.empty()) out += e.initial.front().get_str();
  std::string tail;
  if (e.initial.size() > 1) tail = join(e.initial, 1, e.initial.size());
  if (e.period) {
    if (!tail.empty()) tail += ",";
    tail += "(" + join(*e.period, 0, e.period->size()) + ")";
  }
  if (!tail.empty()) out += e.initial.empty() ? tail : "; " + tail;
  return out + "]";
}

StepResult<Int> anth_step(const Int& larger, const Int& smaller) {
  if (!(sgn(smaller) > 0 && larger > smaller)) {
    throw DomainError("anth_step requires larger > smaller > 0, got (" + larger.get_str() + ", " +
                      smaller.get_str() + ")");
  }
  StepResult<Int> r;
  mpz_fdiv_qr(r.quotient.get_mpz_t(), r.remainder.get_mpz_t(), larger.get_mpz_t(),
              smaller.get_mpz_t());
  return r;
}

StepResult<SurdElement> anth_step(const SurdElement& larger, const SurdElement& smaller) {
  if (!(surd_sign(smaller) > 0 && surd_compare(larger, smaller) > 0)) {
    throw DomainError("anth_step requires larger > smaller > 0, got (" + to_string(larger) +
                      ", " + to_string(smaller) + ")");
  }
  Int quotient = surd_floor_div(larger, smaller);
  SurdElement remainder = larger - quotient * smaller;
  return {std::move(quotient), std::move(remainder)};
}

IntegerExpansion anth_integers(const Int& a, const Int& b) {
  if (!(sgn(b) > 0 && a > b)) {
    throw DomainError("anth_integers requires a > b >= 1, got (" + a.get_str() + ", " +
                      b.get_str() + ")");
  }
  IntegerExpansion out;
  out.expansion.terminated = true;
  Int larger = a;
  Int smaller = b;
  while (true) {
    auto [quotient, remainder] = anth_step(larger, smaller);
    out.expansion.initial.push_back(std::move(quotient));
    if (sgn(remainder) == 0) break;
    larger = std::move(smaller);
    smaller = std::move(remainder);
  }
  out.gcd = smaller;
  return out;
}

std::size_t default_max_steps(const Int& radicand) {
  Int budget = 10 * isqrt(abs(radicand)) * static_cast<unsigned long>(decimal_digits(radicand));
  if (budget < 64) return 64;
  if (!budget.fits_ulong_p() ||
      budget.get_ui() > std::numeric_limits<std::size_t>::max()) {
    return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(budget.get_ui());
}

bool logos_equal(const SurdElement& e_n, const SurdElement& e_n1, const SurdElement& e_m,
                 const SurdElement& e_m1) {
  // Compare the sqrt(N) components first: they are cheaper than the full
  // products and almost always differ.
  const Int left_m = e_n.m() * e_m1.n() + e_m1.m() * e_n.n();
  const Int right_m = e_m.m() * e_n1.n() + e_n1.m() * e_m.n();
  if (left_m != right_m) return false;
  return e_n * e_m1 == e_m * e_n1;
}

SurdRun::SurdRun(SurdElement larger, SurdElement smaller) {
  if (!(surd_sign(smaller) > 0 && surd_compare(larger, smaller) > 0)) {
    throw DomainError("surd run requires larger > smaller > 0, got (" + to_string(larger) +
                      ", " + to_string(smaller) + ")");
  }
  remainders_.push_back(std::move(larger));
  remainders_.push_back(std::move(smaller));
}

SurdRun::SurdRun(const SurdContext& ctx) : SurdRun(SurdElement::a(ctx), SurdElement::b(ctx)) {}

bool SurdRun::advance() {
  if (terminated_) return false;
  const std::size_t size = remainders_.size();
  auto step = anth_step(remainders_[size - 2], remainders_[size - 1]);
  quotients_.push_back(std::move(step.quotient));
  terminated_ = step.remainder.is_zero();
  remainders_.push_back(std::move(step.remainder));
  return true;
}

const SurdElement& SurdRun::remainder(long k) const {
  if (k < -1 || k > static_cast<long>(steps())) {
    throw RangeError("remainder e_" + std::to_string(k) + " not computed (steps=" +
                     std::to_string(steps()) + ")");
  }
  return remainders_[static_cast<std::size_t>(k + 1)];
}

std::optional<LogosWitness> SurdRun::latest_logos() const {
  if (steps() < 2 || terminated_) return std::nullopt;
  const std::size_t k = steps() - 1;
  const SurdElement& e_k = remainders_[k + 1];
  const SurdElement& e_k1 = remainders_[k + 2];
  for (std::size_t n = 0; n < k; ++n) {
    const SurdElement& e_n = remainders_[n + 1];
    const SurdElement& e_n1 = remainders_[n + 2];
    if (logos_equal(e_n, e_n1, e_k, e_k1)) {
      return LogosWitness{n, k, e_n * e_k1, e_k * e_n1};
    }
  }
  return std::nullopt;
}

Expansion canonicalize(const std::vector<Int>& quotients, std::size_t period_start,
                       std::size_t period_length) {
  if (period_length == 0 || period_start + period_length > quotients.size()) {
    throw RangeError("canonicalize: period [" + std::to_string(period_start) + ", +" +
                     std::to_string(period_length) + ") outside " +
                     std::to_string(quotients.size()) + " quotients");
  }
  std::size_t start = period_start;
  while (start > 0 && quotients[start - 1] == quotients[start - 1 + period_length]) --start;

  std::size_t length = period_length;
  for (std::size_t d = 1; d < period_length; ++d) {
    if (period_length % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < period_length && repeats; ++i) {
      repeats = quotients[start + i] == quotients[start + i - d];
    }
    if (repeats) {
      length = d;
      break;
    }
  }

  Expansion e;
  e.initial.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
  e.period.emplace(quotients.begin() + static_cast<std::ptrdiff_t>(start),
                   quotients.begin() + static_cast<std::ptrdiff_t>(start + length));
  return e;
}

SurdTrace trace_surd_logos(SurdElement larger, SurdElement smaller, std::size_t max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be at least 1");
  SurdRun run(std::move(larger), std::move(smaller));
  while (run.steps() < max_steps) {
    run.advance();
    if (run.terminated()) {
      Expansion e;
      e.initial = run.quotients();
      e.terminated = true;
      return {std::move(run), std::move(e)};
    }
    if (auto witness = run.latest_logos()) {
      Expansion e = canonicalize(run.quotients(), witness->n + 1, witness->m - witness->n);
      e.witness = std::move(witness);
      return {std::move(run), std::move(e)};
    }
  }
  throw BudgetExceeded("no logos witness within " + std::to_string(max_steps) + " steps (N=" +
                           run.context().radicand().get_str() + ")",
                       run.quotients());
}

SurdTrace trace_surd_logos(const SurdContext& ctx, std::optional<std::size_t> max_steps) {
  return trace_surd_logos(SurdElement::a(ctx), SurdElement::b(ctx),
                          max_steps.value_or(default_max_steps(ctx.radicand())));
}

Expansion anth_surd_logos(const SurdContext& ctx, std::optional<std::size_t> max_steps) {
  return trace_surd_logos(ctx, max_steps).expansion;
}

Expansion anth_surd_logos(SurdElement larger, SurdElement smaller, std::size_t max_steps) {
  return trace_surd_logos(std::move(larger), std::move(smaller), max_steps).expansion;
}

namespace {

struct State {
  Int p;
  Int q;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    const std::size_t hp = mpz_get_ui(s.p.get_mpz_t()) ^ static_cast<std::size_t>(sgn(s.p) + 1);
    const std::size_t hq = mpz_get_ui(s.q.get_mpz_t()) ^ static_cast<std::size_t>(sgn(s.q) + 1);
    return hp * 0x9e3779b97f4a7c15ULL ^ (hq + (hp << 6) + (hp >> 2));
  }
};

}  // namespace

Expansion anth_surd_state(const Int& p, const Int& q, const Int& d,
                          std::optional<std::size_t> max_steps) {
  if (sgn(q) == 0) throw DomainError("anth_surd_state: Q must be nonzero");
  if (sgn(d) <= 0 || is_perfect_square(d)) {
    throw DomainError("anth_surd_state: D=" + d.get_str() + " must be a positive non-square");
  }

  State state{p, q};
  Int radicand = d;
  if (Int(radicand - p * p) % q != 0) {
    // (P + sqrt(D)) / Q == (P|Q| + sqrt(D Q^2)) / (Q |Q|)
    const Int scale = abs(q);
    state = State{p * scale, q * scale};
    radicand = d * q * q;
  }
  const Int root = isqrt(radicand);
  const std::size_t budget = max_steps.value_or(default_max_steps(radicand));
  if (budget < 1) throw DomainError("max_steps must be at least 1");

  std::unordered_map<State, std::size_t, StateHash> seen;
  std::vector<Int> quotients;
  while (true) {
    auto [it, inserted] = seen.emplace(state, quotients.size());
    if (!inserted) {
      return canonicalize(quotients, it->second, quotients.size() - it->second);
    }
    if (quotients.size() >= budget) {
      throw BudgetExceeded("no repeated state within " + std::to_string(budget) + " steps",
                           quotients);
    }

    // floor((P + sqrt(D)) / Q); sqrt(D) is irrational so the floor of the
    // numerator can stand in for it when Q > 0.
    Int quotient;
    Int numerator = state.p + root;
    if (sgn(state.q) > 0) {
      mpz_fdiv_q(quotient.get_mpz_t(), numerator.get_mpz_t(), state.q.get_mpz_t());
    } else {
      // (P + sqrt(D)) / Q = -(P + sqrt(D)) / |Q|; floor(-x) = -floor(x) - 1.
      Int magnitude = -state.q;
      mpz_fdiv_q(quotient.get_mpz_t(), numerator.get_mpz_t(), magnitude.get_mpz_t());
      quotient = -quotient - 1;
    }

    Int next_p = quotient * state.q - state.p;
    Int next_q = (radicand - next_p * next_p) / state.q;
    quotients.push_back(std::move(quotient));
    state = State{std::move(next_p), std::move(next_q)};
  }
}

Commensurability commensurability(const Int& a, const Int& b) {
  return Commensurable{anth_integers(a, b).gcd};
}

Commensurability commensurability(const SurdContext& ctx, std::optional<std::size_t> max_steps) {
  Expansion e = anth_surd_logos(ctx, max_steps);
  return Incommensurable{*e.witness};
}

}  // namespace anth
