#include "commands.hpp"

#include <exception>
#include <functional>
#include <sstream>

#include "anth/anth.hpp"

namespace anth::cli {

namespace {

std::string remainder_name(long k) {
  if (k == -1) return "a";
  if (k == 0) return "b";
  return "e" + std::to_string(k);
}

// Maps library exceptions onto exit codes; everything else propagates.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    std::string partial;
    for (const auto& q : e.partial_quotients()) partial += (partial.empty() ? "" : ",") + q.get_str();
    return {kBudget, "", std::string("error: ") + e.what() + "\npartial quotients: [" + partial + "]\n"};
  } catch (const DomainError& e) {
    return {kDomain, "", std::string("error: ") + e.what() + "\n"};
  } catch (const RangeError& e) {
    return {kDomain, "", std::string("error: ") + e.what() + "\n"};
  }
}

struct ExpandRun {
  SurdTrace trace;
  SurdRun run;  // trace.run advanced to the requested step count
  std::size_t steps;
};

ExpandRun run_expand(const std::string& n, std::optional<std::size_t> steps,
                     std::optional<std::size_t> max_steps) {
  const SurdContext ctx(parse_int(n));
  SurdTrace trace = trace_surd_logos(ctx, max_steps);
  const std::size_t wanted = steps.value_or(trace.expansion.witness->m + 1);
  if (wanted < 1) throw DomainError("--steps must be at least 1");
  SurdRun run = trace.run;
  while (run.steps() < wanted) run.advance();
  return {std::move(trace), std::move(run), wanted};
}

}  // namespace

OutputRecord build_record(const std::string& n, std::optional<std::size_t> steps,
                          std::optional<std::size_t> max_steps) {
  const ExpandRun r = run_expand(n, steps, max_steps);
  const Expansion& e = r.trace.expansion;

  OutputRecord record;
  record.n = r.run.context().radicand().get_str();
  for (const auto& q : e.initial) record.initial.push_back(q.get_str());
  for (const auto& q : *e.period) record.period.push_back(q.get_str());
  record.preperiod_length = std::to_string(e.preperiod_length());
  record.logos_witness = {std::to_string(e.witness->n), std::to_string(e.witness->m)};
  for (std::size_t k = 1; k <= r.steps; ++k) {
    const SurdElement& rem = r.run.remainder(static_cast<long>(k));
    record.remainders.emplace_back(rem.m().get_str(), rem.n().get_str());
  }
  for (const auto& c : convergents(r.run.quotients(), r.steps)) {
    record.convergents.emplace_back(c.p().get_str(), c.q().get_str());
  }
  return record;
}

CommandResult cmd_expand(const std::string& n, std::optional<std::size_t> steps, Format format,
                         std::optional<std::size_t> max_steps) {
  return guarded([&] {
    if (format == Format::kJson) {
      return CommandResult{kOk, serialize(build_record(n, steps, max_steps)) + "\n", ""};
    }
    const ExpandRun r = run_expand(n, steps, max_steps);
    const Expansion& e = r.trace.expansion;
    const LogosWitness& w = *e.witness;

    std::ostringstream out;
    out << "anthyphairesis of a to b, a^2 = " << r.run.context().radicand().get_str() << "b^2\n";
    for (std::size_t k = 0; k < r.steps; ++k) {
      const long idx = static_cast<long>(k);
      const Int& quotient = r.run.quotients()[k];
      out << remainder_name(idx - 1) << " = " << (quotient == 1 ? "" : quotient.get_str())
          << remainder_name(idx) << " + " << remainder_name(idx + 1) << "\n";
      out << remainder_name(idx + 1) << " = " << to_string(r.run.remainder(idx + 1)) << "\n";
    }
    const long n_idx = static_cast<long>(w.n);
    const long m_idx = static_cast<long>(w.m);
    out << "expansion: " << to_string(e) << "\n";
    out << "logos: " << remainder_name(n_idx) << "/" << remainder_name(n_idx + 1) << " = "
        << remainder_name(m_idx) << "/" << remainder_name(m_idx + 1) << "\n";
    out << "cross-products: " << remainder_name(n_idx) << "*" << remainder_name(m_idx + 1) << " = ("
        << w.left.m().get_str() << ", " << w.left.n().get_str() << "), " << remainder_name(m_idx)
        << "*" << remainder_name(n_idx + 1) << " = (" << w.right.m().get_str() << ", "
        << w.right.n().get_str() << ")\n";
    return CommandResult{kOk, out.str(), ""};
  });
}

CommandResult cmd_convergents(const std::string& n, std::size_t count,
                              std::optional<std::size_t> max_steps) {
  return guarded([&] {
    if (count < 1) return CommandResult{kUsage, "", "error: --count must be at least 1\n"};
    const Int radicand = parse_int(n);
    const Expansion e = anth_surd_logos(SurdContext(radicand), max_steps);
    std::ostringstream out;
    std::size_t k = 0;
    for (const auto& c : convergents(e, count)) {
      out << k++ << ": " << to_string(c) << " residue " << pell_residue(radicand, c).get_str()
          << "\n";
    }
    return CommandResult{kOk, out.str(), ""};
  });
}

CommandResult cmd_palindrome(long long max_n, unsigned workers) {
  if (max_n < 2) return {kUsage, "", "error: --max-n must be at least 2\n"};
  return guarded([&] {
    const auto reports = palindrome_sweep(static_cast<unsigned long>(max_n), workers);
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto& r : reports) {
      if (r.holds) continue;
      ++failures;
      out << r.n.get_str() << ": inner palindrome " << (r.inner_palindrome ? "yes" : "no")
          << ", last = 2*I0 " << (r.last_is_double ? "yes" : "no") << "\n";
    }
    out << "checked " << reports.size() << " non-squares, ";
    if (failures == 0) {
      out << "all hold\n";
    } else {
      out << failures << " fail\n";
    }
    return CommandResult{failures == 0 ? kOk : kChecksFailed, out.str(), ""};
  });
}

CommandResult cmd_theodorus() {
  return guarded([] {
    std::ostringstream out;
    for (const auto& [n, e] : theodorus_batch()) {
      out << n << ": " << to_string(e) << " witness (" << e.witness->n << "," << e.witness->m
          << ")\n";
    }
    return CommandResult{kOk, out.str(), ""};
  });
}

CommandResult cmd_gcd(const std::string& a, const std::string& b) {
  return guarded([&] {
    const Int x = parse_int(a);
    const Int y = parse_int(b);
    const auto result = anth_integers(x, y);
    std::ostringstream out;
    out << "Anth(" << x.get_str() << "," << y.get_str() << ") = " << to_string(result.expansion)
        << "\n";
    out << "gcd " << result.gcd.get_str() << "\n";
    return CommandResult{kOk, out.str(), ""};
  });
}

}  // namespace anth::cli
