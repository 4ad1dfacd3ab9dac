#include "anth/surd.hpp"

#include <utility>
#include <vector>

#include "anth/errors.hpp"

namespace anth {

namespace {

void require_same_context(const SurdElement& x, const SurdElement& y, const char* op) {
  if (!(x.context() == y.context())) {
    throw DomainError(std::string(op) + ": operands belong to different contexts (N=" +
                      x.context().radicand().get_str() + " vs N=" +
                      y.context().radicand().get_str() + ")");
  }
}

// sign(A*sqrt(N) + B) without materializing a SurdElement.
int sign_of(const Int& a, const Int& b, const Int& radicand) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: the larger of a^2 N and b^2 decides. They are never equal
  // because N is not a square.
  const Int lhs = a * a * radicand;
  const Int rhs = b * b;
  const int surd_wins = cmp(lhs, rhs) > 0 ? 1 : -1;
  return sa > 0 ? surd_wins : -surd_wins;
}

}  // namespace

SurdContext::SurdContext(const Int& radicand) {
  if (radicand < 2) {
    throw DomainError("surd context requires N >= 2, got " + radicand.get_str());
  }
  Int root = isqrt(radicand);
  if (root * root == radicand) {
    throw DomainError("N=" + radicand.get_str() + " is a perfect square (" +
                      root.get_str() + "^2); the pair is commensurable");
  }
  data_ = std::make_shared<const Data>(Data{radicand, std::move(root)});
}

SurdElement operator+(const SurdElement& x, const SurdElement& y) {
  require_same_context(x, y, "surd_add");
  return {x.ctx_, x.m_ + y.m_, x.n_ + y.n_};
}

SurdElement operator-(const SurdElement& x, const SurdElement& y) {
  require_same_context(x, y, "surd_sub");
  return {x.ctx_, x.m_ - y.m_, x.n_ - y.n_};
}

SurdElement operator*(const SurdElement& x, const SurdElement& y) {
  require_same_context(x, y, "surd_mul");
  const Int& radicand = x.ctx_.radicand();
  Int m = x.m_ * y.n_ + y.m_ * x.n_;
  Int n = x.m_ * y.m_ * radicand + x.n_ * y.n_;
  return {x.ctx_, std::move(m), std::move(n)};
}

SurdElement operator*(const Int& k, const SurdElement& x) {
  return {x.ctx_, k * x.m_, k * x.n_};
}

SurdElement surd_add(const SurdElement& x, const SurdElement& y) { return x + y; }
SurdElement surd_sub(const SurdElement& x, const SurdElement& y) { return x - y; }
SurdElement surd_scale(const SurdElement& x, const Int& k) { return k * x; }
SurdElement surd_mul(const SurdElement& x, const SurdElement& y) { return x * y; }

int surd_sign(const SurdElement& x) {
  return sign_of(x.m(), x.n(), x.context().radicand());
}

int surd_compare(const SurdElement& x, const SurdElement& y) {
  require_same_context(x, y, "surd_compare");
  return sign_of(x.m() - y.m(), x.n() - y.n(), x.context().radicand());
}

Int surd_floor_div(const SurdElement& x, const SurdElement& y) {
  require_same_context(x, y, "surd_floor_div");
  if (surd_sign(x) <= 0 || surd_sign(y) <= 0) {
    throw DomainError("surd_floor_div: operands must be strictly positive (x=" +
                      to_string(x) + ", y=" + to_string(y) + ")");
  }
  const Int& radicand = x.context().radicand();

  // x * conj(y) = A sqrt(N) + B,  y * conj(y) = d.
  Int a = x.m() * y.n() - x.n() * y.m();
  Int b = x.n() * y.n() - x.m() * y.m() * radicand;
  Int d = y.n() * y.n() - y.m() * y.m() * radicand;
  if (sgn(d) < 0) {
    a = -a;
    b = -b;
    d = -d;
  }

  // floor(A sqrt(N)); A^2 N is never a square for A != 0.
  Int surd_floor;
  if (sgn(a) >= 0) {
    surd_floor = isqrt(a * a * radicand);
  } else {
    surd_floor = -isqrt(a * a * radicand) - 1;
  }

  // floor((t + B) / d) = floor((floor(t) + B) / d) for d > 0.
  Int numerator = surd_floor + b;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string to_string(const SurdElement& x) {
  struct Term {
    Int coeff;
    const char* symbol;
  };
  std::vector<Term> terms;
  if (sgn(x.m()) != 0) terms.push_back({x.m(), "a"});
  if (sgn(x.n()) != 0) terms.push_back({x.n(), "b"});
  if (terms.empty()) return "0";
  if (terms.size() == 2 && sgn(terms[0].coeff) < 0 && sgn(terms[1].coeff) > 0) {
    std::swap(terms[0], terms[1]);
  }

  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool negative = sgn(terms[i].coeff) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Int magnitude = abs(terms[i].coeff);
    if (magnitude != 1) out += magnitude.get_str();
    out += terms[i].symbol;
  }
  return out;
}

}  // namespace anth
