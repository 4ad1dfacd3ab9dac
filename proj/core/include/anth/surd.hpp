#pragma once

#include <memory>
#include <string>

#include "anth/int.hpp"

namespace anth {

/// The ring Z[sqrt(N)] for a fixed non-square N >= 2.
///
/// Two line segments a, b with a^2 = N b^2 are modelled by taking b as the
/// unit: a = sqrt(N), b = 1. Contexts are cheap to copy (shared, immutable).
class SurdContext {
 public:
  /// Throws DomainError unless N >= 2 and N is not a perfect square.
  explicit SurdContext(const Int& radicand);

  const Int& radicand() const noexcept { return data_->radicand; }
  /// isqrt(N), cached.
  const Int& root_floor() const noexcept { return data_->root_floor; }

  friend bool operator==(const SurdContext& x, const SurdContext& y) {
    return x.data_ == y.data_ || x.data_->radicand == y.data_->radicand;
  }

 private:
  struct Data {
    Int radicand;
    Int root_floor;
  };
  std::shared_ptr<const Data> data_;
};

/// The exact value m*a + n*b, i.e. m*sqrt(N) + n in units of b.
///
/// The representation is unique because sqrt(N) is irrational, so equality
/// is componentwise. Arithmetic between elements of different contexts
/// throws DomainError.
class SurdElement {
 public:
  SurdElement(SurdContext ctx, Int m, Int n)
      : ctx_(std::move(ctx)), m_(std::move(m)), n_(std::move(n)) {}

  /// The seed magnitudes: a = sqrt(N) and b = 1.
  static SurdElement a(const SurdContext& ctx) { return {ctx, 1, 0}; }
  static SurdElement b(const SurdContext& ctx) { return {ctx, 0, 1}; }

  const SurdContext& context() const noexcept { return ctx_; }
  /// Coefficient of a (the sqrt(N) part).
  const Int& m() const noexcept { return m_; }
  /// Coefficient of b (the rational part).
  const Int& n() const noexcept { return n_; }

  bool is_zero() const { return sgn(m_) == 0 && sgn(n_) == 0; }

  friend bool operator==(const SurdElement& x, const SurdElement& y) {
    return x.ctx_ == y.ctx_ && x.m_ == y.m_ && x.n_ == y.n_;
  }

  friend SurdElement operator+(const SurdElement& x, const SurdElement& y);
  friend SurdElement operator-(const SurdElement& x, const SurdElement& y);
  friend SurdElement operator*(const SurdElement& x, const SurdElement& y);
  friend SurdElement operator*(const Int& k, const SurdElement& x);
  SurdElement operator-() const { return {ctx_, -m_, -n_}; }

 private:
  SurdContext ctx_;
  Int m_;
  Int n_;
};

SurdElement surd_add(const SurdElement& x, const SurdElement& y);
SurdElement surd_sub(const SurdElement& x, const SurdElement& y);
SurdElement surd_scale(const SurdElement& x, const Int& k);
SurdElement surd_mul(const SurdElement& x, const SurdElement& y);

/// Exact sign of m*sqrt(N) + n: compares m^2 N against n^2 by cases on the
/// signs of m and n. Zero iff m = n = 0.
int surd_sign(const SurdElement& x);

/// Three-way exact comparison, -1/0/+1.
int surd_compare(const SurdElement& x, const SurdElement& y);

/// floor(x / y) for strictly positive x, y.
///
/// x/y is rationalized by the conjugate of y to (A sqrt(N) + B) / d, the
/// sign of d is normalized, and the floor is taken with one isqrt. Throws
/// DomainError if either operand is not strictly positive.
Int surd_floor_div(const SurdElement& x, const SurdElement& y);

/// Renders as in "326a - 1421b" or "9b - 2a" (positive term first).
std::string to_string(const SurdElement& x);

}  // namespace anth
