#include "anth/int.hpp"

#include <cctype>

#include "anth/errors.hpp"

namespace anth {

Int isqrt(const Int& n) {
  if (sgn(n) < 0) {
    throw DomainError("isqrt: negative argument " + n.get_str());
  }
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::size_t decimal_digits(const Int& n) {
  if (sgn(n) == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  return Int(abs(n)).get_str(10).size();
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw DomainError("not an integer: '" + text + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("not an integer: '" + text + "'");
    }
  }
  Int value(text[0] == '+' ? text.substr(1) : text, 10);
  return value;
}

}  // namespace anth
