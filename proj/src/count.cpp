#include "parking/count.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parking {

Count::Count(const SignedCount& v) : value_(v) {
  if (sgn(value_) < 0) throw std::domain_error("Count: negative value " + v.get_str());
}

Count::Count(SignedCount&& v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::domain_error("Count: negative value " + value_.get_str());
}

Count Count::from_string(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("Count: empty string");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Count: not a decimal digit string: " + std::string(decimal));
    }
  }
  return Count(SignedCount(std::string(decimal), 10));
}

std::size_t Count::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Count& Count::operator-=(const Count& o) {
  if (cmp(value_, o.value_) < 0) {
    throw std::domain_error("Count: subtraction would go negative");
  }
  value_ -= o.value_;
  return *this;
}

SignedCount ipow(const SignedCount& base, unsigned long exp) {
  SignedCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Count ipow(std::uint64_t base, std::uint64_t exp) {
  SignedCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return Count(std::move(r));
}

double ratio_to_double(const SignedCount& num, const SignedCount& den) {
  if (sgn(den) <= 0) throw std::domain_error("ratio_to_double: denominator must be positive");
  if (sgn(num) == 0) return 0.0;

  // Quotient with at least 128 significant bits plus a sticky bit, then
  // round-to-nearest-even to the precision available at its exponent.
  constexpr long kWindow = 128;
  SignedCount a = abs(num);
  SignedCount b = den;
  const long shift = kWindow + static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  if (shift >= 0) {
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(shift));
  } else {
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  SignedCount q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const bool sticky = sgn(rem) != 0;

  const long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  const long top = bits - 1 - shift;  // exponent of the leading bit
  double r;
  if (top > 1023) {
    r = HUGE_VAL;
  } else {
    const long precision = top >= -1022 ? 53 : 53 - (-1022 - top);
    if (precision < 0) {
      r = 0.0;
    } else if (precision == 0) {
      // Between half and one of the smallest subnormal.
      const bool tie = !sticky && mpz_scan1(q.get_mpz_t(), 0) == static_cast<mp_bitcnt_t>(bits - 1);
      r = tie ? 0.0 : std::numeric_limits<double>::denorm_min();
    } else {
      const auto drop = static_cast<unsigned long>(bits - precision);
      SignedCount mant, low;
      mpz_fdiv_q_2exp(mant.get_mpz_t(), q.get_mpz_t(), drop);
      mpz_fdiv_r_2exp(low.get_mpz_t(), q.get_mpz_t(), drop);
      SignedCount half;
      mpz_setbit(half.get_mpz_t(), drop - 1);
      const int c = cmp(low, half);
      if (c > 0 || (c == 0 && (sticky || mpz_odd_p(mant.get_mpz_t())))) ++mant;
      r = std::ldexp(mant.get_d(), static_cast<int>(static_cast<long>(drop) - shift));
    }
  }
  return sgn(num) < 0 ? -r : r;
}

}  // namespace parking
