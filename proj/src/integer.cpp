#include "mukai/integer.hpp"

#include "mukai/error.hpp"

namespace mukai {

GcdResult extended_gcd(const Int& a, const Int& b) {
  GcdResult out;
  mpz_gcdext(out.gcd.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

Int gcd_all(std::span<const Int> values) {
  Int g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (m == 1) return 0;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorKind::NotCoprime,
                to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod_floor(inv, m);
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
Int ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

std::string to_string(const Int& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Int parse_int(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::Parse, "bad integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::Parse, "bad integer literal '" + text + "'");
    }
  }
  Int out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

long to_long(const Int& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorKind::InvalidArgument, "value " + to_string(value) + " is out of range");
  }
  return value.get_si();
}

}  // namespace mukai
