#pragma once

// Exact scalar types for the whole engine. All arithmetic is rational and
// exact; floating point never appears in any computation or report.
//
// Rat is GMP's canonical rational (mpq_class). GMP keeps results of
// arithmetic canonical as long as the operands are canonical, so every
// construction path below normalizes (lowest terms, positive denominator).

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace picard {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den, canonicalized. Throws on zero denominator.
inline Rat ratio(const Int& num, const Int& den = 1) {
  if (den == 0) throw Error("ratio: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat ratio(long num, long den = 1) { return ratio(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw Error("parse_rat: malformed rational '" + text + "'");
  if (q.get_den() == 0) throw Error("parse_rat: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline Int parse_int(const std::string& text) {
  Int n;
  if (n.set_str(text, 10) != 0) throw Error("parse_int: malformed integer '" + text + "'");
  return n;
}

}  // namespace picard

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
