#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ews {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// q^e for integer e (negative exponents require q != 0).
inline Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  Rat base = q;
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    base = Rat(1) / base;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace ews
