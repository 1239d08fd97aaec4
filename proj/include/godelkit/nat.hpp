#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace godelkit {

// Arbitrary-precision natural number. All code values, numeral payloads and
// variable indices use this type; negative values are never constructed.
using Nat = mpz_class;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Nat nat_of(unsigned long v) { return Nat(v); }

inline Nat nat_from_string(const std::string& s, int base = 10) {
  Nat n;
  if (mpz_set_str(n.get_mpz_t(), s.c_str(), base) != 0 || n < 0)
    throw error("not a natural number: '" + s + "'");
  return n;
}

inline std::string nat_to_string(const Nat& n, int base = 10) {
  return n.get_str(base);
}

// Floor square root, exact integer arithmetic throughout.
inline Nat isqrt(const Nat& n) {
  if (n < 0) throw error("isqrt of negative value");
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool fits_u64(const Nat& n) { return n.fits_ulong_p(); }

inline std::uint64_t to_u64(const Nat& n) {
  if (!n.fits_ulong_p()) throw error("value does not fit in 64 bits");
  return n.get_ui();
}

// Solves a ≡ r_i (mod m_i) for pairwise coprime moduli.
inline Nat crt_solve(const std::vector<Nat>& residues, const std::vector<Nat>& moduli) {
  if (residues.size() != moduli.size()) throw error("crt: length mismatch");
  Nat a = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    // a' = a + m*t with t chosen so a' hits residues[i] mod moduli[i].
    Nat inv;
    if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), moduli[i].get_mpz_t()) == 0)
      throw error("crt: moduli not coprime");
    Nat t = ((residues[i] - a % moduli[i] + moduli[i]) * inv) % moduli[i];
    a += m * t;
    m *= moduli[i];
  }
  return a;
}

inline Nat factorial(const Nat& m) {
  if (!m.fits_ulong_p()) throw error("factorial argument too large");
  Nat r;
  mpz_fac_ui(r.get_mpz_t(), m.get_ui());
  return r;
}

}  // namespace godelkit
