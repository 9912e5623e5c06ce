#pragma once

#include "mahler/bigreal/real_constant.hpp"

#include <gmpxx.h>

#include <vector>

namespace mahler {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

/// Partial quotients a_0, a_1, ... of a rational, exactly.
std::vector<mpz_class> cf_quotients(const mpq_class& x);

/// First n certified partial quotients of c. For a rational constant the
/// list stops early at the end of its finite expansion.
std::vector<mpz_class> cf_quotients(const RealConstant& c, std::size_t n);

/// First n convergents p_k/q_k (lowest terms). Truncated for rationals
/// whose expansion is shorter than n. Throws PrecisionExhausted when the
/// cap is reached before n quotients are certified.
std::vector<Convergent> cf_convergents(const RealConstant& c, std::size_t n);

/// Convergents of an explicit quotient list.
std::vector<Convergent> convergents_from_quotients(const std::vector<mpz_class>& a);

}  // namespace mahler
