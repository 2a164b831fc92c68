#pragma once

#include <gmpxx.h>

#include <string>

namespace crystalq {

// Exact coefficient field. mpq_class keeps fractions canonical
// (lowest terms, positive denominator) on every operation.
using BigInt = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_from_string(const std::string& s);

// "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Integer power, negative exponents allowed for nonzero base.
Rat rat_pow(const Rat& base, long e);

BigInt factorial(long n);

}  // namespace crystalq
