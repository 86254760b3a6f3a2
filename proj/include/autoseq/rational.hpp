#pragma once

#include <gmpxx.h>

#include <string>

namespace autoseq {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline double rat_double(const Rat& q) { return q.get_d(); }

// gmpxx has no long long constructor; GNU/Linux long is wide enough.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

// Exact conversion of decimal literals such as "0.06" or "-3.5e-2".
Rat rat_from_decimal(const std::string& text);

}  // namespace autoseq
