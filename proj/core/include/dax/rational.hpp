// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <string>

namespace dax {

// Exact arbitrary-precision rational. All certificate arithmetic runs on
// this type; no floating point enters any certified computation.
using Rat = mpq_class;

// Parses "7", "-3/4" or a plain decimal like "0.0052" (= 13/2500) exactly.
// Scientific notation is rejected.
Rat rat_parse(const std::string &text);

// Canonical form: "n" for integers, "n/d" otherwise (d > 0, gcd(n,d)=1).
std::string rat_str(const Rat &r);

inline Rat rat_abs(const Rat &r) { return r < 0 ? Rat(-r) : r; }
inline const Rat &rat_min(const Rat &a, const Rat &b) { return a < b ? a : b; }
inline const Rat &rat_max(const Rat &a, const Rat &b) { return a < b ? b : a; }

Rat rat_pow(const Rat &base, unsigned long exp);

// Crude double rendering for diagnostics only.
double rat_to_double(const Rat &r);

} // namespace dax
