#pragma once

#include <string>
#include <vector>

namespace jumploci {

// Exponent vector. Entries are nonnegative in the polynomial ring; Laurent
// shifts reuse the same type with negative entries allowed.
using Mono = std::vector<int>;

enum class Order { grevlex, lex };

Mono mono_one(int n);
int mono_deg(const Mono& a);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires a | b
Mono mono_lcm(const Mono& a, const Mono& b);
Mono mono_gcd(const Mono& a, const Mono& b);
bool mono_is_one(const Mono& a);
bool mono_coprime(const Mono& a, const Mono& b);

// Positive if a > b in the given order, negative if a < b, zero if equal.
int mono_cmp(Order ord, const Mono& a, const Mono& b);

}  // namespace jumploci
