#pragma once

#include <gmpxx.h>
#include <string>

namespace jumploci {

using Q = mpq_class;
using Z = mpz_class;

// Parses "n" or "n/d" with optional sign. Throws input errors via parse_error.
Q parse_rational(const std::string& s);

std::string q_str(const Q& q);
std::string z_str(const Z& z);

}  // namespace jumploci
