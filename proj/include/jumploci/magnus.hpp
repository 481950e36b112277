#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/numtypes.hpp"
#include "jumploci/presentation.hpp"
#include "jumploci/subspace.hpp"
#include "jumploci/word.hpp"

namespace jumploci {

// Group-ring image in Z<<X_1..X_n>> truncated past degree 2:
// c + sum lin[i] X_i + sum quad[i][j] X_i X_j.
struct MagnusSeries {
  Z c;
  std::vector<Z> lin;
  std::vector<std::vector<Z>> quad;
};

MagnusSeries magnus_one(int n);
MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);
// (1 + X_g)^k, k any integer (binomial coefficients; C(k,2) for the square).
MagnusSeries magnus_gen_pow(int n, int gen, int k);
MagnusSeries magnus_word(const Word& w, int n);

// Basis e_p^e_q of wedge^2, p < q, ordered (0,1),(0,2),..,(1,2),..
int pair_count(int n);
int pair_index(int n, int p, int q);

// Degree-2 class of a commutator relator; empty when some exponent sum is
// nonzero (the class is only defined for words of zero abelianization).
std::optional<std::vector<Q>> magnus_quadratic(const Word& w, int n_gens);

// n = dim H^1 plus the relation classes spanning im of the dual cup map,
// held in canonical form: reduced row echelon, rows scaled to coprime
// integers with positive leading entry, zero rows dropped.
struct CupStructure {
  int n = 0;
  QMat classes;  // each row has C(n,2) coordinates
};

CupStructure make_cup(int n, QMat raw_classes);
CupStructure cup_structure(const GroupPresentation& p);  // throws unsupported_presentation
bool cup_equal(const CupStructure& a, const CupStructure& b);

// File format: "h1 <n>" then one line per class,
// "class <c> on <p> <q> [<c> on <p> <q> ...]" with 1-based p < q and
// rational coefficients written as num or num/den.
CupStructure parse_cup_file(const std::string& text);
std::string cup_file_str(const CupStructure& c);

}  // namespace jumploci
