#pragma once

// Brute-force cross-checks. Everything here works from a GenericCode (or a
// grid) and shares no code with the invariants module.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/grid.hpp"

namespace legfront::oracles {

// Sparse Laurent polynomial in A with integer coefficients; never stores
// zero terms.
class BracketPolynomial {
 public:
  BracketPolynomial() = default;
  static BracketPolynomial monomial(std::int64_t coeff, int exponent);
  static BracketPolynomial one() { return monomial(1, 0); }

  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(int exponent) const;

  BracketPolynomial& operator+=(const BracketPolynomial& o);
  friend BracketPolynomial operator+(BracketPolynomial a,
                                     const BracketPolynomial& b) {
    return a += b;
  }
  friend BracketPolynomial operator*(const BracketPolynomial& a,
                                     const BracketPolynomial& b);
  friend bool operator==(const BracketPolynomial&,
                         const BracketPolynomial&) = default;

  // e.g. "-A^-5 + A^3 ..." in increasing exponent order; "0" when empty.
  std::string to_string() const;

 private:
  void add(int exponent, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

// Signed crossing count from the PD slots and over_in alone.
// Throws MalformedCode when over_in is not one of the over slots.
int oracle_writhe(const GenericCode& code);

// Half the signed count of crossings between components j and k.
int oracle_linking(const GenericCode& code, std::size_t j, std::size_t k);

// State sum over all 2^n smoothings, normalised by (-A^3)^(-writhe).
// Throws TooLarge above max_crossings.
BracketPolynomial kauffman_bracket(const GenericCode& code,
                                   std::size_t max_crossings = 12);

// Unnormalised <D>.
BracketPolynomial bracket_state_sum(const GenericCode& code,
                                    std::size_t max_crossings = 12);

// Code of a knot given as PD quadruples with edges labelled 1..2n
// consecutively along the orientation.
GenericCode knot_code_from_pd(const std::vector<std::array<int, 4>>& pd);

// Parses "PD[X[a,b,c,d], ...]" into a knot code (see knot_code_from_pd).
GenericCode parse_pd(const std::string& text);

// Code read straight off the grid picture: vertical edges cross over
// horizontal ones, vertical edges run X to O and horizontal ones O to X.
GenericCode grid_code(const GridDiagram& g);

}  // namespace legfront::oracles
