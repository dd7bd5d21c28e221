#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqloc/rational.hpp"

namespace eqloc {

// Monomial in abstract Chern classes, encoded as a decreasing partition:
// {2,1,1} stands for c2*c1^2.  The empty partition is the unit.
using ChernMonomial = std::vector<int>;

// Rational linear combination of Chern monomials.
using ChernPoly = std::map<ChernMonomial, Rational>;

int chern_weight(const ChernMonomial& m);

ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b, int max_weight, int max_part);

// Todd polynomials T_0..T_n of a rank-n bundle:  the weight-graded pieces of
// prod_i x_i/(1-e^{-x_i}) rewritten in elementary symmetric functions e_j -> c_j.
// Results are cached per n; the cache is safe for concurrent use.
const std::vector<ChernPoly>& todd_polynomials(int n);

std::string chern_poly_str(const ChernPoly& p);

} // namespace eqloc
