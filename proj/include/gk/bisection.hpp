#pragma once

#include <vector>

#include "gk/groupoid.hpp"

namespace gk {

// Subsets are ascending element-index lists.
using Bisection = std::vector<std::size_t>;

// eL and eR restricted to b are both bijections onto the units.
bool is_bisection(const Groupoid& g, const std::vector<std::size_t>& b);
// The product form: b s(b) = s(b) b = units.
bool is_bisection_by_products(const Groupoid& g, const std::vector<std::size_t>& b);

// All bisections, in lexicographic order of their sorted element lists.
// Throws CheckFailure when the groupoid has more than max_units units.
std::vector<Bisection> enumerate_bisections(const Groupoid& g, std::size_t max_units = 8);

// Elementwise products and inverses; both throw on non-bisection input.
Bisection bis_product(const Groupoid& g, const Bisection& b, const Bisection& c);
Bisection bis_inverse(const Groupoid& g, const Bisection& b);
Bisection unit_bisection(const Groupoid& g);

// B x = x1 x with x1 the element of B ending at eL(x); x B = x x1 with x1
// starting at eR(x).
std::size_t act_left(const Groupoid& g, const Bisection& b, std::size_t x);
std::size_t act_right(const Groupoid& g, std::size_t x, const Bisection& b);

// Permutation of the elements induced by act_left.
std::vector<std::size_t> left_permutation(const Groupoid& g, const Bisection& b);

std::string bisection_str(const Groupoid& g, const Bisection& b);

}  // namespace gk
