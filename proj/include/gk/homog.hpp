#pragma once

#include <string>
#include <vector>

#include "gk/morphism.hpp"
#include "gk/rep.hpp"

namespace gk {

// A finite group with subgroups A, B such that every g factors uniquely as
// aL(g) bR(g) = bL(g) aR(g).
struct DoubleGroup {
  GPtr group;
  std::vector<std::size_t> a, b;
  std::vector<std::size_t> aL, bR, bL, aR;
  GPtr ga, gb;  // units A (resp. B)
};

// Throws CheckFailure with a witness element when A, B are not subgroups,
// intersect nontrivially, or do not cover the group.
DoubleGroup build_double(const GPtr& group, std::vector<std::size_t> a, std::vector<std::size_t> b);

// The transposed multiplication graph of G_B as a morphism G_A -> G_A × G_A.
Morphism comultiplication(const DoubleGroup& dg);
bool is_coassociative(const Morphism& comult);

// Ψ(x, y) = (x aL(y)^-1, bR(x aL(y)^-1) y) on pair index x * n + y.
std::vector<std::size_t> pentagon_map(const DoubleGroup& dg);

struct PentagonResult {
  bool bijective = false;
  std::size_t checked = 0, passed = 0;
  std::vector<std::size_t> first_failure;  // (x, y, z) if any
  bool ok() const { return bijective && passed == checked; }
};

// Ψ23 Ψ12 = Ψ12 Ψ13 Ψ23 on G³ (maps applied right to left). The parallel
// version splits on the first coordinate.
PentagonResult check_pentagon(const DoubleGroup& dg);
PentagonResult check_pentagon_serial(const DoubleGroup& dg);

// The permutation operator e_p -> e_Ψ(p) on l2(G × G) with counting measure.
Operator permutation_operator(const std::vector<std::size_t>& perm);

struct SubgroupoidInfo {
  GPtr sub;
  std::vector<std::size_t> subset;
  bool wide = false, vertical = false;
  bool inclusion_is_morphism = false, transpose_is_morphism = false;
};

// Throws CheckFailure when the subset is not closed.
SubgroupoidInfo classify_subgroupoid(const GPtr& parent, std::vector<std::size_t> subset);

// All wide subgroupoids, in lexicographic order of their subsets. Throws when
// the groupoid has more than max_elems elements.
std::vector<std::vector<std::size_t>> wide_subgroupoids(const Groupoid& g, std::size_t max_elems = 12);

struct Quotient {
  std::vector<std::size_t> class_of;         // element -> class index
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::string> names;            // "[x]" with x the smallest member
  Action action;
  Morphism h;
};

Quotient quotient(const GPtr& parent, const std::vector<std::size_t>& wide_subset);

// identity, the unit pair morphism, and quotients by all wide subgroupoids
// (the last only when the groupoid has at most max_elems elements); codomain
// Haar data uniform.
std::vector<Probe> builtin_probes(const GPtr& g, std::size_t max_elems = 12);

}  // namespace gk
