#pragma once

#include <cstdint>
#include <vector>

#include "picspace/cycle_space.hpp"
#include "picspace/poly.hpp"

namespace picspace {

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

/// Exact determinant of a square slope matrix over the multilinear
/// ring, by row expansion memoized on the unused-column mask.
MultilinearPoly slope_determinant(const SlopeMatrix& m);

/// tau(G) for the subgraph (V(f), f): determinant of the slope matrix
/// over a breadth-first spanning tree rooted at the smallest vertex,
/// sign-normalized so the smallest monomial is positive.  Requires
/// (V(f), f) connected with |f| = 2|V(f)|-2; zero iff the subgraph is
/// not a pseudocircuit.
MultilinearPoly tree_polynomial(const Graph& g, EdgeSet f);
MultilinearPoly tree_polynomial(const Graph& g);

/// Monomial supports of tau are exactly the coupled spanning trees,
/// all coefficients are +-1, and complementary trees carry the sign
/// ratio (-1)^(|V|-1).
bool verify_tree_theorem(const Graph& g, EdgeSet f);
bool verify_tree_theorem(const Graph& g);

/// det M_T agrees up to global sign across spanning trees (all of
/// them, or a deterministic sample of 20 when there are more than
/// 1000).
bool tree_choice_independence(const Graph& g, EdgeSet f);
bool tree_choice_independence(const Graph& g);

/// Does d divide p?  Exact when the cofactor's variables are disjoint
/// from d's; otherwise a randomized check on random lines over F_p
/// (one-sided: a true divisor never fails).
bool divides(const MultilinearPoly& d, const MultilinearPoly& p,
             std::uint64_t prime = kDefaultPrime, int trials = 16);

struct IdealGenerators {
    std::vector<std::pair<EdgeSet, MultilinearPoly>> generators;
};

/// One (C, tau(C)) pair per rigidity circuit subgraph of g.
IdealGenerators ideal_generators(const Graph& g, int max_edges = 24);

}  // namespace picspace
