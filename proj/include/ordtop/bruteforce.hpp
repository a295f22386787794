#pragma once

#include "ordtop/qpm.hpp"
#include "ordtop/sets.hpp"
#include "ordtop/space.hpp"

// Independent reference implementations used to cross-check the fast
// paths. Everything here works straight from the definitions by full
// enumeration; nothing is shared with the optimized routines beyond the
// basic set/relation plumbing.
namespace ordtop::bruteforce {

// Closure of the preorder graph in the product topology, by scanning
// all open boxes disjoint from the graph.
bool closed_preordered(const FiniteSpace& space);

// Definition-level convexity: for every open O and x in O some pair
// (U open decreasing, V open increasing) has x in U cap V inside O.
bool convex(const FiniteSpace& space);

// Disjoint (closed decreasing, closed increasing) pairs separate by
// disjoint monotone opens, scanning all candidate pairs.
bool normally_preordered(const FiniteSpace& space);

// Complete regularity via enumeration of all {0,1}-valued functions:
// keeps those that are continuous (preimages of the four opens of the
// discrete two-point space are open) and isotone (checked pairwise);
// then tests point separation and that their level sets generate the
// topology.
bool completely_regular(const FiniteSpace& space);

// The ball topology generated by balls over every distinct radius
// (all distinct positive values of the chosen side, plus one beyond the
// maximum), with no minimal-ball shortcut.
SetFamily ball_topology(const Qpm& p, Side side);

// Number of topologies on n labeled points by scanning every family of
// proper nonempty subsets for the topology axioms. n <= 4.
long count_topologies(int n);

}  // namespace ordtop::bruteforce
