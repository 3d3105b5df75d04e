#pragma once

#include "edgeposet/perm.hpp"
#include "edgeposet/poset.hpp"

namespace edgeposet::figures {

/// Eight elements 0..7 whose edge poset is not graded under the componentwise order.
GradedPoset fig1();

/// The edge poset of fig1() as drawn: nine elements labelled "(low,high)".
GradedPoset fig1_edges_drawn();

/// Self-dual, unitary Peck, with edge poset ranks (3,2,3).
GradedPoset fig2();

/// 0 < 1, 2 < 3.
GradedPoset diamond();

/// diamond() onto chain(3): 0 -> 0, 1 and 2 -> 1, 3 -> 2.
PosetMorphism diamond_onto_chain();

/// Ranks (2,1,2): 0 and 1 at the bottom, 2 covers 0, 3 and 4 cover 2. The
/// antichain {1, 3, 4} beats every rank.
GradedPoset non_sperner();

/// Binary tree with eight leaves 0..7 under 8..11, 12 and 13, root 14.
RootedTree fig4_tree();

/// Ten leaves: 0,1 under 12; 2,3 under 13; 4,5,6 under 10; 7,8,9 under 11;
/// 10 and 11 under 14; root 15 above 12, 13, 14.
RootedTree fig5_tree();

}  // namespace edgeposet::figures
