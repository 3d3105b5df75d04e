#include "edgeposet/figures.hpp"

namespace edgeposet::figures {

GradedPoset fig1() {
  return GradedPoset::build({0, 1, 1, 2, 2, 3, 3, 4},
                            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}});
}

GradedPoset fig1_edges_drawn() {
  return GradedPoset::build(
      {0, 0, 1, 1, 1, 2, 2, 3, 3},
      {{0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {0, 3}, {1, 2}},
      {"(0,1)", "(0,2)", "(1,3)", "(2,3)", "(2,4)", "(3,5)", "(4,6)", "(5,7)", "(6,7)"});
}

GradedPoset fig2() {
  return GradedPoset::build({0, 0, 1, 1, 2, 2, 3, 3},
                            {{0, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}, {5, 7}});
}

GradedPoset diamond() { return GradedPoset::build({0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

PosetMorphism diamond_onto_chain() { return PosetMorphism::make(diamond(), chain(3), {0, 1, 1, 2}); }

GradedPoset non_sperner() { return GradedPoset::build({0, 0, 1, 2, 2}, {{0, 2}, {2, 3}, {2, 4}}); }

RootedTree fig4_tree() {
  return RootedTree(GradedPoset::build(
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3},
      {{0, 8}, {1, 8}, {2, 9}, {3, 9}, {4, 10}, {5, 10}, {6, 11}, {7, 11},
       {8, 12}, {9, 12}, {10, 13}, {11, 13}, {12, 14}, {13, 14}}));
}

RootedTree fig5_tree() {
  return RootedTree(GradedPoset::build(
      {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 2, 3},
      {{0, 12}, {1, 12}, {2, 13}, {3, 13}, {4, 10}, {5, 10}, {6, 10}, {7, 11},
       {8, 11}, {9, 11}, {10, 14}, {11, 14}, {12, 15}, {13, 15}, {14, 15}}));
}

}  // namespace edgeposet::figures
