#include "edgeposet/edge.hpp"

#include <algorithm>
#include <tuple>

#include "edgeposet/error.hpp"

namespace edgeposet {

namespace {

std::uint64_t edge_key(Element low, Element high) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(low)) << 32) |
         static_cast<std::uint32_t>(high);
}

// One pass for both E and H: the H covers are the E covers minus those with x' == y.
EdgePoset build_edges(const GradedPoset& p, bool h_variant) {
  std::vector<EdgeElement> edges;
  edges.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) edges.push_back({x, y});
  std::sort(edges.begin(), edges.end(), [&](const EdgeElement& a, const EdgeElement& b) {
    return std::make_tuple(p.rank_of(a.low), a.low, a.high) <
           std::make_tuple(p.rank_of(b.low), b.low, b.high);
  });

  std::unordered_map<std::uint64_t, Element> index;
  index.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    index.emplace(edge_key(edges[e].low, edges[e].high), static_cast<Element>(e));

  std::vector<int> ranks(edges.size());
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    ranks[e] = p.rank_of(x);
    labels.push_back("(" + p.label(x) + "," + p.label(y) + ")");
    for (Element x2 : p.upper_covers(x)) {
      if (h_variant && x2 == y) continue;
      for (Element y2 : p.upper_covers(y)) {
        auto it = index.find(edge_key(x2, y2));
        if (it != index.end()) covers.emplace_back(static_cast<Element>(e), it->second);
      }
    }
  }
  return EdgePoset(p, GradedPoset::build(std::move(ranks), std::move(covers), std::move(labels)),
                   std::move(edges));
}

}  // namespace

EdgePoset::EdgePoset(GradedPoset source, GradedPoset poset, std::vector<EdgeElement> edges)
    : source_(std::move(source)), poset_(std::move(poset)), edges_(std::move(edges)) {
  index_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    index_.emplace(edge_key(edges_[e].low, edges_[e].high), static_cast<Element>(e));
}

Element EdgePoset::index_of(Element low, Element high) const {
  auto it = index_.find(edge_key(low, high));
  return it == index_.end() ? -1 : it->second;
}

EdgePoset edge_poset(const GradedPoset& p) { return build_edges(p, false); }
EdgePoset h_poset(const GradedPoset& p) { return build_edges(p, true); }

PosetMorphism edge_map(const PosetMorphism& f, const EdgePoset& source_edges,
                       const EdgePoset& target_edges) {
  std::vector<Element> image(source_edges.edges().size());
  for (std::size_t e = 0; e < image.size(); ++e) {
    const auto [x, y] = source_edges.edges()[e];
    const Element mapped = target_edges.index_of(f(x), f(y));
    if (mapped < 0)
      throw Error(ErrorKind::ImageNotCover, "edge (" + std::to_string(x) + "," +
                                                std::to_string(y) + ") maps to a non-cover");
    image[e] = mapped;
  }
  return PosetMorphism::make(source_edges.poset(), target_edges.poset(), std::move(image));
}

PosetMorphism edge_map(const PosetMorphism& f) {
  return edge_map(f, edge_poset(f.source), edge_poset(f.target));
}

bool naive_edge_relation_is_graded(const GradedPoset& p) {
  const EdgePoset e = edge_poset(p);
  const std::size_t m = e.edges().size();
  std::vector<char> less(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const auto& ea = e.edges()[a];
      const auto& eb = e.edges()[b];
      less[a * m + b] = p.leq(ea.low, eb.low) && p.leq(ea.high, eb.high);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!less[a * m + b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c)
        if (less[a * m + c] && less[c * m + b]) covered = false;
      if (covered && e.poset().rank_of(static_cast<Element>(b)) !=
                         e.poset().rank_of(static_cast<Element>(a)) + 1)
        return false;
    }
  return true;
}

PosetMorphism h_to_e_bijection(const EdgePoset& h, const EdgePoset& e) {
  if (h.edges() != e.edges())
    throw Error(ErrorKind::InvalidMorphism, "H and E element tables differ");
  return PosetMorphism::make(h.poset(), e.poset(), PosetMorphism::identity(h.poset()).image_of);
}

PosetMorphism h_to_e_bijection(const GradedPoset& p) {
  return h_to_e_bijection(h_poset(p), edge_poset(p));
}

HDecomposition h_bn_decomposition(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "h_bn_decomposition needs n >= 1");
  if (n > kBooleanCap) throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n));
  HDecomposition out;
  out.n = n;
  out.h = h_poset(boolean_algebra(n));
  out.copies = disjoint_copies(boolean_algebra(n - 1), n);
  const Element block = Element{1} << (n - 1);
  out.witness.resize(out.h.edges().size());
  for (std::size_t e = 0; e < out.witness.size(); ++e) {
    const auto [x, y] = out.h.edges()[e];
    const int i = __builtin_ctz(static_cast<unsigned>(x ^ y));
    const Element low_bits = x & ((Element{1} << i) - 1);
    const Element compact = low_bits | ((x >> (i + 1)) << i);
    out.witness[e] = i * block + compact;
  }
  out.verified = verify_isomorphism(out.h.poset(), out.copies, out.witness);
  return out;
}

std::vector<Element> edge_dual_witness(const EdgePoset& edges_of_dual, const EdgePoset& edges) {
  std::vector<Element> map(edges_of_dual.edges().size());
  for (std::size_t e = 0; e < map.size(); ++e) {
    const auto [low, high] = edges_of_dual.edges()[e];
    map[e] = edges.index_of(high, low);
  }
  return map;
}

}  // namespace edgeposet
