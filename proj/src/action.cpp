#include "edgeposet/action.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "edgeposet/error.hpp"

namespace edgeposet {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Element x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// m2 after m1.
std::vector<Element> compose_maps(const std::vector<Element>& m2, const std::vector<Element>& m1) {
  std::vector<Element> out(m1.size());
  for (std::size_t x = 0; x < m1.size(); ++x) out[x] = m2[m1[x]];
  return out;
}

bool is_automorphism(const GradedPoset& p, const std::vector<Element>& map) {
  return verify_isomorphism(p, p, map);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a < b) std::swap(a, b);
    if (a != b) parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

// The direct common-cover check on `p` (P itself or its dual, which share maps).
std::optional<CctTriple> find_cct_violation(const GradedPoset& p, const std::vector<int>& orbit,
                                            const std::vector<std::vector<Element>>& image) {
  for (Element z = 0; z < static_cast<Element>(p.size()); ++z) {
    const auto below = p.lower_covers(z);
    bool shared = false;
    for (std::size_t a = 0; a < below.size() && !shared; ++a)
      for (std::size_t b = a + 1; b < below.size() && !shared; ++b)
        shared = orbit[below[a]] == orbit[below[b]];
    if (!shared) continue;

    std::unordered_map<Element, std::size_t> slot;
    for (std::size_t a = 0; a < below.size(); ++a) slot.emplace(below[a], a);
    UnionFind uf(below.size());
    for (const auto& m : image) {
      if (m[z] != z) continue;
      for (std::size_t a = 0; a < below.size(); ++a) uf.unite(a, slot.at(m[below[a]]));
    }
    for (std::size_t a = 0; a < below.size(); ++a)
      for (std::size_t b = a + 1; b < below.size(); ++b)
        if (orbit[below[a]] == orbit[below[b]] && uf.find(a) != uf.find(b))
          return CctTriple{below[a], below[b], z};
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(CctMethod method) {
  switch (method) {
    case CctMethod::Direct: return "direct";
    case CctMethod::Dual: return "dual";
    case CctMethod::QBijective: return "q-bijective";
    case CctMethod::RankCounts: return "rank-counts";
  }
  return "unknown";
}

PosetAction PosetAction::make(PermGroup group, GradedPoset poset, std::vector<Permutation> generators,
                              std::vector<std::vector<Element>> maps) {
  if (generators.size() != maps.size())
    throw Error(ErrorKind::InvalidAction, "generator and map counts differ");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (generators[i].degree() != group.degree() || !group.contains(generators[i]))
      throw Error(ErrorKind::InvalidAction, "generator " + std::to_string(i) + " not in the group");
    if (maps[i].size() != poset.size() || !is_automorphism(poset, maps[i]))
      throw Error(ErrorKind::InvalidAction,
                  "generator " + std::to_string(i) + " is not a rank-preserving automorphism");
  }
  if (!maps.empty()) {
    // Two words that agree in the group must agree on the poset.
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    std::uniform_int_distribution<int> length(1, 8);
    std::unordered_map<Permutation, std::vector<Element>, PermutationHash> seen;
    for (int sample = 0; sample < 100; ++sample) {
      Permutation g = Permutation::identity(group.degree());
      std::vector<Element> m(poset.size());
      std::iota(m.begin(), m.end(), 0);
      for (int k = length(rng); k > 0; --k) {
        const std::size_t i = pick(rng);
        g = generators[i] * g;
        m = compose_maps(maps[i], m);
      }
      auto [it, inserted] = seen.try_emplace(g, m);
      if (!inserted && it->second != m)
        throw Error(ErrorKind::InvalidAction, "action is not compatible with group multiplication");
    }
  }
  return PosetAction{std::move(group), std::move(poset), std::move(generators), std::move(maps)};
}

std::vector<std::vector<Element>> action_image(const PosetAction& action, std::size_t cell_cap) {
  const std::size_t n = action.poset.size();
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<std::vector<Element>, VectorHash> seen{id};
  std::vector<std::vector<Element>> out{id};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& m : action.maps) {
      auto next = compose_maps(m, out[head]);
      if (seen.insert(next).second) {
        if ((out.size() + 1) * std::max<std::size_t>(n, 1) > cell_cap)
          throw Error(ErrorKind::GroupTooLarge, "action image too large to enumerate");
        out.push_back(std::move(next));
      }
    }
  return out;
}

std::vector<int> orbit_ids(const PosetAction& action) {
  const std::size_t n = action.poset.size();
  UnionFind uf(n);
  for (const auto& m : action.maps)
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, static_cast<std::size_t>(m[x]));
  // Roots are the least elements, so scanning in order numbers orbits by representative.
  std::vector<int> id(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = uf.find(x);
    if (id[root] < 0) id[root] = next++;
    id[x] = id[root];
  }
  return id;
}

PosetAction induced_bn_action(const PermGroup& group) {
  const int n = group.degree();
  if (n > kBooleanCap) throw Error(ErrorKind::TooLarge, "B_" + std::to_string(n));
  GradedPoset bn = boolean_algebra(n);
  std::vector<std::vector<Element>> maps;
  for (const auto& g : group.generators()) {
    std::vector<Element> m(bn.size());
    for (std::size_t x = 0; x < m.size(); ++x)
      m[x] = static_cast<Element>(g.apply(static_cast<std::uint32_t>(x)));
    maps.push_back(std::move(m));
  }
  return PosetAction::make(group, std::move(bn), group.generators(), std::move(maps));
}

EdgeAction action_on_edges(const PosetAction& action, EdgeKind which) {
  EdgePoset edges = which == EdgeKind::E ? edge_poset(action.poset) : h_poset(action.poset);
  std::vector<std::vector<Element>> maps;
  for (const auto& m : action.maps) {
    std::vector<Element> em(edges.edges().size());
    for (std::size_t e = 0; e < em.size(); ++e) {
      const auto [x, y] = edges.edges()[e];
      em[e] = edges.index_of(m[x], m[y]);
      if (em[e] < 0) throw Error(ErrorKind::InvalidAction, "edge image is not a cover");
    }
    maps.push_back(std::move(em));
  }
  PosetAction edge_action = PosetAction::make(action.group, edges.poset(), action.generators, std::move(maps));
  return EdgeAction{std::move(edges), std::move(edge_action)};
}

QuotientPoset quotient(const PosetAction& action) {
  const auto& p = action.poset;
  std::vector<int> orbit = orbit_ids(action);
  const int count = orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
  std::vector<Element> rep(static_cast<std::size_t>(count), -1);
  std::vector<std::size_t> size(static_cast<std::size_t>(count), 0);
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x) {
    if (rep[orbit[x]] < 0) rep[orbit[x]] = x;
    ++size[orbit[x]];
  }
  std::vector<int> ranks(static_cast<std::size_t>(count));
  for (int o = 0; o < count; ++o) ranks[o] = p.rank_of(rep[o]);
  std::set<Cover> covers;
  for (const auto& [x, y] : p.covers()) covers.emplace(orbit[x], orbit[y]);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int o = 0; o < count; ++o) labels.push_back("G" + p.label(rep[o]));
  GradedPoset qp = GradedPoset::build(std::move(ranks), {covers.begin(), covers.end()}, std::move(labels));
  return QuotientPoset{action, std::move(orbit), std::move(rep), std::move(size), std::move(qp)};
}

QMap q_map(const PosetAction& action) {
  QuotientPoset base = quotient(action);
  EdgePoset eq = edge_poset(base.poset);
  EdgeAction ea = action_on_edges(action, EdgeKind::E);
  QuotientPoset edge_quot = quotient(ea.action);
  std::vector<Element> image(edge_quot.representative.size());
  for (std::size_t o = 0; o < image.size(); ++o) {
    const auto [x, y] = ea.edges.edge(edge_quot.representative[o]);
    image[o] = eq.index_of(base.orbit_of[x], base.orbit_of[y]);
    if (image[o] < 0) throw Error(ErrorKind::ImageNotCover, "q image is not a cover of P/G");
  }
  PosetMorphism q = PosetMorphism::make(edge_quot.poset, eq.poset(), std::move(image));
  const bool bijective = q.is_bijective();
  const bool iso = bijective && q.is_isomorphism();
  return QMap{std::move(base), std::move(eq), std::move(ea), std::move(edge_quot), std::move(q),
              bijective, iso};
}

CctResult is_cct(const QMap& q, CctMethod method) {
  CctResult out;
  out.method = method;
  if (method == CctMethod::QBijective) {
    std::vector<Element> first(q.edges_of_quotient.poset().size(), -1);
    for (std::size_t o = 0; o < q.q.image_of.size(); ++o) {
      Element& slot = first[q.q.image_of[o]];
      if (slot >= 0) {
        out.cct = false;
        out.colliding_orbits = std::make_pair(slot, static_cast<Element>(o));
        return out;
      }
      slot = static_cast<Element>(o);
    }
    out.cct = q.q.is_surjective();
    return out;
  }
  if (method == CctMethod::RankCounts) {
    auto a = q.edge_quotient.poset.rank_vector();
    auto b = q.edges_of_quotient.poset().rank_vector();
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    for (std::size_t i = 0; i < len; ++i)
      if (a[i] != b[i]) {
        out.cct = false;
        out.rank_mismatch = static_cast<int>(i);
        return out;
      }
    return out;
  }
  throw Error(ErrorKind::InvalidParams, "method needs the action, not only the q map");
}

CctResult is_cct(const PosetAction& action, CctMethod method) {
  if (method == CctMethod::QBijective || method == CctMethod::RankCounts)
    return is_cct(q_map(action), method);
  CctResult out;
  out.method = method;
  const auto orbit = orbit_ids(action);
  const auto image = action_image(action);
  const GradedPoset host = method == CctMethod::Direct ? action.poset : dual(action.poset);
  out.triple = find_cct_violation(host, orbit, image);
  out.cct = !out.triple.has_value();
  return out;
}

bool is_cct_violation(const PosetAction& action, const CctTriple& t) {
  const auto& p = action.poset;
  if (t.x == t.y || !p.is_cover(t.x, t.z) || !p.is_cover(t.y, t.z)) return false;
  bool same_orbit = false;
  for (const auto& m : action_image(action)) {
    if (m[t.x] != t.y) continue;
    same_orbit = true;
    if (m[t.z] == t.z) return false;
  }
  return same_orbit;
}

PosetAction product_action(const PosetAction& a, const PosetAction& b, std::size_t cap) {
  PermGroup group = direct_product(a.group, b.group, cap);
  GradedPoset poset = combine(a.poset, b.poset, CombineMode::Product);
  const auto nq = static_cast<Element>(b.poset.size());
  const int m = a.group.degree();
  const int degree = m + b.group.degree();
  std::vector<Permutation> gens;
  std::vector<std::vector<Element>> maps;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int j = 0; j < m; ++j) images[j] = a.generators[i](j);
    gens.emplace_back(std::move(images));
    std::vector<Element> map(poset.size());
    for (Element x = 0; x < static_cast<Element>(a.poset.size()); ++x)
      for (Element y = 0; y < nq; ++y) map[x * nq + y] = a.maps[i][x] * nq + y;
    maps.push_back(std::move(map));
  }
  for (std::size_t i = 0; i < b.maps.size(); ++i) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int j = 0; j < b.group.degree(); ++j) images[m + j] = m + b.generators[i](j);
    gens.emplace_back(std::move(images));
    std::vector<Element> map(poset.size());
    for (Element x = 0; x < static_cast<Element>(a.poset.size()); ++x)
      for (Element y = 0; y < nq; ++y) map[x * nq + y] = x * nq + b.maps[i][y];
    maps.push_back(std::move(map));
  }
  return PosetAction::make(std::move(group), std::move(poset), std::move(gens), std::move(maps));
}

PosetAction wreath_action(const PosetAction& a, int l, std::size_t cap) {
  if (l < 1) throw Error(ErrorKind::InvalidParams, "wreath_action needs l >= 1");
  const PermGroup top = symmetric_group(l);
  PermGroup group = wreath(a.group, top, cap);
  GradedPoset poset = power(a.poset, l);
  const std::size_t base = a.poset.size();
  const int m = a.group.degree();
  const int degree = m * l;

  auto decode = [&](std::size_t index) {
    std::vector<Element> coords(static_cast<std::size_t>(l));
    for (int j = l - 1; j >= 0; --j) {
      coords[j] = static_cast<Element>(index % base);
      index /= base;
    }
    return coords;
  };
  auto encode = [&](const std::vector<Element>& coords) {
    std::size_t index = 0;
    for (Element c : coords) index = index * base + static_cast<std::size_t>(c);
    return static_cast<Element>(index);
  };

  std::vector<Permutation> gens;
  std::vector<std::vector<Element>> maps;
  for (int block = 0; block < l; ++block)
    for (std::size_t i = 0; i < a.maps.size(); ++i) {
      std::vector<int> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), 0);
      for (int j = 0; j < m; ++j) images[block * m + j] = block * m + a.generators[i](j);
      gens.emplace_back(std::move(images));
      std::vector<Element> map(poset.size());
      for (std::size_t x = 0; x < map.size(); ++x) {
        auto coords = decode(x);
        coords[block] = a.maps[i][coords[block]];
        map[x] = encode(coords);
      }
      maps.push_back(std::move(map));
    }
  for (const auto& h : top.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int b = 0; b < l; ++b)
      for (int j = 0; j < m; ++j) images[b * m + j] = h(b) * m + j;
    gens.emplace_back(std::move(images));
    std::vector<Element> map(poset.size());
    for (std::size_t x = 0; x < map.size(); ++x) {
      const auto coords = decode(x);
      std::vector<Element> moved(coords.size());
      for (int b = 0; b < l; ++b) moved[h(b)] = coords[b];
      map[x] = encode(moved);
    }
    maps.push_back(std::move(map));
  }
  return PosetAction::make(std::move(group), std::move(poset), std::move(gens), std::move(maps));
}

SelfDuality complement_self_duality(const PosetAction& action) {
  const std::size_t size = action.poset.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw Error(ErrorKind::InvalidAction, "complement duality needs a boolean algebra");
  const int n = __builtin_ctzll(size);
  if (!action.poset.same_structure(boolean_algebra(n)))
    throw Error(ErrorKind::InvalidAction, "complement duality needs a boolean algebra");
  const Element full = static_cast<Element>(size - 1);

  SelfDuality out;
  const QuotientPoset bq = quotient(action);
  const EdgePoset eq = edge_poset(bq.poset);
  auto complement_orbit = [&](int orbit) { return bq.orbit_of[full & ~bq.representative[orbit]]; };
  out.edges_of_quotient.resize(eq.edges().size());
  for (std::size_t e = 0; e < eq.edges().size(); ++e) {
    const auto [lo, hi] = eq.edges()[e];
    out.edges_of_quotient[e] = eq.index_of(complement_orbit(hi), complement_orbit(lo));
  }
  out.edges_of_quotient_ok = verify_isomorphism(eq.poset(), dual(eq.poset()), out.edges_of_quotient);

  const EdgeAction ea = action_on_edges(action, EdgeKind::E);
  const QuotientPoset qe = quotient(ea.action);
  out.quotient_of_edges.resize(qe.representative.size());
  for (std::size_t o = 0; o < qe.representative.size(); ++o) {
    const auto [x, y] = ea.edges.edge(qe.representative[o]);
    const Element flipped = ea.edges.index_of(full & ~y, full & ~x);
    out.quotient_of_edges[o] = flipped < 0 ? -1 : qe.orbit_of[flipped];
  }
  out.quotient_of_edges_ok = verify_isomorphism(qe.poset, dual(qe.poset), out.quotient_of_edges);
  return out;
}

}  // namespace edgeposet
