#include "edgeposet/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <tuple>

#include "edgeposet/error.hpp"

namespace edgeposet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::DuplicateCover: return "DuplicateCover";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ImageNotCover: return "ImageNotCover";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotInvolutions: return "NotInvolutions";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotARootedTree: return "NotARootedTree";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::ImageChainNotSaturated: return "ImageChainNotSaturated";
    case ErrorKind::WrongGroup: return "WrongGroup";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

struct GradedPoset::Data {
  std::vector<int> ranks;
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  int max_rank = -1;

  // CSR adjacency, neighbours sorted ascending.
  std::vector<std::size_t> up_offset, down_offset;
  std::vector<Element> up, down;

  mutable std::once_flag closure_once;
  mutable std::vector<std::uint64_t> closure;
  std::size_t words = 0;

  void compute_closure() const {
    const std::size_t n = ranks.size();
    closure.assign(n * words, 0);
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return ranks[a] > ranks[b]; });
    for (Element x : order) {
      std::uint64_t* row = &closure[static_cast<std::size_t>(x) * words];
      row[x / 64] |= std::uint64_t{1} << (x % 64);
      for (std::size_t k = up_offset[x]; k < up_offset[x + 1]; ++k) {
        const std::uint64_t* other = &closure[static_cast<std::size_t>(up[k]) * words];
        for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
      }
    }
  }
};

GradedPoset::GradedPoset() : data_(std::make_shared<Data>()) {
  auto d = std::const_pointer_cast<Data>(data_);
  d->up_offset = {0};
  d->down_offset = {0};
}

GradedPoset::GradedPoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

GradedPoset GradedPoset::build(std::vector<int> ranks, std::vector<Cover> covers,
                               std::vector<std::string> labels) {
  const auto n = static_cast<Element>(ranks.size());
  if (!labels.empty() && labels.size() != ranks.size())
    throw Error(ErrorKind::InvalidInput, "label count does not match element count");
  for (int r : ranks)
    if (r < 0) throw Error(ErrorKind::NotGraded, "negative rank");
  for (const auto& [x, y] : covers) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "cover (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  std::sort(covers.begin(), covers.end());
  if (auto it = std::adjacent_find(covers.begin(), covers.end()); it != covers.end())
    throw Error(ErrorKind::DuplicateCover,
                "(" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
  for (const auto& [x, y] : covers) {
    if (ranks[y] != ranks[x] + 1)
      throw Error(ErrorKind::NotGraded, "cover (" + std::to_string(x) + "," + std::to_string(y) +
                                            ") joins ranks " + std::to_string(ranks[x]) + " and " +
                                            std::to_string(ranks[y]));
  }

  auto d = std::make_shared<Data>();
  d->max_rank = ranks.empty() ? -1 : *std::max_element(ranks.begin(), ranks.end());
  d->up_offset.assign(ranks.size() + 1, 0);
  d->down_offset.assign(ranks.size() + 1, 0);
  for (const auto& [x, y] : covers) {
    ++d->up_offset[x + 1];
    ++d->down_offset[y + 1];
  }
  std::partial_sum(d->up_offset.begin(), d->up_offset.end(), d->up_offset.begin());
  std::partial_sum(d->down_offset.begin(), d->down_offset.end(), d->down_offset.begin());
  d->up.resize(covers.size());
  d->down.resize(covers.size());
  {
    auto up_fill = d->up_offset;
    auto down_fill = d->down_offset;
    // covers are sorted by (low, high), so each up-list comes out sorted
    for (const auto& [x, y] : covers) d->up[up_fill[x]++] = y;
    std::vector<Cover> by_high(covers);
    std::sort(by_high.begin(), by_high.end(),
              [](const Cover& a, const Cover& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    for (const auto& [x, y] : by_high) d->down[down_fill[y]++] = x;
  }
  d->ranks = std::move(ranks);
  d->covers = std::move(covers);
  d->labels = std::move(labels);
  d->words = (d->ranks.size() + 63) / 64;
  return GradedPoset(std::move(d));
}

std::size_t GradedPoset::size() const { return data_->ranks.size(); }
int GradedPoset::rank_of(Element x) const { return data_->ranks[static_cast<std::size_t>(x)]; }
std::span<const int> GradedPoset::ranks() const { return data_->ranks; }
int GradedPoset::max_rank() const { return data_->max_rank; }
std::span<const Cover> GradedPoset::covers() const { return data_->covers; }

std::span<const Element> GradedPoset::upper_covers(Element x) const {
  const auto& d = *data_;
  return {d.up.data() + d.up_offset[x], d.up_offset[x + 1] - d.up_offset[x]};
}

std::span<const Element> GradedPoset::lower_covers(Element x) const {
  const auto& d = *data_;
  return {d.down.data() + d.down_offset[x], d.down_offset[x + 1] - d.down_offset[x]};
}

bool GradedPoset::is_cover(Element x, Element y) const {
  auto ups = upper_covers(x);
  return std::binary_search(ups.begin(), ups.end(), y);
}

bool GradedPoset::leq(Element x, Element y) const {
  if (x == y) return true;
  const auto& d = *data_;
  if (d.ranks[x] >= d.ranks[y]) return false;
  if (size() <= kClosureThreshold) {
    std::call_once(d.closure_once, [&] { d.compute_closure(); });
    return (d.closure[static_cast<std::size_t>(x) * d.words + y / 64] >> (y % 64)) & 1U;
  }
  const int target_rank = d.ranks[y];
  std::vector<char> seen(size(), 0);
  std::vector<Element> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Element u = stack.back();
    stack.pop_back();
    for (Element v : upper_covers(u)) {
      if (v == y) return true;
      if (!seen[v] && d.ranks[v] < target_rank) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

std::vector<std::size_t> GradedPoset::rank_vector() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_rank() + 1), 0);
  for (int r : data_->ranks) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

std::vector<std::vector<Element>> GradedPoset::levels() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(max_rank() + 1));
  for (Element x = 0; x < static_cast<Element>(size()); ++x) out[rank_of(x)].push_back(x);
  return out;
}

const std::vector<std::string>& GradedPoset::labels() const { return data_->labels; }

std::string GradedPoset::label(Element x) const {
  if (data_->labels.empty()) return std::to_string(x);
  return data_->labels[static_cast<std::size_t>(x)];
}

bool GradedPoset::same_structure(const GradedPoset& other) const {
  return data_ == other.data_ ||
         (data_->ranks == other.data_->ranks && data_->covers == other.data_->covers);
}

GradedPoset build_poset(std::vector<int> ranks, std::vector<Cover> covers,
                        std::vector<std::string> labels) {
  return GradedPoset::build(std::move(ranks), std::move(covers), std::move(labels));
}

GradedPoset boolean_algebra(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative n");
  if (n > kBooleanCap)
    throw Error(ErrorKind::TooLarge, "boolean algebra of rank " + std::to_string(n));
  const Element count = Element{1} << n;
  std::vector<int> ranks(static_cast<std::size_t>(count));
  std::vector<Cover> covers;
  covers.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(n) / 2);
  for (Element mask = 0; mask < count; ++mask) {
    ranks[mask] = __builtin_popcount(static_cast<unsigned>(mask));
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
  }
  return GradedPoset::build(std::move(ranks), std::move(covers));
}

GradedPoset chain(int n) {
  std::vector<int> ranks(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(ranks.begin(), ranks.end(), 0);
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return GradedPoset::build(std::move(ranks), std::move(covers));
}

GradedPoset antichain(int n) {
  return GradedPoset::build(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 0), {});
}

GradedPoset dual(const GradedPoset& p) {
  std::vector<int> ranks(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) ranks[x] = p.max_rank() - p.rank_of(static_cast<Element>(x));
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) covers.emplace_back(y, x);
  return GradedPoset::build(std::move(ranks), std::move(covers), p.labels());
}

GradedPoset combine(const GradedPoset& p, const GradedPoset& q, CombineMode mode) {
  const auto np = static_cast<Element>(p.size());
  const auto nq = static_cast<Element>(q.size());
  std::vector<int> ranks;
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  const bool labelled = !p.labels().empty() || !q.labels().empty();
  if (mode == CombineMode::DisjointUnion) {
    ranks.assign(p.ranks().begin(), p.ranks().end());
    ranks.insert(ranks.end(), q.ranks().begin(), q.ranks().end());
    covers.assign(p.covers().begin(), p.covers().end());
    for (const auto& [x, y] : q.covers()) covers.emplace_back(x + np, y + np);
    if (labelled) {
      for (Element x = 0; x < np; ++x) labels.push_back(p.label(x));
      for (Element x = 0; x < nq; ++x) labels.push_back(q.label(x));
    }
  } else {
    ranks.resize(static_cast<std::size_t>(np) * static_cast<std::size_t>(nq));
    for (Element a = 0; a < np; ++a)
      for (Element b = 0; b < nq; ++b) {
        ranks[static_cast<std::size_t>(a * nq + b)] = p.rank_of(a) + q.rank_of(b);
        if (labelled) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
      }
    for (const auto& [x, y] : p.covers())
      for (Element b = 0; b < nq; ++b) covers.emplace_back(x * nq + b, y * nq + b);
    for (Element a = 0; a < np; ++a)
      for (const auto& [x, y] : q.covers()) covers.emplace_back(a * nq + x, a * nq + y);
  }
  return GradedPoset::build(std::move(ranks), std::move(covers), std::move(labels));
}

GradedPoset disjoint_copies(const GradedPoset& p, int copies) {
  GradedPoset out;
  for (int c = 0; c < copies; ++c) out = combine(out, p, CombineMode::DisjointUnion);
  return out;
}

GradedPoset power(const GradedPoset& p, int l) {
  GradedPoset out = GradedPoset::build({0}, {});
  for (int c = 0; c < l; ++c) out = combine(out, p, CombineMode::Product);
  return out;
}

bool verify_isomorphism(const GradedPoset& p, const GradedPoset& q, std::span<const Element> map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  if (p.covers().size() != q.covers().size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (std::size_t x = 0; x < map.size(); ++x) {
    const Element y = map[x];
    if (y < 0 || static_cast<std::size_t>(y) >= q.size() || hit[y]) return false;
    hit[y] = 1;
    if (p.rank_of(static_cast<Element>(x)) != q.rank_of(y)) return false;
  }
  for (const auto& [a, b] : p.covers())
    if (!q.is_cover(map[a], map[b])) return false;
  return true;
}

namespace {

// Joint 1-dimensional colour refinement over both posets so that colour ids
// are comparable between them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const GradedPoset& p,
                                                             const GradedPoset& q) {
  const GradedPoset* posets[2] = {&p, &q};
  std::vector<int> colour[2];
  std::size_t classes = 0;
  {
    std::map<std::vector<int>, int> ids;
    for (int s = 0; s < 2; ++s) {
      const auto& g = *posets[s];
      colour[s].resize(g.size());
      for (Element x = 0; x < static_cast<Element>(g.size()); ++x) {
        std::vector<int> key{g.rank_of(x), static_cast<int>(g.upper_covers(x).size()),
                             static_cast<int>(g.lower_covers(x).size())};
        colour[s][x] = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first->second;
      }
    }
    classes = ids.size();
  }
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next[2];
    for (int s = 0; s < 2; ++s) {
      const auto& g = *posets[s];
      next[s].resize(g.size());
      for (Element x = 0; x < static_cast<Element>(g.size()); ++x) {
        std::vector<int> key{colour[s][x]};
        std::vector<int> ups, downs;
        for (Element y : g.upper_covers(x)) ups.push_back(colour[s][y]);
        for (Element y : g.lower_covers(x)) downs.push_back(colour[s][y]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        key.push_back(-1);
        key.insert(key.end(), ups.begin(), ups.end());
        key.push_back(-2);
        key.insert(key.end(), downs.begin(), downs.end());
        next[s][x] = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first->second;
      }
    }
    colour[0] = std::move(next[0]);
    colour[1] = std::move(next[1]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(colour[0]), std::move(colour[1])};
}

class IsoSearch {
 public:
  IsoSearch(const GradedPoset& p, const GradedPoset& q, std::vector<int> cp, std::vector<int> cq)
      : p_(p), q_(q), cp_(std::move(cp)), cq_(std::move(cq)),
        map_(p.size(), -1), inverse_(q.size(), -1) {
    build_order();
    for (Element y = 0; y < static_cast<Element>(q.size()); ++y)
      by_colour_[cq_[y]].push_back(y);
  }

  std::optional<std::vector<Element>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  void build_order() {
    const auto n = static_cast<Element>(p_.size());
    std::map<int, int> class_size;
    for (int c : cp_) ++class_size[c];
    std::vector<Element> seeds(static_cast<std::size_t>(n));
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](Element a, Element b) {
      return class_size[cp_[a]] < class_size[cp_[b]];
    });
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Element s : seeds) {
      if (seen[s]) continue;
      std::queue<Element> bfs;
      bfs.push(s);
      seen[s] = 1;
      while (!bfs.empty()) {
        Element x = bfs.front();
        bfs.pop();
        order_.push_back(x);
        for (auto nbrs : {p_.upper_covers(x), p_.lower_covers(x)})
          for (Element y : nbrs)
            if (!seen[y]) {
              seen[y] = 1;
              bfs.push(y);
            }
      }
    }
  }

  bool consistent(Element x, Element y) const {
    int mapped_p = 0;
    for (Element u : p_.upper_covers(x))
      if (map_[u] >= 0) {
        ++mapped_p;
        if (!q_.is_cover(y, map_[u])) return false;
      }
    for (Element u : p_.lower_covers(x))
      if (map_[u] >= 0) {
        ++mapped_p;
        if (!q_.is_cover(map_[u], y)) return false;
      }
    int mapped_q = 0;
    for (Element v : q_.upper_covers(y)) mapped_q += inverse_[v] >= 0;
    for (Element v : q_.lower_covers(y)) mapped_q += inverse_[v] >= 0;
    return mapped_p == mapped_q;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    // Restrict candidates through an already-mapped neighbour when one exists.
    std::span<const Element> pool;
    for (Element u : p_.upper_covers(x))
      if (map_[u] >= 0) {
        pool = q_.lower_covers(map_[u]);
        break;
      }
    if (pool.empty())
      for (Element u : p_.lower_covers(x))
        if (map_[u] >= 0) {
          pool = q_.upper_covers(map_[u]);
          break;
        }
    if (pool.empty()) {
      auto it = by_colour_.find(cp_[x]);
      if (it == by_colour_.end()) return false;
      pool = it->second;
    }
    for (Element y : pool) {
      if (inverse_[y] >= 0 || cq_[y] != cp_[x] || !consistent(x, y)) continue;
      map_[x] = y;
      inverse_[y] = x;
      if (extend(depth + 1)) return true;
      map_[x] = -1;
      inverse_[y] = -1;
    }
    return false;
  }

  const GradedPoset& p_;
  const GradedPoset& q_;
  std::vector<int> cp_, cq_;
  std::vector<Element> map_, inverse_;
  std::vector<Element> order_;
  std::map<int, std::vector<Element>> by_colour_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const GradedPoset& p, const GradedPoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (p.rank_vector() != q.rank_vector()) return std::nullopt;
  auto [cp, cq] = refine_colours(p, q);
  {
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return std::nullopt;
  }
  auto witness = IsoSearch(p, q, std::move(cp), std::move(cq)).run();
  if (witness && !verify_isomorphism(p, q, *witness)) return std::nullopt;
  return witness;
}

PosetMorphism PosetMorphism::make(GradedPoset source, GradedPoset target,
                                  std::vector<Element> image_of) {
  if (image_of.size() != source.size())
    throw Error(ErrorKind::InvalidMorphism, "image table size does not match source");
  for (std::size_t x = 0; x < image_of.size(); ++x) {
    const Element y = image_of[x];
    if (y < 0 || static_cast<std::size_t>(y) >= target.size())
      throw Error(ErrorKind::IndexOutOfRange, "image of " + std::to_string(x));
    if (source.rank_of(static_cast<Element>(x)) != target.rank_of(y))
      throw Error(ErrorKind::InvalidMorphism, "rank not preserved at " + std::to_string(x));
  }
  for (const auto& [a, b] : source.covers())
    if (!target.is_cover(image_of[a], image_of[b]))
      throw Error(ErrorKind::InvalidMorphism,
                  "cover (" + std::to_string(a) + "," + std::to_string(b) + ") not preserved");
  return PosetMorphism{std::move(source), std::move(target), std::move(image_of)};
}

PosetMorphism PosetMorphism::identity(const GradedPoset& p) {
  std::vector<Element> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  return PosetMorphism{p, p, std::move(id)};
}

bool PosetMorphism::is_injective() const {
  std::vector<char> hit(target.size(), 0);
  for (Element y : image_of) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool PosetMorphism::is_surjective() const {
  std::vector<char> hit(target.size(), 0);
  for (Element y : image_of) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool PosetMorphism::is_isomorphism() const {
  return verify_isomorphism(source, target, image_of);
}

PosetMorphism compose(const PosetMorphism& g, const PosetMorphism& f) {
  if (!f.target.same_structure(g.source))
    throw Error(ErrorKind::InvalidMorphism, "composition of non-composable morphisms");
  std::vector<Element> image(f.image_of.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(static_cast<Element>(x)));
  return PosetMorphism::make(f.source, g.target, std::move(image));
}

}  // namespace edgeposet
