#include "edgeposet/peck.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "edgeposet/error.hpp"

namespace edgeposet {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidParams, "matrix dimensions do not match");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix m = *this;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / previous;
      m.at(i, c) = 0;
    }
    previous = m.at(r, c);
    ++r;
  }
  return r;
}

RankProfile rank_profile(const std::vector<std::size_t>& ranks) {
  RankProfile out;
  const std::size_t n = ranks.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (ranks[i] != ranks[n - 1 - i]) out.symmetric = false;
  std::size_t i = 0;
  while (i + 1 < n && ranks[i] <= ranks[i + 1]) ++i;
  while (i + 1 < n && ranks[i] >= ranks[i + 1]) ++i;
  out.unimodal = n == 0 || i + 1 == n;
  return out;
}

RankProfile rank_profile(const GradedPoset& p) { return rank_profile(p.rank_vector()); }

ExactMatrix lefschetz_matrix(const GradedPoset& p, int i) {
  const auto levels = p.levels();
  if (i < 0 || i + 1 >= static_cast<int>(levels.size()))
    throw Error(ErrorKind::InvalidParams, "no rank " + std::to_string(i) + " -> " + std::to_string(i + 1));
  const auto& lower = levels[i];
  const auto& upper = levels[i + 1];
  std::vector<std::size_t> row_of(p.size(), 0);
  for (std::size_t r = 0; r < upper.size(); ++r) row_of[upper[r]] = r;
  ExactMatrix u(upper.size(), lower.size());
  for (std::size_t c = 0; c < lower.size(); ++c)
    for (Element y : p.upper_covers(lower[c])) u.at(row_of[y], c) = 1;
  return u;
}

std::size_t lefschetz_power_rank(const GradedPoset& p, int i) {
  const int n = p.max_rank();
  if (i < 0 || 2 * i >= n)
    throw Error(ErrorKind::InvalidParams, "Lefschetz power needs 0 <= i < n/2");
  ExactMatrix product = lefschetz_matrix(p, i);
  for (int j = i + 1; j < n - i; ++j) product = lefschetz_matrix(p, j) * product;
  return product.rank();
}

bool is_unitary_peck(const GradedPoset& p) {
  const auto ranks = p.rank_vector();
  const int n = p.max_rank();
  for (int i = 0; 2 * i < n; ++i) {
    if (ranks[i] != ranks[n - i]) return false;
    if (lefschetz_power_rank(p, i) != ranks[i]) return false;
  }
  return true;
}

namespace {

// Successive shortest paths; stops once the cheapest augmenting path is non-negative.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, long long cap, long long cost) {
    arcs_.push_back({to, head_[from], cap, cost});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, -cost});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  long long min_cost_while_negative(int s, int t) {
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    const std::size_t n = head_.size();
    long long total = 0;
    for (;;) {
      std::vector<long long> dist(n, kInf);
      std::vector<int> via(n, -1);
      std::vector<char> queued(n, 0);
      std::deque<int> queue{s};
      dist[s] = 0;
      queued[s] = 1;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        queued[v] = 0;
        for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap > 0 && dist[v] + arc.cost < dist[arc.to]) {
            dist[arc.to] = dist[v] + arc.cost;
            via[arc.to] = a;
            if (!queued[arc.to]) {
              queued[arc.to] = 1;
              queue.push_back(arc.to);
            }
          }
        }
      }
      if (dist[t] >= 0) return total;
      long long push = kInf;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      total += push * dist[t];
    }
  }

 private:
  struct Arc {
    int to;
    int next;
    long long cap;
    long long cost;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t max_k_antichain_union(const GradedPoset& p, std::size_t k) {
  if (k == 0) return 0;
  const std::size_t n = p.size();
  if (k >= static_cast<std::size_t>(p.max_rank() + 1)) return n;
  // Choosing disjoint chains C_j costs k each and saves |C_j| singletons, so
  // d_k = min over chain partitions of sum min(|C|, k) = |P| + min cost.
  const long long big = static_cast<long long>(n) + 1;
  const int s = 0;
  const int t = 1;
  auto in = [](Element v) { return 2 + 2 * v; };
  auto out = [](Element v) { return 3 + 2 * v; };
  MinCostFlow flow(2 + 2 * n);
  for (Element v = 0; v < static_cast<Element>(n); ++v) {
    flow.add_arc(s, in(v), big, static_cast<long long>(k));
    flow.add_arc(in(v), out(v), 1, -1);
    flow.add_arc(in(v), out(v), big, 0);
    flow.add_arc(out(v), t, big, 0);
    for (Element w : p.upper_covers(v)) flow.add_arc(out(v), in(w), big, 0);
  }
  return static_cast<std::size_t>(static_cast<long long>(n) + flow.min_cost_while_negative(s, t));
}

std::size_t max_k_antichain_union_exhaustive(const GradedPoset& p, std::size_t k) {
  const std::size_t n = p.size();
  if (n > 16) throw Error(ErrorKind::TooLarge, "exhaustive d_k needs at most 16 elements");
  if (k == 0 || n == 0) return 0;
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && (p.leq(static_cast<Element>(x), static_cast<Element>(y)) ||
                     p.leq(static_cast<Element>(y), static_cast<Element>(x))))
        comparable[x] |= std::uint32_t{1} << y;
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<char> antichain(std::size_t{full} + 1, 0);
  antichain[0] = 1;
  for (std::uint32_t a = 1; a <= full; ++a) {
    const int low = __builtin_ctz(a);
    antichain[a] = antichain[a & (a - 1)] && !(comparable[low] & a);
  }
  // fewest[S]: fewest antichains covering S; the one holding S's lowest element is enumerated.
  std::vector<std::uint8_t> fewest(std::size_t{full} + 1, 0);
  std::size_t best = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    std::uint8_t value = std::numeric_limits<std::uint8_t>::max();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t a = sub | low;
      if (antichain[a]) value = std::min<std::uint8_t>(value, fewest[s ^ a] + 1);
      if (sub == 0) break;
    }
    fewest[s] = value;
    if (value <= k) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

std::size_t largest_ranks_sum(const GradedPoset& p, std::size_t k) {
  auto ranks = p.rank_vector();
  std::sort(ranks.begin(), ranks.end(), std::greater<>());
  std::size_t sum = 0;
  for (std::size_t i = 0; i < std::min(k, ranks.size()); ++i) sum += ranks[i];
  return sum;
}

bool is_strongly_sperner(const GradedPoset& p) {
  const std::size_t levels = static_cast<std::size_t>(p.max_rank() + 1);
  for (std::size_t k = 1; k < levels; ++k)
    if (max_k_antichain_union(p, k) != largest_ranks_sum(p, k)) return false;
  return true;
}

bool is_peck(const GradedPoset& p) {
  const RankProfile profile = rank_profile(p);
  if (!profile.symmetric || !profile.unimodal) return false;
  if (is_unitary_peck(p)) return true;
  return is_strongly_sperner(p);
}

PeckReport peck_report(const GradedPoset& p, std::size_t oracle_threshold) {
  PeckReport r;
  r.rank_vector = p.rank_vector();
  const RankProfile profile = rank_profile(r.rank_vector);
  r.symmetric = profile.symmetric;
  r.unimodal = profile.unimodal;
  const int n = p.max_rank();
  r.unitary_peck = true;
  for (int i = 0; 2 * i < n; ++i) {
    r.lefschetz_ranks.push_back(lefschetz_power_rank(p, i));
    if (r.rank_vector[i] != r.rank_vector[n - i] || r.lefschetz_ranks.back() != r.rank_vector[i])
      r.unitary_peck = false;
  }
  r.strongly_sperner = true;
  const bool check = oracle_threshold > 0 && p.size() <= std::min<std::size_t>(oracle_threshold, 16);
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n + 1); ++k) {
    r.d.push_back(max_k_antichain_union(p, k));
    if (check && max_k_antichain_union_exhaustive(p, k) != r.d.back())
      throw Error(ErrorKind::Internal, "flow and exhaustive d_" + std::to_string(k) + " disagree");
    if (r.d.back() != largest_ranks_sum(p, k)) r.strongly_sperner = false;
  }
  r.peck = r.symmetric && r.unimodal && r.strongly_sperner;
  if (r.unitary_peck && !r.peck)
    throw Error(ErrorKind::Internal, "unitary Peck poset failed the Peck check");
  return r;
}

bool is_symmetric_chain_decomposition(const GradedPoset& p, const ChainDecomposition& d) {
  std::vector<char> seen(p.size(), 0);
  std::size_t covered = 0;
  const int n = p.max_rank();
  for (const auto& chain : d.chains) {
    if (chain.empty()) return false;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const Element x = chain[j];
      if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
      seen[x] = 1;
      ++covered;
      if (j > 0 && !p.is_cover(chain[j - 1], x)) return false;
    }
    if (p.rank_of(chain.front()) + p.rank_of(chain.back()) != n) return false;
  }
  return covered == p.size();
}

ChainDecomposition scd_boolean(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative n");
  if (n > kBooleanCap) throw Error(ErrorKind::TooLarge, "B_" + std::to_string(n));
  ChainDecomposition d;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<int> open;
    bool unmatched_one = false;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) open.push_back(i);
      else if (!open.empty()) open.pop_back();
      else unmatched_one = true;
    }
    if (unmatched_one) continue;
    std::vector<Element> chain{static_cast<Element>(mask)};
    std::uint32_t current = mask;
    for (int i : open) {
      current |= std::uint32_t{1} << i;
      chain.push_back(static_cast<Element>(current));
    }
    d.chains.push_back(std::move(chain));
  }
  return d;
}

ChainDecomposition scd_h_boolean(const HDecomposition& h) {
  if (!h.verified) throw Error(ErrorKind::InvalidMorphism, "H(B_n) decomposition is not verified");
  std::vector<Element> inverse(h.witness.size());
  for (std::size_t e = 0; e < h.witness.size(); ++e) inverse[h.witness[e]] = static_cast<Element>(e);
  const ChainDecomposition component = scd_boolean(h.n - 1);
  const Element block = Element{1} << (h.n - 1);
  ChainDecomposition d;
  for (int c = 0; c < h.n; ++c)
    for (const auto& chain : component.chains) {
      std::vector<Element> mapped;
      for (Element x : chain) mapped.push_back(inverse[c * block + x]);
      d.chains.push_back(std::move(mapped));
    }
  return d;
}

ChainDecomposition scd_transport(const ChainDecomposition& d, const PosetMorphism& f) {
  if (!f.is_bijective()) throw Error(ErrorKind::InvalidMorphism, "transport needs a bijection");
  ChainDecomposition out;
  for (const auto& chain : d.chains) {
    std::vector<Element> image;
    for (Element x : chain) {
      image.push_back(f(x));
      if (image.size() > 1 && !f.target.is_cover(image[image.size() - 2], image.back()))
        throw Error(ErrorKind::ImageChainNotSaturated, "image chain skips a rank");
    }
    out.chains.push_back(std::move(image));
  }
  return out;
}

}  // namespace edgeposet
