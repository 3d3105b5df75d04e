#include "edgeposet/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "edgeposet/error.hpp"

namespace edgeposet {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
      throw Error(ErrorKind::InvalidParams, "image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % cycle.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw Error(ErrorKind::InvalidParams, "cycle point out of range");
      if (used[a]) throw Error(ErrorKind::InvalidParams, "cycles are not disjoint");
      used[a] = 1;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::uint32_t Permutation::apply(std::uint32_t mask) const {
  std::uint32_t out = 0;
  while (mask) {
    const int i = __builtin_ctz(mask);
    mask &= mask - 1;
    out |= std::uint32_t{1} << images_[i];
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = 1;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidParams, "degree mismatch");
  Permutation out;
  out.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidInput, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      ++i;
    } else if (c == '(') {
      if (current) fail("nested '('");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current) fail("unmatched ')'");
      current = nullptr;
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!current) fail("point outside a cycle");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) fail("bad number");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " out of range");
      current->push_back(value - 1);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (current) fail("unterminated cycle");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    fail(e.what());
  }
  return {};
}

// ------------------------------------------------------------------ PermGroup

struct PermGroup::Data {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup() {
  auto d = std::make_shared<Data>();
  d->elements = {Permutation::identity(0)};
  data_ = std::move(d);
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators, std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(ErrorKind::InvalidParams, "generator degree mismatch");
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw Error(ErrorKind::GroupTooLarge, "group order exceeds cap " + std::to_string(cap));
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->generators = std::move(generators);
  d->elements = std::move(elements);
  PermGroup out;
  out.data_ = std::move(d);
  return out;
}

int PermGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
const std::vector<Permutation>& PermGroup::elements() const { return data_->elements; }

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(data_->elements.begin(), data_->elements.end(), p);
}

std::string PermGroup::generator_string() const {
  if (generators().empty()) return "()";
  std::string out;
  for (const auto& g : generators()) {
    if (!out.empty()) out += ", ";
    out += g.cycle_string();
  }
  return out;
}

// ------------------------------------------------------------- named families

PermGroup trivial_group(int degree) { return PermGroup::generate(degree, {}); }

PermGroup symmetric_group(int n, std::size_t cap) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "symmetric group needs n >= 0");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup::generate(n, std::move(gens), cap);
}

namespace {

Permutation rotation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation reflection(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = (n - i) % n;
  return Permutation(std::move(images));
}

std::size_t factorial(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

// Saturating product so that order predictions can be compared against caps.
std::size_t mul_sat(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

}  // namespace

PermGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclic group needs n >= 1");
  return PermGroup::generate(n, {rotation(n)});
}

PermGroup dihedral_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "dihedral group needs n >= 1");
  return PermGroup::generate(n, {rotation(n), reflection(n)});
}

PermGroup hyperoctahedral_group(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "hyperoctahedral group needs n >= 1");
  return wreath(symmetric_group(2), symmetric_group(n, cap), cap);
}

PermGroup elementary_abelian_2(int degree, std::vector<Permutation> involutions) {
  for (const auto& g : involutions) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidParams, "generator degree mismatch");
    if (g.is_identity() || !(g * g).is_identity())
      throw Error(ErrorKind::NotInvolutions, g.cycle_string() + " is not an involution");
  }
  for (std::size_t a = 0; a < involutions.size(); ++a)
    for (std::size_t b = a + 1; b < involutions.size(); ++b)
      if (involutions[a] * involutions[b] != involutions[b] * involutions[a])
        throw Error(ErrorKind::NotCommuting, involutions[a].cycle_string() + " and " +
                                                 involutions[b].cycle_string());
  return PermGroup::generate(degree, std::move(involutions));
}

PermGroup named_group(std::string_view name, int default_degree, std::size_t cap) {
  const auto colon = name.find(':');
  const std::string family(name.substr(0, colon));
  int param = default_degree;
  if (colon != std::string_view::npos) {
    const auto text = name.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), param);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw Error(ErrorKind::InvalidParams, "bad group parameter in '" + std::string(name) + "'");
  }
  if (family == "symmetric") return symmetric_group(param, cap);
  if (family == "cyclic") return cyclic_group(param);
  if (family == "dihedral") return dihedral_group(param);
  if (family == "hyperoctahedral") return hyperoctahedral_group(param, cap);
  if (family == "trivial") return trivial_group(param);
  throw Error(ErrorKind::InvalidParams, "unknown group family '" + family + "'");
}

PermGroup wreath(const PermGroup& g, const PermGroup& h, std::size_t cap) {
  const int m = g.degree();
  const int l = h.degree();
  std::size_t predicted = h.order();
  for (int b = 0; b < l; ++b) predicted = mul_sat(predicted, g.order());
  if (predicted > cap)
    throw Error(ErrorKind::GroupTooLarge, "wreath product of order " + std::to_string(predicted));

  const int degree = m * l;
  std::vector<Permutation> gens;
  for (int b = 0; b < l; ++b)
    for (const auto& gen : g.generators()) {
      std::vector<int> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), 0);
      for (int j = 0; j < m; ++j) images[b * m + j] = b * m + gen(j);
      gens.emplace_back(std::move(images));
    }
  for (const auto& gen : h.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int b = 0; b < l; ++b)
      for (int j = 0; j < m; ++j) images[b * m + j] = gen(b) * m + j;
    gens.emplace_back(std::move(images));
  }
  PermGroup out = PermGroup::generate(degree, std::move(gens), cap);
  if (out.order() != predicted)
    throw Error(ErrorKind::InvalidParams, "wreath product order mismatch");
  return out;
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h, std::size_t cap) {
  const std::size_t predicted = mul_sat(g.order(), h.order());
  if (predicted > cap)
    throw Error(ErrorKind::GroupTooLarge, "direct product of order " + std::to_string(predicted));
  const int m = g.degree();
  const int degree = m + h.degree();
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int j = 0; j < m; ++j) images[j] = gen(j);
    gens.emplace_back(std::move(images));
  }
  for (const auto& gen : h.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int j = 0; j < h.degree(); ++j) images[m + j] = m + gen(j);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::generate(degree, std::move(gens), cap);
}

PermGroup left_regular(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool is_identity = true;
    for (int x = 0; x < n && is_identity; ++x)
      is_identity = table[a][x] == x && table[x][a] == x;
    if (is_identity) e = a;
  }
  if (e < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == e && table[b][a] == e;
    if (!has_inverse) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorKind::NotAGroup, "multiplication is not associative");
  }
  std::vector<Permutation> gens;
  for (int a = 0; a < n; ++a)
    if (a != e) gens.emplace_back(table[a]);
  PermGroup out = PermGroup::generate(n, std::move(gens));
  if (static_cast<int>(out.order()) != n) throw Error(ErrorKind::NotAGroup, "table is not closed");
  return out;
}

std::vector<Permutation> stabilizer_of_set(const PermGroup& g, std::uint32_t mask) {
  std::vector<Permutation> out;
  for (const auto& p : g.elements())
    if (p.apply(mask) == mask) out.push_back(p);
  return out;
}

std::vector<Permutation> stabilizer_of_set(const PermGroup& g, std::span<const int> points) {
  std::vector<char> in(static_cast<std::size_t>(g.degree()), 0);
  for (int p : points) {
    if (p < 0 || p >= g.degree()) throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(p));
    in[p] = 1;
  }
  std::vector<Permutation> out;
  for (const auto& perm : g.elements()) {
    bool fixes = true;
    for (int p : points) fixes = fixes && in[perm(p)];
    if (fixes) out.push_back(perm);
  }
  return out;
}

// -------------------------------------------------------------- rooted trees

RootedTree::RootedTree(GradedPoset poset) : poset_(std::move(poset)) {
  if (poset_.empty()) throw Error(ErrorKind::NotARootedTree, "empty poset");
  for (Element x = 0; x < static_cast<Element>(poset_.size()); ++x) {
    const auto ups = poset_.upper_covers(x).size();
    if (ups == 0) {
      if (root_ >= 0) throw Error(ErrorKind::NotARootedTree, "more than one maximal element");
      root_ = x;
    } else if (ups != 1) {
      throw Error(ErrorKind::NotARootedTree, "element " + std::to_string(x) + " has several parents");
    }
    if (poset_.lower_covers(x).empty()) leaves_.push_back(x);
  }
  if (poset_.rank_of(root_) != poset_.max_rank())
    throw Error(ErrorKind::NotARootedTree, "root is not of maximal rank");
}

std::vector<Element> RootedTree::children(Element x) const {
  auto lc = poset_.lower_covers(x);
  return {lc.begin(), lc.end()};
}

RootedTree rooted_tree(const TreeShape& shape) {
  int leaf_count = 0;
  std::function<int(const TreeShape&)> count_leaves = [&](const TreeShape& s) {
    if (s.children.empty()) return 1;
    int total = 0;
    for (const auto& c : s.children) total += count_leaves(c);
    return total;
  };
  const int leaves = count_leaves(shape);
  // Leaves take indices 0..leaves-1 in DFS order; internal nodes follow in post-order.
  int next_internal = leaves;
  std::vector<std::pair<Element, Element>> edges;  // (child, parent)
  std::vector<int> depth;
  std::function<Element(const TreeShape&, int)> place = [&](const TreeShape& s, int d) -> Element {
    if (s.children.empty()) {
      const Element id = leaf_count++;
      if (static_cast<std::size_t>(id) >= depth.size()) depth.resize(static_cast<std::size_t>(id) + 1);
      depth[id] = d;
      return id;
    }
    std::vector<Element> kids;
    for (const auto& c : s.children) kids.push_back(place(c, d + 1));
    const Element id = next_internal++;
    if (static_cast<std::size_t>(id) >= depth.size()) depth.resize(static_cast<std::size_t>(id) + 1);
    depth[id] = d;
    for (Element k : kids) edges.emplace_back(k, id);
    return id;
  };
  depth.assign(static_cast<std::size_t>(leaves), 0);
  place(shape, 0);
  const int max_depth = *std::max_element(depth.begin(), depth.end());
  std::vector<int> ranks(depth.size());
  for (std::size_t x = 0; x < depth.size(); ++x) ranks[x] = max_depth - depth[x];
  return RootedTree(GradedPoset::build(std::move(ranks), std::move(edges)));
}

TreeAutomorphisms tree_automorphisms(const RootedTree& tree, std::size_t cap) {
  const auto& p = tree.poset();
  std::vector<int> point_of(p.size(), -1);
  for (std::size_t k = 0; k < tree.leaves().size(); ++k) {
    point_of[tree.leaves()[k]] = static_cast<int>(k);
  }
  const int degree = static_cast<int>(tree.leaves().size());

  struct Info {
    std::string canon;
    std::vector<int> leaf_order;  // points in canonical order
    std::size_t order = 1;
  };
  std::vector<Permutation> gens;
  std::function<Info(Element)> visit = [&](Element x) -> Info {
    auto kids = p.lower_covers(x);
    if (kids.empty()) return Info{"()", {point_of[x]}, 1};
    std::vector<Info> infos;
    for (Element c : kids) infos.push_back(visit(c));
    std::stable_sort(infos.begin(), infos.end(),
                     [](const Info& a, const Info& b) { return a.canon < b.canon; });
    Info out;
    out.canon = "(";
    std::size_t run = 1;
    for (std::size_t k = 0; k < infos.size(); ++k) {
      out.canon += infos[k].canon;
      out.leaf_order.insert(out.leaf_order.end(), infos[k].leaf_order.begin(),
                            infos[k].leaf_order.end());
      out.order = mul_sat(out.order, infos[k].order);
      if (k > 0 && infos[k].canon == infos[k - 1].canon) {
        ++run;
        std::vector<int> images(static_cast<std::size_t>(degree));
        std::iota(images.begin(), images.end(), 0);
        const auto& a = infos[k - 1].leaf_order;
        const auto& b = infos[k].leaf_order;
        for (std::size_t t = 0; t < a.size(); ++t) {
          images[a[t]] = b[t];
          images[b[t]] = a[t];
        }
        gens.emplace_back(std::move(images));
      } else {
        out.order = mul_sat(out.order, factorial(run));
        run = 1;
      }
    }
    out.order = mul_sat(out.order, factorial(run));
    out.canon += ")";
    return out;
  };
  const Info root = visit(tree.root());
  if (root.order > cap)
    throw Error(ErrorKind::GroupTooLarge, "tree automorphism group of order " + std::to_string(root.order));
  return TreeAutomorphisms{PermGroup::generate(degree, std::move(gens), cap), root.order};
}

// ----------------------------------------------------------- subgroup sweep

namespace {

using Bits = std::vector<std::uint64_t>;

bool has_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

std::vector<PermGroup> subgroup_sweep(int n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::InvalidParams, "subgroup sweep supports 1 <= n <= 5");
  const PermGroup full = symmetric_group(n);
  const auto& sym = full.elements();
  const int order = static_cast<int>(sym.size());
  const std::size_t words = (sym.size() + 63) / 64;
  auto index_of = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(sym.begin(), sym.end(), p) - sym.begin());
  };
  std::vector<int> mult(static_cast<std::size_t>(order * order));
  std::vector<int> inverse(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    inverse[a] = index_of(sym[a].inverse());
    for (int b = 0; b < order; ++b) mult[a * order + b] = index_of(sym[a] * sym[b]);
  }

  auto closure = [&](Bits seed) {
    std::vector<int> members;
    for (int i = 0; i < order; ++i)
      if (has_bit(seed, i)) members.push_back(i);
    std::vector<int> gens = members;
    Bits out(words, 0);
    std::vector<int> elems{0};  // index 0 is the identity (sorted, identity smallest)
    set_bit(out, 0);
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (int g : gens) {
        const int next = mult[g * order + elems[head]];
        if (!has_bit(out, next)) {
          set_bit(out, next);
          elems.push_back(next);
        }
      }
    return out;
  };

  std::set<Bits> cyclic;
  for (int g = 0; g < order; ++g) {
    Bits seed(words, 0);
    set_bit(seed, g);
    cyclic.insert(closure(seed));
  }
  std::set<Bits> all(cyclic.begin(), cyclic.end());
  std::vector<Bits> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        Bits joined(words);
        bool contained = true;
        for (std::size_t w = 0; w < words; ++w) {
          joined[w] = h[w] | c[w];
          contained = contained && joined[w] == h[w];
        }
        if (contained) continue;
        Bits sub = closure(std::move(joined));
        if (all.insert(sub).second) next.push_back(std::move(sub));
      }
    frontier = std::move(next);
  }

  // Canonical representative of each conjugacy class: the smallest conjugate bitset.
  std::set<Bits> classes;
  for (const auto& h : all) {
    Bits best;
    for (int g = 0; g < order; ++g) {
      Bits conj(words, 0);
      for (int i = 0; i < order; ++i)
        if (has_bit(h, i)) set_bit(conj, mult[mult[g * order + i] * order + inverse[g]]);
      if (best.empty() || conj < best) best = std::move(conj);
    }
    classes.insert(std::move(best));
  }

  std::vector<PermGroup> out;
  for (const auto& h : classes) {
    // Greedy generating set in element order.
    std::vector<Permutation> gens;
    Bits generated(words, 0);
    set_bit(generated, 0);
    Bits seed(words, 0);
    for (int i = 0; i < order; ++i) {
      if (!has_bit(h, i) || has_bit(generated, i)) continue;
      set_bit(seed, i);
      gens.push_back(sym[i]);
      generated = closure(seed);
    }
    out.push_back(PermGroup::generate(n, std::move(gens)));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.generator_string() < b.generator_string();
  });
  return out;
}

}  // namespace edgeposet
