#include "grpverify/morphism.hpp"

#include <algorithm>

#include "grpverify/deadline.hpp"

namespace grpverify {

std::vector<Index> generating_sequence(const MaterializedGroup& m) {
  const std::size_t n = m.order();
  if (n == 1) return {};
  std::vector<Index> sorted(n - 1);
  for (Index i = 1; i < n; ++i) sorted[i - 1] = i;
  std::stable_sort(sorted.begin(), sorted.end(), [&](Index a, Index b) {
    return m.element_order(a) > m.element_order(b);
  });
  const Index first = sorted.front();
  if (m.element_order(first) == n) return {first};

  const ElementSet c1 = closure(m, {first});
  const auto c1_elems = c1.indices();
  for (Index x : sorted) {
    if (c1.test(x)) continue;
    check_deadline();
    if (extend_closure(m, c1, c1_elems, {first}, x).count() == n) return {first, x};
  }

  std::vector<Index> seq{first};
  ElementSet cur = c1;
  std::vector<Index> elems = c1_elems;
  while (cur.count() < n) {
    Index best = 0;
    std::size_t best_size = 0;
    for (Index x : sorted) {
      if (cur.test(x)) continue;
      const std::size_t s = extend_closure(m, cur, elems, seq, x).count();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    cur = extend_closure(m, cur, elems, seq, best);
    seq.push_back(best);
    elems = cur.indices();
  }
  return seq;
}

GeneratorTree generator_tree(const MaterializedGroup& m, const std::vector<Index>& seq) {
  GeneratorTree t;
  t.seq = seq;
  const std::size_t n = m.order();
  t.parent.assign(n, 0);
  t.via.assign(n, 0);
  std::vector<char> seen(n, 0);
  t.order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const Index y = m.mul(t.order[i], seq[j]);
      if (seen[y]) continue;
      seen[y] = 1;
      t.parent[y] = t.order[i];
      t.via[y] = static_cast<std::uint32_t>(j);
      t.order.push_back(y);
    }
  }
  return t;
}

std::optional<std::vector<Index>> extend_homomorphism(const MaterializedGroup& src,
                                                      const GeneratorTree& tree,
                                                      const MaterializedGroup& dst,
                                                      const std::vector<Index>& images) {
  const std::size_t n = src.order();
  if (tree.order.size() != n) return std::nullopt;
  std::vector<Index> phi(n, 0);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Index x = tree.order[i];
    phi[x] = dst.mul(phi[tree.parent[x]], images[tree.via[x]]);
  }
  for (Index x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < tree.seq.size(); ++j) {
      if (phi[src.mul(x, tree.seq[j])] != dst.mul(phi[x], images[j])) return std::nullopt;
    }
  }
  return phi;
}

bool is_bijective_map(const std::vector<Index>& map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<char> hit(target_size, 0);
  for (Index y : map) {
    if (y >= target_size || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

void search_isomorphisms(const MaterializedGroup& src, const GeneratorTree& tree,
                         const MaterializedGroup& dst,
                         const std::function<bool(const std::vector<Index>&)>& visit,
                         std::optional<Index> first_image) {
  if (src.order() != dst.order()) return;
  const std::vector<std::size_t> src_cls = class_sizes(src);
  const std::vector<std::size_t> dst_cls = class_sizes(dst);
  const std::size_t k = tree.seq.size();
  if (k == 0) {
    visit(std::vector<Index>{0});
    return;
  }
  std::vector<std::vector<Index>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Index g = tree.seq[i];
    for (Index y = 0; y < dst.order(); ++y) {
      if (dst.element_order(y) == src.element_order(g) && dst_cls[y] == src_cls[g]) {
        cand[i].push_back(y);
      }
    }
    if (cand[i].empty()) return;
  }
  if (first_image) {
    if (std::find(cand[0].begin(), cand[0].end(), *first_image) == cand[0].end()) return;
    cand[0] = {*first_image};
  }
  std::vector<Index> img(k, 0);
  bool stop = false;
  std::size_t tick = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == k) {
      if ((++tick & 0x3f) == 0) check_deadline();
      auto phi = extend_homomorphism(src, tree, dst, img);
      if (phi && is_bijective_map(*phi, dst.order())) {
        if (!visit(*phi)) stop = true;
      }
      return;
    }
    for (Index y : cand[depth]) {
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        if (img[j] == y) ok = false;
        else if (dst.element_order(dst.mul(img[j], y)) !=
                 src.element_order(src.mul(tree.seq[j], tree.seq[depth])))
          ok = false;
        else if (dst.element_order(dst.mul(y, img[j])) !=
                 src.element_order(src.mul(tree.seq[depth], tree.seq[j])))
          ok = false;
      }
      if (!ok) continue;
      img[depth] = y;
      rec(depth + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace grpverify
