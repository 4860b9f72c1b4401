#include "schemoid/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace schemoid {

using detail::cat;

QSchemoid discrete_k(FinCat c) {
  std::vector<std::vector<mor_t>> blocks(c.n_morphisms());
  for (mor_t m = 0; m < c.n_morphisms(); ++m) blocks[m] = {m};
  const int n = c.n_morphisms();
  return validate_schemoid(std::move(c), validate_partition(n, std::move(blocks)));
}

const FinCat& forget_u(const QSchemoid& q) { return q.cat; }

QSchemoid jmath(const AssocScheme& a) {
  const int n = a.n_points;
  const int m = n * n;  // morphism x*n + y is the pair (x, y) : y -> x
  std::vector<MorphismData> morphisms(static_cast<size_t>(m));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) morphisms[static_cast<size_t>(x) * n + y] = {y, x};
  std::vector<mor_t> identity(n);
  for (int x = 0; x < n; ++x) identity[x] = x * n + x;
  std::vector<mor_t> comp(static_cast<size_t>(m) * m, -1);
  for (mor_t g = 0; g < m; ++g)
    for (mor_t f = 0; f < m; ++f)
      if (g % n == f / n)  // (z, x) . (x, y) = (z, y)
        comp[static_cast<size_t>(g) * m + f] = (g / n) * n + (f % n);
  FinCat cat_(n, std::move(morphisms), std::move(identity), std::move(comp));

  std::vector<std::vector<mor_t>> blocks(a.n_relations);
  for (mor_t p = 0; p < m; ++p) blocks[a.relation[p]].push_back(p);
  return validate_schemoid(std::move(cat_), validate_partition(m, std::move(blocks)));
}

AssocScheme scheme_of_group(const FinGroup& g) {
  const int n = g.order;
  std::vector<int> rel(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) rel[static_cast<size_t>(k) * n + l] = g.mul(g.inv(k), l);
  return validate_scheme(n, std::move(rel));
}

FinGroupoid iota(const FinGroup& g) {
  const int m = g.order;
  std::vector<MorphismData> morphisms(m, MorphismData{0, 0});
  std::vector<mor_t> comp(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) comp[static_cast<size_t>(a) * m + b] = g.mul(a, b);
  FinCat cat_(1, std::move(morphisms), {0}, std::move(comp));
  return validate_groupoid(std::move(cat_));
}

StildeSchemoid stilde(const FinGroupoid& h) {
  const FinCat& hc = h.cat;
  const int n = hc.n_morphisms();  // objects of the new category

  // Morphism (j, i) : i -> j exists iff tgt(j) = tgt(i) in h; enumerate in
  // lexicographic (j, i) order.
  std::vector<MorphismData> morphisms;
  std::vector<int> pair_index(static_cast<size_t>(n) * n, -1);
  for (mor_t j = 0; j < n; ++j)
    for (mor_t i = 0; i < n; ++i)
      if (hc.tgt(j) == hc.tgt(i)) {
        pair_index[static_cast<size_t>(j) * n + i] =
            static_cast<int>(morphisms.size());
        morphisms.push_back({i, j});
      }
  const int m = static_cast<int>(morphisms.size());
  std::vector<mor_t> identity(n);
  for (mor_t i = 0; i < n; ++i) identity[i] = pair_index[static_cast<size_t>(i) * n + i];
  std::vector<mor_t> comp(static_cast<size_t>(m) * m, -1);
  for (mor_t g = 0; g < m; ++g)
    for (mor_t f = 0; f < m; ++f) {
      // g = (j', i'), f = (j, i); composable iff i' = j, giving (j', i).
      if (morphisms[g].src != morphisms[f].tgt) continue;
      comp[static_cast<size_t>(g) * m + f] =
          pair_index[static_cast<size_t>(morphisms[g].tgt) * n + morphisms[f].src];
    }
  FinCat cat_(n, std::move(morphisms), std::move(identity), std::move(comp));

  // Block of (j, i) is the class of j^{-1} i; block indices are h-morphism
  // indices, and every one occurs (take j the identity at tgt(f), i = f).
  std::vector<std::vector<mor_t>> blocks(n);
  for (mor_t p = 0; p < m; ++p) {
    const mor_t j = cat_.tgt(p), i = cat_.src(p);
    blocks[hc.compose(h.inverse[j], i)].push_back(p);
  }
  QSchemoid q = validate_schemoid(std::move(cat_), validate_partition(m, std::move(blocks)));
  return StildeSchemoid{std::move(q), h};
}

QSchemoid product_schemoid(const QSchemoid& a, const QSchemoid& b) {
  FinCat prod = product_category(a.cat, b.cat);
  const int nb_b = b.partition.n_blocks();
  const int mb = b.cat.n_morphisms();
  std::vector<std::vector<mor_t>> blocks(
      static_cast<size_t>(a.partition.n_blocks()) * nb_b);
  for (mor_t p = 0; p < prod.n_morphisms(); ++p) {
    const block_t s = a.partition.block_of[p / mb];
    const block_t t = b.partition.block_of[p % mb];
    blocks[static_cast<size_t>(s) * nb_b + t].push_back(p);
  }
  const int m = prod.n_morphisms();
  return validate_schemoid(std::move(prod), validate_partition(m, std::move(blocks)));
}

Cylinder cylinder(const QSchemoid& a) {
  QSchemoid total = product_schemoid(a, discrete_k(interval_category()));
  auto end = [&](int i) {
    Functor f;
    f.obj_map.resize(a.cat.n_objects());
    f.mor_map.resize(a.cat.n_morphisms());
    for (obj_t x = 0; x < a.cat.n_objects(); ++x) f.obj_map[x] = x * 2 + i;
    for (mor_t m = 0; m < a.cat.n_morphisms(); ++m) f.mor_map[m] = m * 3 + i;
    return validate_morphism(a, total, std::move(f));
  };
  SchemoidMorphism e0 = end(0), e1 = end(1);
  return Cylinder{std::move(total), std::move(e0), std::move(e1)};
}

SchemoidMorphism cylinder_projection(const QSchemoid& a, const Cylinder& cyl) {
  Functor f;
  f.obj_map.resize(cyl.total.cat.n_objects());
  f.mor_map.resize(cyl.total.cat.n_morphisms());
  for (obj_t x = 0; x < cyl.total.cat.n_objects(); ++x) f.obj_map[x] = x / 2;
  for (mor_t m = 0; m < cyl.total.cat.n_morphisms(); ++m) f.mor_map[m] = m / 3;
  return validate_morphism(cyl.total, a, std::move(f));
}

namespace {

struct IsoSearch {
  const QSchemoid& a;
  const QSchemoid& b;

  std::vector<obj_t> obj;
  std::vector<mor_t> mor;
  std::vector<char> obj_used, mor_used, block_used;
  std::vector<block_t> block_image;
  std::vector<mor_t> free_mors;

  IsoSearch(const QSchemoid& a_, const QSchemoid& b_) : a(a_), b(b_) {
    obj.assign(a.cat.n_objects(), -1);
    mor.assign(a.cat.n_morphisms(), -1);
    obj_used.assign(b.cat.n_objects(), 0);
    mor_used.assign(b.cat.n_morphisms(), 0);
    block_used.assign(b.partition.n_blocks(), 0);
    block_image.assign(a.partition.n_blocks(), -1);
    for (mor_t m = 0; m < a.cat.n_morphisms(); ++m)
      if (!a.cat.is_identity(m)) free_mors.push_back(m);
  }

  bool composition_ok(mor_t m) {
    for (mor_t g = 0; g < a.cat.n_morphisms(); ++g) {
      if (mor[g] == -1) continue;
      if (a.cat.composable(g, m)) {
        const mor_t gm = a.cat.compose(g, m);
        if (mor[gm] != -1 && b.cat.compose(mor[g], mor[m]) != mor[gm]) return false;
      }
      if (a.cat.composable(m, g)) {
        const mor_t mg = a.cat.compose(m, g);
        if (mor[mg] != -1 && b.cat.compose(mor[m], mor[g]) != mor[mg]) return false;
      }
    }
    return true;
  }

  void undo_mor(mor_t m, bool committed_block) {
    mor_used[mor[m]] = 0;
    if (committed_block) {
      block_used[block_image[a.partition.block_of[m]]] = 0;
      block_image[a.partition.block_of[m]] = -1;
    }
    mor[m] = -1;
  }

  bool search_mors(size_t k);
  bool search_objs(obj_t x);
};

bool IsoSearch::search_mors(size_t k) {
  if (k == free_mors.size()) return true;
  const mor_t m = free_mors[k];
  for (mor_t im : b.cat.hom(obj[a.cat.src(m)], obj[a.cat.tgt(m)])) {
    if (mor_used[im]) continue;
    const block_t s = a.partition.block_of[m];
    const block_t t = b.partition.block_of[im];
    bool committed = false;
    if (block_image[s] == -1) {
      if (block_used[t] ||
          a.partition.blocks[s].size() != b.partition.blocks[t].size())
        continue;
      block_image[s] = t;
      block_used[t] = 1;
      committed = true;
    } else if (block_image[s] != t) {
      continue;
    }
    mor[m] = im;
    mor_used[im] = 1;
    if (composition_ok(m) && search_mors(k + 1)) return true;
    undo_mor(m, committed);
  }
  return false;
}

bool IsoSearch::search_objs(obj_t x) {
  if (x == a.cat.n_objects()) return search_mors(0);
  for (obj_t y = 0; y < b.cat.n_objects(); ++y) {
    if (obj_used[y]) continue;
    obj[x] = y;
    obj_used[y] = 1;
    bool ok = true;
    for (obj_t z = 0; z <= x && ok; ++z) {
      if (obj[z] == -1) continue;
      if (a.cat.hom(x, z).size() != b.cat.hom(y, obj[z]).size() ||
          a.cat.hom(z, x).size() != b.cat.hom(obj[z], y).size())
        ok = false;
    }
    const mor_t e = a.cat.identity(x);
    bool committed = false;
    if (ok) {
      const mor_t ie = b.cat.identity(y);
      const block_t s = a.partition.block_of[e];
      const block_t t = b.partition.block_of[ie];
      if (mor_used[ie]) {
        ok = false;
      } else if (block_image[s] == -1) {
        if (block_used[t] ||
            a.partition.blocks[s].size() != b.partition.blocks[t].size()) {
          ok = false;
        } else {
          block_image[s] = t;
          block_used[t] = 1;
          committed = true;
          mor[e] = ie;
          mor_used[ie] = 1;
        }
      } else if (block_image[s] != t) {
        ok = false;
      } else {
        mor[e] = ie;
        mor_used[ie] = 1;
      }
    }
    if (ok && mor[e] != -1 && !composition_ok(e)) ok = false;
    if (ok && search_objs(x + 1)) return true;
    if (mor[e] != -1) undo_mor(e, committed);
    obj_used[y] = 0;
    obj[x] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::pair<SchemoidMorphism, SchemoidMorphism>> find_isomorphism(
    const QSchemoid& a, const QSchemoid& b, const SearchCaps& caps) {
  if (a.cat.n_objects() > caps.max_objects || b.cat.n_objects() > caps.max_objects)
    fail(errc::search_cap_exceeded,
         cat("object count exceeds cap ", caps.max_objects));
  if (a.cat.n_objects() != b.cat.n_objects() ||
      a.cat.n_morphisms() != b.cat.n_morphisms() ||
      a.partition.n_blocks() != b.partition.n_blocks())
    return std::nullopt;
  auto sizes = [](const Partition& p) {
    std::vector<size_t> s;
    for (const auto& blk : p.blocks) s.push_back(blk.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a.partition) != sizes(b.partition)) return std::nullopt;

  IsoSearch s(a, b);
  if (!s.search_objs(0)) return std::nullopt;

  Functor fwd{s.obj, s.mor};
  Functor bwd;
  bwd.obj_map.assign(b.cat.n_objects(), -1);
  bwd.mor_map.assign(b.cat.n_morphisms(), -1);
  for (obj_t x = 0; x < a.cat.n_objects(); ++x) bwd.obj_map[fwd.obj_map[x]] = x;
  for (mor_t m = 0; m < a.cat.n_morphisms(); ++m) bwd.mor_map[fwd.mor_map[m]] = m;
  return std::make_pair(validate_morphism(a, b, std::move(fwd)),
                        validate_morphism(b, a, std::move(bwd)));
}

}  // namespace schemoid
