#include "schemoid/schemoid.hpp"

#include <algorithm>

namespace schemoid {

using detail::cat;

Partition validate_partition(int n_morphisms, std::vector<std::vector<mor_t>> blocks) {
  std::vector<block_t> block_of(n_morphisms, -1);
  for (block_t b = 0; b < static_cast<block_t>(blocks.size()); ++b) {
    auto& blk = blocks[b];
    if (blk.empty()) fail(errc::empty_block, cat("block ", b, " is empty"));
    std::sort(blk.begin(), blk.end());
    for (mor_t m : blk) {
      if (m < 0 || m >= n_morphisms)
        fail(errc::dangling_index, cat("block ", b, " lists morphism ", m,
                                       " outside 0..", n_morphisms - 1));
      if (block_of[m] != -1)
        fail(errc::partition_violation,
             cat("morphism ", m, " appears in blocks ", block_of[m], " and ", b));
      block_of[m] = b;
    }
  }
  for (mor_t m = 0; m < n_morphisms; ++m)
    if (block_of[m] == -1)
      fail(errc::partition_violation, cat("morphism ", m, " is in no block"));
  return Partition{std::move(blocks), std::move(block_of)};
}

QSchemoid validate_schemoid(FinCat c, Partition partition) {
  if (static_cast<int>(partition.block_of.size()) != c.n_morphisms())
    fail(errc::partition_violation, "partition does not cover the morphism set");
  const int nb = partition.n_blocks();
  const int m = c.n_morphisms();

  // fiber[(s*nb + t)*m + h] = #{(f, g) : f in s, g in t, h = f . g}
  std::vector<long> fiber(static_cast<size_t>(nb) * nb * m, 0);
  for (mor_t outer = 0; outer < m; ++outer)
    for (mor_t inner = 0; inner < m; ++inner) {
      if (!c.composable(outer, inner)) continue;
      const block_t s = partition.block_of[outer];
      const block_t t = partition.block_of[inner];
      ++fiber[(static_cast<size_t>(s) * nb + t) * m + c.compose(outer, inner)];
    }

  ConstantsTable table;
  table.n_blocks = nb;
  table.p.assign(static_cast<size_t>(nb) * nb * nb, 0);
  for (block_t s = 0; s < nb; ++s)
    for (block_t t = 0; t < nb; ++t)
      for (block_t mu = 0; mu < nb; ++mu) {
        const auto& blk = partition.blocks[mu];
        const long expect =
            fiber[(static_cast<size_t>(s) * nb + t) * m + blk.front()];
        for (mor_t h : blk) {
          const long got = fiber[(static_cast<size_t>(s) * nb + t) * m + h];
          if (got != expect)
            fail(errc::regularity_violation,
                 cat("sigma=", s, " tau=", t, " mu=", mu, ": fiber over f=",
                     blk.front(), " has size ", expect, " but over g=", h,
                     " has size ", got));
        }
        table.p[(static_cast<size_t>(s) * nb + t) * nb + mu] = expect;
      }

  return QSchemoid{std::move(c), std::move(partition), std::move(table)};
}

const ConstantsTable& structure_constants(const QSchemoid& q) { return q.constants; }

AssocScheme validate_scheme(int n, std::vector<int> relation) {
  if (n <= 0) fail(errc::dangling_index, "point count must be positive");
  if (static_cast<int>(relation.size()) != n * n)
    fail(errc::dangling_index,
         cat("relation matrix has ", relation.size(), " entries, expected ", n * n));
  int d = 0;
  for (int v : relation) {
    if (v < 0) fail(errc::dangling_index, cat("negative relation index ", v));
    d = std::max(d, v + 1);
  }
  std::vector<long> size(d, 0);
  for (int v : relation) ++size[v];
  for (int e = 0; e < d; ++e)
    if (size[e] == 0)
      fail(errc::dangling_index, cat("relation indices not dense: ", e, " unused"));

  for (int x = 0; x < n; ++x)
    if (relation[x * n + x] != 0)
      fail(errc::diagonal_not_single_relation,
           cat("entry (", x, ", ", x, ") is ", relation[x * n + x], ", expected 0"));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && relation[x * n + y] == 0)
        fail(errc::diagonal_not_single_relation,
             cat("off-diagonal entry (", x, ", ", y, ") uses the diagonal class"));

  std::vector<int> transpose(d, -1);
  for (int e = 0; e < d; ++e) {
    // Candidate: the class of the transpose of e's first pair; then the
    // whole transposed set must coincide with that class.
    int cand = -1;
    for (int x = 0; x < n && cand == -1; ++x)
      for (int y = 0; y < n && cand == -1; ++y)
        if (relation[x * n + y] == e) cand = relation[y * n + x];
    long matched = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (relation[x * n + y] == e) {
          if (relation[y * n + x] != cand) {
            fail(errc::transpose_missing,
                 cat("transpose of relation ", e, " is not a single relation"));
          }
          ++matched;
        }
    if (matched != size[cand])
      fail(errc::transpose_missing,
           cat("transpose of relation ", e, " does not exhaust relation ", cand));
    transpose[e] = cand;
  }

  ConstantsTable table;
  table.n_blocks = d;
  table.p.assign(static_cast<size_t>(d) * d * d, -1);
  std::vector<long> local(static_cast<size_t>(d) * d);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const int g = relation[x * n + z];
      std::fill(local.begin(), local.end(), 0);
      for (int y = 0; y < n; ++y)
        ++local[static_cast<size_t>(relation[x * n + y]) * d + relation[y * n + z]];
      for (int e = 0; e < d; ++e)
        for (int f = 0; f < d; ++f) {
          long& slot = table.p[(static_cast<size_t>(e) * d + f) * d + g];
          const long count = local[static_cast<size_t>(e) * d + f];
          if (slot == -1) {
            slot = count;
          } else if (slot != count) {
            fail(errc::non_constant_count,
                 cat("p(", e, ", ", f, "; ", g, ") is ", slot,
                     " for one pair in ", g, " but ", count, " at (", x, ", ", z,
                     ")"));
          }
        }
    }

  AssocScheme a;
  a.n_points = n;
  a.n_relations = d;
  a.relation = std::move(relation);
  a.transpose = std::move(transpose);
  a.constants = std::move(table);
  return a;
}

AssocScheme trivial_scheme(int n_points) {
  std::vector<int> rel(static_cast<size_t>(n_points) * n_points, 1);
  for (int x = 0; x < n_points; ++x) rel[x * n_points + x] = 0;
  return validate_scheme(n_points, std::move(rel));
}

SchemoidMorphism validate_morphism(const QSchemoid& a, const QSchemoid& b, Functor f) {
  f = validate_functor(a.cat, b.cat, std::move(f));
  std::vector<block_t> block_image(a.partition.n_blocks(), -1);
  for (block_t s = 0; s < a.partition.n_blocks(); ++s) {
    const auto& blk = a.partition.blocks[s];
    block_image[s] = b.partition.block_of[f.mor_map[blk.front()]];
    for (mor_t m : blk)
      if (b.partition.block_of[f.mor_map[m]] != block_image[s])
        fail(errc::block_split,
             cat("block ", s, ": morphisms ", blk.front(), " and ", m,
                 " map into blocks ", block_image[s], " and ",
                 b.partition.block_of[f.mor_map[m]]));
  }
  return SchemoidMorphism{std::move(f), std::move(block_image)};
}

SchemoidMorphism identity_morphism(const QSchemoid& a) {
  return validate_morphism(a, a, identity_functor(a.cat));
}

SchemoidMorphism constant_morphism(const QSchemoid& a, const QSchemoid& b, obj_t x0) {
  Functor f;
  f.obj_map.assign(a.cat.n_objects(), x0);
  f.mor_map.assign(a.cat.n_morphisms(), b.cat.identity(x0));
  return validate_morphism(a, b, std::move(f));
}

SchemoidMorphism compose_morphisms(const QSchemoid& a, const QSchemoid& b,
                                   const QSchemoid& c, const SchemoidMorphism& g,
                                   const SchemoidMorphism& f) {
  (void)b;
  return validate_morphism(a, c, compose_functors(g.fun, f.fun));
}

}  // namespace schemoid
