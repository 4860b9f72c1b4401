#include "schemoid/fincat.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace schemoid {

using detail::cat;

const char* errc_name(errc k) {
  switch (k) {
    case errc::dangling_index: return "DanglingIndex";
    case errc::src_tgt_violation: return "SrcTgtViolation";
    case errc::missing_composite: return "MissingComposite";
    case errc::conflicting_composite: return "ConflictingComposite";
    case errc::associativity_violation: return "AssociativityViolation";
    case errc::identity_violation: return "IdentityViolation";
    case errc::inverse_missing: return "InverseMissing";
    case errc::functor_violation: return "FunctorViolation";
    case errc::partition_violation: return "PartitionViolation";
    case errc::empty_block: return "EmptyBlock";
    case errc::regularity_violation: return "RegularityViolation";
    case errc::diagonal_not_single_relation: return "DiagonalNotSingleRelation";
    case errc::transpose_missing: return "TransposeMissing";
    case errc::non_constant_count: return "NonConstantCount";
    case errc::block_split: return "BlockSplit";
    case errc::source_target_mismatch: return "SourceTargetMismatch";
    case errc::universe_too_large: return "UniverseTooLarge";
    case errc::search_cap_exceeded: return "SearchCapExceeded";
    case errc::universe_mismatch: return "UniverseMismatch";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::boundary_mismatch: return "BoundaryMismatch";
    case errc::not_thin_schemoid: return "NotThinSchemoid";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::not_contravariant: return "NotContravariant";
    case errc::not_involutive: return "NotInvolutive";
    case errc::block_split_under_t: return "BlockSplitUnderT";
    case errc::not_equivariant: return "NotEquivariant";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

FinCat::FinCat(int n_objects, std::vector<MorphismData> morphisms,
               std::vector<mor_t> identity, std::vector<mor_t> comp)
    : n_objects_(n_objects),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
  hom_sets_.assign(static_cast<size_t>(n_objects_) * n_objects_, {});
  for (mor_t m = 0; m < n_morphisms(); ++m)
    hom_sets_[static_cast<size_t>(src(m)) * n_objects_ + tgt(m)].push_back(m);
}

FinCat validate_category(const RawCategory& raw) {
  const int n = raw.n_objects;
  const int m = static_cast<int>(raw.morphisms.size());
  if (n < 0) fail(errc::dangling_index, "negative object count");
  for (mor_t i = 0; i < m; ++i) {
    const auto& md = raw.morphisms[i];
    if (md.src < 0 || md.src >= n || md.tgt < 0 || md.tgt >= n)
      fail(errc::dangling_index,
           cat("morphism ", i, " has src/tgt (", md.src, ", ", md.tgt,
               ") outside 0..", n - 1));
  }

  std::vector<mor_t> comp(static_cast<size_t>(m) * m, -1);
  for (const auto& [g, f, gf] : raw.composites) {
    for (mor_t x : {g, f, gf})
      if (x < 0 || x >= m)
        fail(errc::dangling_index, cat("composite entry (", g, ", ", f, ") -> ",
                                       gf, " references morphism ", x));
    if (raw.morphisms[g].src != raw.morphisms[f].tgt)
      fail(errc::src_tgt_violation,
           cat("entry comp(", g, ", ", f, ") given but src(", g, ")=",
               raw.morphisms[g].src, " != tgt(", f, ")=", raw.morphisms[f].tgt));
    if (raw.morphisms[gf].src != raw.morphisms[f].src ||
        raw.morphisms[gf].tgt != raw.morphisms[g].tgt)
      fail(errc::src_tgt_violation,
           cat("comp(", g, ", ", f, ") = ", gf, " must go ",
               raw.morphisms[f].src, " -> ", raw.morphisms[g].tgt, " but goes ",
               raw.morphisms[gf].src, " -> ", raw.morphisms[gf].tgt));
    mor_t& slot = comp[static_cast<size_t>(g) * m + f];
    if (slot != -1 && slot != gf)
      fail(errc::conflicting_composite,
           cat("comp(", g, ", ", f, ") given as both ", slot, " and ", gf));
    slot = gf;
  }
  for (mor_t g = 0; g < m; ++g)
    for (mor_t f = 0; f < m; ++f)
      if (raw.morphisms[g].src == raw.morphisms[f].tgt &&
          comp[static_cast<size_t>(g) * m + f] == -1)
        fail(errc::missing_composite,
             cat("no entry for composable pair comp(", g, ", ", f, ")"));

  // Discover the identity at each object from the unit laws; the laws force
  // uniqueness when one exists.
  std::vector<mor_t> identity(n, -1);
  for (obj_t x = 0; x < n; ++x) {
    for (mor_t e = 0; e < m; ++e) {
      if (raw.morphisms[e].src != x || raw.morphisms[e].tgt != x) continue;
      bool ok = true;
      for (mor_t f = 0; f < m && ok; ++f) {
        if (raw.morphisms[f].tgt == x && comp[static_cast<size_t>(e) * m + f] != f)
          ok = false;
        if (raw.morphisms[f].src == x && comp[static_cast<size_t>(f) * m + e] != f)
          ok = false;
      }
      if (ok) {
        identity[x] = e;
        break;
      }
    }
    if (identity[x] == -1)
      fail(errc::identity_violation, cat("object ", x, " has no identity"));
  }

  for (mor_t h = 0; h < m; ++h)
    for (mor_t g = 0; g < m; ++g) {
      if (raw.morphisms[h].src != raw.morphisms[g].tgt) continue;
      const mor_t hg = comp[static_cast<size_t>(h) * m + g];
      for (mor_t f = 0; f < m; ++f) {
        if (raw.morphisms[g].src != raw.morphisms[f].tgt) continue;
        const mor_t gf = comp[static_cast<size_t>(g) * m + f];
        if (comp[static_cast<size_t>(h) * m + gf] !=
            comp[static_cast<size_t>(hg) * m + f])
          fail(errc::associativity_violation,
               cat("h=", h, " g=", g, " f=", f, ": h(gf)=",
                   comp[static_cast<size_t>(h) * m + gf], " but (hg)f=",
                   comp[static_cast<size_t>(hg) * m + f]));
      }
    }

  return FinCat(n, raw.morphisms, std::move(identity), std::move(comp));
}

void check_category(const FinCat& c) {
  RawCategory raw;
  raw.n_objects = c.n_objects();
  raw.morphisms = c.morphisms();
  for (mor_t g = 0; g < c.n_morphisms(); ++g)
    for (mor_t f = 0; f < c.n_morphisms(); ++f)
      if (c.composable(g, f)) raw.composites.push_back({g, f, c.compose(g, f)});
  FinCat again = validate_category(raw);
  if (!(again == c))
    fail(errc::identity_violation, "category does not revalidate to itself");
}

FinCat product_category(const FinCat& a, const FinCat& b) {
  const int na = a.n_objects(), nb = b.n_objects();
  const int ma = a.n_morphisms(), mb = b.n_morphisms();
  const int n = na * nb, m = ma * mb;
  std::vector<MorphismData> morphisms(static_cast<size_t>(m));
  for (mor_t p = 0; p < ma; ++p)
    for (mor_t q = 0; q < mb; ++q)
      morphisms[static_cast<size_t>(p) * mb + q] = {a.src(p) * nb + b.src(q),
                                                    a.tgt(p) * nb + b.tgt(q)};
  std::vector<mor_t> identity(static_cast<size_t>(n));
  for (obj_t x = 0; x < na; ++x)
    for (obj_t y = 0; y < nb; ++y)
      identity[static_cast<size_t>(x) * nb + y] = a.identity(x) * mb + b.identity(y);
  std::vector<mor_t> comp(static_cast<size_t>(m) * m, -1);
  for (mor_t g1 = 0; g1 < ma; ++g1)
    for (mor_t f1 = 0; f1 < ma; ++f1) {
      if (!a.composable(g1, f1)) continue;
      const mor_t c1 = a.compose(g1, f1);
      for (mor_t g2 = 0; g2 < mb; ++g2)
        for (mor_t f2 = 0; f2 < mb; ++f2) {
          if (!b.composable(g2, f2)) continue;
          comp[(static_cast<size_t>(g1) * mb + g2) * m + f1 * mb + f2] =
              c1 * mb + b.compose(g2, f2);
        }
    }
  return FinCat(n, std::move(morphisms), std::move(identity), std::move(comp));
}

FinCat trivial_category() {
  RawCategory raw;
  raw.n_objects = 1;
  raw.morphisms = {{0, 0}};
  raw.composites = {{0, 0, 0}};
  return validate_category(raw);
}

FinCat interval_category() {
  RawCategory raw;
  raw.n_objects = 2;
  raw.morphisms = {{0, 0}, {1, 1}, {0, 1}};
  raw.composites = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  return validate_category(raw);
}

FinGroup validate_group(int order, std::vector<int> cayley) {
  if (order <= 0) fail(errc::dangling_index, "group order must be positive");
  if (static_cast<int>(cayley.size()) != order * order)
    fail(errc::dangling_index, cat("Cayley table has ", cayley.size(),
                                   " entries, expected ", order * order));
  for (int i = 0; i < order * order; ++i)
    if (cayley[i] < 0 || cayley[i] >= order)
      fail(errc::dangling_index, cat("table entry ", i, " = ", cayley[i],
                                     " outside 0..", order - 1));
  for (int a = 0; a < order; ++a) {
    if (cayley[0 * order + a] != a || cayley[a * order + 0] != a)
      fail(errc::identity_violation,
           cat("element 0 is not a two-sided identity at ", a));
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (cayley[cayley[a * order + b] * order + c] !=
            cayley[a * order + cayley[b * order + c]])
          fail(errc::associativity_violation,
               cat("(", a, "*", b, ")*", c, " != ", a, "*(", b, "*", c, ")"));
  std::vector<int> inverse(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (cayley[a * order + b] == 0 && cayley[b * order + a] == 0) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] == -1)
      fail(errc::inverse_missing, cat("element ", a, " has no two-sided inverse"));
  }
  FinGroup g;
  g.order = order;
  g.cayley = std::move(cayley);
  g.inverse = std::move(inverse);
  return g;
}

FinGroupoid validate_groupoid(FinCat c) {
  std::vector<mor_t> inverse(c.n_morphisms(), -1);
  for (mor_t f = 0; f < c.n_morphisms(); ++f) {
    for (mor_t g : c.hom(c.tgt(f), c.src(f)))
      if (c.compose(f, g) == c.identity(c.tgt(f)) &&
          c.compose(g, f) == c.identity(c.src(f))) {
        inverse[f] = g;
        break;
      }
    if (inverse[f] == -1)
      fail(errc::inverse_missing, cat("morphism ", f, " has no inverse"));
  }
  return FinGroupoid{std::move(c), std::move(inverse)};
}

Functor validate_functor(const FinCat& c, const FinCat& d, Functor f) {
  if (static_cast<int>(f.obj_map.size()) != c.n_objects() ||
      static_cast<int>(f.mor_map.size()) != c.n_morphisms())
    fail(errc::functor_violation, "object/morphism map sizes do not match source");
  for (obj_t x : f.obj_map)
    if (x < 0 || x >= d.n_objects())
      fail(errc::dangling_index, cat("object image ", x, " out of range"));
  for (mor_t m : f.mor_map)
    if (m < 0 || m >= d.n_morphisms())
      fail(errc::dangling_index, cat("morphism image ", m, " out of range"));
  for (mor_t m = 0; m < c.n_morphisms(); ++m) {
    const mor_t im = f.mor_map[m];
    if (d.src(im) != f.obj_map[c.src(m)] || d.tgt(im) != f.obj_map[c.tgt(m)])
      fail(errc::functor_violation,
           cat("image of morphism ", m, " has wrong endpoints"));
  }
  for (obj_t x = 0; x < c.n_objects(); ++x)
    if (f.mor_map[c.identity(x)] != d.identity(f.obj_map[x]))
      fail(errc::functor_violation, cat("identity at object ", x, " not preserved"));
  for (mor_t g = 0; g < c.n_morphisms(); ++g)
    for (mor_t m = 0; m < c.n_morphisms(); ++m)
      if (c.composable(g, m) &&
          f.mor_map[c.compose(g, m)] != d.compose(f.mor_map[g], f.mor_map[m]))
        fail(errc::functor_violation,
             cat("composition not preserved at (", g, ", ", m, ")"));
  return f;
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (obj_t x = 0; x < c.n_objects(); ++x) f.obj_map[x] = x;
  for (mor_t m = 0; m < c.n_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor r;
  r.obj_map.resize(f.obj_map.size());
  r.mor_map.resize(f.mor_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x) r.obj_map[x] = g.obj_map[f.obj_map[x]];
  for (size_t m = 0; m < f.mor_map.size(); ++m) r.mor_map[m] = g.mor_map[f.mor_map[m]];
  return r;
}

std::optional<std::vector<mor_t>> natural_transformation(const FinCat& c,
                                                         const FinCat& d,
                                                         const Functor& f,
                                                         const Functor& g) {
  if (f.obj_map.size() != g.obj_map.size() || f.mor_map.size() != g.mor_map.size())
    fail(errc::source_target_mismatch, "functors do not share source and target");
  const int n = c.n_objects();
  std::vector<mor_t> eta(n, -1);

  // Backtracks over eta in object order; checks every naturality square as
  // soon as both of its components are placed.
  auto consistent = [&](obj_t x) {
    for (mor_t m = 0; m < c.n_morphisms(); ++m) {
      const obj_t s = c.src(m), t = c.tgt(m);
      if ((s == x && eta[t] != -1) || (t == x && eta[s] != -1)) {
        if (d.compose(g.mor_map[m], eta[s]) != d.compose(eta[t], f.mor_map[m]))
          return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, obj_t x) -> bool {
    if (x == n) return true;
    for (mor_t cand : d.hom(f.obj_map[x], g.obj_map[x])) {
      eta[x] = cand;
      if (consistent(x) && self(self, x + 1)) return true;
      eta[x] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return eta;
}

namespace detail {

namespace {

struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  const SearchCaps& caps;
  const std::vector<block_t>* src_color;
  const std::vector<block_t>* tgt_color;
  errc cap_kind;

  std::vector<obj_t> obj;
  std::vector<mor_t> mor;
  std::vector<block_t> color_image;  // src color -> tgt color, -1 unset
  std::vector<mor_t> free_mors;      // non-identity morphisms, ascending
  // For each morphism, the composition triples (g, f, gf) it appears in.
  std::vector<std::vector<std::array<mor_t, 3>>> triples_of;
  std::vector<Functor> out;

  explicit FunctorSearch(const FinCat& c_, const FinCat& d_, const SearchCaps& caps_,
                         const std::vector<block_t>* sc, const std::vector<block_t>* tc,
                         errc ck)
      : c(c_), d(d_), caps(caps_), src_color(sc), tgt_color(tc), cap_kind(ck) {
    obj.assign(c.n_objects(), -1);
    mor.assign(c.n_morphisms(), -1);
    if (src_color) {
      block_t top = 0;
      for (block_t b : *src_color) top = std::max(top, b + 1);
      color_image.assign(top, -1);
    }
    triples_of.resize(c.n_morphisms());
    for (mor_t g = 0; g < c.n_morphisms(); ++g)
      for (mor_t f = 0; f < c.n_morphisms(); ++f)
        if (c.composable(g, f)) {
          const std::array<mor_t, 3> t{g, f, c.compose(g, f)};
          triples_of[t[0]].push_back(t);
          if (t[1] != t[0]) triples_of[t[1]].push_back(t);
          if (t[2] != t[0] && t[2] != t[1]) triples_of[t[2]].push_back(t);
        }
    for (mor_t m = 0; m < c.n_morphisms(); ++m)
      if (!c.is_identity(m)) free_mors.push_back(m);
  }

  // Sets mor[m] = im if the color constraint allows it; returns the color
  // slot that was newly committed (-1 if none) so the caller can undo.
  bool assign_mor(mor_t m, mor_t im, block_t& committed) {
    committed = -1;
    if (src_color) {
      const block_t sc = (*src_color)[m], tc = (*tgt_color)[im];
      if (color_image[sc] == -1) {
        color_image[sc] = tc;
        committed = sc;
      } else if (color_image[sc] != tc) {
        return false;
      }
    }
    mor[m] = im;
    return true;
  }

  void unassign_mor(mor_t m, block_t committed) {
    mor[m] = -1;
    if (committed != -1) color_image[committed] = -1;
  }

  bool composition_ok(mor_t m) {
    for (const auto& [g, f, gf] : triples_of[m]) {
      if (mor[g] == -1 || mor[f] == -1 || mor[gf] == -1) continue;
      if (d.compose(mor[g], mor[f]) != mor[gf]) return false;
    }
    return true;
  }

  void emit() {
    if (static_cast<long>(out.size()) >= caps.max_universe)
      fail(cap_kind, cat("functor universe exceeds cap ", caps.max_universe));
    Functor f;
    f.obj_map = obj;
    f.mor_map = mor;
    out.push_back(std::move(f));
  }

  void search_mor(size_t k) {
    if (k == free_mors.size()) {
      emit();
      return;
    }
    const mor_t m = free_mors[k];
    for (mor_t im : d.hom(obj[c.src(m)], obj[c.tgt(m)])) {
      block_t committed;
      if (!assign_mor(m, im, committed)) continue;
      if (composition_ok(m)) search_mor(k + 1);
      unassign_mor(m, committed);
    }
  }

  void search_obj(obj_t x) {
    if (x == c.n_objects()) {
      search_mor(0);
      return;
    }
    for (obj_t y = 0; y < d.n_objects(); ++y) {
      obj[x] = y;
      bool ok = true;
      for (mor_t m = 0; m < c.n_morphisms() && ok; ++m) {
        const obj_t s = c.src(m), t = c.tgt(m);
        if ((s == x || t == x) && obj[s] != -1 && obj[t] != -1 &&
            d.hom(obj[s], obj[t]).empty())
          ok = false;
      }
      block_t committed = -1;
      if (ok) ok = assign_mor(c.identity(x), d.identity(y), committed);
      if (ok && !composition_ok(c.identity(x))) ok = false;
      if (ok) search_obj(x + 1);
      if (mor[c.identity(x)] != -1) unassign_mor(c.identity(x), committed);
      obj[x] = -1;
    }
  }

  std::vector<Functor> run() {
    if (c.n_objects() > caps.max_objects || d.n_objects() > caps.max_objects)
      fail(cap_kind, cat("object count exceeds cap ", caps.max_objects));
    search_obj(0);
    return std::move(out);
  }
};

}  // namespace

std::vector<Functor> enumerate_functors_constrained(
    const FinCat& c, const FinCat& d, const SearchCaps& caps,
    const std::vector<block_t>* src_color, const std::vector<block_t>* tgt_color,
    errc cap_kind) {
  FunctorSearch s(c, d, caps, src_color, tgt_color, cap_kind);
  return s.run();
}

}  // namespace detail

std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d,
                                        const SearchCaps& caps) {
  return detail::enumerate_functors_constrained(c, d, caps, nullptr, nullptr,
                                                errc::universe_too_large);
}

bool cat_strong_homotopic(const FinCat& c, const FinCat& d, const Functor& f,
                          const Functor& g, const std::vector<Functor>& universe) {
  auto find = [&](const Functor& x) {
    auto it = std::find(universe.begin(), universe.end(), x);
    if (it == universe.end())
      fail(errc::universe_mismatch, "functor not contained in the universe");
    return static_cast<int>(it - universe.begin());
  };
  const int start = find(f), goal = find(g);
  if (start == goal) return true;

  const int n = static_cast<int>(universe.size());
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      if (natural_transformation(c, d, universe[u], universe[v]) ||
          natural_transformation(c, d, universe[v], universe[u])) {
        if (v == goal) return true;
        seen[v] = 1;
        q.push(v);
      }
    }
  }
  return false;
}

}  // namespace schemoid
