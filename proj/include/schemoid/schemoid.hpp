#ifndef SCHEMOID_SCHEMOID_HPP
#define SCHEMOID_SCHEMOID_HPP

#include <vector>

#include "schemoid/fincat.hpp"

namespace schemoid {

// A partition of the morphism set into disjoint, nonempty, covering blocks.
struct Partition {
  std::vector<std::vector<mor_t>> blocks;  // each ascending
  std::vector<block_t> block_of;
  int n_blocks() const { return static_cast<int>(blocks.size()); }
  bool operator==(const Partition&) const = default;
};

Partition validate_partition(int n_morphisms, std::vector<std::vector<mor_t>> blocks);

// Dense (sigma, tau, mu) -> count table.
struct ConstantsTable {
  int n_blocks = 0;
  std::vector<long> p;  // flat n^3
  long operator()(block_t s, block_t t, block_t m) const {
    return p[(static_cast<size_t>(s) * n_blocks + t) * n_blocks + m];
  }
  bool operator==(const ConstantsTable&) const = default;
};

// A quasi-schemoid: a category plus a partition whose concatenation fibers
// have constant cardinality blockwise.  For blocks sigma, tau and a morphism
// h, the fiber is {(f, g) : f in sigma, g in tau, tgt(g) = src(f),
// compose(f, g) = h}; f is the outer (left) factor and g the inner (right)
// one, so constants(s, t, m) counts factorizations h = f . g.
struct QSchemoid {
  FinCat cat;
  Partition partition;
  ConstantsTable constants;
  bool operator==(const QSchemoid& o) const {
    return cat == o.cat && partition == o.partition;
  }
};

// Checks the regularity condition and fills the constants table.  Throws
// regularity_violation naming (sigma, tau, mu, f, g) and both fiber sizes.
QSchemoid validate_schemoid(FinCat cat, Partition partition);

const ConstantsTable& structure_constants(const QSchemoid& q);

// An association scheme on points 0..n-1.  relation(x, y) is the index of
// the class containing (x, y); class 0 is the diagonal.
struct AssocScheme {
  int n_points = 0;
  int n_relations = 0;
  std::vector<int> relation;   // flat n*n
  std::vector<int> transpose;  // relation -> relation
  ConstantsTable constants;    // constants(e, f, g) = p_{ef}^g

  int rel(int x, int y) const { return relation[x * n_points + y]; }
};

// Validates the scheme axioms: diagonal is exactly class 0, classes are
// dense and nonempty, each class transpose is again a class, and the
// intersection numbers p_{ef}^g = #{y : (x,y) in e, (y,z) in f} do not
// depend on the choice of (x, z) in g.
AssocScheme validate_scheme(int n_points, std::vector<int> relation);

// The scheme whose classes are the diagonal and (for n >= 2) everything else.
AssocScheme trivial_scheme(int n_points);

// A functor that maps every block of the source partition into a single
// block of the target partition.
struct SchemoidMorphism {
  Functor fun;
  std::vector<block_t> block_image;
  bool operator==(const SchemoidMorphism& o) const { return fun == o.fun; }
  bool operator<(const SchemoidMorphism& o) const { return fun < o.fun; }
};

// Validates f as a functor a.cat -> b.cat and computes block_image; throws
// block_split naming a block and two morphisms with differently colored
// images.
SchemoidMorphism validate_morphism(const QSchemoid& a, const QSchemoid& b, Functor f);

SchemoidMorphism identity_morphism(const QSchemoid& a);
// Sends every object to x0 and every morphism to the identity at x0.
SchemoidMorphism constant_morphism(const QSchemoid& a, const QSchemoid& b, obj_t x0);
// g after f, for f : a -> b and g : b -> c.
SchemoidMorphism compose_morphisms(const QSchemoid& a, const QSchemoid& b,
                                   const QSchemoid& c, const SchemoidMorphism& g,
                                   const SchemoidMorphism& f);

}  // namespace schemoid

#endif  // SCHEMOID_SCHEMOID_HPP
