#ifndef SCHEMOID_CONSTRUCTORS_HPP
#define SCHEMOID_CONSTRUCTORS_HPP

#include <optional>
#include <utility>

#include "schemoid/schemoid.hpp"

namespace schemoid {

// K: the discrete schemoid, one singleton block per morphism (block index =
// morphism index).
QSchemoid discrete_k(FinCat c);

// U: the underlying category.
const FinCat& forget_u(const QSchemoid& q);

// The thin schemoid of an association scheme: objects are the points,
// morphism x*n + y is the pair (x, y) : y -> x, (z, x) . (x, y) = (z, y),
// and block indices equal relation indices.
QSchemoid jmath(const AssocScheme& a);

// The scheme of a group: (k, l) lies in the class of the element k^{-1} l.
// Class indices equal element indices, so class 0 is the diagonal.
AssocScheme scheme_of_group(const FinGroup& g);

// A group as a one-object groupoid; morphism composition a . b is the
// product a*b.
FinGroupoid iota(const FinGroup& g);

// The schemoid of a groupoid together with the data needed to talk about it
// in groupoid terms: object i of q is morphism i of h, the unique morphism
// i -> j of q is the pair (j, i) (present iff t(j) = t(i) in h), and its
// block is the class of j^{-1} i.  Block indices equal h-morphism indices.
struct StildeSchemoid {
  QSchemoid q;
  FinGroupoid h;
  // q-morphism -> (j, i) with j = tgt object, i = src object.
  std::pair<mor_t, mor_t> pair_of(mor_t m) const {
    return {q.cat.tgt(m), q.cat.src(m)};
  }
};

StildeSchemoid stilde(const FinGroupoid& h);

// Product schemoid; blocks are pairs, indexed a-major.
QSchemoid product_schemoid(const QSchemoid& a, const QSchemoid& b);

// a x I with I = K([1]), plus the two end inclusions.
struct Cylinder {
  QSchemoid total;
  SchemoidMorphism end0;
  SchemoidMorphism end1;
};

Cylinder cylinder(const QSchemoid& a);
// The projection a x I -> a (a schemoid morphism; end0/end1 followed by it
// give the identity).
SchemoidMorphism cylinder_projection(const QSchemoid& a, const Cylinder& cyl);

// Searches for an invertible schemoid morphism a -> b whose block image is a
// bijection.  Deterministic backtracking over object bijections and then
// morphism images in increasing index order; the first (lexicographically
// least) witness is returned together with its inverse.
std::optional<std::pair<SchemoidMorphism, SchemoidMorphism>> find_isomorphism(
    const QSchemoid& a, const QSchemoid& b, const SearchCaps& caps = {});

}  // namespace schemoid

#endif  // SCHEMOID_CONSTRUCTORS_HPP
