#ifndef SCHEMOID_FINCAT_HPP
#define SCHEMOID_FINCAT_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "schemoid/errors.hpp"

namespace schemoid {

using obj_t = int;
using mor_t = int;
using block_t = int;

// Bounds for the exhaustive searches.  max_universe limits the number of
// functors / morphisms an enumeration may return; max_objects limits the
// object count of any category a search backtracks over.
struct SearchCaps {
  int max_objects = 8;
  long max_universe = 20000;
};

struct MorphismData {
  obj_t src = 0;
  obj_t tgt = 0;
  bool operator==(const MorphismData&) const = default;
};

// Unchecked description of a finite category, as read from a file or built
// by hand.  Composite entries are (g, f, gf) meaning "f then g equals gf";
// identities are not listed, validate_category discovers them from the
// unit laws.
struct RawCategory {
  int n_objects = 0;
  std::vector<MorphismData> morphisms;
  std::vector<std::array<mor_t, 3>> composites;
};

// A validated finite category.  Objects and morphisms are dense integer
// indices; compose(g, f) is "apply f, then g" and is defined exactly when
// tgt(f) == src(g).  Instances are immutable once built.
class FinCat {
 public:
  FinCat() = default;
  // Trusted constructor used by validate_category and the schemoid
  // constructors; comp is the flat m*m table with -1 where undefined.
  FinCat(int n_objects, std::vector<MorphismData> morphisms,
         std::vector<mor_t> identity, std::vector<mor_t> comp);

  int n_objects() const { return n_objects_; }
  int n_morphisms() const { return static_cast<int>(morphisms_.size()); }
  obj_t src(mor_t m) const { return morphisms_[m].src; }
  obj_t tgt(mor_t m) const { return morphisms_[m].tgt; }
  mor_t identity(obj_t x) const { return identity_[x]; }
  bool is_identity(mor_t m) const { return identity_[src(m)] == m && src(m) == tgt(m); }
  bool composable(mor_t g, mor_t f) const { return src(g) == tgt(f); }
  // g after f; -1 when not composable.
  mor_t compose(mor_t g, mor_t f) const {
    return comp_[static_cast<size_t>(g) * morphisms_.size() + f];
  }
  // Morphisms x -> y in increasing index order.
  std::span<const mor_t> hom(obj_t x, obj_t y) const {
    return hom_sets_[static_cast<size_t>(x) * n_objects_ + y];
  }
  const std::vector<MorphismData>& morphisms() const { return morphisms_; }

  bool operator==(const FinCat& other) const {
    return n_objects_ == other.n_objects_ && morphisms_ == other.morphisms_ &&
           identity_ == other.identity_ && comp_ == other.comp_;
  }

 private:
  int n_objects_ = 0;
  std::vector<MorphismData> morphisms_;
  std::vector<mor_t> identity_;
  std::vector<mor_t> comp_;
  std::vector<std::vector<mor_t>> hom_sets_;
};

// Checks index ranges, totality of the composition table on composable
// pairs, the unit laws (identities are discovered, one per object) and
// associativity.  Throws error with kinds dangling_index, src_tgt_violation,
// missing_composite, conflicting_composite, identity_violation,
// associativity_violation.
FinCat validate_category(const RawCategory& raw);

// Independent re-check of an already built FinCat (used on constructor
// outputs); throws like validate_category.
void check_category(const FinCat& c);

FinCat product_category(const FinCat& a, const FinCat& b);

// The one-object, one-morphism category.
FinCat trivial_category();
// [1]: objects 0, 1; morphisms 1_0, 1_1 and u : 0 -> 1 (index 2).
FinCat interval_category();

// A finite group as a Cayley table; element 0 is the identity.
struct FinGroup {
  int order = 0;
  std::vector<int> cayley;  // flat order*order, cayley[a*order+b] = a*b
  std::vector<int> inverse;

  int mul(int a, int b) const { return cayley[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  bool operator==(const FinGroup&) const = default;
};

FinGroup validate_group(int order, std::vector<int> cayley);

// A groupoid: a finite category in which every morphism is invertible.
struct FinGroupoid {
  FinCat cat;
  std::vector<mor_t> inverse;
};

// Derives the inverse table; throws inverse_missing naming the morphism.
FinGroupoid validate_groupoid(FinCat cat);

// A functor between two fixed categories, stored as its index maps.  The
// ambient categories are passed to every operation; equality of functors is
// equality of the maps.
struct Functor {
  std::vector<obj_t> obj_map;
  std::vector<mor_t> mor_map;
  bool operator==(const Functor&) const = default;
  bool operator<(const Functor& o) const {
    return obj_map != o.obj_map ? obj_map < o.obj_map : mor_map < o.mor_map;
  }
};

// Checks that f preserves src/tgt, identities and composition.
Functor validate_functor(const FinCat& c, const FinCat& d, Functor f);

Functor identity_functor(const FinCat& c);
// g after f.
Functor compose_functors(const Functor& g, const Functor& f);

// Searches for a family eta_x : f(x) -> g(x) with
// g(m) . eta_{src m} = eta_{tgt m} . f(m) for every morphism m.  Exhaustive
// backtracking in increasing (object, candidate-morphism) order; returns the
// lexicographically least witness.
std::optional<std::vector<mor_t>> natural_transformation(const FinCat& c,
                                                         const FinCat& d,
                                                         const Functor& f,
                                                         const Functor& g);

// All functors c -> d, lexicographically ordered by (obj_map, mor_map).
// Throws universe_too_large past caps.max_universe.
std::vector<Functor> enumerate_functors(const FinCat& c, const FinCat& d,
                                        const SearchCaps& caps = {});

// Strong homotopy in Cat: f ~ g iff they are connected in the graph on the
// given functor universe whose edges are natural transformations in either
// direction.  universe must contain f and g.
bool cat_strong_homotopic(const FinCat& c, const FinCat& d, const Functor& f,
                          const Functor& g,
                          const std::vector<Functor>& universe);

namespace detail {

// Shared backtracking engine.  When src_color/tgt_color are given, only
// functors mapping equally colored source morphisms to equally colored
// target morphisms are produced (the schemoid layer passes partitions as
// colorings).  cap_kind selects the exception used when the cap trips.
std::vector<Functor> enumerate_functors_constrained(
    const FinCat& c, const FinCat& d, const SearchCaps& caps,
    const std::vector<block_t>* src_color, const std::vector<block_t>* tgt_color,
    errc cap_kind);

}  // namespace detail

}  // namespace schemoid

#endif  // SCHEMOID_FINCAT_HPP
