#ifndef SCHEMOID_HOMOTOPY_HPP
#define SCHEMOID_HOMOTOPY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "schemoid/constructors.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid {

// Certificate for an elementary homotopy from f to g between morphisms
// a -> b.  diag[x] : f(x) -> g(x) determines the whole morphism
// H : a x I -> b via H(m, u) = g(m) . diag[src m] = diag[tgt m] . f(m); the
// certificate is valid when every such square commutes and, for every block
// of a, all the diagonals over that block land in one block of b (the
// diagonals over identity morphisms are the diag[x] themselves, so top and
// bottom arrows are covered by the same check).
struct Homotopy {
  SchemoidMorphism from;
  SchemoidMorphism to;
  std::vector<mor_t> diag;
};

// Searches for a certificate in increasing (object, candidate) order and
// returns the lexicographically least diag, or nullopt.
std::optional<Homotopy> elementary_homotopy(const QSchemoid& a, const QSchemoid& b,
                                            const SchemoidMorphism& f,
                                            const SchemoidMorphism& g);

// Rebuilds the certificate as an explicit morphism a x I -> b on the given
// cylinder; validate_morphism is run, so an invalid certificate throws.
SchemoidMorphism reconstruct_homotopy(const QSchemoid& a, const QSchemoid& b,
                                      const Cylinder& cyl, const Homotopy& h);

// All schemoid morphisms a -> b, ordered lexicographically by
// (obj_map, mor_map).  Throws search_cap_exceeded past caps.max_universe.
std::vector<SchemoidMorphism> enumerate_morphisms(const QSchemoid& a,
                                                  const QSchemoid& b,
                                                  const SearchCaps& caps = {});

// One edge of a zigzag: forward means nodes[k] => nodes[k+1].
struct ChainStep {
  bool forward = true;
  Homotopy cert;
};

struct HomotopyChain {
  std::vector<SchemoidMorphism> nodes;  // nodes.size() == steps.size() + 1
  std::vector<ChainStep> steps;
  const SchemoidMorphism& front() const { return nodes.front(); }
  const SchemoidMorphism& back() const { return nodes.back(); }
  int length() const { return static_cast<int>(steps.size()); }
};

HomotopyChain trivial_chain(const SchemoidMorphism& f);

// Elementary-homotopy adjacency over a fixed universe of morphisms a -> b.
// fwd(i, j) stores the certificate for universe[i] => universe[j] when one
// exists.  Pair computation may run on several threads; the result does not
// depend on the schedule.
struct HomotopyGraph {
  int n = 0;
  std::vector<std::optional<std::vector<mor_t>>> diag;  // flat n*n
  bool has_edge(int i, int j) const { return diag[static_cast<size_t>(i) * n + j].has_value(); }
  bool adjacent(int i, int j) const { return has_edge(i, j) || has_edge(j, i); }
};

HomotopyGraph homotopy_graph(const QSchemoid& a, const QSchemoid& b,
                             const std::vector<SchemoidMorphism>& universe,
                             int threads = 1);

// f ~ g: connectivity in the zigzag graph on the universe, which must
// contain both (universe_mismatch otherwise).  Returns the witness chain of
// a shortest zigzag, with length 0 when f == g.
std::optional<HomotopyChain> homotopic(const QSchemoid& a, const QSchemoid& b,
                                       const SchemoidMorphism& f,
                                       const SchemoidMorphism& g,
                                       const std::vector<SchemoidMorphism>& universe,
                                       int threads = 1);

// Connected components of the zigzag graph; classes are numbered by least
// member, members ascend.
struct HomotopyClasses {
  std::vector<int> class_of;
  std::vector<std::vector<int>> members;
  int representative(int c) const { return members[c][0]; }
  int n_classes() const { return static_cast<int>(members.size()); }
};

HomotopyClasses homotopy_classes(const HomotopyGraph& graph);
HomotopyClasses homotopy_classes(const QSchemoid& a, const QSchemoid& b,
                                 const std::vector<SchemoidMorphism>& universe,
                                 int threads = 1);

// Whether some constant endomorphism is homotopic to the identity (then the
// point inclusion and the trivial morphism exhibit an equivalence with
// K(point)).  Explores the component of the identity lazily and stops at the
// first constant it reaches.
bool is_contractible(const QSchemoid& a, const SearchCaps& caps = {}, int threads = 1);

// Looks for blocks sigma, tau such that tau contains a non-identity morphism
// and p(sigma, tau; sigma) or p(tau, sigma; sigma) is nonzero; returns the
// first such pair in lexicographic order, or nullopt.
std::optional<std::pair<block_t, block_t>> collapse_obstruction(const QSchemoid& q);

// For morphisms between groupoid schemoids, an elementary homotopy
// phi => psi exists iff for every block all the values
// psi(j)^{-1} . phi(i) over morphisms (j, i) of that block are defined and
// equal.  Throws not_thin_schemoid when the morphisms do not fit the stilde
// data.
bool thin_homotopy_criterion(const StildeSchemoid& src, const StildeSchemoid& tgt,
                             const SchemoidMorphism& phi, const SchemoidMorphism& psi);

// Chain concatenation; endpoints must agree (endpoint_mismatch).
HomotopyChain vertical_compose(const HomotopyChain& first, const HomotopyChain& second);

// Whiskering: post- and pre-composition of a certificate with a morphism.
Homotopy whisker_left(const QSchemoid& a, const QSchemoid& b, const QSchemoid& c,
                      const SchemoidMorphism& p, const Homotopy& h);
Homotopy whisker_right(const QSchemoid& z, const QSchemoid& a, const QSchemoid& b,
                       const Homotopy& h, const SchemoidMorphism& q);
HomotopyChain whisker_left(const QSchemoid& a, const QSchemoid& b, const QSchemoid& c,
                           const SchemoidMorphism& p, const HomotopyChain& k);
HomotopyChain whisker_right(const QSchemoid& z, const QSchemoid& a, const QSchemoid& b,
                            const HomotopyChain& k, const SchemoidMorphism& q);

// Horizontal composite of nu : g1 => g2 (over d -> e) with
// kappa : f1 => f2 (over c -> d), realized as (nu f2) . (g1 kappa): first
// whisker kappa by g1 on the left, then nu by f2 on the right.  Throws
// boundary_mismatch when the 2-cells do not share the middle schemoid
// boundary.
HomotopyChain horizontal_compose(const QSchemoid& c, const QSchemoid& d,
                                 const QSchemoid& e, const HomotopyChain& nu,
                                 const HomotopyChain& kappa);

}  // namespace schemoid

#endif  // SCHEMOID_HOMOTOPY_HPP
