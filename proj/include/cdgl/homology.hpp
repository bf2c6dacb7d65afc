#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cdgl/dgl.hpp"

namespace cdgl {

struct HomologyDegree {
  int degree = 0;
  std::size_t dim = 0;
  /// Same dimension at truncation N - 1 (false when N = 1).
  bool stable = false;
  /// Rank of the restriction H(L/L^{>N}) -> H(L/L^{>N-1}): classes that are
  /// not represented by a cycle of word length exactly N. Zero when N = 1.
  std::size_t persistent = 0;
  /// Cycles whose classes form a basis of H in this degree.
  std::vector<LieElement> representatives;
  /// profile[k] = number of representatives whose shortest word has length k.
  std::map<int, std::size_t> profile;
};

struct HomologyOptions {
  bool representatives = true;
  bool stability = true;
  /// Eliminate on the whole truncated complex rather than on its transfer
  /// to the free Lie algebra on H(V, d_1). Much slower; kept as a cross-check.
  bool direct = false;
};

/// Homology of the truncated complex L/L^{>N} in degrees lo..hi.
std::vector<HomologyDegree> homology(const DgLie& L, int lo, int hi, HomologyOptions options = {});

/// Dimensions only, without stability or representatives.
std::map<int, std::size_t> homology_dimensions(const DgLie& L, int lo, int hi, bool direct = false);

/// Finds z' in the source of p with d z' = 0 and p(z') = z. Throws SolveError
/// naming the degree and the shortest failing word length.
LieElement lift_cycle(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieElement& z);

/// Given z' with p(z') = d x, finds x' with d x' = z' and p(x') = x.
LieElement lift_boundary(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieElement& z_prime,
                         const LieElement& x);

/// One linear condition map(d(y)) = value on an unknown y; either step may be
/// absent (nullptr means the identity / no differential).
struct LinearCondition {
  const LieMorphism* map = nullptr;
  const DgLie* differential_of = nullptr;
  LieElement value;
};

/// Solves all conditions at once for a Lie element y of the given degree over
/// `alphabet`. The solution is the one produced by the deterministic
/// elimination order. Throws SolveError naming the shortest failing word
/// length; `what` prefixes the message. With only_length > 0 the unknown is
/// restricted to words of that length.
LieElement solve_for_element(const AlphabetPtr& alphabet, int truncation, int degree,
                             const std::vector<LinearCondition>& conditions, const char* what, int only_length = 0);

/// Solves d y = x for y of the given degree one word length at a time, each
/// step using only the linear part of d. Throws SolveError when some length
/// has no solution.
LieElement solve_boundary_by_length(const DgLie& L, const LieElement& x, int degree, const char* what);

/// Contraction of the generators (V, d_1) onto a homology complement:
/// d_1 h + h d_1 = 1 - p, with p the projection onto chosen homology
/// representatives. Extended to words by the tensor trick, it gives a
/// null-homotopy of d_1 on every word length where p^{⊗k} vanishes.
class LinearContraction {
 public:
  explicit LinearContraction(const DgLie& L);

  /// h on words, extended by h ⊗ 1 + (-1)^{|u|} p ⊗ H.
  LieElement homotopy(const LieElement& x) const;
  /// A Lie element y with d_1 y = x for a d_1-cycle x of one word length,
  /// or std::nullopt when the tensor homotopy does not bound x.
  std::optional<LieElement> bound(const LieElement& x) const;

 private:
  DgLie d1_;
  std::vector<std::vector<std::pair<int, Rational>>> h_;
  std::vector<std::vector<std::pair<int, Rational>>> p_;
};

/// The linear part d_1 of the differential, as a dg Lie algebra.
DgLie linear_part(const DgLie& L);

}  // namespace cdgl
