#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgl/dgl.hpp"
#include "cdgl/homology.hpp"
#include "cdgl/simplicial.hpp"

namespace cdgl {

/// Element of L ⊗ Λ(t, dt): sum_k x_k t^k + sum_k y_k t^k dt, with the Lie
/// coefficient written on the left. |t| = 0 and |dt| = -1, so a homogeneous
/// element of degree n has plain coefficients of degree n and dt coefficients
/// of degree n + 1. Exponents above the truncation are rejected.
class PolyElement {
 public:
  PolyElement() = default;
  PolyElement(AlphabetPtr alphabet, int truncation);
  static PolyElement constant(const LieElement& x);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const std::map<int, LieElement>& plain() const { return plain_; }
  const std::map<int, LieElement>& dt() const { return dt_; }
  LieElement plain_coefficient(int k) const;
  LieElement dt_coefficient(int k) const;
  /// Adds x t^k (resp. x t^k dt). Throws AlgebraError when k exceeds the
  /// truncation.
  void add_plain(int k, const LieElement& x);
  void add_dt(int k, const LieElement& x);
  bool is_zero() const { return plain_.empty() && dt_.empty(); }

  /// ε_0 (t = 0) and ε_1 (t = 1); both kill dt.
  LieElement at_zero() const;
  LieElement at_one() const;

  PolyElement operator-() const;
  PolyElement& operator+=(const PolyElement& other);
  PolyElement& operator-=(const PolyElement& other);
  PolyElement& operator*=(const Rational& c);
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(const Rational& c, PolyElement a) { return a *= c; }
  friend bool operator==(const PolyElement& a, const PolyElement& b);

 private:
  static void add_to(std::map<int, LieElement>& part, int k, const LieElement& x);

  AlphabetPtr alphabet_;
  int truncation_ = 0;
  std::map<int, LieElement> plain_;
  std::map<int, LieElement> dt_;
};

/// [x ⊗ a, y ⊗ b] = (-1)^{|a||y|} [x, y] ⊗ ab.
PolyElement bracket(const PolyElement& x, const PolyElement& y);
/// f ⊗ id.
PolyElement apply(const LieMorphism& f, const PolyElement& x);

/// The dg Lie algebra L ⊗ Λ(t, dt), with d(x t^k) = dx t^k + (-1)^{|x|} k x t^{k-1} dt.
class TensorLambda {
 public:
  explicit TensorLambda(DgLie L) : L_(std::move(L)) {}
  const DgLie& base() const { return L_; }
  PolyElement d(const PolyElement& x) const;
  /// d g + 1/2 [g, g].
  PolyElement mc_residual(const PolyElement& g) const;
  bool is_mc(const PolyElement& g) const { return mc_residual(g).is_zero(); }

 private:
  DgLie L_;
};

TensorLambda tensor_lambda(const DgLie& L);

/// The MC element g(w) = (f ⊗ id)(Φ(w)) of L ⊗ Λ(t, dt) attached to a path
/// f: ls_interval -> L, where
/// Φ(w) = x dt + e^{ad_{-tx}}(a) + ((e^{ad_{-tx}} - 1)/ad_{-x})(∂x).
/// Throws AlgebraError if f is not a chain map.
PolyElement left_to_right(const LieMorphism& f, const DgLie& target);

/// Path with f(a) = ε_0(g), f(b) = ε_1(g) and f(x) the holonomy of the dt
/// part of g: the value at t = 1 of the solution of X' = (ad_X/(1 - e^{-ad_X}))(β),
/// X(0) = 0, where g = α + β dt. Throws AlgebraError if g is not MC.
LieMorphism right_to_left(const PolyElement& g, const DgLie& L);

struct McReduction {
  LieElement y0;
  /// α with ε_0(α) = y0 and ε_1(α) = y.
  PolyElement gauge;
};

/// For B = A ⊔ L̂(U ⊕ sU) (generators u and "s" + u) and an MC element y of B:
/// y0 is the part of y without letters of U ⊕ sU, and the gauge is
/// sum_n y_n t^n + sum_n s(y_{n+1}) t^n dt, where y_n has n such letters.
/// Throws AlgebraError if y is not MC or a name of U is missing.
McReduction mc_reduce(const DgLie& B, const std::vector<std::string>& U, const LieElement& y);

/// The isomorphism ψ: (L̂(a, b, x), ∂) -> (L̂(a, u, su), d) with ψ(a) = a,
/// ψ(x) = su, ψ(b) = e^θ(a), θ = id + di for the derivation i(a) = su.
struct LsIsomorphism {
  DgLie interval;
  DgLie acyclic;  // generators a, u, su
  LieMorphism psi;
  /// ψ^{-1}(a) = a, ψ^{-1}(su) = x, ψ^{-1}(u) = ∂x.
  LieMorphism psi_inverse;
};
LsIsomorphism ls_isomorphism(int truncation);

/// A path h into the source of p with h(a) = c and p∘h = f, obtained as ρ∘ψ
/// for ρ(a) = c, ρ(su) = y, ρ(u) = dy, where p(y) = f(x). The preimage y is
/// solved for unless supplied. Throws SolveError if no preimage exists and
/// AlgebraError if the data are inconsistent.
LieMorphism lift_path(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieMorphism& f,
                      const LieElement& c, const std::optional<LieElement>& preimage = std::nullopt);

/// A path h with h(a) = u, h(b) = v and p∘h = f: the lift h' of f starting at
/// u, followed by the caller's connecting path from h'(b) to v, followed by
/// the loop at v through a d_v-cycle c lifting -p(connecting(x)).
LieMorphism lift_path_endpoints(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieMorphism& f,
                                const LieElement& u, const LieElement& v, const LieMorphism& connecting);

/// Cyl(L) on V ⊕ V̂ ⊕ V̄. A generator v gives v^ (degree |v|) and v~ (degree
/// |v| + 1); the auxiliary algebra L̂(V ⊕ V' ⊕ sV') uses v' and sv'.
struct CylinderTriple {
  DgLie cylinder;
  /// λ_0(v) = v and λ_1(v) = v^, i.e. e^θ(v) read through ψ^{-1}.
  LieMorphism lambda0;
  LieMorphism lambda1;
  /// p(v) = p(v^) = v, p(v~) = 0.
  LieMorphism projection;
  DgLie auxiliary;
  /// ψ(v) = v, ψ(v^) = e^θ(v), ψ(v~) = sv'.
  LieMorphism psi;
  LieMorphism psi_inverse;
};
CylinderTriple cylinder(const DgLie& L);

/// The cone on a model ℒ_X: Cyl(ℒ_X) modulo v^_i - v^_0 for the vertices and
/// the hatted generators of positive dimension, relabelled onto Cone(X) (apex
/// = one more than the largest vertex) by a_{σ n} = (-1)^{dim σ} a~_σ and
/// a_n = a^_0. Throws AlgebraError if the ideal is not closed under D.
DgLie cone_dgl(const DgLie& LX);

struct Factorization {
  DgLie middle;
  LieMorphism inclusion;
  LieMorphism projection;
};
/// f = p∘ι through L ⊔ L̂(W): for each generator g of the target, W has
/// "sd" + g (degree |g|) with d(sd g) = "d" + g, and p(sd g) = g,
/// p(d g) = d g, p = f on L.
Factorization factorize(const LieMorphism& f, const DgLie& source, const DgLie& target);

struct HomotopyData {
  CylinderTriple cylinder;
  /// ℓ: Cyl(ℒ_X) -> ℒ_{X × I} with ℓ∘λ_k = ℒ_{j_k} and ℒ_p∘ℓ = p.
  LieMorphism lift;
  /// F = ℒ_H∘ℓ.
  LieMorphism homotopy;
  LieMorphism model_f;
  LieMorphism model_g;
};
/// Algebraic homotopy between ℒ_f and ℒ_g from a simplicial homotopy H on the
/// prism of X (vertex (v, e) numbered 2v + e). Throws InputError if H does not
/// restrict to f and g, and SolveError naming the generator if a lift fails.
HomotopyData build_homotopy(const SimplicialComplex& X, const SimplicialComplex& Y, const SimplicialMap& f,
                            const SimplicialMap& g, const SimplicialMap& H, int truncation);

struct WeakEquivalenceDegree {
  int degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool source_stable = false;
  bool target_stable = false;
  std::size_t source_persistent = 0;
  std::size_t target_persistent = 0;
  /// Equal persistent ranks, and equal dimensions when both are stable.
  bool agrees() const;
};
struct WeakEquivalencePair {
  LieElement source_mc;
  LieElement target_mc;
  std::vector<WeakEquivalenceDegree> degrees;
};
struct WeakEquivalenceReport {
  bool ok = true;
  std::vector<WeakEquivalencePair> pairs;
};
/// Compares H(source, d_m) and H(target, d_{f(m)}) for the given MC pairs
/// only. Throws AlgebraError if f is not a chain map or f(m) differs from the
/// paired element.
WeakEquivalenceReport is_weak_equivalence_rel(const LieMorphism& f, const DgLie& source, const DgLie& target,
                                              const std::vector<std::pair<LieElement, LieElement>>& mc_pairs, int lo,
                                              int hi);

}  // namespace cdgl
