#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdgl/dgl.hpp"
#include "cdgl/simplicial.hpp"

namespace cdgl {

/// "a" followed by the vertex indices ("a012"); indices are separated by "_"
/// when any of them has more than one digit ("a3_10").
std::string simplex_name(const Simplex& s);

/// Generators a, b (degree -1) and x (degree 0) with
/// d a = -1/2[a,a], d b = -1/2[b,b],
/// d x = ad_x b + sum_n B_n/n! ad_x^n (b - a).
DgLie ls_interval(int truncation);

/// Builds and caches the differentials of the top generators of ℒ_{Δ^p}.
/// Models of complexes are assembled by relabelling these along the face
/// inclusions.
class ModelBuilder {
 public:
  explicit ModelBuilder(int truncation) : truncation_(truncation) {}

  int truncation() const { return truncation_; }

  /// Differential of a_{0...p} in ℒ_{Δ^p}, over the alphabet of Δ^p.
  const LieElement& top_differential(int p);

  /// ℒ_X for X presented inside Δ^{n-1}, n = vertex count.
  DgLie model(const SimplicialComplex& X);

 private:
  int truncation_;
  std::map<int, LieElement> tops_;
};

DgLie model_of_simplex(int n, int truncation);
DgLie model_of_complex(const SimplicialComplex& X, int truncation);

/// Alphabet of ℒ_X, with the simplex labels of its generators.
AlphabetPtr model_alphabet(const SimplicialComplex& X);

/// ℒ_f for a simplicial map f: X -> Y that is order preserving on every
/// simplex: a_σ ↦ a_{f(σ)} when f is injective on σ, and 0 otherwise. Throws
/// AlgebraError if f is not simplicial or order preserving, or if the result
/// is not a chain map.
LieMorphism model_of_map(const SimplicialMap& f, const SimplicialComplex& X, const DgLie& LX,
                         const SimplicialComplex& Y, const DgLie& LY);

struct SurfaceSpec {
  /// Names of the degree 0 circle generators.
  std::vector<std::string> generators;
  /// Attaching word: (generator index, exponent ±1).
  std::vector<std::pair<int, int>> word;
  std::string cell = "y";
};

/// Generators x_i (degree 0, d x_i = 0) and the 2-cell generator (degree 1)
/// with d y = x_{i_1}^{e_1} * ... * x_{i_p}^{e_p}, where * is the BCH product
/// and x^{-1} = -x.
DgLie surface_model(const SurfaceSpec& spec, int truncation);

/// The path x ↦ bch(p1(x), p2(x)), a ↦ p1(a), b ↦ p2(b). Both paths are
/// morphisms out of ls_interval. Throws AlgebraError unless p1(b) = p2(a).
LieMorphism compose_paths(const LieMorphism& p1, const LieMorphism& p2);

}  // namespace cdgl
