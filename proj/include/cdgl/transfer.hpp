#pragma once

#include <vector>

#include "cdgl/dgl.hpp"

namespace cdgl {

/// Transfer of a truncated free dg Lie algebra onto the free Lie algebra on
/// the homology of its linear part.
///
/// The generators are first changed linearly to c, b = d_1 c and z (d_1-cycle
/// representatives), which makes the tensor-trick homotopy of d_1 explicit.
/// Perturbing by d - d_1 then gives a complex (𝕃(Z), d_∞) with the same
/// homology as L / L^{>N}, and a chain map i_∞ back into L. d_∞ is only
/// linear: it is not a derivation.
class HomologyTransfer {
 public:
  explicit HomologyTransfer(const DgLie& L);

  /// The letters z, named z0, z1, ..., with their degrees.
  const AlphabetPtr& homology_alphabet() const { return z_alphabet_; }
  int truncation() const { return truncation_; }

  /// d_∞ on an element of 𝕃(Z).
  LieElement differential(const LieElement& x) const;
  /// i_∞(x), written in the generators of the original algebra.
  LieElement include(const LieElement& x) const;

 private:
  LieElement homotopy(const LieElement& x) const;
  LieElement perturbation(const LieElement& x) const;
  LieElement series(const LieElement& x) const;

  int truncation_;
  DgLie split_;
  DgLie split_linear_;
  LieMorphism to_original_;
  LieMorphism to_z_;
  LieMorphism from_z_;
  AlphabetPtr z_alphabet_;
  std::vector<int> partner_;  // b letter -> its c letter, else -1
  std::vector<bool> is_z_;
};

}  // namespace cdgl
