#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdgl/lie_element.hpp"

namespace cdgl {

/// Algebra morphism between free algebras, given by the images of the source
/// generators and extended multiplicatively.
class LieMorphism {
 public:
  LieMorphism() = default;
  /// images[i] is the image of source generator i. Throws AlgebraError on
  /// degree mismatch or a wrong number of images.
  LieMorphism(AlphabetPtr source, AlphabetPtr target, int truncation, std::vector<LieElement> images);

  static LieMorphism identity(const AlphabetPtr& alphabet, int truncation);
  /// Generators missing from `images` are sent to zero.
  static LieMorphism from_named(const AlphabetPtr& source, const AlphabetPtr& target, int truncation,
                                const std::map<std::string, LieElement>& images);
  /// Sends each source generator to the target generator of the same name, or
  /// to zero when the target has no such generator.
  static LieMorphism by_name(const AlphabetPtr& source, const AlphabetPtr& target, int truncation);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  int truncation() const { return truncation_; }
  const std::vector<LieElement>& images() const { return images_; }
  const LieElement& image(int index) const { return images_.at(index); }
  const LieElement& image(const std::string& name) const { return images_.at(source_->index_of(name)); }

  LieElement apply(const LieElement& x) const;

  friend bool operator==(const LieMorphism&, const LieMorphism&);

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  int truncation_ = 0;
  std::vector<LieElement> images_;
};

/// f ∘ g.
LieMorphism compose(const LieMorphism& f, const LieMorphism& g);

/// Inverse up to the truncation, built from the inverse of the linear part by
/// successive correction. Throws AlgebraError if the linear part is not
/// invertible.
LieMorphism invert_morphism(const LieMorphism& f);

/// A derivation of the given degree, determined by generator images and
/// extended by the graded Leibniz rule.
class LieDerivation {
 public:
  LieDerivation() = default;
  LieDerivation(AlphabetPtr alphabet, int truncation, int degree, std::vector<LieElement> images);

  static LieDerivation zero(const AlphabetPtr& alphabet, int truncation, int degree);
  static LieDerivation from_named(const AlphabetPtr& alphabet, int truncation, int degree,
                                  const std::map<std::string, LieElement>& images);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  int degree() const { return degree_; }
  const std::vector<LieElement>& images() const { return images_; }
  const LieElement& image(int index) const { return images_.at(index); }
  const LieElement& image(const std::string& name) const { return images_.at(alphabet_->index_of(name)); }

  LieElement apply(const LieElement& x) const;

  friend bool operator==(const LieDerivation&, const LieDerivation&);

 private:
  AlphabetPtr alphabet_;
  int truncation_ = 0;
  int degree_ = 0;
  std::vector<LieElement> images_;
};

/// The derivation v -> D(E(v)) - (-1)^{|D||E|} E(D(v)), i.e. the graded
/// commutator [D, E] evaluated on generators.
LieDerivation commutator(const LieDerivation& d, const LieDerivation& e);

/// sum_k D^k(x)/k!; D must have degree 0. Throws SolveError if the series does
/// not terminate within the truncation.
LieElement exp_derivation(const LieDerivation& d, const LieElement& x);

/// The morphism e^D, obtained by exponentiating on each generator.
LieMorphism exp_derivation_morphism(const LieDerivation& d);

/// Conjugated derivation f^{-1} ∘ D ∘ f as a derivation on the source of f,
/// given g = f^{-1}.
LieDerivation conjugate(const LieMorphism& g, const LieDerivation& d, const LieMorphism& f);

}  // namespace cdgl
