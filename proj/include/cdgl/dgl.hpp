#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgl/morphism.hpp"

namespace cdgl {

/// A free complete dg Lie algebra presentation, truncated at word length N.
class DgLie {
 public:
  DgLie() = default;
  /// Throws AlgebraError if an image has the wrong degree.
  DgLie(AlphabetPtr alphabet, int truncation, std::vector<LieElement> differential);
  explicit DgLie(LieDerivation differential);

  static DgLie from_named(const std::vector<GradedGenerator>& generators, int truncation,
                          const std::map<std::string, LieElement>& differential);
  /// Same generators with zero differential.
  static DgLie free(const std::vector<GradedGenerator>& generators, int truncation);

  const AlphabetPtr& alphabet() const { return d_.alphabet(); }
  int truncation() const { return d_.truncation(); }
  const LieDerivation& differential() const { return d_; }
  LieElement d(const LieElement& x) const { return d_.apply(x); }
  const LieElement& d_of(const std::string& name) const { return d_.image(name); }

  LieElement gen(const std::string& name) const;
  LieElement zero() const;

  /// Name of the MC element this differential was perturbed by, if any.
  const std::string& perturbation() const { return perturbation_; }
  void set_perturbation(std::string tag) { perturbation_ = std::move(tag); }

  /// Optional simplex label per generator (models of complexes).
  const std::map<std::string, std::vector<int>>& simplex_labels() const { return labels_; }
  void set_simplex_labels(std::map<std::string, std::vector<int>> labels) { labels_ = std::move(labels); }

  /// Same presentation viewed at a smaller truncation.
  DgLie truncated_to(int n) const;

 private:
  LieDerivation d_;
  std::string perturbation_;
  std::map<std::string, std::vector<int>> labels_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks d^2 = 0 on generators, that every differential value is a Lie
/// element, and that d has no component of word length 0.
ValidationReport validate(const DgLie& L);
/// Same, for a presentation that may not even have consistent degrees.
ValidationReport validate_presentation(const std::vector<GradedGenerator>& generators, int truncation,
                                       const std::map<std::string, LieElement>& differential);

/// d a = -1/2 [a, a]. Throws AlgebraError when a is nonzero of degree != -1.
bool is_mc(const DgLie& L, const LieElement& a);
LieElement mc_residual(const DgLie& L, const LieElement& a);

/// d_a = d + ad_a. Throws AlgebraError when a is not MC.
DgLie perturb(const DgLie& L, const LieElement& a, std::string tag = {});

/// f ∘ d_source = d_target ∘ f on every generator.
bool is_chain_map(const LieMorphism& f, const DgLie& source, const DgLie& target);
/// Generators on which the chain-map identity fails, with the residual.
std::vector<std::pair<std::string, LieElement>> chain_map_defects(const LieMorphism& f, const DgLie& source,
                                                                   const DgLie& target);

/// Free product; throws AlgebraError on a generator name clash or on different
/// truncations. The inclusions are the by-name morphisms.
DgLie coproduct(const DgLie& a, const DgLie& b);

struct Extension {
  DgLie algebra;
  LieMorphism inclusion;
};

/// L ⊔ L̂(U ⊕ sU) with d(s u) = u, d(u) = 0. The generator s u is named
/// "s" + name(u) and has degree |u| + 1.
Extension acyclic_extension(const DgLie& L, const std::vector<GradedGenerator>& U);

struct Quotient {
  DgLie algebra;
  /// L -> quotient.
  LieMorphism projection;
  /// Change of generators φ on the full algebra: φ(g_i) = killed element i,
  /// the identity on the other generators.
  LieMorphism change_of_generators;
  /// Names of the generators replaced by the killed elements.
  std::vector<std::string> killed_generators;
};

/// Quotient by the ideal generated by `kill`, whose linear parts must be
/// independent. Throws AlgebraError if the ideal is not closed under d at the
/// truncation.
Quotient quotient_by_generators(const DgLie& L, const std::vector<LieElement>& kill);

/// True iff every word of x contains one of the given letters, i.e. x lies in
/// the ideal generated by those generators.
bool in_generator_ideal(const LieElement& x, const std::vector<int>& letters);

}  // namespace cdgl
