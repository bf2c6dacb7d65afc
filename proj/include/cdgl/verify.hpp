#pragma once

#include <random>
#include <string>
#include <vector>

#include "cdgl/dgl.hpp"
#include "cdgl/simplicial.hpp"

namespace cdgl {

struct Check {
  std::string name;
  bool ok = false;
  /// The failing identity or the exception message; empty on success.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int truncation = 0;
  std::vector<Check> checks;
  bool ok() const;
};

/// "ls", "cylinder", "mc", "models", "algebra".
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") at truncation N. The algebra suite draws its
/// random inputs from the given seed. Throws InputError for an unknown suite.
SuiteReport run_suite(const std::string& name, int truncation, unsigned seed = 1);

/// The characterization of ℒ_{Δ^n}, which fixes it only up to isomorphism,
/// checked on a candidate L whose generators are labelled by the simplices of
/// Δ^n: d² = 0, Lie differential values, vertices are MC, linear part =
/// desuspended boundary, and every face generates a sub-cDGL.
std::vector<Check> simplex_characterization(const DgLie& L, int n);

/// Compares the face of L spanned by `face` (vertices of L listed in order)
/// with face_model after renaming a_τ to a_{face(τ)}. Returns the first
/// differing differential, or the empty string when they agree.
std::string restriction_defect(const DgLie& L, const Simplex& face, const DgLie& face_model);

/// Random Lie element of the given degree: integer combination (coefficients
/// in -2..2) of Lyndon basis elements of length at most max_length.
LieElement random_lie(std::mt19937& rng, const AlphabetPtr& alphabet, int truncation, int degree, int max_length);

}  // namespace cdgl
