#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdgl/homology.hpp"
#include "cdgl/homotopy.hpp"

namespace cdgl {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws InputError naming the path when it cannot be
/// opened.
std::string read_file(const std::string& path);
/// Parses JSON text; throws InputError with the parser's line and column.
Json parse_json(const std::string& text, const std::string& what);

/// [ { "name": "a01", "degree": 0 } ]
Json generators_to_json(const Alphabet& alphabet);
std::vector<GradedGenerator> generators_from_json(const Json& j);

/// { "truncation": N, "terms": [ { "coeff": "p/q", "word": ["a01", "x"] } ] }
Json element_to_json(const LieElement& x);
/// Names must belong to the alphabet. The document's truncation, if present,
/// must not exceed N; longer words are rejected.
LieElement element_from_json(const Json& j, const AlphabetPtr& alphabet, int truncation);

/// { "truncation": N, "generators": [...], "differential": { "a": element } }.
/// Generators carry a "simplex" label when the algebra has one.
Json dglie_to_json(const DgLie& L);
/// Accepts the form above; a missing differential entry means d = 0. The
/// presentation is validated (degrees, d² = 0).
DgLie dglie_from_json(const Json& j);

/// { "truncation": N, "source": [...], "target": [...], "images": { "a": element } }
Json morphism_to_json(const LieMorphism& f);
/// Images are read against the given algebras; missing images are zero.
LieMorphism morphism_from_json(const Json& j, const AlphabetPtr& source, const AlphabetPtr& target, int truncation);

/// { "truncation": N, "poly": { "0": element }, "dtPoly": { "0": element } }
Json poly_to_json(const PolyElement& p);
PolyElement poly_from_json(const Json& j, const AlphabetPtr& alphabet, int truncation);

Json homology_to_json(const std::vector<HomologyDegree>& h);
Json cylinder_to_json(const CylinderTriple& c);

/// Bracket form of a Lie element in the Lyndon basis, e.g.
/// "\frac{1}{2}[a_{01},[a_{01},a_{12}]]"; non-Lie elements fall back to words.
std::string element_to_latex(const LieElement& x);

}  // namespace cdgl
