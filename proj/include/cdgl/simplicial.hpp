#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cdgl {

using Simplex = std::vector<int>;

/// Simplices order by dimension, then lexicographically.
struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite abstract simplicial complex on vertices 0..n-1, closed under faces.
/// Every simplex is a strictly increasing tuple of vertex indices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closes the facets under faces. Throws InputError, naming the offending
  /// facet, on a tuple that is not strictly increasing or an index out of
  /// range.
  SimplicialComplex(int vertex_count, const std::vector<Simplex>& facets);

  int vertex_count() const { return vertex_count_; }
  const std::set<Simplex, SimplexOrder>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  int dimension() const;
  std::vector<Simplex> simplices_of_dimension(int p) const;
  /// Maximal simplices.
  std::vector<Simplex> facets() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
  }

 private:
  int vertex_count_ = 0;
  std::set<Simplex, SimplexOrder> simplices_;
};

/// Parses {"vertices": n, "facets": [[...], ...]}. "vertices" may be omitted,
/// in which case it is one more than the largest index. Throws InputError.
SimplicialComplex parse_complex(const std::string& json_text);
std::string complex_to_json(const SimplicialComplex& X);

/// Signed faces: sum_j (-1)^j (i_0 ... î_j ... i_p). Empty for a vertex.
std::vector<std::pair<int, Simplex>> boundary(const Simplex& s);

SimplicialComplex standard_simplex(int n);
/// ∂Δ^n: all proper faces of Δ^n.
SimplicialComplex simplex_boundary(int n);
/// ∧^n: the simplices of Δ^n not containing (0, ..., n-1).
SimplicialComplex horn(int n);

/// Adds an apex vertex (the new last vertex) joined to every simplex.
SimplicialComplex cone_complex(const SimplicialComplex& X);

/// Vertex map; a simplicial map when the image of every simplex is a simplex.
struct SimplicialMap {
  std::vector<int> vertex_map;
  /// Image of a simplex as a sorted vertex set (duplicates removed).
  Simplex image(const Simplex& s) const;
  /// Injective on s.
  bool injective_on(const Simplex& s) const;
};

/// True iff f sends every simplex of X into Y.
bool is_simplicial(const SimplicialMap& f, const SimplicialComplex& X, const SimplicialComplex& Y);

struct Prism {
  /// X × [0,1], vertex (v, e) numbered 2v + e.
  SimplicialComplex complex;
  SimplicialMap bottom;      // X -> X×{0}, v -> 2v
  SimplicialMap top;         // X -> X×{1}, v -> 2v + 1
  SimplicialMap projection;  // (v, e) -> v
};

/// Staircase triangulation: σ×I is split into |σ| simplices
/// (v_0,0)...(v_k,0)(v_k,1)...(v_p,1).
Prism prism(const SimplicialComplex& X);

}  // namespace cdgl
