#include "cdgl/simplicial.hpp"

#include <algorithm>
#include <json.hpp>

#include "cdgl/errors.hpp"

namespace cdgl {

namespace {

void add_with_faces(std::set<Simplex, SimplexOrder>& out, const Simplex& s) {
  if (s.empty() || out.count(s)) return;
  out.insert(s);
  if (s.size() == 1) return;
  for (std::size_t j = 0; j < s.size(); ++j) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<long>(j));
    add_with_faces(out, face);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, const std::vector<Simplex>& facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Simplex& s = facets[f];
    const std::string where = "facets[" + std::to_string(f) + "]";
    if (s.empty()) throw InputError(where + ": empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= vertex_count) {
        throw InputError(where + "[" + std::to_string(i) + "]: vertex index " + std::to_string(s[i]) +
                         " out of range");
      }
      if (i > 0 && s[i] <= s[i - 1]) {
        throw InputError(where + "[" + std::to_string(i) + "]: vertex indices must be strictly increasing");
      }
    }
    add_with_faces(simplices_, s);
  }
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.rbegin()->size()) - 1;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dimension(int p) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (static_cast<int>(s.size()) == p + 1) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (const auto& t : simplices_) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

SimplicialComplex parse_complex(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("complex document must be a JSON object");
  if (!doc.contains("facets") || !doc["facets"].is_array()) throw InputError("complex document needs a \"facets\" array");
  std::vector<Simplex> facets;
  int largest = -1;
  const auto& fs = doc["facets"];
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (!fs[f].is_array()) throw InputError("facets[" + std::to_string(f) + "]: expected an array of vertex indices");
    Simplex s;
    for (std::size_t i = 0; i < fs[f].size(); ++i) {
      if (!fs[f][i].is_number_integer()) {
        throw InputError("facets[" + std::to_string(f) + "][" + std::to_string(i) + "]: expected an integer");
      }
      s.push_back(fs[f][i].get<int>());
      largest = std::max(largest, s.back());
    }
    facets.push_back(std::move(s));
  }
  int vertices = largest + 1;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_number_integer()) throw InputError("\"vertices\" must be an integer");
    vertices = doc["vertices"].get<int>();
  }
  return SimplicialComplex(vertices, facets);
}

std::string complex_to_json(const SimplicialComplex& X) {
  nlohmann::json doc;
  doc["vertices"] = X.vertex_count();
  doc["facets"] = nlohmann::json::array();
  for (const auto& f : X.facets()) doc["facets"].push_back(f);
  return doc.dump();
}

std::vector<std::pair<int, Simplex>> boundary(const Simplex& s) {
  std::vector<std::pair<int, Simplex>> out;
  if (s.size() <= 1) return out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<long>(j));
    out.emplace_back(j % 2 == 0 ? 1 : -1, std::move(face));
  }
  return out;
}

SimplicialComplex standard_simplex(int n) {
  Simplex top(n + 1);
  for (int i = 0; i <= n; ++i) top[i] = i;
  return SimplicialComplex(n + 1, {top});
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<Simplex> facets;
  for (const auto& [sign, face] : boundary(standard_simplex(n).simplices_of_dimension(n).front())) {
    facets.push_back(face);
  }
  if (n == 0) return SimplicialComplex(1, {});
  return SimplicialComplex(n + 1, facets);
}

SimplicialComplex horn(int n) {
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    Simplex face;
    for (int j = 0; j <= n; ++j) {
      if (j != i) face.push_back(j);
    }
    facets.push_back(face);
  }
  return SimplicialComplex(n + 1, facets);
}

SimplicialComplex cone_complex(const SimplicialComplex& X) {
  const int apex = X.vertex_count();
  std::vector<Simplex> facets{{apex}};
  for (const auto& s : X.simplices()) {
    Simplex joined = s;
    joined.push_back(apex);
    facets.push_back(joined);
  }
  return SimplicialComplex(apex + 1, facets);
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  for (int v : s) out.push_back(vertex_map.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SimplicialMap::injective_on(const Simplex& s) const { return image(s).size() == s.size(); }

bool is_simplicial(const SimplicialMap& f, const SimplicialComplex& X, const SimplicialComplex& Y) {
  if (static_cast<int>(f.vertex_map.size()) != X.vertex_count()) return false;
  for (const auto& s : X.simplices()) {
    if (!Y.contains(f.image(s))) return false;
  }
  return true;
}

Prism prism(const SimplicialComplex& X) {
  std::vector<Simplex> facets;
  for (const auto& s : X.simplices()) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex t;
      for (std::size_t i = 0; i <= k; ++i) t.push_back(2 * s[i]);
      for (std::size_t i = k; i < s.size(); ++i) t.push_back(2 * s[i] + 1);
      facets.push_back(t);
    }
  }
  Prism out;
  out.complex = SimplicialComplex(2 * X.vertex_count(), facets);
  for (int v = 0; v < X.vertex_count(); ++v) {
    out.bottom.vertex_map.push_back(2 * v);
    out.top.vertex_map.push_back(2 * v + 1);
  }
  for (int w = 0; w < 2 * X.vertex_count(); ++w) out.projection.vertex_map.push_back(w / 2);
  return out;
}

}  // namespace cdgl
