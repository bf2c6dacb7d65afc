#include "cdgl/io.hpp"

#include <fstream>
#include <sstream>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"

namespace cdgl {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int truncation_field(const Json& j, const std::string& where) {
  const Json& t = field(j, "truncation", where);
  if (!t.is_number_integer() || t.get<int>() < 1) throw InputError(where + ": \"truncation\" must be a positive integer");
  return t.get<int>();
}

Rational rational_field(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": coefficients must be strings \"p/q\" or integers");
}

std::string latex_name(const std::string& name) {
  std::string base = name, accent;
  if (!base.empty() && (base.back() == '^' || base.back() == '~')) {
    accent = base.back() == '^' ? "\\hat" : "\\bar";
    base.pop_back();
  }
  std::size_t split = 0;
  while (split < base.size() && std::isalpha(static_cast<unsigned char>(base[split]))) ++split;
  std::string head = base.substr(0, split), tail = base.substr(split);
  if (!accent.empty()) head = accent + "{" + head + "}";
  return tail.empty() ? head : head + "_{" + tail + "}";
}

std::string bracketing(const Word& w, const Alphabet& alphabet) {
  if (w.size() == 1) return latex_name(alphabet[w[0]].name);
  if (!is_lyndon(w)) {
    // square [P_u, P_u] of an odd Lyndon word u
    const std::string half = bracketing(w.prefix(w.size() / 2), alphabet);
    return "[" + half + "," + half + "]";
  }
  // standard factorisation: v is the longest proper Lyndon suffix
  for (int start = 1; start < w.size(); ++start) {
    Word v = w.suffix_from(start);
    if (is_lyndon(v)) {
      return "[" + bracketing(w.prefix(start), alphabet) + "," + bracketing(v, alphabet) + "]";
    }
  }
  return latex_name(alphabet[w[0]].name);
}

std::string latex_coefficient(const Rational& c, bool first) {
  std::string out = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  Rational mag = abs(c);
  if (mag == 1) return out;
  if (mag.get_den() == 1) return out + mag.get_num().get_str();
  return out + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

Json generators_to_json(const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& g : alphabet.generators()) out.push_back({{"name", g.name}, {"degree", g.degree}});
  return out;
}

std::vector<GradedGenerator> generators_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("generators: expected an array");
  std::vector<GradedGenerator> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const Json& name = field(j[i], "name", where);
    const Json& degree = field(j[i], "degree", where);
    if (!name.is_string() || name.get<std::string>().empty()) throw InputError(where + ": \"name\" must be a nonempty string");
    if (!degree.is_number_integer()) throw InputError(where + ": \"degree\" must be an integer");
    out.push_back({name.get<std::string>(), degree.get<int>()});
  }
  return out;
}

Json element_to_json(const LieElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"coeff", to_string(c)}, {"word", x.alphabet()->word_names(w)}});
  }
  return {{"truncation", x.truncation()}, {"terms", terms}};
}

LieElement element_from_json(const Json& j, const AlphabetPtr& alphabet, int truncation) {
  const std::string where = "element";
  if (j.is_object() && j.contains("truncation") && truncation_field(j, where) > truncation) {
    throw InputError(where + ": truncation " + std::to_string(j["truncation"].get<int>()) + " exceeds " +
                     std::to_string(truncation));
  }
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) throw InputError(where + ": \"terms\" must be an array");
  ElementBuilder b(alphabet, truncation);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    const Rational c = rational_field(field(terms[i], "coeff", at), at);
    const Json& word = field(terms[i], "word", at);
    if (!word.is_array() || word.empty()) throw InputError(at + ": \"word\" must be a nonempty array of names");
    if (static_cast<int>(word.size()) > truncation) throw InputError(at + ": word longer than the truncation");
    std::vector<int> letters;
    for (const auto& name : word) {
      if (!name.is_string()) throw InputError(at + ": letters must be generator names");
      const int index = alphabet->find(name.get<std::string>());
      if (index < 0) throw InputError(at + ": unknown generator '" + name.get<std::string>() + "'");
      letters.push_back(index);
    }
    b.add(Word::from(letters), c);
  }
  return b.build();
}

Json dglie_to_json(const DgLie& L) {
  Json gens = generators_to_json(*L.alphabet());
  for (auto& g : gens) {
    auto it = L.simplex_labels().find(g["name"].get<std::string>());
    if (it != L.simplex_labels().end()) g["simplex"] = it->second;
  }
  Json d = Json::object();
  for (const auto& g : L.alphabet()->generators()) {
    const LieElement& image = L.d_of(g.name);
    if (!image.is_zero()) d[g.name] = element_to_json(image);
  }
  Json out{{"truncation", L.truncation()}, {"generators", gens}, {"differential", d}};
  if (!L.perturbation().empty()) out["perturbation"] = L.perturbation();
  return out;
}

DgLie dglie_from_json(const Json& j) {
  const int n = truncation_field(j, "algebra");
  std::vector<GradedGenerator> gens = generators_from_json(field(j, "generators", "algebra"));
  AlphabetPtr alphabet;
  try {
    alphabet = make_alphabet(gens);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("algebra: ") + e.what());
  }
  std::map<std::string, LieElement> d;
  if (j.contains("differential")) {
    const Json& dj = j["differential"];
    if (!dj.is_object()) throw InputError("algebra: \"differential\" must be an object");
    for (const auto& [name, value] : dj.items()) {
      if (alphabet->find(name) < 0) throw InputError("algebra: differential of unknown generator '" + name + "'");
      d.emplace(name, element_from_json(value, alphabet, n));
    }
  }
  ValidationReport report = validate_presentation(gens, n, d);
  if (!report.ok) throw InputError("algebra: " + report.violations.front());
  DgLie L = DgLie::from_named(gens, n, d);
  std::map<std::string, std::vector<int>> labels;
  for (const auto& g : field(j, "generators", "algebra")) {
    if (!g.contains("simplex")) continue;
    if (!g["simplex"].is_array()) throw InputError("algebra: \"simplex\" must be an array of vertices");
    try {
      labels[g["name"].get<std::string>()] = g["simplex"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("algebra: \"simplex\" must be an array of vertices");
    }
  }
  L.set_simplex_labels(std::move(labels));
  if (j.contains("perturbation") && j["perturbation"].is_string()) L.set_perturbation(j["perturbation"].get<std::string>());
  return L;
}

Json morphism_to_json(const LieMorphism& f) {
  Json images = Json::object();
  for (int i = 0; i < f.source()->size(); ++i) images[(*f.source())[i].name] = element_to_json(f.image(i));
  return {{"truncation", f.truncation()},
          {"source", generators_to_json(*f.source())},
          {"target", generators_to_json(*f.target())},
          {"images", images}};
}

LieMorphism morphism_from_json(const Json& j, const AlphabetPtr& source, const AlphabetPtr& target, int truncation) {
  const Json& images = field(j, "images", "morphism");
  if (!images.is_object()) throw InputError("morphism: \"images\" must be an object");
  std::map<std::string, LieElement> named;
  for (const auto& [name, value] : images.items()) {
    if (source->find(name) < 0) throw InputError("morphism: image of unknown generator '" + name + "'");
    named.emplace(name, element_from_json(value, target, truncation));
  }
  try {
    return LieMorphism::from_named(source, target, truncation, named);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("morphism: ") + e.what());
  }
}

Json poly_to_json(const PolyElement& p) {
  Json plain = Json::object(), dt = Json::object();
  for (const auto& [k, x] : p.plain()) plain[std::to_string(k)] = element_to_json(x);
  for (const auto& [k, x] : p.dt()) dt[std::to_string(k)] = element_to_json(x);
  return {{"truncation", p.truncation()}, {"poly", plain}, {"dtPoly", dt}};
}

PolyElement poly_from_json(const Json& j, const AlphabetPtr& alphabet, int truncation) {
  PolyElement out(alphabet, truncation);
  for (const char* key : {"poly", "dtPoly"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_object()) throw InputError(std::string("\"") + key + "\" must be an object");
    for (const auto& [exponent, value] : j[key].items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(exponent, &used);
        if (used != exponent.size()) throw std::invalid_argument(exponent);
      } catch (const std::exception&) {
        throw InputError(std::string(key) + ": bad t-exponent '" + exponent + "'");
      }
      LieElement x = element_from_json(value, alphabet, truncation);
      try {
        if (std::string(key) == "poly") {
          out.add_plain(k, x);
        } else {
          out.add_dt(k, x);
        }
      } catch (const AlgebraError& e) {
        throw InputError(std::string(key) + ": " + e.what());
      }
    }
  }
  return out;
}

Json homology_to_json(const std::vector<HomologyDegree>& h) {
  Json out = Json::array();
  for (const auto& d : h) {
    Json reps = Json::array();
    for (const auto& z : d.representatives) reps.push_back(element_to_json(z));
    out.push_back({{"degree", d.degree},
                   {"dim", d.dim},
                   {"stable", d.stable},
                   {"persistent", d.persistent},
                   {"representatives", reps}});
  }
  return out;
}

Json cylinder_to_json(const CylinderTriple& c) {
  return {{"cylinder", dglie_to_json(c.cylinder)},
          {"lambda0", morphism_to_json(c.lambda0)},
          {"lambda1", morphism_to_json(c.lambda1)},
          {"projection", morphism_to_json(c.projection)}};
}

std::string element_to_latex(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  if (is_lie(x)) {
    LieBasis basis(x.alphabet(), x.truncation());
    for (const auto& [w, c] : basis.coordinates(x)) {
      out += latex_coefficient(c, first) + bracketing(w, *x.alphabet());
      first = false;
    }
    return out;
  }
  for (const auto& [w, c] : x.terms()) {
    out += latex_coefficient(c, first);
    for (int i = 0; i < w.size(); ++i) out += (i ? " " : "") + latex_name((*x.alphabet())[w[i]].name);
    first = false;
  }
  return out;
}

}  // namespace cdgl
