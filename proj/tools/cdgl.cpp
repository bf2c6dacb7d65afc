// Command-line front end. Every subcommand writes one JSON document (or a
// plain-text rendering with --format text) to standard output or --out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdgl/errors.hpp"
#include "cdgl/homotopy.hpp"
#include "cdgl/io.hpp"
#include "cdgl/models.hpp"
#include "cdgl/series.hpp"
#include "cdgl/verify.hpp"

using namespace cdgl;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kSolveError = 3;

struct Globals {
  int truncation = 6;
  bool truncation_given = false;
  std::string format = "json";
  std::string out;
  bool latex = false;
};

// --model FILE or --complex FILE, exactly one of them.
struct Source {
  std::string model;
  std::string complex;

  void attach(CLI::App* sub) {
    auto* m = sub->add_option("--model", model, "DgLie JSON file");
    auto* c = sub->add_option("--complex", complex, "simplicial complex JSON file");
    m->excludes(c);
    c->excludes(m);
  }

  DgLie load(const Globals& g) const {
    if (!complex.empty()) return model_of_complex(parse_complex(read_file(complex)), g.truncation);
    if (model.empty()) throw InputError("one of --model or --complex is required");
    return load_model(model, g);
  }

  static DgLie load_model(const std::string& path, const Globals& g) {
    DgLie L = dglie_from_json(parse_json(read_file(path), path));
    if (!g.truncation_given) return L;
    if (g.truncation > L.truncation()) {
      throw InputError(path + " is truncated at " + std::to_string(L.truncation()) + ", below --truncation " +
                       std::to_string(g.truncation));
    }
    return L.truncated_to(g.truncation);
  }
};

std::string show(const LieElement& x, const Globals& g) {
  if (g.latex) return element_to_latex(x);
  return x.is_zero() ? "0" : x.to_string();
}

std::string model_text(const DgLie& L, const Globals& g) {
  std::ostringstream out;
  out << "truncation " << L.truncation() << "\n";
  if (!L.perturbation().empty()) out << "perturbed by " << L.perturbation() << "\n";
  for (const auto& gen : L.alphabet()->generators()) {
    out << "d " << gen.name << " = " << show(L.d_of(gen.name), g) << "    (degree " << gen.degree << ")\n";
  }
  return out.str();
}

std::string morphism_text(const std::string& title, const LieMorphism& f, const Globals& g) {
  std::ostringstream out;
  out << title << "\n";
  for (int i = 0; i < f.source()->size(); ++i) {
    out << "  " << (*f.source())[i].name << " -> " << show(f.image(i), g) << "\n";
  }
  return out.str();
}

void emit(const Globals& g, const Json& json, const std::string& text) {
  const std::string body = g.format == "json" ? json.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw InputError("cannot write '" + g.out + "'");
  file << body;
}

std::pair<int, int> parse_degrees(const std::string& range) {
  const auto dots = range.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(range);
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = range.substr(0, dots), hi_text = range.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used_lo), hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi) throw std::invalid_argument(range);
    return {lo, hi};
  } catch (const std::exception&) {
    throw InputError("--degrees expects lo..hi with lo <= hi, got '" + range + "'");
  }
}

std::pair<int, int> default_degrees(const DgLie& L) {
  int lo = 0, hi = 0;
  for (const auto& gen : L.alphabet()->generators()) {
    lo = std::min(lo, gen.degree);
    hi = std::max(hi, gen.degree + 1);
  }
  return {lo, hi};
}

// Cone generators in terms of the cylinder: a_σ = a_σ, a_{σ n} = (-1)^{dim σ} a~_σ
// and the apex is the hatted first vertex.
Json cone_relabeling(const DgLie& LX, const DgLie& cone) {
  int apex = 0, first_vertex = -1;
  for (const auto& [name, s] : LX.simplex_labels()) {
    apex = std::max(apex, s.back() + 1);
    if (s.size() == 1 && (first_vertex < 0 || s[0] < first_vertex)) first_vertex = s[0];
  }
  Json vertices = Json::object();
  for (const auto& [name, s] : LX.simplex_labels()) {
    if (s.size() == 1) vertices[std::to_string(s[0])] = s[0];
  }
  vertices["apex"] = apex;
  Json generators = Json::object();
  for (const auto& [name, s] : cone.simplex_labels()) {
    if (s.back() != apex) {
      generators[name] = name;
    } else if (s.size() == 1) {
      generators[name] = simplex_name({first_vertex}) + "^";
    } else {
      const Simplex base(s.begin(), s.end() - 1);
      generators[name] = std::string(base.size() % 2 == 0 ? "-" : "") + simplex_name(base) + "~";
    }
  }
  return {{"vertices", vertices}, {"generators", generators}};
}

SimplicialMap vertex_map(const std::vector<int>& images) { return SimplicialMap{images}; }

int run_model(const Globals& g, const std::string& path) {
  DgLie L = model_of_complex(parse_complex(read_file(path)), g.truncation);
  emit(g, dglie_to_json(L), model_text(L, g));
  return 0;
}

int run_homology(const Globals& g, const Source& source, const std::string& perturb_name, const std::string& degrees) {
  DgLie L = source.load(g);
  if (!perturb_name.empty()) {
    if (L.alphabet()->find(perturb_name) < 0) throw InputError("unknown vertex '" + perturb_name + "'");
    L = perturb(L, L.gen(perturb_name), perturb_name);
  }
  const auto [lo, hi] = degrees.empty() ? default_degrees(L) : parse_degrees(degrees);
  const std::vector<HomologyDegree> h = homology(L, lo, hi);
  Json json{{"truncation", L.truncation()}, {"perturbation", perturb_name}, {"degrees", homology_to_json(h)}};
  std::ostringstream text;
  text << "truncation " << L.truncation();
  if (!perturb_name.empty()) text << ", differential perturbed by " << perturb_name;
  text << "\ndegree  dim  stable  persistent\n";
  for (const auto& d : h) {
    text << d.degree << "  " << d.dim << "  " << (d.stable ? "yes" : "no") << "  " << d.persistent << "\n";
    for (const auto& z : d.representatives) text << "    " << show(z, g) << "\n";
  }
  emit(g, json, text.str());
  return 0;
}

int run_bch(const Globals& g, const std::vector<std::string>& files, const std::string& model) {
  AlphabetPtr alphabet;
  int n = g.truncation;
  LieElement x, y;
  if (files.empty()) {
    alphabet = make_alphabet({{"x", 0}, {"y", 0}});
    x = LieElement::generator(alphabet, n, "x");
    y = LieElement::generator(alphabet, n, "y");
  } else {
    if (files.size() != 2) throw InputError("bch takes two element files (or none for the symbolic series)");
    if (model.empty()) throw InputError("bch with element files needs --model for the generators");
    DgLie L = Source::load_model(model, g);
    alphabet = L.alphabet();
    n = L.truncation();
    x = element_from_json(parse_json(read_file(files[0]), files[0]), alphabet, n);
    y = element_from_json(parse_json(read_file(files[1]), files[1]), alphabet, n);
  }
  const LieElement z = bch(x, y);
  std::ostringstream text;
  for (int k = z.min_length(); !z.is_zero() && k <= z.max_length(); ++k) {
    const LieElement slice = z.length_slice(k);
    if (!slice.is_zero()) text << "length " << k << ": " << show(slice, g) << "\n";
  }
  Json json = element_to_json(z);
  if (g.latex) json["latex"] = element_to_latex(z);
  emit(g, json, z.is_zero() ? "0\n" : text.str());
  return 0;
}

int run_cylinder(const Globals& g, const Source& source) {
  const CylinderTriple c = cylinder(source.load(g));
  const std::string text = model_text(c.cylinder, g) + morphism_text("lambda0", c.lambda0, g) +
                           morphism_text("lambda1", c.lambda1, g) + morphism_text("p", c.projection, g);
  emit(g, cylinder_to_json(c), text);
  return 0;
}

int run_cone(const Globals& g, const Source& source) {
  const DgLie LX = source.load(g);
  const DgLie cone = cone_dgl(LX);
  const Json relabeling = cone_relabeling(LX, cone);
  std::ostringstream text;
  text << model_text(cone, g) << "apex " << relabeling["vertices"]["apex"].get<int>() << "\n";
  for (const auto& [name, expr] : relabeling["generators"].items()) {
    text << "  " << name << " = " << expr.get<std::string>() << "\n";
  }
  emit(g, {{"cone", dglie_to_json(cone)}, {"relabeling", relabeling}}, text.str());
  return 0;
}

int run_mc_equiv(const Globals& g, const Source& source, const std::string& direction, const std::string& file) {
  const DgLie L = source.load(g);
  const int n = L.truncation();
  const Json input = parse_json(read_file(file), file);
  if (direction == "left-to-right") {
    const DgLie I = ls_interval(n);
    const LieMorphism f = morphism_from_json(input, I.alphabet(), L.alphabet(), n);
    const PolyElement mc = left_to_right(f, L);
    const bool ok = tensor_lambda(L).is_mc(mc);
    Json json{{"direction", direction}, {"mc", poly_to_json(mc)}, {"isMC", ok},
              {"atZero", element_to_json(mc.at_zero())}, {"atOne", element_to_json(mc.at_one())}};
    std::ostringstream text;
    text << "t^k parts\n";
    for (const auto& [k, x] : mc.plain()) text << "  " << k << ": " << show(x, g) << "\n";
    text << "t^k dt parts\n";
    for (const auto& [k, x] : mc.dt()) text << "  " << k << ": " << show(x, g) << "\n";
    text << "at t = 0: " << show(mc.at_zero(), g) << "\nat t = 1: " << show(mc.at_one(), g) << "\n";
    emit(g, json, text.str());
    return ok ? 0 : kVerificationFailed;
  }
  const PolyElement mc = poly_from_json(input, L.alphabet(), n);
  const LieMorphism f = right_to_left(mc, L);
  const bool ok = is_chain_map(f, ls_interval(n), L);
  Json json{{"direction", direction}, {"path", morphism_to_json(f)}, {"isChainMap", ok}};
  emit(g, json, morphism_text("path", f, g));
  return ok ? 0 : kVerificationFailed;
}

int run_factorize(const Globals& g, const std::string& source_file, const std::string& target_file,
                  const std::string& map_file) {
  const DgLie S = Source::load_model(source_file, g);
  const DgLie T = Source::load_model(target_file, g);
  if (S.truncation() != T.truncation()) throw InputError("source and target have different truncations");
  const LieMorphism f =
      morphism_from_json(parse_json(read_file(map_file), map_file), S.alphabet(), T.alphabet(), S.truncation());
  const Factorization fac = factorize(f, S, T);
  const bool ok = compose(fac.projection, fac.inclusion) == f;
  Json json{{"middle", dglie_to_json(fac.middle)},
            {"inclusion", morphism_to_json(fac.inclusion)},
            {"projection", morphism_to_json(fac.projection)},
            {"composite", ok}};
  emit(g, json, model_text(fac.middle, g) + morphism_text("inclusion", fac.inclusion, g) +
                    morphism_text("projection", fac.projection, g));
  return ok ? 0 : kVerificationFailed;
}

int run_homotopy(const Globals& g, const std::string& source_file, const std::string& target_file,
                 const std::vector<int>& f, const std::vector<int>& gmap, const std::vector<int>& h) {
  const SimplicialComplex X = parse_complex(read_file(source_file));
  const SimplicialComplex Y = parse_complex(read_file(target_file));
  const HomotopyData data = build_homotopy(X, Y, vertex_map(f), vertex_map(gmap), vertex_map(h), g.truncation);
  const bool ok = compose(data.homotopy, data.cylinder.lambda0) == data.model_f &&
                  compose(data.homotopy, data.cylinder.lambda1) == data.model_g;
  Json prism_vertices = Json::object();
  for (int v = 0; v < X.vertex_count(); ++v) {
    for (int e = 0; e < 2; ++e) prism_vertices["(" + std::to_string(v) + "," + std::to_string(e) + ")"] = 2 * v + e;
  }
  Json json{{"cylinder", dglie_to_json(data.cylinder.cylinder)},
            {"homotopy", morphism_to_json(data.homotopy)},
            {"modelF", morphism_to_json(data.model_f)},
            {"modelG", morphism_to_json(data.model_g)},
            {"prismVertices", prism_vertices},
            {"endpoints", ok}};
  emit(g, json, morphism_text("F: Cyl -> target", data.homotopy, g) + morphism_text("L_f", data.model_f, g) +
                    morphism_text("L_g", data.model_g, g));
  return ok ? 0 : kVerificationFailed;
}

int run_verify(const Globals& g, const std::string& suite, unsigned seed) {
  const SuiteReport r = run_suite(suite, g.truncation, seed);
  Json checks = Json::array();
  std::ostringstream text;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    text << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
    if (!c.ok) text << "     " << c.detail << "\n";
  }
  text << (r.ok() ? "all checks passed" : "verification failed") << "\n";
  emit(g, {{"suite", suite}, {"truncation", r.truncation}, {"ok", r.ok()}, {"checks", checks}}, text.str());
  if (!r.ok() && g.format == "json") {
    for (const auto& c : r.checks) {
      if (!c.ok) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
    }
  }
  return r.ok() ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete DG Lie algebra models over Q, computed exactly", "cdgl"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* truncation = app.add_option("--truncation,-N", g.truncation, "word length truncation N")
                         ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "write the output to FILE");
  app.add_flag("--latex", g.latex, "render Lie elements as bracket expressions");

  std::string complex_file;
  auto* model = app.add_subcommand("model", "model of a simplicial complex");
  model->add_option("complex", complex_file, "complex JSON file")->required();

  Source homology_source;
  std::string perturb_name, degrees;
  auto* homology_cmd = app.add_subcommand("homology", "homology of a model, optionally perturbed by a vertex");
  homology_source.attach(homology_cmd);
  homology_cmd->add_option("--perturb", perturb_name, "MC generator to perturb by");
  homology_cmd->add_option("--degrees", degrees, "degree range lo..hi");

  std::vector<std::string> bch_files;
  std::string bch_model;
  auto* bch_cmd = app.add_subcommand("bch", "BCH product of two degree 0 elements, or the symbolic series");
  bch_cmd->add_option("elements", bch_files, "two element JSON files");
  bch_cmd->add_option("--model", bch_model, "DgLie JSON file giving the generators");

  Source cylinder_source;
  auto* cylinder_cmd = app.add_subcommand("cylinder", "cylinder object with lambda0, lambda1 and p");
  cylinder_source.attach(cylinder_cmd);

  Source cone_source;
  auto* cone_cmd = app.add_subcommand("cone", "cone on a simplicial model, with the vertex relabeling");
  cone_source.attach(cone_cmd);

  Source mc_source;
  std::string direction, mc_file;
  auto* mc_cmd = app.add_subcommand("mc-equiv", "translate between paths and MC elements of L (x) Lambda(t,dt)");
  mc_source.attach(mc_cmd);
  mc_cmd->add_option("--direction", direction, "left-to-right (path file) or right-to-left (MC file)")
      ->required()
      ->check(CLI::IsMember({"left-to-right", "right-to-left"}));
  mc_cmd->add_option("file", mc_file, "path or MC element JSON file")->required();

  std::string fac_source, fac_target, fac_map;
  auto* fac_cmd = app.add_subcommand("factorize", "factor a morphism as an inclusion followed by a surjection");
  fac_cmd->add_option("--source", fac_source, "source DgLie JSON file")->required();
  fac_cmd->add_option("--target", fac_target, "target DgLie JSON file")->required();
  fac_cmd->add_option("--map", fac_map, "morphism JSON file")->required();

  std::string hom_source, hom_target;
  std::vector<int> hom_f, hom_g, hom_h;
  auto* hom_cmd = app.add_subcommand("homotopy", "algebraic homotopy from a simplicial homotopy on the prism");
  hom_cmd->add_option("--source", hom_source, "complex X")->required();
  hom_cmd->add_option("--target", hom_target, "complex Y")->required();
  hom_cmd->add_option("--f", hom_f, "vertex images of f, comma separated")->required()->delimiter(',');
  hom_cmd->add_option("--g", hom_g, "vertex images of g, comma separated")->required()->delimiter(',');
  hom_cmd->add_option("--H", hom_h, "images of the prism vertices 2v+e, comma separated")->required()->delimiter(',');

  std::string suite = "all";
  unsigned seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks; exit 1 on any failure");
  verify_cmd->add_option("--suite", suite, "ls, cylinder, mc, models, algebra or all");
  verify_cmd->add_option("--seed", seed, "seed for the randomized algebra suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  g.truncation_given = truncation->count() > 0;

  try {
    if (*model) return run_model(g, complex_file);
    if (*homology_cmd) return run_homology(g, homology_source, perturb_name, degrees);
    if (*bch_cmd) return run_bch(g, bch_files, bch_model);
    if (*cylinder_cmd) return run_cylinder(g, cylinder_source);
    if (*cone_cmd) return run_cone(g, cone_source);
    if (*mc_cmd) return run_mc_equiv(g, mc_source, direction, mc_file);
    if (*fac_cmd) return run_factorize(g, fac_source, fac_target, fac_map);
    if (*hom_cmd) return run_homotopy(g, hom_source, hom_target, hom_f, hom_g, hom_h);
    if (*verify_cmd) return run_verify(g, suite, seed);
  } catch (const SolveError& e) {
    std::cerr << "cdgl: truncation or solve failure: " << e.what() << "\n";
    return kSolveError;
  } catch (const InputError& e) {
    std::cerr << "cdgl: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AlgebraError& e) {
    std::cerr << "cdgl: invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "cdgl: internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return 0;
}
