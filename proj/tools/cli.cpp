#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "k3chambers/chamber_atlas.hpp"
#include "k3chambers/cross_section.hpp"
#include "k3chambers/error.hpp"
#include "k3chambers/gallery.hpp"
#include "k3chambers/model_json.hpp"

namespace k3chambers::cli {

namespace {

constexpr const char* kGalleryPrefix = "gallery:";

struct Context {
  std::ostream& out;
  std::ostream& err;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SurfaceModel load_model(const std::string& source) {
  SurfaceModel m = source.rfind(kGalleryPrefix, 0) == 0
                       ? gallery_entry(source.substr(std::string(kGalleryPrefix).size())).model
                       : parse_model(read_source(source));
  require_valid(m);
  return m;
}

DivisorClass parse_divisor(const SurfaceModel& m, const std::string& text) {
  const std::string t = trim(text);
  if (t.ends_with(".json")) {
    DivisorClass d = divisor_from_json(Json::parse(read_source(t)));
    check_divisor(m, d);
    return d;
  }
  if (t == "H") return ample_class(m);
  if (auto idx = m.curve_index(t)) return curve_class(m, *idx);
  std::string body = t;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  RatVector values;
  for (const auto& part : split(body, ',')) values.push_back(parse_rational(trim(part)));
  DivisorClass d;
  if (m.mode() == ModelMode::FullLattice) {
    d = DivisorClass::lattice(std::move(values));
  } else {
    if (values.empty()) throw Error(ErrorCode::ParseError, "empty divisor");
    const Rational t0 = values.front();
    d = DivisorClass::combination(t0, RatVector(values.begin() + 1, values.end()));
  }
  check_divisor(m, d);
  return d;
}

CurveSet parse_set(const SurfaceModel& m, const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = trim(t.substr(1, t.size() - 2));
  if (t.empty()) return {};
  std::vector<std::string> names;
  for (const auto& part : split(t, ',')) names.push_back(trim(part));
  return curve_set_from_names(m, names);
}

Json names_json(const SurfaceModel& m, const CurveSet& s) { return curve_set_to_json(m, s); }

Json pair_json(const SurfaceModel& m, const CurvePair& p) {
  return Json::array({m.curve_name(p.first), m.curve_name(p.second)});
}

Json assumptions(const SurfaceModel& m) {
  Json a = Json::array();
  a.push_back("the listed curves are all (-2)-curves of the surface");
  if (m.mode() == ModelMode::Configuration) {
    a.push_back("configuration mode: classes are restricted to t H + sum a_i C_i with t > 0");
  }
  return a;
}

Json header(const std::string& command, const SurfaceModel& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["mode"] = std::string(mode_name(m.mode()));
  j["assumptions"] = assumptions(m);
  return j;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

void emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

void banner(Context& ctx) {
  ctx.err << "k3chambers: results are exact under the assumption that the model lists every "
             "(-2)-curve\n";
}

Json signature_json(const SurfaceModel& m, const ChamberSignature& sig) {
  return chamber_signature_to_json(m, sig);
}

Json chambers_of(const SurfaceModel& m, const DivisorClass& d) {
  Json j;
  if (auto c = classify_divisor(m, d)) {
    j["weyl"] = signature_json(m, c->weyl);
    j["zariski"] = signature_json(m, c->zariski);
  }
  return j;
}

Json decomposition_json(const SurfaceModel& m, const ZariskiResult& z) {
  Json j;
  j["nef_part"] = divisor_to_json(z.nef_part);
  Json neg = Json::object();
  for (std::size_t i = 0; i < z.neg_set.size(); ++i) {
    neg[m.curve_name(z.neg_set[i])] = to_string(z.neg_coeffs[i]);
  }
  j["negative_part"] = neg;
  j["neg_set"] = names_json(m, z.neg_set);
  j["null_set"] = names_json(m, z.null_set);
  j["volume"] = to_string(pair(m, z.nef_part, z.nef_part));
  return j;
}

int cmd_validate(Context& ctx, const std::string& source) {
  SurfaceModel m = source.rfind(kGalleryPrefix, 0) == 0
                       ? gallery_entry(source.substr(std::string(kGalleryPrefix).size())).model
                       : parse_model(read_source(source));
  const ValidationReport report = validate_model(m);
  Json j = header("validate", m);
  j["valid"] = report.valid();
  j["curve_count"] = m.curve_count();
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    Json i;
    i["code"] = issue.code;
    i["index"] = issue.index ? Json(*issue.index) : Json(nullptr);
    i["message"] = issue.message;
    issues.push_back(i);
  }
  j["issues"] = issues;
  emit(ctx, j);
  return report.valid() ? kExitOk : kExitInvalidInput;
}

int cmd_decompose(Context& ctx, const std::string& source, const std::string& divisor) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  const DivisorClass d = parse_divisor(m, divisor);
  const ZariskiResult z = zariski_decompose(m, d);
  Json j = header("decompose", m);
  j["divisor"] = divisor_to_json(d);
  merge(j, decomposition_json(m, z));
  j["weyl_signature"] = signature_json(m, weyl_signature_from(curve_pairings(m, d)));
  j["zariski_signature"] = signature_json(m, zariski_signature_from(z));
  emit(ctx, j);
  return kExitOk;
}

int cmd_chambers(Context& ctx, const std::string& source) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  const ChamberAtlas zariski = enumerate_zariski_chambers(m);
  const ChamberAtlas weyl = enumerate_weyl_chambers(m);
  const BijectionReport b = compare_families(zariski, weyl);
  Json j = header("chambers", m);
  j["zariski"] = atlas_to_json(m, zariski);
  j["weyl"] = atlas_to_json(m, weyl);
  Json bij;
  bij["equal"] = b.equal;
  bij["zariski_only"] = Json::array();
  for (const auto& s : b.zariski_only) bij["zariski_only"].push_back(names_json(m, s));
  bij["weyl_only"] = Json::array();
  for (const auto& s : b.weyl_only) bij["weyl_only"].push_back(names_json(m, s));
  j["bijection"] = bij;
  emit(ctx, j);
  return kExitOk;
}

int cmd_compare(Context& ctx, const std::string& source) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  const CoincidenceCertificate c = decompositions_coincide(m);
  Json j = header("compare", m);
  j["coincide"] = c.coincide;
  if (c.pair) {
    j["pair"] = pair_json(m, *c.pair);
    j["witness"] = divisor_to_json(*c.witness);
    j["witness_weyl"] = signature_json(m, *c.witness_weyl);
    j["witness_zariski"] = signature_json(m, *c.witness_zariski);
  }
  emit(ctx, j);
  return kExitOk;
}

int cmd_criteria(Context& ctx, const std::string& source, const std::string& set) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  const CurveSet s = parse_set(m, set);
  Json j = header("criteria", m);
  j["support"] = names_json(m, s);
  const WeylInZariskiVerdict w = weyl_in_zariski(m, s);
  const ZariskiInWeylVerdict z = zariski_interior_in_weyl(m, s);
  Json ade = Json::array();
  for (const auto& t : classify_ade(m, s)) ade.push_back(t.name());
  j["ade"] = ade;
  Json wj;
  wj["holds"] = w.holds;
  if (w.counterexample) wj["counterexample"] = m.curve_name(*w.counterexample);
  j["weyl_in_zariski"] = wj;
  Json zj;
  zj["holds"] = z.holds;
  if (z.pair) zj["pair"] = pair_json(m, *z.pair);
  j["zariski_interior_in_weyl"] = zj;
  emit(ctx, j);
  return kExitOk;
}

int cmd_witness(Context& ctx, const std::string& source, const std::string& set) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  const CurveSet s = parse_set(m, set);
  Json j = header("witness", m);
  j["support"] = names_json(m, s);
  const DivisorClass d = s.empty() ? ample_class(m) : weyl_witness(m, s);
  Json wj;
  wj["divisor"] = divisor_to_json(d);
  merge(wj, chambers_of(m, d));
  j["chamber_witness"] = wj;
  if (!s.empty()) {
    const WeylInZariskiVerdict w = weyl_in_zariski(m, s);
    if (w.counterexample) {
      const DivisorClass e = weyl_not_zariski_witness(m, s, *w.counterexample);
      Json ej;
      ej["counterexample"] = m.curve_name(*w.counterexample);
      ej["divisor"] = divisor_to_json(e);
      merge(ej, chambers_of(m, e));
      j["weyl_not_zariski"] = ej;
    }
    const ZariskiInWeylVerdict z = zariski_interior_in_weyl(m, s);
    if (z.pair) {
      const DivisorClass e = divergence_witness(m, z.pair->first, z.pair->second);
      Json ej;
      ej["pair"] = pair_json(m, *z.pair);
      ej["divisor"] = divisor_to_json(e);
      merge(ej, chambers_of(m, e));
      j["zariski_not_weyl"] = ej;
    }
  }
  emit(ctx, j);
  return kExitOk;
}

struct PlotOptions {
  std::string corners;
  std::size_t resolution = 400;
  std::string mode = "both";
  std::string output;
  std::size_t threads = 0;
};

int cmd_plot(Context& ctx, const std::string& source, const PlotOptions& opt) {
  const SurfaceModel m = load_model(source);
  banner(ctx);
  CrossSectionSpec spec;
  if (opt.corners.empty()) {
    spec = default_cross_section(m);
  } else {
    const auto parts = split(opt.corners, ';');
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "--corners needs three classes");
    for (std::size_t i = 0; i < 3; ++i) spec.corners[i] = parse_divisor(m, parts[i]);
  }
  spec.resolution = opt.resolution;
  spec.threads = opt.threads;
  if (opt.mode == "weyl") spec.mode = PlotMode::Weyl;
  else if (opt.mode == "zariski") spec.mode = PlotMode::Zariski;
  else if (opt.mode == "both") spec.mode = PlotMode::Both;
  else throw Error(ErrorCode::InvalidArgument, "--mode must be weyl, zariski or both");

  const CrossSection section = classify_cross_section(m, spec);
  const std::string svg = render_svg(m, section);
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + opt.output + "'");
  file << svg;

  const CrossSectionSummary s = summarize(section);
  Json j = header("plot", m);
  j["output"] = opt.output;
  j["resolution"] = spec.resolution;
  j["plot_mode"] = opt.mode;
  Json corners = Json::array();
  for (const auto& c : spec.corners) corners.push_back(divisor_to_json(c));
  j["corners"] = corners;
  j["cells"] = s.cells;
  j["not_big"] = s.not_big;
  auto family = [&](const std::set<CurveSet>& f) {
    std::vector<CurveSet> v(f.begin(), f.end());
    std::stable_sort(v.begin(), v.end(),
                     [](const CurveSet& a, const CurveSet& b) { return a.size() < b.size(); });
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(names_json(m, x));
    return arr;
  };
  if (spec.mode != PlotMode::Zariski) {
    j["weyl_supports"] = family(s.weyl_supports);
    j["weyl_boundary"] = s.weyl_boundary;
  }
  if (spec.mode != PlotMode::Weyl) {
    j["zariski_supports"] = family(s.zariski_supports);
    j["zariski_boundary"] = s.zariski_boundary;
  }
  if (spec.mode == PlotMode::Both) j["differing"] = s.differing;
  emit(ctx, j);
  return kExitOk;
}

int cmd_gallery(Context& ctx, const std::string& id, bool list) {
  if (list || id.empty()) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "gallery";
    Json ids = Json::array();
    for (const auto& g : gallery_ids()) {
      const GalleryEntry e = gallery_entry(g);
      Json entry;
      entry["id"] = e.id;
      entry["description"] = e.description;
      ids.push_back(entry);
    }
    j["entries"] = ids;
    emit(ctx, j);
    return kExitOk;
  }
  ctx.out << serialize_model(gallery_entry(id).model);
  return kExitOk;
}

int cmd_random(Context& ctx, std::uint64_t seed, std::size_t n, double density) {
  if (density < 0.0 || density > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "--density must lie in [0, 1]");
  }
  ctx.out << serialize_model(random_configuration(seed, n, density));
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotBig:
    case ErrorCode::NotNegativeDefinite:
    case ErrorCode::ModeUnsupported:
    case ErrorCode::SingularMatrix:
      return kExitInfeasible;
    case ErrorCode::InternalInvariant:
      return kExitInternal;
    default:
      return kExitInvalidInput;
  }
}

int report_error(Context& ctx, const std::string& command, std::string_view code,
                 const std::string& message, int exit_code) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["error"] = {{"code", std::string(code)}, {"message", message}};
  emit(ctx, j);
  ctx.err << "k3chambers: " << code << ": " << message << "\n";
  return exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Exact Zariski and Weyl chamber computations for K3 lattice models", "k3chambers"};
  app.require_subcommand(1);

  std::string model, divisor, set, gallery_id;
  PlotOptions plot;
  bool list = false;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  double density = 0.5;

  auto* validate = app.add_subcommand("validate", "Check the standing hypotheses of a model");
  validate->add_option("model", model, "Model file, - or gallery:<id>")->required();

  auto* decompose = app.add_subcommand("decompose", "Zariski decomposition of a divisor");
  decompose->add_option("model", model, "Model file, - or gallery:<id>")->required();
  decompose->add_option("divisor", divisor,
                        "Comma list (lattice coordinates, or t,a_1,..,a_n in configuration "
                        "mode), a curve name, H, or a .json file")
      ->required();

  auto* chambers = app.add_subcommand("chambers", "Enumerate Zariski and simple Weyl chambers");
  chambers->add_option("model", model, "Model file, - or gallery:<id>")->required();

  auto* compare = app.add_subcommand("compare", "Decide whether both decompositions coincide");
  compare->add_option("model", model, "Model file, - or gallery:<id>")->required();

  auto* criteria = app.add_subcommand("criteria", "Inclusion verdicts for one support set");
  criteria->add_option("model", model, "Model file, - or gallery:<id>")->required();
  criteria->add_option("set", set, "Comma-separated curve names; empty for the nef chamber")
      ->required();

  auto* witness = app.add_subcommand("witness", "Witness divisors for one support set");
  witness->add_option("model", model, "Model file, - or gallery:<id>")->required();
  witness->add_option("set", set, "Comma-separated curve names; empty for the nef chamber")
      ->required();

  auto* plot_cmd = app.add_subcommand("plot", "Render a cross-section of the chamber structure");
  plot_cmd->add_option("model", model, "Model file, - or gallery:<id>")->required();
  plot_cmd->add_option("--corners", plot.corners, "Three classes separated by ';'");
  plot_cmd->add_option("--res", plot.resolution, "Subdivisions per edge")->capture_default_str();
  plot_cmd->add_option("--mode", plot.mode, "weyl, zariski or both")->capture_default_str();
  plot_cmd->add_option("--threads", plot.threads, "Worker threads, 0 for all cores");
  plot_cmd->add_option("-o,--output", plot.output, "SVG output path")->required();

  auto* gallery = app.add_subcommand("gallery", "Print a built-in model");
  gallery->add_option("id", gallery_id, "quartic, double-cover or picard-one");
  gallery->add_flag("--list", list, "List the built-in models");

  auto* random = app.add_subcommand("random", "Print a random configuration-mode model");
  random->add_option("--seed", seed, "RNG seed")->required();
  random->add_option("--n", count, "Number of curves (at most 12)")->required();
  random->add_option("--density", density, "Edge probability")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (sub == validate) return cmd_validate(ctx, model);
    if (sub == decompose) return cmd_decompose(ctx, model, divisor);
    if (sub == chambers) return cmd_chambers(ctx, model);
    if (sub == compare) return cmd_compare(ctx, model);
    if (sub == criteria) return cmd_criteria(ctx, model, set);
    if (sub == witness) return cmd_witness(ctx, model, set);
    if (sub == plot_cmd) return cmd_plot(ctx, model, plot);
    if (sub == gallery) return cmd_gallery(ctx, gallery_id, list);
    if (sub == random) return cmd_random(ctx, seed, count, density);
  } catch (const Error& e) {
    return report_error(ctx, command, error_code_name(e.code()), e.what(),
                        exit_code_for(e.code()));
  } catch (const Json::exception& e) {
    return report_error(ctx, command, "PARSE_ERROR", e.what(), kExitInvalidInput);
  }
  return kExitInternal;
}

}  // namespace k3chambers::cli
