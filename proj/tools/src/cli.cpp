#include "augframes_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "augframes/certify.hpp"
#include "augframes/complexes.hpp"
#include "augframes/error.hpp"
#include "augframes/homology.hpp"
#include "augframes/json_io.hpp"
#include "augframes/quadring.hpp"
#include "augframes/unitgeometry.hpp"

namespace augframes::cli {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(Errc::ParseError, "write failed for '" + path + "'");
}

std::vector<Vector> path_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("path");
  std::vector<Vector> out;
  for (const auto& v : arr) out.push_back(vector_from_json(v));
  return out;
}

struct Options {
  long d = 0;
  long from = 0;
  long to = 0;
  long grid = 12;
  unsigned jobs = 1;
  std::string kind = "BA";
  int n = 2;
  int m = 0;
  long bound = 1;
  int unit_window = kDefaultUnitWindow;
  std::string in;
  std::string out;
  std::string path;
};

int cmd_ring_info(const Options& o, std::ostream& out) {
  out << ring_info_json(make_ring(o.d)).dump(2) << '\n';
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.from > o.to) {
    err << "classify: --from must not exceed --to\n";
    return kExitUsage;
  }
  json rows = json::array();
  json exceptional = json::array();
  for (const auto& r : norm_euclidean_classification(o.from, o.to)) {
    rows.push_back({{"d", r.d}, {"norm_euclidean", r.norm_euclidean}, {"generated_by_units", r.generated_by_units}});
    if (r.norm_euclidean && !r.generated_by_units) exceptional.push_back(r.d);
  }
  out << json{{"rows", rows}, {"norm_euclidean_not_unit_generated", exceptional}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(LemmaId lemma, const Options& o, std::ostream& out) {
  const SweepReport rep = sweep_lemma(make_ring(o.d), lemma, o.grid, o.jobs);
  out << to_json(rep).dump(2) << '\n';
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_complex_build(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.kind != "B" && o.kind != "BA") {
    err << "complex build: --kind must be B or BA\n";
    return kExitUsage;
  }
  const FrameComplex fc = build_complex(make_ring(o.d), o.n, o.m, o.bound, o.kind == "B" ? FrameKind::B : FrameKind::BA,
                                        o.unit_window);
  const auto problems = verify_complex(fc);
  write_json_file(o.out, to_json(fc));
  json counts = json::object();
  for (std::size_t k = 0; k < fc.cx.faces.size(); ++k) counts[std::to_string(k)] = fc.cx.faces[k].size();
  out << json{{"out", o.out}, {"counts", counts}, {"windowed", fc.windowed}, {"problems", problems}}.dump(2) << '\n';
  return problems.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const FrameComplex fc = frame_complex_from_json(read_json_file(o.in));
  out << to_json(reduced_homology(fc)).dump(2) << '\n';
  return kExitOk;
}

int cmd_detour(const std::string& mode, const Options& o, std::ostream& out, std::ostream& err) {
  const Ring ring = make_ring(o.d);
  DetourCertificate c;
  if (mode == "builtin") {
    auto b = builtin_detour(ring);
    if (!b) {
      err << "detour builtin: no built-in detour for " << ring.spec() << " (available for d = -2, -7, -11)\n";
      return kExitUsage;
    }
    c = detour_verify(ring, b->path, b->r1, b->r2);
  } else if (mode == "construct") {
    c = detour_construct(ring);
  } else {
    if (o.path.empty()) {
      err << "detour verify: --path is required\n";
      return kExitUsage;
    }
    const json j = read_json_file(o.path);
    c = detour_verify(ring, path_from_json(j), ring_element_from_json(j.at("r1")), ring_element_from_json(j.at("r2")));
  }
  out << to_json(c).dump(2) << '\n';
  return c.valid ? kExitOk : kExitCheckFailed;
}

int cmd_byk_check(const Options& o, std::ostream& out) {
  const json j = read_json_file(o.in);
  const Ring ring = ring_from_spec(j.at("ring").get<std::string>());
  const SymbolChain chain = chain_from_json(j.at("chain"));
  const SymbolChain normal = normalize_chain(chain, ring);
  const FormalLineSum image = apartment_image_2(chain, ring);
  out << json{{"ring", ring.spec()},
              {"normalized_chain", to_json(normal)},
              {"apartment_image", to_json(image)},
              {"augmentation", image.augmentation().get_str()},
              {"in_kernel", image.is_zero()}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_certify_noninj(const Options& o, std::ostream& out) {
  const NoninjectivityBundle b = noninjectivity_report(make_ring(o.d));
  const json j = to_json(b);
  out << j.dump(2) << '\n';
  if (!b.has_certificate) return kExitOk;
  return b.valid && verify_certificate_json(j) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with complexes of augmented partial frames over quadratic rings", "augframes"};
  app.require_subcommand(1);

  auto add_d = [&](CLI::App* sub) { sub->add_option("-d", o.d, "squarefree integer d of Q(sqrt d)")->required(); };

  CLI::App* ring = app.add_subcommand("ring", "ring data");
  CLI::App* ring_info = ring->add_subcommand("info", "descriptor, units and classification of one ring");
  ring->require_subcommand(1);
  add_d(ring_info);

  CLI::App* classify = app.add_subcommand("classify", "norm-Euclidean and unit-generation table over a d range");
  classify->add_option("--from", o.from)->required();
  classify->add_option("--to", o.to)->required();

  CLI::App* verify = app.add_subcommand("verify", "exhaustive lemma sweeps over imaginary rings");
  verify->require_subcommand(1);
  std::vector<std::pair<LemmaId, CLI::App*>> lemmas;
  for (auto [id, name] : {std::pair{LemmaId::LEM0, "lem0"}, {LemmaId::LEM1, "lem1"}, {LemmaId::LEM2, "lem2"}}) {
    CLI::App* sub = verify->add_subcommand(name, "sweep " + std::string(name));
    add_d(sub);
    sub->add_option("--grid", o.grid, "grid denominator (LEM0: norm bound)")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    lemmas.emplace_back(id, sub);
  }

  CLI::App* complex = app.add_subcommand("complex", "frame complexes");
  complex->require_subcommand(1);
  CLI::App* build = complex->add_subcommand("build", "build a truncated B or BA complex and dump it as JSON");
  build->add_option("--kind", o.kind)->required();
  add_d(build);
  build->add_option("-n", o.n)->required();
  build->add_option("-m", o.m)->required();
  build->add_option("--bound", o.bound)->required();
  build->add_option("--unit-window", o.unit_window);
  build->add_option("--out", o.out)->required();

  CLI::App* homology = app.add_subcommand("homology", "reduced homology of a complex dump");
  homology->add_option("--in", o.in)->required();

  CLI::App* detour = app.add_subcommand("detour", "detour certificates");
  detour->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> detours;
  for (const char* name : {"builtin", "construct", "verify"}) {
    CLI::App* sub = detour->add_subcommand(name, std::string(name) + " a detour");
    add_d(sub);
    sub->add_option("--path", o.path, "JSON file with path, r1, r2");
    detours.emplace_back(name, sub);
  }

  CLI::App* byk = app.add_subcommand("byk", "modular symbol chains");
  byk->require_subcommand(1);
  CLI::App* byk_check = byk->add_subcommand("check", "normalize a chain and compute its apartment image");
  byk_check->add_option("--in", o.in)->required();

  CLI::App* certify = app.add_subcommand("certify", "end-to-end certificates");
  certify->require_subcommand(1);
  CLI::App* noninj = certify->add_subcommand("noninj", "non-injectivity bundle at rank 2");
  add_d(noninj);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (ring_info->parsed()) return cmd_ring_info(o, out);
    if (classify->parsed()) return cmd_classify(o, out, err);
    for (auto& [id, sub] : lemmas) {
      if (sub->parsed()) return cmd_verify(id, o, out);
    }
    if (build->parsed()) return cmd_complex_build(o, out, err);
    if (homology->parsed()) return cmd_homology(o, out);
    for (auto& [name, sub] : detours) {
      if (sub->parsed()) return cmd_detour(name, o, out, err);
    }
    if (byk_check->parsed()) return cmd_byk_check(o, out);
    if (noninj->parsed()) return cmd_certify_noninj(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::NoWitness:
      case Errc::NotABasis:
      case Errc::NotALoop:
      case Errc::MultiplePassages:
        return kExitCheckFailed;
      default:
        return kExitUsage;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace augframes::cli
