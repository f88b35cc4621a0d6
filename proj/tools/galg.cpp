// Command-line front end: every subcommand reads .galg presentations and
// prints one JSON document (or a table) on stdout.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "galg/brackets.hpp"
#include "galg/center.hpp"
#include "galg/error.hpp"
#include "galg/sampling.hpp"
#include "galg/textio.hpp"

using namespace galg;

namespace {

struct Globals {
  int degree = 4;
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load(const std::string& path) { return parse_presentation(read_source(path)); }

std::vector<Scalar> parse_point(const std::string& text, const Presentation& pres) {
  std::vector<Scalar> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(Scalar::parse(pres.field(), item));
  return point;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<std::size_t>(std::stoul(item)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galg: invariants and isomorphism tests for connected graded algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--degree,-D", g.degree, "truncation degree D")->capture_default_str();
  app.add_option("--format", g.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--budget", g.budget, "enumeration budget")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized demos")->capture_default_str();

  std::string file, file_b, poly_text, dist, point_text, profile_text, scalars_text;
  std::size_t s_value = 0, count = 1, random_count = 0;
  unsigned depth = 1;
  int center_degree = 1;
  bool brute = false;

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function through D");
  auto* gb_cmd = app.add_subcommand("gb", "truncated Groebner basis");
  auto* chars_cmd = app.add_subcommand("characters", "characters over GF(p) with cotangent dimensions");
  auto* tangent_cmd = app.add_subcommand("tangent", "dim I^i/I^(i+1) profiles of characters");
  auto* js_cmd = app.add_subcommand("js", "intersection of character ideals with given tangent data");
  auto* normal_cmd = app.add_subcommand("normal", "normal elements of degree 1");
  auto* center_cmd = app.add_subcommand("center", "central elements of one degree");
  auto* brackets_cmd = app.add_subcommand("brackets", "bracket decomposition of a homogeneous polynomial");
  auto* fp_cmd = app.add_subcommand("fingerprint", "graded fingerprint");
  auto* iso_cmd = app.add_subcommand("iso", "graded isomorphism of two skew quotients");
  auto* cancel_cmd = app.add_subcommand("cancel", "adjoin central variables and factor the degree-1 center out");

  for (auto* cmd : {hilbert_cmd, gb_cmd, chars_cmd, tangent_cmd, js_cmd, normal_cmd, center_cmd, brackets_cmd, fp_cmd,
                    iso_cmd, cancel_cmd}) {
    cmd->add_option("file", file, "presentation (.galg, - for stdin)")->required();
  }
  tangent_cmd->add_option("--depth", depth, "number of quotients I^i/I^(i+1)")->capture_default_str();
  tangent_cmd->add_option("--point", point_text, "comma-separated character instead of enumeration");
  auto* s_opt = js_cmd->add_option("--s", s_value, "cotangent dimension");
  auto* p_opt = js_cmd->add_option("--profile", profile_text, "comma-separated dims of I^i/I^(i+1)");
  s_opt->excludes(p_opt);
  normal_cmd->add_option("--element", poly_text, "test one homogeneous element instead of scanning lines");
  center_cmd->add_option("--deg", center_degree, "degree of the central elements")->capture_default_str();
  brackets_cmd->add_option("--poly", poly_text, "homogeneous polynomial");
  brackets_cmd->add_option("--distinguished,-d", dist, "distinguished generator")->required();
  brackets_cmd->add_option("--random", random_count, "check this many random polynomials instead");
  iso_cmd->add_option("other", file_b, "second presentation")->required();
  iso_cmd->add_flag("--brute", brute, "exhaustive GL search over GF(2) or GF(3)");
  iso_cmd->add_option("--scalars", scalars_text, "comma-separated scalar candidates");
  cancel_cmd->add_option("--count,-n", count, "number of central variables")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Format format = g.format == "table" ? Format::Table : Format::Json;
  try {
    Json out;
    if (hilbert_cmd->parsed()) {
      auto rs = ReductionSystem::build(load(file), g.degree);
      out = hilbert_json(rs.hilbert(), g.degree);
    } else if (gb_cmd->parsed()) {
      out = rules_json(ReductionSystem::build(load(file), g.degree));
    } else if (chars_cmd->parsed()) {
      Presentation pres = load(file);
      out["characters"] = Json::array();
      for (const auto& chi : characters_enumerate(pres, g.budget)) {
        out["characters"].push_back(character_json(chi, cotangent_dimension(pres, chi.point)));
      }
    } else if (tangent_cmd->parsed()) {
      Presentation pres = load(file);
      auto alg = TruncatedAlgebra::build(pres, g.degree);
      std::vector<Character> chars;
      if (!point_text.empty()) {
        chars.push_back(Character{parse_point(point_text, pres)});
      } else {
        chars = characters_enumerate(pres, g.budget);
      }
      out["profiles"] = Json::array();
      for (const auto& chi : chars) out["profiles"].push_back(tangent_json(tangent_profile(alg, chi, depth)));
    } else if (js_cmd->parsed()) {
      auto alg = TruncatedAlgebra::build(load(file), g.degree);
      if (!profile_text.empty()) {
        auto profile = parse_sizes(profile_text);
        out["profile"] = profile;
        out["subspace"] = filtered_json(alg, j_sequence(alg, profile, g.budget));
      } else {
        out["s"] = s_value;
        out["subspace"] = filtered_json(alg, j_s(alg, s_value, g.budget));
      }
    } else if (normal_cmd->parsed()) {
      Presentation pres = load(file);
      auto alg = TruncatedAlgebra::build(pres, g.degree);
      if (!poly_text.empty()) {
        NcPoly f = parse_polynomial(poly_text, pres.generators(), pres.field());
        out = Json{{"element", to_string(f)}, {"normal", is_normal_up_to(alg, f)}, {"D", g.degree}};
      } else {
        out["normal_lines"] = Json::array();
        for (const auto& f : normal_lines_degree_one(alg, g.budget)) out["normal_lines"].push_back(to_string(f));
        out["D"] = g.degree;
      }
    } else if (center_cmd->parsed()) {
      auto alg = TruncatedAlgebra::build(load(file), g.degree);
      Subspace z = central_elements(alg, center_degree);
      Json basis = Json::array();
      for (const auto& row : z.basis()) basis.push_back(to_string(alg.component_poly(row, center_degree)));
      out = Json{{"degree", center_degree}, {"dim", z.dim()}, {"basis", basis}, {"rows", subspace_json(z)["rows"]}};
    } else if (brackets_cmd->parsed()) {
      Presentation pres = load(file);
      auto d = pres.gens().find(dist);
      if (!d) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + dist + "'");
      if (random_count > 0) {
        Rng rng(g.seed);
        std::size_t ok = 0;
        for (std::size_t k = 0; k < random_count; ++k) {
          int m = std::uniform_int_distribution<int>(1, g.degree)(rng);
          NcPoly r = random_homogeneous(pres.generators(), pres.field(), m, 6, rng);
          if (expand(bracket_decompose(r, *d)) == r) ++ok;
        }
        out = Json{{"trials", random_count}, {"round_trips", ok}, {"seed", g.seed}};
      } else {
        NcPoly r = parse_polynomial(poly_text, pres.generators(), pres.field());
        auto dec = bracket_decompose(r, *d);
        out = decomposition_json(dec);
        out["round_trip"] = expand(dec) == r;
      }
    } else if (fp_cmd->parsed()) {
      out = fingerprint_json(graded_fingerprint(TruncatedAlgebra::build(load(file), g.degree), g.budget));
    } else if (iso_cmd->parsed()) {
      Presentation a = load(file);
      Presentation b = load(file_b);
      IsoVerdict v;
      if (brute) {
        v = brute_force_graded_iso(a, b, g.degree, g.budget);
      } else {
        SkewIsoOptions options;
        options.budget = g.budget;
        if (!scalars_text.empty()) options.candidates = parse_point(scalars_text, a);
        v = skew_quotient_iso(a, b, g.degree, options);
      }
      out = verdict_json(v);
    } else if (cancel_cmd->parsed()) {
      Presentation a = load(file);
      Presentation result = cancel(a, count, g.degree);
      auto fa = graded_fingerprint(TruncatedAlgebra::build(a, g.degree), g.budget);
      auto fr = graded_fingerprint(TruncatedAlgebra::build(result, g.degree), g.budget);
      out = Json{{"count", count},
                 {"presentation", presentation_json(result)},
                 {"source", print_presentation(result)},
                 {"fingerprint_equal", fa == fr}};
    }
    std::cout << emit(out, format);
    return 0;
  } catch (const SyntaxError& e) {
    std::cerr << "galg: syntax error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Error& e) {
    std::cerr << "galg: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "galg: " << e.what() << "\n";
    return 1;
  }
}
