// Command-line front end: build root data, compute stratum tables, optimal
// cocharacters, mu_P vectors and induced strata; plain tables or JSON.

#include "hesselink/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hesselink;

std::vector<Rat> parse_scales(const std::string& arg) {
  if (arg.empty()) return {};
  std::string text = arg;
  std::ifstream f(arg);
  if (f.good()) {
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    for (auto& c : text)
      if (c == '\n' || c == '\t' || c == ' ') c = ',';
  }
  std::vector<Rat> scales;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) scales.push_back(rat_from_string(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return scales;
}

RootDatum load_datum(const std::string& type_tag, const std::string& relative,
                     const std::string& gram_arg) {
  if (!type_tag.empty() && !relative.empty())
    throw EngineError(Err::MalformedSpec, "--type and --relative are mutually exclusive");
  if (!relative.empty()) {
    std::ifstream f(relative);
    if (f.good()) {
      std::stringstream ss;
      ss << f.rdbuf();
      return build_relative(ss.str());
    }
    return build_relative(relative);
  }
  if (type_tag.empty()) throw EngineError(Err::MalformedSpec, "--type or --relative required");
  return build(type_tag, parse_scales(gram_arg));
}

Parabolic parse_levi(const std::string& arg, const RootDatum& datum) {
  Parabolic p;
  if (arg.empty()) return p;
  std::string cur;
  for (char c : arg + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      if (cur.size() != 1 || cur[0] < 'a')
        throw EngineError(Err::MalformedSpec, "--levi takes simple root letters (a,b,...)");
      size_t idx = static_cast<size_t>(cur[0] - 'a');
      if (idx >= datum.simples.size())
        throw EngineError(Err::MalformedSpec, "no such simple root: " + cur);
      p.levi_simples.push_back(idx);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return p;
}

void emit(const Json& record, bool json_mode, const std::string& renderer) {
  if (json_mode) {
    std::cout << record.dump(2) << "\n";
    return;
  }
  if (renderer == "strata")
    std::cout << render_strata_table(record);
  else if (renderer == "induce")
    std::cout << render_induction(record);
  else if (renderer == "kempf")
    std::cout << render_kempf(record);
  else
    std::cout << render_vector(record);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratification engine for nilpotent and unipotent cones"};
  app.require_subcommand(1);

  std::string type_tag, relative, gram_arg, support_arg, levi_arg, stratum_arg;
  bool json_mode = false;
  uint64_t seed = 20240625;
  size_t budget = 2'000'000;

  auto add_common = [&](CLI::App* sub, bool with_relative) {
    sub->add_option("--type", type_tag, "split type tag (A1..A3, B2, B3, C2, C3, G2, products)");
    if (with_relative)
      sub->add_option("--relative", relative, "builtin (su21, bc1(m1,m2)) or spec file");
    sub->add_flag("--json", json_mode, "machine-readable output");
    sub->add_option("--gram", gram_arg, "per-factor Gram scales (comma list or file)");
    sub->add_option("--seed", seed, "seed for the sampling fallback");
    sub->add_option("--budget", budget, "enumeration budget");
  };

  auto* cmd_strata = app.add_subcommand("strata", "stratum table of the nilpotent/unipotent cone");
  add_common(cmd_strata, true);

  auto* cmd_optimal = app.add_subcommand("optimal", "optimal cocharacter of a torus support");
  add_common(cmd_optimal, true);
  cmd_optimal->add_option("--support", support_arg,
                          "comma list of root names (a, b, a+b, 2a+b) or (coords)");

  auto* cmd_mu_p = app.add_subcommand("mu-p", "min-norm cone element of a standard parabolic");
  add_common(cmd_mu_p, false);
  cmd_mu_p->add_option("--levi", levi_arg, "Levi simple roots, e.g. \"a,b\" (empty: minimal P)");

  auto* cmd_induce = app.add_subcommand("induce", "induction of a Levi stratum");
  add_common(cmd_induce, true);
  cmd_induce->add_option("--levi", levi_arg, "Levi simple roots of the parabolic");
  cmd_induce->add_option("--stratum", stratum_arg,
                         "Levi stratum: \"trivial\" or a label (coords) in the Levi");

  CLI11_PARSE(app, argc, argv);

  try {
    Budget b;
    b.subset_limit = budget;
    if (app.got_subcommand(cmd_strata)) {
      RootDatum d = load_datum(type_tag, relative, gram_arg);
      auto table = enumerate_strata(d, b);
      Json inputs;
      inputs["type"] = relative.empty() ? type_tag : ("relative:" + relative);
      inputs["gram"] = gram_arg;
      inputs["budget"] = budget;
      emit(make_record("strata", inputs, to_json(table)), json_mode, "strata");
    } else if (app.got_subcommand(cmd_optimal)) {
      RootDatum d = load_datum(type_tag, relative, gram_arg);
      std::vector<Vec> support;
      std::string cur;
      int depth = 0;
      for (char c : support_arg + ",") {
        if (c == ',' && depth == 0) {
          if (!cur.empty()) support.push_back(parse_root_combo(cur, d));
          cur.clear();
        } else {
          if (c == '(') ++depth;
          if (c == ')') --depth;
          cur += c;
        }
      }
      KempfDatum kd = torus_optimal(support, d.gram, d.lattice);
      Json inputs;
      inputs["type"] = relative.empty() ? type_tag : ("relative:" + relative);
      inputs["support"] = support_arg;
      emit(make_record("optimal", inputs, to_json(kd)), json_mode, "kempf");
    } else if (app.got_subcommand(cmd_mu_p)) {
      RootDatum d = load_datum(type_tag, relative, gram_arg);
      Parabolic p = parse_levi(levi_arg, d);
      Vec v = mu_p(p, d);
      Json inputs;
      inputs["type"] = type_tag;
      inputs["levi"] = levi_arg;
      Json results;
      results["value"] = to_json(v);
      emit(make_record("mu-p", inputs, results), json_mode, "vector");
    } else if (app.got_subcommand(cmd_induce)) {
      RootDatum d = load_datum(type_tag, relative, gram_arg);
      Parabolic p = parse_levi(levi_arg, d);
      auto table = enumerate_strata(d, b);
      std::optional<Vec> xi;
      if (!stratum_arg.empty() && stratum_arg != "trivial")
        xi = parse_root_combo(stratum_arg, d);
      InductionOptions opts;
      opts.seed = seed;
      opts.budget = b;
      auto r = induce(d, p, xi, table, opts);
      Json inputs;
      inputs["type"] = relative.empty() ? type_tag : ("relative:" + relative);
      inputs["levi"] = levi_arg;
      inputs["stratum"] = stratum_arg.empty() ? "trivial" : stratum_arg;
      inputs["seed"] = seed;
      emit(make_record("induce", inputs, to_json(r)), json_mode, "induce");
    }
  } catch (const hesselink::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code) {
      case Err::SizeLimit:
      case Err::BudgetExceeded:
        return 3;
      case Err::UnsupportedType:
      case Err::MalformedSpec:
      case Err::LengthMismatch:
      case Err::EmptySupport:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
