#include "mukai/cli.hpp"

#include "mukai/certificates.hpp"
#include "mukai/error.hpp"
#include "mukai/families.hpp"
#include "mukai/lattice.hpp"
#include "mukai/moduli.hpp"
#include "mukai/serialize.hpp"
#include "mukai/walls.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace mukai::cli {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& text, const char* what) {
  const std::string t = trim(text);
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) return parse_json(t);
  std::ifstream in(t);
  if (!in) throw Error(ErrorKind::InvalidArgument, std::string("cannot read ") + what + " file '" + t + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, t + ": " + e.what());
  }
}

std::vector<Int> parse_tuple(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw Error(ErrorKind::Parse, "expected a tuple like (1,0,1), got '" + text + "'");
  }
  std::vector<Int> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item)));
  return out;
}

NSLattice load_lattice(const std::string& text) { return lattice_from_json(load_json(text, "lattice")); }

MukaiVector load_vector(const std::string& text, const NSLattice& lattice) {
  MukaiVector v;
  if (!trim(text).empty() && trim(text)[0] == '(') {
    auto coords = parse_tuple(text);
    if (coords.size() != lattice.rank() + 2) {
      throw Error(ErrorKind::DimensionMismatch,
                  "tuple has " + std::to_string(coords.size()) + " entries, expected " +
                      std::to_string(lattice.rank() + 2));
    }
    v = MukaiVector::from_coordinates(coords);
  } else {
    v = vector_from_json(load_json(text, "vector"));
  }
  require_vector(v, lattice);
  return v;
}

NSClass load_class(const std::string& text, const NSLattice& lattice) {
  NSClass c;
  if (!trim(text).empty() && trim(text)[0] == '(') {
    c = parse_tuple(text);
  } else {
    c = class_from_json(load_json(text, "class"));
  }
  lattice.require_class(c, "class");
  return c;
}

std::vector<NSClass> load_subclasses(const std::string& text, const MukaiVector& v,
                                     const NSLattice& lattice) {
  if (trim(text) == "auto-box") return default_subclasses(v.xi, lattice);
  std::vector<NSClass> out;
  const Json j = load_json(text, "subclasses");
  if (!j.is_array()) throw Error(ErrorKind::Parse, "subclasses must be an array of classes");
  for (const auto& c : j) out.push_back(class_from_json(c));
  return out;
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_table(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) {
               return x.is_object() || x.is_array();
             }) && !std::all_of(j.begin(), j.end(), [](const Json& x) {
               return x.is_array() && std::none_of(x.begin(), x.end(),
                                                   [](const Json& y) { return y.is_structured(); });
             })) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << (prefix.empty() ? "value" : prefix) << ": "
        << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Common {
  std::string format = "json";
  std::string out_path;
};

int emit(const Json& j, const Common& common, std::ostream& out) {
  std::ostringstream text;
  if (common.format == "table") {
    render_table(j, "", text);
  } else {
    text << j.dump(2) << "\n";
  }
  if (common.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(common.out_path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + common.out_path + "'");
    file << text.str();
  }
  return kSuccess;
}

bool is_checked_failure(ErrorKind kind) {
  return kind == ErrorKind::HypothesisFailed || kind == ErrorKind::NoCertificateFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Mukai-lattice toolkit for moduli of sheaves on K3 surfaces", "mukai-kit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", common.out_path, "Write the report to this file");

  std::string lattice_arg, vector_arg, x_arg, y_arg, n_arg, v1_arg, cone_arg;
  std::string subclasses_arg = "auto-box";
  std::optional<std::int64_t> l_opt, r1_opt, m_opt;
  std::int64_t r = 0, d = 0, s = 0, i_index = 1, l = 1, square_arg = 0, a_mod_l = 0, rank_cap = 0;
  std::uint64_t budget = 1'000'000;
  std::string kind_arg;
  std::vector<std::string> params;
  bool oracle = false;
  std::string cert_arg;

  auto* pair_cmd = app.add_subcommand("pair", "Mukai pairing <x, y>");
  pair_cmd->add_option("--lattice", lattice_arg)->required();
  pair_cmd->add_option("--x", x_arg)->required();
  pair_cmd->add_option("--y", y_arg)->required();

  auto* twist_cmd = app.add_subcommand("twist", "Multiply by e^N");
  twist_cmd->add_option("--lattice", lattice_arg)->required();
  twist_cmd->add_option("--vector", vector_arg)->required();
  twist_cmd->add_option("--n", n_arg, "Class N as (c1,...) or a JSON array")->required();

  auto* reflect_cmd = app.add_subcommand("reflect", "Reflection in a spherical class");
  reflect_cmd->add_option("--lattice", lattice_arg)->required();
  reflect_cmd->add_option("--vector", vector_arg)->required();
  reflect_cmd->add_option("--v1", v1_arg)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Primitivity, square and moduli dimension");
  classify_cmd->add_option("--lattice", lattice_arg)->required();
  classify_cmd->add_option("--vector", vector_arg)->required();

  auto* orth_cmd = app.add_subcommand("orth", "Basis of v^perp");
  orth_cmd->add_option("--lattice", lattice_arg)->required();
  orth_cmd->add_option("--vector", vector_arg)->required();

  auto* family_cmd = app.add_subcommand("family", "Build a model family instance");
  family_cmd->add_option("--r", r)->required();
  family_cmd->add_option("--d", d)->required();
  family_cmd->add_option("--s", s)->required();
  family_cmd->add_option("--l", l_opt, "Multiplicity (general family)");
  family_cmd->add_option("--r1", r1_opt, "r1 (general family)");

  auto* check_cmd = app.add_subcommand("check", "Evaluate one hypothesis");
  check_cmd->add_option("--kind", kind_arg)->required();
  check_cmd->add_option("--param", params, "key=value, repeatable");

  auto* strata_cmd = app.add_subcommand("strata", "Numerics of the stratum M(v)_i");
  strata_cmd->add_option("--lattice", lattice_arg)->required();
  strata_cmd->add_option("--vector", vector_arg)->required();
  strata_cmd->add_option("--v1", v1_arg)->required();
  strata_cmd->add_option("--i", i_index)->required();
  strata_cmd->add_option("--m", m_opt, "Incidence multiplicity (default min(1, hom))");

  auto* mu_cmd = app.add_subcommand("mu-bound", "Codimension bound for the mu-unstable locus");
  mu_cmd->add_option("--square", square_arg)->required();
  mu_cmd->add_option("--l", l)->required();
  mu_cmd->add_flag("--oracle", oracle, "Also run the filtration oracle on --vector");
  mu_cmd->add_option("--lattice", lattice_arg);
  mu_cmd->add_option("--vector", vector_arg);
  mu_cmd->add_option("--budget", budget);

  auto* walls_cmd = app.add_subcommand("walls", "Numerical walls for r = 0");
  auto* chambers_cmd = app.add_subcommand("chambers", "Chambers of a rank-two cone");
  for (auto* cmd : {walls_cmd, chambers_cmd}) {
    cmd->add_option("--lattice", lattice_arg)->required();
    cmd->add_option("--vector", vector_arg)->required();
    cmd->add_option("--cone", cone_arg)->required();
    cmd->add_option("--subclasses", subclasses_arg, "File, inline JSON, or auto-box");
  }

  auto* certify_cmd = app.add_subcommand("certify", "Plan and verify a certificate");
  certify_cmd->add_option("--rank", r)->required();
  certify_cmd->add_option("--l", l);
  certify_cmd->add_option("--square", square_arg)->required();
  certify_cmd->add_option("--a-mod-l", a_mod_l);
  certify_cmd->add_option("--rank-cap", rank_cap);
  certify_cmd->add_option("--budget", budget);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate");
  verify_cmd->add_option("certificate", cert_arg, "File or inline JSON")->required();

  std::vector<const char*> argv{"mukai-kit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*pair_cmd) {
      auto L = load_lattice(lattice_arg);
      return emit({{"pairing", to_json(pair(load_vector(x_arg, L), load_vector(y_arg, L), L))}},
                  common, out);
    }
    if (*twist_cmd) {
      auto L = load_lattice(lattice_arg);
      return emit({{"vector", to_json(twist(load_vector(vector_arg, L), load_class(n_arg, L), L))}},
                  common, out);
    }
    if (*reflect_cmd) {
      auto L = load_lattice(lattice_arg);
      return emit({{"vector", to_json(reflect(load_vector(vector_arg, L), load_vector(v1_arg, L), L))}},
                  common, out);
    }
    if (*classify_cmd) {
      auto L = load_lattice(lattice_arg);
      auto v = load_vector(vector_arg, L);
      Json j = to_json(classify(v, L));
      j["content"] = to_json(content(v));
      j["moduli"] = nullptr;
      if (square(v, L) >= -2) j["moduli"] = to_json(moduli_dim(v, L));
      return emit(j, common, out);
    }
    if (*orth_cmd) {
      auto L = load_lattice(lattice_arg);
      return emit(to_json(orth_basis(load_vector(vector_arg, L), L)), common, out);
    }
    if (*family_cmd) {
      if (l_opt.has_value() != r1_opt.has_value()) {
        throw Error(ErrorKind::InvalidArgument, "--l and --r1 go together");
      }
      FamilyInstance fam = l_opt ? family_general(*l_opt, r, d, *r1_opt, s) : family_coprime(r, d, s);
      Json j = to_json(fam);
      Json reports = Json::array();
      for (const auto& rep : family_reports(fam)) reports.push_back(to_json(rep));
      j["reports"] = reports;
      return emit(j, common, out);
    }
    if (*check_cmd) {
      ParamMap map;
      for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Parse, "--param expects key=value, got '" + p + "'");
        map[trim(p.substr(0, eq))] = parse_int(trim(p.substr(eq + 1)));
      }
      auto report = check_hypotheses(parse_hypothesis_kind(kind_arg), map);
      emit(to_json(report), common, out);
      return report.passed ? kSuccess : kCheckedFailure;
    }
    if (*strata_cmd) {
      auto L = load_lattice(lattice_arg);
      auto v = load_vector(vector_arg, L);
      auto v1 = load_vector(v1_arg, L);
      Int m;
      if (m_opt) {
        m = *m_opt;
      } else {
        const Int hom = -pair(v, v1, L) - 1 + i_index;
        m = hom >= 1 ? 1 : 0;
      }
      return emit(to_json(stratum_report(v, v1, i_index, m, L)), common, out);
    }
    if (*mu_cmd) {
      auto bound = mu_codim_bound(square_arg, l);
      Json j = {{"bound", to_json(bound)}};
      bool ok = bound.hypothesis_holds;
      if (oracle) {
        if (lattice_arg.empty() || vector_arg.empty()) {
          throw Error(ErrorKind::InvalidArgument, "--oracle needs --lattice and --vector");
        }
        auto L = load_lattice(lattice_arg);
        auto v = load_vector(vector_arg, L);
        if (square(v, L) != square_arg) {
          throw Error(ErrorKind::InvalidArgument, "--square does not match <v^2>");
        }
        auto rep = filtration_oracle(v, l, L, budget);
        j["oracle"] = to_json(rep);
        ok = ok && rep.identity_verified && rep.dominates;
      }
      emit(j, common, out);
      return ok ? kSuccess : kCheckedFailure;
    }
    if (*walls_cmd || *chambers_cmd) {
      auto L = load_lattice(lattice_arg);
      auto v = load_vector(vector_arg, L);
      auto cone = cone_from_json(load_json(cone_arg, "cone"));
      auto subclasses = load_subclasses(subclasses_arg, v, L);
      auto walls = enumerate_walls(v, L, cone, subclasses);
      Json j = {{"label", "numerical walls"}, {"walls", to_json(walls)}};
      if (*chambers_cmd) j["chambers"] = to_json(chambers_rank2(walls, cone, L));
      return emit(j, common, out);
    }
    if (*certify_cmd) {
      PlanRequest req;
      req.r = r;
      req.l = l;
      req.square = square_arg;
      req.a_mod_l = a_mod_l;
      req.rank_cap = rank_cap;
      req.budget = budget;
      auto cert = plan_certificate(req);
      auto verdict = verify_certificate(cert);
      emit(to_json(cert), common, out);
      return verdict.accepted ? kSuccess : kCheckedFailure;
    }
    if (*verify_cmd) {
      auto cert = certificate_from_json(load_json(cert_arg, "certificate"));
      auto verdict = verify_certificate(cert);
      emit(to_json(verdict), common, out);
      return verdict.accepted ? kSuccess : kCheckedFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_checked_failure(e.kind()) ? kCheckedFailure : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mukai::cli
