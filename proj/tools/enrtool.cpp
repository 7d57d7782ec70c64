// Command-line front end: lattice queries, ternary-code computations, fiber
// classification, heights, and the claim-verification registry.

#include "CLI11.hpp"
#include "json.hpp"

#include "enr/code3.hpp"
#include "enr/discform.hpp"
#include "enr/io.hpp"
#include "enr/models.hpp"
#include "enr/overlattice.hpp"
#include "enr/verify.hpp"
#include "enr/weierstrass.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace {

using nlohmann::json;
using namespace enr;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBound = 4;

struct Options {
  std::string format = "text";
  long iso_bound = 10000;
  int verbosity = 0;
};

void load_config(Options& opt, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  json j;
  in >> j;
  for (const auto& [key, value] : j.items()) {
    if (key == "format")
      opt.format = value.get<std::string>();
    else if (key == "iso_bound")
      opt.iso_bound = value.get<long>();
    else if (key == "verbosity")
      opt.verbosity = value.get<int>();
    else
      throw std::invalid_argument("unknown config key '" + key + "'");
  }
  if (opt.format != "text" && opt.format != "json")
    throw std::invalid_argument("format must be 'text' or 'json'");
  if (opt.iso_bound < 1 || opt.verbosity < 0)
    throw std::invalid_argument("config bounds must be positive");
}

void emit(const Options& opt, const json& structured, const std::string& text) {
  if (opt.format == "json")
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_lattice_disc(const Options& opt, const std::string& path) {
  GramLattice l = load_lattice(path);
  Integer det = determinant(l);
  FiniteAbelianGroup g = discriminant_group(l);
  json factors = json::array();
  std::ostringstream text;
  text << "determinant " << det.get_str() << "\ninvariant factors:";
  for (const auto& d : g.invariant_factors) {
    factors.push_back(d.get_str());
    text << " " << d.get_str();
  }
  if (g.invariant_factors.empty()) text << " (trivial group)";
  text << "\n";
  emit(opt, {{"determinant", det.get_str()}, {"invariant_factors", factors}},
       text.str());
  return kExitOk;
}

int cmd_lattice_qform(const Options& opt, const std::string& path) {
  GramLattice l = load_lattice(path);
  FiniteQuadraticForm q = discriminant_form(l);
  json j = qform_to_json(q);
  std::ostringstream text;
  text << "group:";
  for (const auto& d : q.group().invariant_factors) text << " Z/" << d.get_str();
  if (q.group().num_generators() == 0) text << " trivial";
  text << "\nq on generators (mod 2):";
  for (Eigen::Index i = 0; i < q.q_gen().size(); ++i)
    text << " " << fraction_str(q.q_gen()(i));
  text << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_lattice_complement(const Options& opt, const std::string& ambient_path,
                           const std::string& rows_path) {
  GramLattice ambient = load_lattice(ambient_path);
  MatZ rows = load_rows(rows_path);
  ComplementResult comp = orthogonal_complement(ambient, rows);
  json j = lattice_to_json(comp.lattice);
  std::ostringstream text;
  text << "complement rank " << comp.lattice.rank() << ", determinant "
       << det_exact(comp.lattice.gram()).get_str() << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_lattice_iso(const Options& opt, const std::string& a_path,
                    const std::string& b_path) {
  GramLattice a = load_lattice(a_path);
  GramLattice b = load_lattice(b_path);
  IsometryResult res = qforms_isometric(discriminant_form(a), discriminant_form(b),
                                        Integer(opt.iso_bound));
  const char* verdict = res.verdict == IsoVerdict::kIsometric     ? "isometric"
                        : res.verdict == IsoVerdict::kNotIsometric ? "not isometric"
                                                                   : "undecided";
  json j = {{"verdict", verdict}, {"detail", res.detail}};
  emit(opt, j, std::string(verdict) + " (" + res.detail + ")\n");
  return kExitOk;
}

int cmd_code_kernel(const Options& opt, const std::string& path) {
  MatZ m = load_ternary_matrix(path);
  TernaryCode c = kernel_f3(m);
  std::ostringstream text;
  text << "kernel dimension " << c.dim() << ", " << lines_count(c).get_str()
       << " lines\n";
  for (const auto& row : c.basis()) {
    for (int x : row) text << x;
    text << "\n";
  }
  emit(opt, code_to_json(c), text.str());
  return kExitOk;
}

int cmd_code_weights(const Options& opt, const std::string& path) {
  MatZ m = load_ternary_matrix(path);
  std::vector<std::vector<int>> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<int> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<int>(m(i, j).get_si()));
    rows.push_back(row);
  }
  TernaryCode c = TernaryCode::from_generators(rows, static_cast<int>(m.cols()));
  auto w = weight_distribution(c);
  json jw = json::array();
  std::ostringstream text;
  text << "weights:";
  for (int x : w) {
    jw.push_back(x);
    text << " " << x;
  }
  text << "\n";
  emit(opt, {{"dim", c.dim()}, {"weights", jw}}, text.str());
  return kExitOk;
}

int cmd_code_griesmer(const Options& opt, int n, int d) {
  int k = griesmer_max_dim(n, d);
  emit(opt, {{"n", n}, {"d", d}, {"max_dim", k}},
       "max dimension " + std::to_string(k) + "\n");
  return kExitOk;
}

int cmd_code_search(const Options& opt, int n, int k, const std::vector<int>& weights) {
  std::set<int> ws(weights.begin(), weights.end());
  CodeSearchResult res = exhaustive_no_code(n, k, ws);
  json j = {{"subspaces_examined", res.subspaces_examined.get_str()},
            {"witness_exists", res.witness.has_value()}};
  std::ostringstream text;
  if (res.witness) {
    j["witness"] = code_to_json(*res.witness);
    text << "witness found after " << res.subspaces_examined.get_str()
         << " subspaces\n";
    for (const auto& row : res.witness->basis()) {
      for (int x : row) text << x;
      text << "\n";
    }
  } else {
    text << "none exists (certificate: " << res.subspaces_examined.get_str()
         << " subspaces enumerated)\n";
  }
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_ellsurf_fibers(const Options& opt, const std::string& path) {
  WeierstrassModel w = load_model(path);
  auto fibers = singular_fibers(w);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& f : fibers) {
    rows.push_back({{"place", f.place.str()},
                    {"type", f.type.str()},
                    {"ord_delta", f.ord_delta_minimal},
                    {"place_degree", f.place_degree}});
    text << f.place.str() << " : " << f.type.str() << " (ord delta "
         << f.ord_delta_minimal << ")";
    if (f.place_degree > 1) text << " x" << f.place_degree;
    text << "\n";
  }
  text << "euler number " << euler_number(fibers) << "\n";
  emit(opt, {{"fibers", rows}, {"euler", euler_number(fibers)}}, text.str());
  return kExitOk;
}

int cmd_ellsurf_height(const Options& opt, int chi, const std::string& fibers_csv,
                       const std::string& contacts_csv, long po) {
  std::vector<KodairaType> fibers;
  std::istringstream fs(fibers_csv);
  std::string tok;
  while (std::getline(fs, tok, ',')) fibers.push_back(parse_kodaira(tok));
  SectionData s;
  s.contacts.assign(fibers.size(), 0);
  s.o_intersection = po;
  if (!contacts_csv.empty()) {
    std::istringstream cs(contacts_csv);
    while (std::getline(cs, tok, ',')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("contacts use the form fiber:component");
      int fiber = std::stoi(tok.substr(0, colon));
      int comp = std::stoi(tok.substr(colon + 1));
      if (fiber < 0 || fiber >= static_cast<int>(fibers.size()))
        throw std::invalid_argument("contact fiber index out of range");
      s.contacts[fiber] = comp;
    }
  }
  Rational h = height_pairing(s, chi, fibers);
  emit(opt, {{"height", fraction_str(h)}}, "height " + fraction_str(h) + "\n");
  return kExitOk;
}

int cmd_ellsurf_twist(const Options& opt, const std::string& path,
                      const std::string& d_csv, const std::string& out) {
  WeierstrassModel w = load_model(path);
  WeierstrassModel tw = quadratic_twist(w, parse_poly(d_csv));
  json j = model_to_json(tw);
  if (!out.empty()) {
    std::ofstream os(out);
    os << j.dump(2) << "\n";
  }
  auto fibers = singular_fibers(tw);
  std::ostringstream text;
  for (const auto& f : fibers) text << f.place.str() << " : " << f.type.str() << "\n";
  text << "euler number " << euler_number(fibers) << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_ellsurf_basechange(const Options& opt, const std::string& path,
                           const std::string& num_csv, const std::string& den_csv,
                           const std::string& out) {
  WeierstrassModel w = load_model(path);
  WeierstrassModel bc = base_change(w, parse_poly(num_csv), parse_poly(den_csv));
  json j = model_to_json(bc);
  if (!out.empty()) {
    std::ofstream os(out);
    os << j.dump(2) << "\n";
  }
  auto fibers = singular_fibers(bc);
  std::ostringstream text;
  for (const auto& f : fibers) {
    text << f.place.str() << " : " << f.type.str();
    if (f.place_degree > 1) text << " x" << f.place_degree;
    text << "\n";
  }
  text << "euler number " << euler_number(fibers) << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_ellsurf_family(const Options& opt, const std::string& b_str) {
  auto fam = models::twist_family_section(parse_fraction(b_str));
  json j = {{"a", fraction_str(fam.a)},
            {"c", fraction_str(fam.c)},
            {"model", model_to_json(fam.model)},
            {"y_unit", fraction_str(fam.y_unit)},
            {"y_square_part", fam.y.str()}};
  std::ostringstream text;
  text << "a = " << fraction_str(fam.a) << "\nc = " << fraction_str(fam.c)
       << "\nmembership verified: y^2 = (" << fraction_str(fam.y_unit) << ") * ("
       << fam.y.str() << ")^2\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::optional<std::string>& tag,
               const std::optional<std::string>& id) {
  const ClaimRegistry& reg = ClaimRegistry::instance();
  std::vector<ClaimRecord> records;
  ClaimRegistry::Summary summary;
  if (id) {
    if (!reg.has(*id)) throw std::invalid_argument("unknown claim id '" + *id + "'");
    records.push_back(reg.run(*id));
    switch (records.back().status) {
      case ClaimRecord::Status::kPass: summary.passed = 1; break;
      case ClaimRecord::Status::kFail: summary.failed = 1; break;
      case ClaimRecord::Status::kSkip: summary.skipped = 1; break;
    }
  } else {
    std::tie(records, summary) = reg.run_all(tag);
  }
  emit(opt, report_to_json(records, summary), report_table(records, summary));
  return summary.failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, ternary-code and elliptic-surface computations "
               "for Enriques/K3 geometry"};
  app.require_subcommand(1);

  Options opt;
  std::string config_path;
  app.add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", config_path, "Optional JSON config file");
  app.add_option("--iso-bound", opt.iso_bound,
                 "Explicit search bound for form isometries")
      ->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", opt.verbosity, "Verbose output");

  auto* lattice = app.add_subcommand("lattice", "Lattice queries");
  std::string file_a, file_b;
  auto* disc = lattice->add_subcommand("disc", "Determinant and discriminant group");
  disc->add_option("file", file_a)->required();
  auto* qform = lattice->add_subcommand("qform", "Discriminant quadratic form");
  qform->add_option("file", file_a)->required();
  auto* complement = lattice->add_subcommand("complement", "Orthogonal complement");
  complement->add_option("ambient", file_a)->required();
  complement->add_option("sub_rows", file_b)->required();
  auto* iso = lattice->add_subcommand("iso", "Discriminant form isometry");
  iso->add_option("first", file_a)->required();
  iso->add_option("second", file_b)->required();

  auto* code = app.add_subcommand("code", "Ternary code computations");
  int arg_n = 0, arg_d = 0, arg_k = 0;
  std::vector<int> arg_weights;
  auto* kernel = code->add_subcommand("kernel", "Kernel of a matrix over F_3");
  kernel->add_option("file", file_a)->required();
  auto* weights = code->add_subcommand("weights", "Weight distribution");
  weights->add_option("file", file_a)->required();
  auto* griesmer = code->add_subcommand("griesmer", "Griesmer maximal dimension");
  griesmer->add_option("n", arg_n)->required();
  griesmer->add_option("d", arg_d)->required();
  auto* search = code->add_subcommand("search", "Exhaustive subspace search");
  search->add_option("n", arg_n)->required();
  search->add_option("k", arg_k)->required();
  search->add_option("--weights", arg_weights, "Required weight set")->required();

  auto* ellsurf = app.add_subcommand("ellsurf", "Elliptic surfaces over Q(t)");
  int arg_chi = 1;
  long arg_po = 0;
  std::string arg_fibers, arg_contacts, arg_poly, arg_num, arg_den, arg_out, arg_b;
  auto* fibers = ellsurf->add_subcommand("fibers", "Kodaira types of a model");
  fibers->add_option("file", file_a)->required();
  auto* height = ellsurf->add_subcommand("height", "Mordell-Weil height");
  height->add_option("--chi", arg_chi, "Euler characteristic chi")->required();
  height->add_option("--fibers", arg_fibers, "Comma list of Kodaira types")->required();
  height->add_option("--contacts", arg_contacts, "fiber:component pairs");
  height->add_option("--po", arg_po, "Intersection with the zero section");
  auto* twist = ellsurf->add_subcommand("twist", "Quadratic twist");
  twist->add_option("file", file_a)->required();
  twist->add_option("--d", arg_poly, "Squarefree twisting polynomial (csv coefficients)")
      ->required();
  twist->add_option("-o,--out", arg_out, "Write the twisted model to a file");
  auto* basechange = ellsurf->add_subcommand("basechange", "Base change t -> num/den");
  basechange->add_option("file", file_a)->required();
  basechange->add_option("--num", arg_num, "Numerator coefficients")->required();
  basechange->add_option("--den", arg_den, "Denominator coefficients")->required();
  basechange->add_option("-o,--out", arg_out, "Write the pulled-back model to a file");
  auto* family = ellsurf->add_subcommand("family", "Twist family with its section");
  family->add_option("--b", arg_b, "Family parameter")->required();

  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  std::string arg_tag, arg_id;
  verify->add_option("--tag", arg_tag, "Run only claims with this tag");
  verify->add_option("--id", arg_id, "Run a single claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitOk : kExitParse;
  }

  try {
    if (!config_path.empty()) load_config(opt, config_path);

    if (disc->parsed()) return cmd_lattice_disc(opt, file_a);
    if (qform->parsed()) return cmd_lattice_qform(opt, file_a);
    if (complement->parsed()) return cmd_lattice_complement(opt, file_a, file_b);
    if (iso->parsed()) return cmd_lattice_iso(opt, file_a, file_b);
    if (kernel->parsed()) return cmd_code_kernel(opt, file_a);
    if (weights->parsed()) return cmd_code_weights(opt, file_a);
    if (griesmer->parsed()) return cmd_code_griesmer(opt, arg_n, arg_d);
    if (search->parsed()) return cmd_code_search(opt, arg_n, arg_k, arg_weights);
    if (fibers->parsed()) return cmd_ellsurf_fibers(opt, file_a);
    if (height->parsed())
      return cmd_ellsurf_height(opt, arg_chi, arg_fibers, arg_contacts, arg_po);
    if (twist->parsed()) return cmd_ellsurf_twist(opt, file_a, arg_poly, arg_out);
    if (basechange->parsed())
      return cmd_ellsurf_basechange(opt, file_a, arg_num, arg_den, arg_out);
    if (family->parsed()) return cmd_ellsurf_family(opt, arg_b);
    if (verify->parsed())
      return cmd_verify(opt,
                        arg_tag.empty() ? std::nullopt : std::optional(arg_tag),
                        arg_id.empty() ? std::nullopt : std::optional(arg_id));
  } catch (const enr::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    bool parse_stage = what.find("cannot open") != std::string::npos ||
                       what.find("file") != std::string::npos ||
                       what.find("parse") != std::string::npos ||
                       what.find("unknown") != std::string::npos;
    return parse_stage ? kExitParse : kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
