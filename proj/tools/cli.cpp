#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

#include "bigyro/bigyro_matrix.hpp"
#include "bigyro/clifford.hpp"
#include "bigyro/errors.hpp"
#include "bigyro/finite_engine.hpp"
#include "bigyro/json_io.hpp"
#include "bigyro/pseudo_orth.hpp"

namespace bigyro::cli {

namespace {

struct Config {
  std::size_t m = 2;
  std::size_t n = 2;
  double tol = kDefaultTol;
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  std::vector<std::string> inputs;
  std::string out_path;
  std::string level = "bgd";
  std::size_t max_results = 0;

  // Set when the flag appeared on the command line.
  bool m_given = false;
  bool n_given = false;
};

/// BIGYRO_TOL replaces the built-in default; an explicit --tol still wins.
double default_tol() {
  const char* env = std::getenv("BIGYRO_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(env, &end);
  if (errno != 0 || *end != '\0' || !(v > 0.0)) {
    throw InputError(std::string("BIGYRO_TOL must be a positive number, got \"") + env + "\"");
  }
  return v;
}

class Emitter {
 public:
  Emitter(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void operator()(const Json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg_.out_path);
    f << text;
    if (!f) throw InputError("failed writing " + cfg_.out_path);
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
};

/// Prints every failing law to `err`; returns the exit code for the report.
int report_exit(const Report& r, std::ostream& err) {
  for (const LawResult& law : r.laws()) {
    if (law.pass) continue;
    err << "FAIL " << law.law << " (max residual " << law.max_residual << ")";
    if (!law.witness.empty()) err << " at " << law.witness;
    err << '\n';
  }
  return r.all_pass() ? kPass : kPropertyFailed;
}

Json signature_header(const char* command, const Config& cfg) {
  Json j;
  j["command"] = command;
  j["m"] = cfg.m;
  j["n"] = cfg.n;
  j["tol"] = cfg.tol;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j;
}

int cmd_add(const Config& cfg, const Emitter& emit) {
  if (cfg.inputs.size() != 2) throw InputError("add: expected two matrix files");
  const Mat p1 = matrix_from_json(read_json_file(cfg.inputs[0]));
  const Mat p2 = matrix_from_json(read_json_file(cfg.inputs[1]));
  if (p1.rows() != p2.rows() || p1.cols() != p2.cols()) {
    throw InputError("add: shape mismatch, " + std::to_string(p1.rows()) + "x" + std::to_string(p1.cols()) + " vs " +
                     std::to_string(p2.rows()) + "x" + std::to_string(p2.cols()));
  }
  if ((cfg.m_given && cfg.m != p1.cols()) || (cfg.n_given && cfg.n != p1.rows())) {
    throw InputError("add: matrices must be n x m for the given --m/--n");
  }
  const BgParams params(p1.cols(), p1.rows(), cfg.tol);
  Json j;
  j["bg_add"] = to_json(bg_add(p1, p2, params));
  j["bg_group_add"] = to_json(bg_group_add(p1, p2, params));
  j["lgyr"] = to_json(left_gyr(p1, p2, params).matrix);
  j["rgyr"] = to_json(right_gyr(p1, p2, params).matrix);
  emit(j);
  return kPass;
}

int cmd_factor(const Config& cfg, const Emitter& emit, std::ostream& err) {
  if (cfg.inputs.size() != 1) throw InputError("factor: expected one matrix file");
  const Mat g = matrix_from_json(read_json_file(cfg.inputs[0]));
  if (!g.is_square()) throw InputError("factor: matrix must be square");
  if (!cfg.m_given && !cfg.n_given) throw InputError("factor: --m or --n is required");
  Signature sig;
  if (cfg.m_given && cfg.n_given) {
    sig = {cfg.m, cfg.n};
  } else if (cfg.m_given) {
    if (cfg.m >= g.rows()) throw InputError("factor: --m leaves no room for n >= 1");
    sig = {cfg.m, g.rows() - cfg.m};
  } else {
    if (cfg.n >= g.rows()) throw InputError("factor: --n leaves no room for m >= 1");
    sig = {g.rows() - cfg.n, cfg.n};
  }
  if (sig.m == 0 || sig.n == 0) throw InputError("factor: m and n must be at least 1");
  if (sig.dim() != g.rows()) throw InputError("factor: matrix size does not equal m + n");
  if (!is_member(g, sig, cfg.tol)) {
    err << "factor: matrix is not in the identity component of SO(" << sig.m << ", " << sig.n << ")\n";
    return kPropertyFailed;
  }
  emit(to_json(factor(PseudoOrthElem(g, sig, cfg.tol), cfg.tol)));
  return kPass;
}

int cmd_axioms(const Config& cfg, const Emitter& emit, std::ostream& err) {
  const Report r = check_axioms(BgParams(cfg.m, cfg.n, cfg.tol), cfg.trials, cfg.seed);
  Json j = signature_header("axioms", cfg);
  j["pass"] = r.all_pass();
  j["laws"] = r.to_json();
  emit(j);
  return report_exit(r, err);
}

int cmd_spin(const Config& cfg, const Emitter& emit, std::ostream& err) {
  const Report r = verify_spin_decomposition(cfg.m, cfg.n, cfg.trials, cfg.seed, cfg.tol);
  Json j = signature_header("spin verify", cfg);
  j["pass"] = r.all_pass();
  j["laws"] = r.to_json();
  emit(j);
  return report_exit(r, err);
}

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

int cmd_finite_check(const Config& cfg, const Emitter& emit, std::ostream& err) {
  if (cfg.inputs.size() != 1) throw InputError("finite check: expected one group file");
  GroupDocument doc = load_group_document(read_json_file(cfg.inputs[0]));
  const auto group = share(std::move(doc.group));

  // Missing subsets default to the trivial decomposition {1}·Γ·{1}.
  Subset all(group->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Subset hl = normalize_subset(*group, doc.hl.value_or(Subset{group->identity()}), "H_L");
  const Subset b = normalize_subset(*group, doc.b.value_or(all), "B");
  const Subset hr = normalize_subset(*group, doc.hr.value_or(Subset{group->identity()}), "H_R");

  Json j;
  j["command"] = "finite check";
  j["order"] = group->order();
  j["H_L"] = hl;
  j["B"] = b;
  j["H_R"] = hr;

  auto fail = [&](const char* stage, const std::string& what) {
    j[stage] = false;
    j["error"] = what;
    j["pass"] = false;
    emit(j);
    err << "finite check: " << what << '\n';
    return kPropertyFailed;
  };

  std::optional<Decomposition> d;
  try {
    d = verify_bitransversal(group, hl, b, hr);
  } catch (const VerificationError& e) {
    return fail("bitransversal", e.what());
  }
  j["bitransversal"] = true;

  Report def;
  def.append(verify_bigyrotransversal(*d));
  def.append(verify_twisted_subgroup(*group, b));
  GyrTables tables;
  try {
    tables = build_tables(*d);
  } catch (const StructuralError& e) {
    j["decomposition_laws"] = def.to_json();
    return fail("tables", e.what());
  }
  def.append(verify_symmetry(*d, tables));
  j["decomposition_laws"] = def.to_json();
  if (!def.all_pass()) {
    j["pass"] = false;
    emit(j);
    return report_exit(def, err);
  }

  const TheoremReport th = check_all_theorems(build_bigyrogroup(std::move(tables)));
  j["bigyrocommutative"] = th.bigyrocommutative;
  j["gyrocommutative"] = th.gyrocommutative;
  j["degenerate"] = th.degenerate;
  j["pass"] = th.all_pass();
  j["laws"] = th.laws.to_json();
  emit(j);
  return report_exit(th.laws, err);
}

SearchLevel parse_level(const std::string& s) {
  if (s == "bt") return SearchLevel::BiTransversal;
  if (s == "bgt") return SearchLevel::BiGyroTransversal;
  if (s == "bgd") return SearchLevel::BiGyroDecomposition;
  throw InputError("finite search: --level must be bt, bgt or bgd");
}

int cmd_finite_search(const Config& cfg, const Emitter& emit) {
  if (cfg.inputs.size() != 1) throw InputError("finite search: expected one group file");
  const FiniteGroup group = load_group(read_json_file(cfg.inputs[0]));
  SearchOptions opts;
  opts.level = parse_level(cfg.level);
  opts.max_results = cfg.max_results;
  const std::vector<SearchHit> hits = search_decompositions(group, opts);
  Json j;
  j["command"] = "finite search";
  j["order"] = group.order();
  j["level"] = cfg.level;
  j["count"] = hits.size();
  j["decompositions"] = catalog_to_json(hits);
  emit(j);
  return kPass;
}

void add_signature(CLI::App* app, Config& cfg) {
  app->add_option("--m", cfg.m, "Positive-signature dimension m")->check(CLI::PositiveNumber);
  app->add_option("--n", cfg.n, "Negative-signature dimension n")->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App* app, Config& cfg) {
  app->add_option("--trials", cfg.trials, "Random samples per law")->capture_default_str();
  app->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
}

void add_common(CLI::App* app, Config& cfg) {
  app->add_option("--tol", cfg.tol, "Residual tolerance (default 1e-9, or BIGYRO_TOL)");
  app->add_option("--out", cfg.out_path, "Write the JSON result here instead of stdout");
}

void add_inputs(CLI::App* app, Config& cfg, const char* what) {
  app->add_option("--in,inputs", cfg.inputs, what);
}

/// True if `flag` was passed to the chosen subcommand chain.
bool flag_given(const CLI::App& app, const char* flag) {
  for (const CLI::App* sub : app.get_subcommands()) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if ((opt != nullptr && opt->count() > 0) || flag_given(*sub, flag)) return true;
  }
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bi-gyrogroup toolkit: matrix, finite-group and Clifford models", "bigyro"};
  app.require_subcommand(1);

  auto* add = app.add_subcommand("add", "P1 (+)_U P2, P1 (+)'_U P2 and both gyrations");
  add_inputs(add, cfg, "Two matrix files");
  add_signature(add, cfg);
  add_common(add, cfg);

  auto* fac = app.add_subcommand("factor", "Factor g in SO(m,n) as rho(O_m) beta(P) lambda(O_n)");
  add_inputs(fac, cfg, "Matrix file");
  add_signature(fac, cfg);
  add_common(fac, cfg);

  auto* axioms = app.add_subcommand("axioms", "Sampled check of every law on R^{n x m}");
  add_signature(axioms, cfg);
  add_sampling(axioms, cfg);
  add_common(axioms, cfg);

  auto* finite = app.add_subcommand("finite", "Finite-group decompositions");
  finite->require_subcommand(1);
  auto* check = finite->add_subcommand("check", "Verify a decomposition (trivial if none given) and every law");
  add_inputs(check, cfg, "Group file");
  add_common(check, cfg);
  auto* search = finite->add_subcommand("search", "Enumerate decompositions of a group");
  add_inputs(search, cfg, "Group file");
  add_common(search, cfg);
  search->add_option("--level", cfg.level, "bt, bgt or bgd")->capture_default_str();
  search->add_option("--max-results", cfg.max_results, "Stop after this many hits (0 = all)");

  auto* spin = app.add_subcommand("spin", "Clifford-algebra model");
  spin->require_subcommand(1);
  auto* verify = spin->add_subcommand("verify", "Sampled check of the spin lift and its factorization");
  add_signature(verify, cfg);
  add_sampling(verify, cfg);
  add_common(verify, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "bigyro: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto given = [&](const char* flag) { return flag_given(app, flag); };
    cfg.m_given = given("--m");
    cfg.n_given = given("--n");
    if (!given("--tol")) cfg.tol = default_tol();
    if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");

    const Emitter emit(cfg, out);
    if (add->parsed()) return cmd_add(cfg, emit);
    if (fac->parsed()) return cmd_factor(cfg, emit, err);
    if (axioms->parsed()) return cmd_axioms(cfg, emit, err);
    if (check->parsed()) return cmd_finite_check(cfg, emit, err);
    if (search->parsed()) return cmd_finite_search(cfg, emit);
    if (verify->parsed()) return cmd_spin(cfg, emit, err);
    err << "bigyro: no command given\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "bigyro: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Domain, consistency, structural and lift failures: the input was valid
    // but a property the engines rely on did not hold.
    err << "bigyro: " << e.what() << '\n';
    return kPropertyFailed;
  }
}

}  // namespace bigyro::cli
