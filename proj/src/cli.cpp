#include "qusp/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qusp/qusp.hpp"

namespace qusp::cli {

namespace {

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr std::array<CommandName, 12> kCommands{{
    {Command::Classify, "classify"},
    {Command::Recurrence, "recurrence"},
    {Command::Spectrum, "spectrum"},
    {Command::Represent, "represent"},
    {Command::Dual, "dual"},
    {Command::Measure, "measure"},
    {Command::Norms, "norms"},
    {Command::VerifyOrthogonality, "verify-orthogonality"},
    {Command::VerifyAlgebra, "verify-algebra"},
    {Command::VerifyIdentities, "verify-identities"},
    {Command::DarbouxChain, "darboux-chain"},
    {Command::Sweep, "sweep"},
}};

template <class Real>
std::vector<double> to_doubles(const std::vector<Real>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Real& v : values) out.push_back(to_double(v));
  return out;
}

template <class Real>
std::vector<double> to_doubles(const std::vector<Real>& values, std::size_t count) {
  std::vector<double> out = to_doubles(values);
  out.resize(std::min(count, out.size()));
  return out;
}

SeriesSpec resolve_series(const RunConfig& config, const PhaseParams& params) {
  if (config.beta && config.j) throw UsageError("--beta and --j are mutually exclusive");
  if (config.j) {
    if (config.force_complementary) throw UsageError("--complementary applies to --beta only");
    return classify_j(params, *config.j);
  }
  if (config.beta) return classify(params, *config.beta, {config.force_complementary});
  if (config.force_complementary) return classify(params, 0.5, {true});
  throw UsageError("command '" + std::string(to_string(config.command)) +
                   "' needs exactly one of --beta or --j");
}

ordered_json series_json(const SeriesSpec& spec) {
  ordered_json out = ordered_json::object();
  out["kind"] = to_string(spec.kind);
  out["beta"] = spec.beta;
  if (spec.j) out["j"] = *spec.j;
  out["M"] = spec.M;
  return out;
}

// Jacobi spectrum in decreasing order, aligned with x_s.
template <class Real>
std::vector<Real> descending_spectrum(const RecurrenceTable<Real>& table) {
  std::vector<Real> values = jacobi_spectrum(build_jacobi(table));
  std::reverse(values.begin(), values.end());
  return values;
}

template <class Real>
Real max_abs_diff(const std::vector<Real>& a, const std::vector<Real>& b) {
  using std::abs;
  Real worst(0);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) worst = std::max<Real>(worst, abs(a[i] - b[i]));
  return worst;
}

template <class Real>
void classify_payload(Report& report, const SeriesSpec& spec) {
  const auto table = build_recurrence<Real>(spec);
  int nonpositive = 0;
  Real u_min = spec.M > 1 ? table.u[1] : Real(0);
  for (int n = 1; n < spec.M; ++n) {
    if (!(table.u[n] > 0)) ++nonpositive;
    u_min = std::min<Real>(u_min, table.u[n]);
  }
  report.scalars["u_min_interior"] = to_double(u_min);
  if (auto dim = positive_dimension(spec.params, spec.beta)) report.scalars["positive_dimension"] = *dim;
  report.add_residual("nonpositive_u_count", nonpositive);
}

template <class Real>
void recurrence_payload(Report& report, const SeriesSpec& spec) {
  using std::abs;
  const auto table = build_recurrence<Real>(spec);
  const Real sin_w = sin_om<Real>(spec.params, Real(1));
  Real worst(0);
  for (int n = 0; n <= spec.M; ++n) {
    worst = std::max<Real>(worst, abs(4 * sin_w * sin_w * table.a[n] * table.a[n] - table.u[n]));
  }
  Table t("recurrence", "n");
  t.add("u_n", to_doubles(table.u)).add("a_n", to_doubles(table.a));
  report.tables.push_back(std::move(t));
  report.add_residual("an_un_consistency", to_double(worst));
  report.add_residual("u_endpoints", to_double(std::max<Real>(abs(table.u.front()), abs(table.u.back()))));
}

template <class Real>
void spectrum_payload(Report& report, const SeriesSpec& spec) {
  const auto table = build_recurrence<Real>(spec);
  const auto measure = build_grid_weights<Real>(spec);
  const auto eig = descending_spectrum(table);
  Table t("spectrum", "s");
  t.add("eigenvalue", to_doubles(eig)).add("x_s", to_doubles(measure.grid));
  report.tables.push_back(std::move(t));
  report.add_residual("spectrum_vs_grid", to_double(max_abs_diff(eig, measure.grid)));
  report.add_residual("eigen_residual", to_double(jacobi_eigen_residual(build_jacobi(table))));
}

template <class Real>
void represent_payload(Report& report, const SeriesSpec& spec) {
  const auto rep = build_representation<Real>(spec);
  report.scalars["nu"] = to_double(rep.nu);
  report.scalars["casimir"] = to_double(rep.casimir_value());
  Table t("representation", "n");
  t.add("lambda_n", to_doubles(rep.lambda)).add("a_n", to_doubles(rep.a, rep.lambda.size()));
  report.tables.push_back(std::move(t));
  report.add_residual("matrix_elements", to_double(matrix_element_residual(rep)));
}

template <class Real>
void algebra_payload(Report& report, const SeriesSpec& spec) {
  const auto rep = build_representation<Real>(spec);
  const auto alg = verify_algebra(build_generators(rep));
  report.scalars["nu"] = to_double(rep.nu);
  report.scalars["casimir"] = to_double(alg.casimir);
  report.add_residual("r1", to_double(alg.r1));
  report.add_residual("r2", to_double(alg.r2));
  report.add_residual("rQ", to_double(alg.rQ));
  report.add_residual("k2_antihermitian", to_double(alg.k2_antihermitian));
  report.add_residual("hermiticity", to_double(alg.hermiticity));
}

template <class Real>
void dual_payload(Report& report, const SeriesSpec& spec) {
  using std::abs;
  const auto rep = build_representation<Real>(spec);
  const auto dual = build_dual_basis<Real>(spec);
  const auto check = verify_dual_structure(build_generators(rep), dual);
  if (dual.untruncated_d0_sq) report.scalars["untruncated_d0_sq"] = to_double(*dual.untruncated_d0_sq);
  if (dual.untruncated_dN_sq) report.scalars["untruncated_dN_sq"] = to_double(*dual.untruncated_dN_sq);
  Table t("dual", "s");
  t.add("mu_s", to_doubles(dual.mu)).add("d_s", to_doubles(dual.d)).add("b_s", to_doubles(dual.b));
  report.tables.push_back(std::move(t));
  report.add_residual("spectrum", to_double(check.spectrum));
  report.add_residual("offdiagonal", to_double(check.offdiagonal));
  report.add_residual("diagonal", to_double(check.diagonal));
  report.add_residual("beyond_tridiagonal", to_double(check.beyond_tridiagonal));
  report.add_residual("overlap", to_double(check.overlap));
  if (spec.quantized()) {
    Real worst(0);
    for (int s = 1; s < spec.M; ++s) worst = std::max<Real>(worst, abs(dual.d[s] - rep.a[s]));
    report.add_residual("d_vs_a", to_double(worst));
  }
}

template <class Real>
void measure_payload(Report& report, const SeriesSpec& spec) {
  const auto measure = build_grid_weights<Real>(spec);
  const auto eig = descending_spectrum(build_recurrence<Real>(spec));
  report.scalars["weight_total"] = to_double(measure.weight_total());
  Table t("measure", "s");
  t.add("x_s", to_doubles(measure.grid)).add("w_s", to_doubles(measure.weights));
  report.tables.push_back(std::move(t));
  report.add_residual("grid_vs_spectrum", to_double(max_abs_diff(measure.grid, eig)));
}

template <class Real>
void norms_payload(Report& report, const SeriesSpec& spec) {
  using std::abs;
  const auto table = build_recurrence<Real>(spec);
  const auto measure = build_measure<Real>(spec);
  const auto numeric = numeric_norms(table, measure);
  report.scalars["norm_source"] = spec.quantized() ? "closed_form" : "numeric";
  Table t("norms", "n");
  t.add("h_n", to_doubles(measure.norms)).add("h_n_numeric", to_doubles(numeric));
  report.tables.push_back(std::move(t));
  Real worst(0);
  for (std::size_t n = 0; n < numeric.size(); ++n) {
    worst = std::max<Real>(worst, abs(numeric[n] - measure.norms[n]) / abs(measure.norms[n]));
  }
  report.add_residual("closed_vs_numeric", to_double(worst));
}

template <class Real>
void orthogonality_payload(Report& report, const SeriesSpec& spec) {
  const auto table = build_recurrence<Real>(spec);
  const auto measure = build_measure<Real>(spec);
  const auto check = verify_orthogonality(table, measure);
  const std::size_t M = static_cast<std::size_t>(spec.M);
  std::vector<Real> diag(M);
  for (std::size_t n = 0; n < M; ++n) diag[n] = check.gram[n * M + n];
  Table t("orthogonality", "n");
  t.add("h_n", to_doubles(measure.norms)).add("G_nn", to_doubles(diag));
  report.tables.push_back(std::move(t));
  report.add_residual("offdiagonal", to_double(check.offdiagonal));
  if (spec.quantized()) report.add_residual("diagonal", to_double(check.diagonal));
}

template <class Real>
void identities_payload(Report& report, const PhaseParams& params) {
  const auto [h2, h1] = check_base_sums<Real>(params);
  report.scalars["base_h2_lhs"] = to_double(h2.lhs);
  report.scalars["base_h2_rhs"] = to_double(h2.rhs);
  report.scalars["base_h1_lhs"] = to_double(h1.lhs);
  report.scalars["base_h1_rhs"] = to_double(h1.rhs);

  Table even("even", "k");
  std::vector<double> lhs, rhs, res;
  double even_worst = 0.0;
  for (int k = 2; k <= params.N / 2; ++k) {
    const auto c = check_even_identity<Real>(params, k);
    even.index.push_back(k);
    lhs.push_back(to_double(c.lhs));
    rhs.push_back(to_double(c.rhs));
    res.push_back(to_double(c.rel_residual));
    even_worst = std::max(even_worst, res.back());
  }
  even.columns = {{"lhs", lhs}, {"rhs", rhs}, {"rel_residual", res}};

  Table odd("odd", "k");
  lhs.clear();
  rhs.clear();
  res.clear();
  std::vector<double> degenerate;
  double odd_worst = 0.0;
  int degenerate_count = 0;
  for (int k = 1; k <= params.N / 2; ++k) {
    const auto c = check_odd_identity<Real>(params, k);
    odd.index.push_back(k);
    lhs.push_back(to_double(c.lhs));
    rhs.push_back(to_double(c.rhs));
    res.push_back(to_double(c.rel_residual));
    degenerate.push_back(c.degenerate ? 1.0 : 0.0);
    if (c.degenerate) {
      ++degenerate_count;
    } else {
      odd_worst = std::max(odd_worst, res.back());
    }
  }
  odd.columns = {{"lhs", lhs}, {"rhs", rhs}, {"rel_residual", res}, {"degenerate", degenerate}};

  report.tables.push_back(std::move(even));
  report.tables.push_back(std::move(odd));
  report.scalars["degenerate_cases"] = degenerate_count;
  report.add_residual("base_h2", to_double(h2.rel_residual));
  report.add_residual("base_h1", to_double(h1.rel_residual));
  report.add_residual("even_identity", even_worst);
  report.add_residual("odd_identity", odd_worst);
}

template <class Real>
void chain_payload(Report& report, const RunConfig& config, const PhaseParams& params) {
  if (!config.j) throw UsageError("darboux-chain needs --j");
  if (config.beta) throw UsageError("darboux-chain takes --j, not --beta");
  const SeriesSpec start = classify_j(params, *config.j);
  report.scalars["series"] = series_json(start);
  const auto chain = verify_darboux_chain<Real>(params, *config.j);
  report.scalars["steps"] = chain.steps;
  if (chain.steps == 0) report.warnings.push_back("no Darboux step fits below j = N-1");
  std::vector<double> x0;
  for (std::size_t i = 0; i < chain.trail.size(); ++i) {
    const auto& step = chain.trail[i];
    x0.push_back(to_double(step.x0));
    Table t("j" + std::to_string(step.j_from) + "_to_j" + std::to_string(step.j_from + 2), "n");
    t.add("A_n", to_doubles(step.A)).add("A_n_closed", to_doubles(step.A_closed)).add("h_n", to_doubles(chain.chained_norms[i]));
    report.tables.push_back(std::move(t));
  }
  report.scalars["x0"] = x0;
  report.add_residual("ratio_vs_closed", to_double(chain.ratio_vs_closed));
  report.add_residual("weights_vs_direct", to_double(chain.weights_vs_direct));
  report.add_residual("grid_vs_direct", to_double(chain.grid_vs_direct));
  report.add_residual("norms_vs_closed", to_double(chain.norms_vs_closed));
  report.add_residual("kernel_vs_direct", to_double(chain.kernel_vs_direct));
}

constexpr std::array<const char*, 6> kSweepChecks{
    "algebra", "orthogonality_offdiagonal", "orthogonality_diagonal", "spectrum", "dual", "identities"};

struct SweepRow {
  int N = 0;
  int cases = 0;  // series checked at this N
  std::array<double, kSweepChecks.size()> worst{};
};

template <class Real>
SweepRow sweep_one(const RunConfig& config, int N) {
  const PhaseParams params = make_phase_params(N, config.p, config.tol, config.precision_bits);
  const std::vector<double> betas = complementary_betas(config.samples_per_interval);
  SweepRow row;
  row.N = N;
  auto bump = [&row](std::size_t i, const Real& v) { row.worst[i] = std::max(row.worst[i], to_double(v)); };
  for (const SeriesSpec& spec : enumerate_series(params, betas)) {
    ++row.cases;
    const auto rep = build_representation<Real>(spec);
    const auto gen = build_generators(rep);
    bump(0, verify_algebra(gen).worst());
    const auto table = build_recurrence<Real>(spec);
    const auto measure = build_measure<Real>(spec);
    const auto orth = verify_orthogonality(table, measure);
    bump(1, orth.offdiagonal);
    if (spec.quantized()) bump(2, orth.diagonal);
    bump(3, max_abs_diff(descending_spectrum(table), measure.grid));
    bump(4, verify_dual_structure(gen, build_dual_basis<Real>(spec)).worst());
  }
  for (const auto& c : sweep_identities<Real>(params)) {
    if (!c.degenerate) bump(5, c.rel_residual);
  }
  return row;
}

template <class Real>
void sweep_payload(Report& report, const RunConfig& config) {
  if (config.sweep_max_N < config.N) throw UsageError("--sweep-max-N is below --N");
  std::vector<std::future<SweepRow>> jobs;
  for (int N = config.N; N <= config.sweep_max_N; ++N) {
    jobs.push_back(std::async(std::launch::async, [&config, N] { return sweep_one<Real>(config, N); }));
  }
  Table t("sweep", "N");
  std::vector<double> cases;
  std::vector<std::vector<double>> columns(kSweepChecks.size());
  std::array<double, kSweepChecks.size()> worst{};
  for (auto& job : jobs) {
    const SweepRow row = job.get();
    t.index.push_back(row.N);
    cases.push_back(row.cases);
    for (std::size_t i = 0; i < kSweepChecks.size(); ++i) {
      columns[i].push_back(row.worst[i]);
      worst[i] = std::max(worst[i], row.worst[i]);
    }
  }
  t.columns.emplace_back("cases", cases);
  for (std::size_t i = 0; i < kSweepChecks.size(); ++i) t.columns.emplace_back(kSweepChecks[i], columns[i]);
  report.tables.push_back(std::move(t));
  for (std::size_t i = 0; i < kSweepChecks.size(); ++i) report.add_residual(kSweepChecks[i], worst[i]);
}

template <class Real>
void fill(Report& report, const RunConfig& config, const PhaseParams& params) {
  switch (config.command) {
    case Command::VerifyIdentities:
      identities_payload<Real>(report, params);
      return;
    case Command::DarbouxChain:
      chain_payload<Real>(report, config, params);
      return;
    case Command::Sweep:
      sweep_payload<Real>(report, config);
      return;
    default:
      break;
  }
  const SeriesSpec spec = resolve_series(config, params);
  report.scalars["series"] = series_json(spec);
  switch (config.command) {
    case Command::Classify:
      classify_payload<Real>(report, spec);
      break;
    case Command::Recurrence:
      recurrence_payload<Real>(report, spec);
      break;
    case Command::Spectrum:
      spectrum_payload<Real>(report, spec);
      break;
    case Command::Represent:
      represent_payload<Real>(report, spec);
      break;
    case Command::Dual:
      dual_payload<Real>(report, spec);
      break;
    case Command::Measure:
      measure_payload<Real>(report, spec);
      break;
    case Command::Norms:
      norms_payload<Real>(report, spec);
      break;
    case Command::VerifyOrthogonality:
      orthogonality_payload<Real>(report, spec);
      break;
    case Command::VerifyAlgebra:
      algebra_payload<Real>(report, spec);
      break;
    default:
      break;
  }
}

ordered_json config_json(const RunConfig& config) {
  ordered_json out = ordered_json::object();
  out["command"] = to_string(config.command);
  out["N"] = config.N;
  if (config.beta) out["beta"] = *config.beta;
  if (config.j) out["j"] = *config.j;
  if (config.force_complementary) out["complementary"] = true;
  out["p"] = config.p;
  out["tol"] = config.tol;
  out["precision_bits"] = config.precision_bits;
  out["format"] = to_string(config.format);
  if (config.command == Command::Sweep) {
    out["sweep_max_N"] = config.sweep_max_N;
    out["samples_per_interval"] = config.samples_per_interval;
  }
  return out;
}

Report empty_report(const RunConfig& config) {
  Report report;
  report.config = config_json(config);
  report.tol = config.tol;
  if (config.p != 1) {
    report.warnings.push_back("p = " + std::to_string(config.p) + " is outside the supported p = 1 regime");
  }
  return report;
}

const char* const kHelpFooter = R"(Commands:
  classify              series kind, reduced beta, j, dimension M
  recurrence            u_n, a_n for n = 0..M
  spectrum              Jacobi eigenvalues (descending) against the grid x_s
  represent             lambda_n, a_n, nu and the Casimir value -nu/sin^2(w)
  dual                  mu_s, d_s, b_s of the K1 eigenbasis
  measure               grid x_s and weights w_s
  norms                 h_n (closed form where one exists) and Gram-sum h_n
  verify-orthogonality  Gram matrix residuals
  verify-algebra        deformed commutation relations and Casimir
  verify-identities     base sums and the even/odd product-sum identities
  darboux-chain         kernel-polynomial chain j -> j+2 -> ... -> N-1 (needs --j)
  sweep                 algebra/orthogonality/spectrum/dual/identity checks for N..sweep-max-N

CSV columns (first column is the index; one row per index):
  recurrence            n,u_n,a_n
  spectrum              s,eigenvalue,x_s
  represent             n,lambda_n,a_n
  dual                  s,mu_s,d_s,b_s
  measure               s,x_s,w_s
  norms                 n,h_n,h_n_numeric
  verify-orthogonality  n,h_n,G_nn
  verify-identities     "# even": k,lhs,rhs,rel_residual
                        "# odd":  k,lhs,rhs,rel_residual,degenerate
  darboux-chain         "# j<a>_to_j<b>" per step: n,A_n,A_n_closed,h_n
  sweep                 N,cases,algebra,orthogonality_offdiagonal,
                        orthogonality_diagonal,spectrum,dual,identities
When a report has several tables each is preceded by a "# name" line and
separated by a blank line. Numbers use the shortest round-trip decimal.

Exit status: 0 pass, 1 a residual exceeds --tol, 2 usage error,
3 rejected parameter or numerical failure.
)";

}  // namespace

std::string_view to_string(Command command) noexcept {
  for (const auto& entry : kCommands) {
    if (entry.command == command) return entry.name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (const auto& entry : kCommands) {
    if (entry.name == name) return entry.command;
  }
  return std::nullopt;
}

bool needs_series(Command command) noexcept {
  return command != Command::VerifyIdentities && command != Command::DarbouxChain &&
         command != Command::Sweep;
}

Report execute(const RunConfig& config) {
  Report report = empty_report(config);
  const PhaseParams params = make_phase_params(config.N, config.p, config.tol, config.precision_bits);
  with_precision(config.precision_bits, [&]<class Real>() { fill<Real>(report, config, params); });
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  int status = kExitPass;
  try {
    report = execute(config);
    status = report.passed() ? kExitPass : kExitFail;
  } catch (const Error& e) {
    report = empty_report(config);
    report.error = {std::string(e.kind()), e.what()};
    status = dynamic_cast<const UsageError*>(&e) ? kExitUsage : kExitRejected;
    err << "error: " << e.kind() << ": " << e.what() << '\n';
  }
  for (const auto& warning : report.warnings) err << "warning: " << warning << '\n';

  const std::string text = render(report, config.format);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out << " for writing\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite q-ultraspherical systems at q = exp(2 pi i / N): construction and verification."};
  app.footer(kHelpFooter);

  RunConfig config;
  std::string command_name;
  std::string format_name = "json";
  std::vector<std::string> names;
  for (const auto& entry : kCommands) names.emplace_back(entry.name);

  app.add_option("command", command_name, "What to compute")->required()->check(CLI::IsMember(names));
  app.add_option("--N", config.N, "Order of the root of unity (N >= 2)")->capture_default_str();
  auto* beta = app.add_option("--beta", config.beta, "Series parameter beta");
  auto* j = app.add_option("--j", config.j, "Quantized series selector j = 2 beta");
  beta->excludes(j);
  app.add_flag("--complementary", config.force_complementary,
               "Treat beta = 1/2 as complementary (default with no --beta)");
  app.add_option("--p", config.p, "Root-of-unity exponent (only p = 1 is supported)")->capture_default_str();
  app.add_option("--tol", config.tol, "Pass/fail tolerance for every residual")->capture_default_str();
  app.add_option("--precision-bits", config.precision_bits, "53 (double) or up to 113 (quad)")
      ->capture_default_str();
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Write the report to PATH instead of stdout");
  app.add_option("--sweep-max-N", config.sweep_max_N, "Upper N for sweep (lower is --N)")
      ->capture_default_str();
  app.add_option("--samples", config.samples_per_interval,
                 "Complementary beta samples per interval in sweep")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return kExitUsage;
  }

  config.command = *parse_command(command_name);
  config.format = format_name == "csv" ? Format::Csv : format_name == "table" ? Format::Table : Format::Json;
  return run(config, out, err);
}

}  // namespace qusp::cli
