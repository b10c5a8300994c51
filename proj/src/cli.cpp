#include "schlicht/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "schlicht/bounds.hpp"
#include "schlicht/errors.hpp"
#include "schlicht/extremals.hpp"
#include "schlicht/jack_growth.hpp"
#include "schlicht/json_io.hpp"
#include "schlicht/subordination.hpp"

namespace schlicht::cli {

using nlohmann::ordered_json;
using cd = std::complex<double>;

namespace {

class UsageError : public ParameterDomainError {
 public:
  using ParameterDomainError::ParameterDomainError;
};

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParameterDomainError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterDomainError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string format_complex(std::complex<double> z) {
  return format_g15(z.real()) + "," + format_g15(z.imag());
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, colon));
  const int hi = parse_int(text.substr(colon + 1));
  if (lo > hi) throw ParameterDomainError("empty range: " + std::string(text));
  return {lo, hi};
}

namespace {

unsigned effective_threads(const RunConfig& cfg) {
  unsigned t = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SCHLICHT_THREADS")) {
    const int c = std::atoi(cap);
    if (c > 0) t = std::min(t, unsigned(c));
  }
  return t;
}

Reduction resolve(const RunConfig& cfg) {
  auto red = reduce(cfg.subclass);
  if (!cfg.params_json.empty()) {
    std::ifstream in(cfg.params_json);
    if (!in) throw ParameterDomainError("cannot open parameter file: " + cfg.params_json);
    try {
      red.params = params_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw ParameterDomainError(std::string("parameter file: ") + e.what());
    }
  }
  return red;
}

ComplexSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterDomainError("cannot open series file: " + path);
  try {
    return series_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterDomainError(std::string("series file: ") + e.what());
  }
}

BoundResult bound_for(const Reduction& red, int n) {
  return red.transfer ? bound_K(red.params, *red.transfer, n) : bound_S(red.params, n);
}

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json bound_json(const BoundResult& r) {
  ordered_json j;
  j["n"] = r.n;
  j["case"] = to_string(r.case_tag);
  j["k"] = optional_int(r.crossover_k);
  j["bound"] = r.value;
  j["sharp"] = to_string(r.sharp);
  return j;
}

ordered_json reduction_json(const RunConfig& cfg, const Reduction& red) {
  ordered_json j;
  j["class"] = to_string(cfg.subclass.kind);
  j["params"] = to_json(red.params);
  if (red.transfer) {
    j["transfer"] = {{"m", red.transfer->m}, {"mu", red.transfer->mu}};
  } else {
    j["transfer"] = nullptr;
  }
  return j;
}

ordered_json certificate_json(int n, const SharpnessCertificate& c) {
  ordered_json j;
  j["n"] = n;
  j["bound"] = c.bound;
  j["abs_coeff"] = c.coefficient_modulus;
  j["gap"] = c.gap;
  j["attained"] = c.attained;
  return j;
}

ordered_json membership_json(const MembershipReport& m) {
  ordered_json j;
  j["member"] = m.member;
  j["margin"] = m.margin;
  j["radius"] = m.radius_used;
  j["angles"] = m.angles_used;
  return j;
}

ordered_json fuzz_json(const FuzzReport& r) {
  ordered_json j;
  j["params"] = to_json(r.params);
  j["seed"] = r.config.seed;
  j["samples"] = r.config.samples;
  j["degree"] = r.config.degree;
  j["n_max"] = r.config.n_max;
  auto rows = ordered_json::array();
  for (const auto& e : r.per_n) {
    ordered_json row;
    row["n"] = e.n;
    row["case"] = to_string(e.case_tag);
    row["sharp"] = to_string(e.sharp);
    row["bound"] = e.bound;
    row["max_observed"] = e.max_observed;
    row["argmax_sample"] = e.argmax_sample;
    row["argmax_seed"] = e.argmax_seed;
    row["violations"] = e.violations;
    rows.push_back(std::move(row));
  }
  j["per_n"] = std::move(rows);
  j["parseval_failures"] = r.parseval_failures;
  j["nonpositive_margins"] = r.nonpositive_margins;
  j["min_margin"] = r.min_margin;
  return j;
}

std::string opt_k(const std::optional<int>& k) { return k ? std::to_string(*k) : std::string(); }

// ---- bound / classify --------------------------------------------------------

void cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const auto red = resolve(cfg);
  std::vector<BoundResult> rows;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) rows.push_back(bound_for(red, n));
  switch (cfg.format) {
    case Format::Json: {
      if (rows.size() == 1) {
        write_json(out, bound_json(rows.front()));
      } else {
        auto arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(bound_json(r));
        write_json(out, arr);
      }
      break;
    }
    case Format::Csv:
      out << "n,case,k,bound,sharp\n";
      for (const auto& r : rows) {
        out << r.n << ',' << to_string(r.case_tag) << ',' << opt_k(r.crossover_k) << ','
            << format_double(r.value) << ',' << to_string(r.sharp) << '\n';
      }
      break;
    case Format::Table:
      out << std::left << std::setw(5) << "n" << std::setw(6) << "case" << std::setw(4) << "k"
          << std::setw(23) << "bound" << std::setw(9) << "sharp" << "formula\n";
      for (const auto& r : rows) {
        out << std::setw(5) << r.n << std::setw(6) << to_string(r.case_tag) << std::setw(4)
            << opt_k(r.crossover_k) << std::setw(23) << format_double(r.value) << std::setw(9)
            << to_string(r.sharp) << r.formula_id << '\n';
      }
      break;
  }
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto red = resolve(cfg);
  auto j = reduction_json(cfg, red);
  auto rows = ordered_json::array();
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const auto c = classify_case(red.params, n);
    ordered_json row;
    row["n"] = n;
    row["case"] = to_string(c.case_tag);
    row["k"] = optional_int(c.crossover_k);
    row["ak"] = c.ak_values;
    rows.push_back(std::move(row));
  }
  j["classification"] = std::move(rows);
  write_json(out, j);
}

// ---- extremal ----------------------------------------------------------------

ExtremalKind parse_kind(const std::string& which, const ClassParams& p, int index) {
  if (which == "auto") return classify_case(p, index).case_tag == CaseTag::I ? ExtremalKind::CaseI : ExtremalKind::CaseII;
  if (which == "case1") return ExtremalKind::CaseI;
  if (which == "case2") return ExtremalKind::CaseII;
  if (which == "koebe") return ExtremalKind::KoebeGamma;
  if (which == "convex") return ExtremalKind::ConvexGamma;
  if (which == "corollary") return ExtremalKind::CorollaryFn;
  throw UsageError("unknown extremal kind: " + which);
}

std::string_view kind_name(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::CaseI: return "case1";
    case ExtremalKind::CaseII: return "case2";
    case ExtremalKind::KoebeGamma: return "koebe";
    case ExtremalKind::ConvexGamma: return "convex";
    case ExtremalKind::CorollaryFn: return "corollary";
  }
  return "?";
}

struct ExtremalDossier {
  ExtremalSpec spec;
  ComplexSeries series;
  std::vector<std::pair<int, SharpnessCertificate>> certs;
  MembershipReport membership;
};

ExtremalDossier build_extremal(const Reduction& red, const std::string& which, int n_lo, int n_hi,
                               long order) {
  ExtremalDossier d;
  d.spec.which = parse_kind(which, red.params, n_hi);
  d.spec.params = red.params;
  d.spec.index = n_hi;
  d.spec.order = std::max<long>(order, n_hi);
  d.spec.transfer = red.transfer;
  d.series = generate_extremal(d.spec);
  const auto eff = effective_params(d.spec);
  for (int n = n_lo; n <= n_hi; ++n) {
    const double bound = red.transfer ? bound_K(eff, *red.transfer, n).value : bound_S(eff, n).value;
    d.certs.emplace_back(n, certify_sharpness(d.series, bound, n));
  }
  auto untransferred = d.spec;
  untransferred.transfer.reset();
  d.membership = is_member(generate_extremal(untransferred), eff);
  return d;
}

ordered_json extremal_json(const ExtremalDossier& d) {
  ordered_json j;
  j["kind"] = kind_name(d.spec.which);
  j["index"] = d.spec.index;
  j["params"] = to_json(effective_params(d.spec));
  j["series"] = to_json(d.series);
  auto certs = ordered_json::array();
  for (const auto& [n, c] : d.certs) certs.push_back(certificate_json(n, c));
  j["certification"] = std::move(certs);
  j["membership"] = membership_json(d.membership);
  return j;
}

void cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const auto red = resolve(cfg);
  const auto d = build_extremal(red, cfg.which, cfg.n_lo, cfg.n_hi, cfg.order.value_or(64));
  switch (cfg.format) {
    case Format::Json:
      write_json(out, extremal_json(d));
      break;
    case Format::Csv:
      out << "k,re,im,abs\n";
      for (Eigen::Index k = 0; k <= d.series.order(); ++k) {
        out << k << ',' << format_double(d.series[k].real()) << ',' << format_double(d.series[k].imag())
            << ',' << format_double(std::abs(d.series[k])) << '\n';
      }
      out << "\nn,bound,abs_coeff,gap,attained\n";
      for (const auto& [n, c] : d.certs) {
        out << n << ',' << format_double(c.bound) << ',' << format_double(c.coefficient_modulus) << ','
            << format_double(c.gap) << ',' << (c.attained ? "true" : "false") << '\n';
      }
      break;
    case Format::Table:
      out << std::left << std::setw(5) << "n" << std::setw(23) << "bound" << std::setw(23) << "|a_n|"
          << std::setw(23) << "gap" << "attained\n";
      for (const auto& [n, c] : d.certs) {
        out << std::setw(5) << n << std::setw(23) << format_double(c.bound) << std::setw(23)
            << format_double(c.coefficient_modulus) << std::setw(23) << format_double(c.gap)
            << (c.attained ? "true" : "false") << '\n';
      }
      break;
  }
}

// ---- verify ------------------------------------------------------------------

FuzzReport run_fuzz(const RunConfig& cfg, const Reduction& red, int default_samples) {
  FuzzConfig fc;
  fc.n_max = cfg.n_max;
  fc.samples = cfg.samples.value_or(default_samples);
  fc.seed = cfg.seed.value_or(0);
  fc.degree = cfg.degree;
  fc.threads = effective_threads(cfg);
  return fuzz_bounds(red.params, fc);
}

void cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed) throw UsageError("verify requires --seed");
  const auto red = resolve(cfg);
  const auto report = run_fuzz(cfg, red, 1000);
  switch (cfg.format) {
    case Format::Json:
      write_json(out, fuzz_json(report));
      break;
    case Format::Csv:
    case Format::Table: {
      const char sep = cfg.format == Format::Csv ? ',' : ' ';
      out << "n" << sep << "case" << sep << "bound" << sep << "max_observed" << sep << "argmax_sample"
          << sep << "argmax_seed" << sep << "violations\n";
      for (const auto& e : report.per_n) {
        out << e.n << sep << to_string(e.case_tag) << sep << format_double(e.bound) << sep
            << format_double(e.max_observed) << sep << e.argmax_sample << sep << e.argmax_seed << sep
            << e.violations << '\n';
      }
      break;
    }
  }
}

// ---- jack --------------------------------------------------------------------

ordered_json grid_json(const RunConfig& cfg, long order) {
  ordered_json j;
  j["radii"] = cfg.radii;
  j["angles"] = cfg.angles;
  j["order"] = order;
  return j;
}

void cmd_jack(const RunConfig& cfg, std::ostream& out) {
  const double alpha = cfg.subclass.alpha;
  const long order = cfg.order.value_or(768);
  const int samples = cfg.samples.value_or(200);
  const std::uint64_t seed = cfg.seed.value_or(0);
  ordered_json j;
  j["check"] = cfg.check;
  j["alpha"] = alpha;

  if (cfg.check == "minh2") {
    const double value = min_h2_distance(alpha);
    const double closed = std::abs(1.0 + std::polar(1.0, -2.0 * alpha)) / 4.0;
    j["min_h2_distance"] = value;
    j["closed_form"] = closed;
    j["abs_error"] = std::abs(value - closed);
  } else if (cfg.check == "thm33" || cfg.check == "gb") {
    const bool gb = cfg.check == "gb";
    const double b = cfg.b > 0.0 ? cfg.b : std::abs(1.0 + std::polar(1.0, -2.0 * alpha)) / 4.0;
    if (gb) j["b"] = b;
    std::vector<ComplexSeries> fs;
    if (!cfg.input.empty()) {
      fs.push_back(load_series(cfg.input));
    } else {
      for (int i = 0; i < samples; ++i) {
        const auto omega = sample_mixed(derive_seed(seed, std::uint64_t(i)), cfg.degree).omega;
        fs.push_back(gb ? gb_instance(omega, b, order) : spiral_instance(omega, alpha, order));
      }
      j["seed"] = seed;
      j["instances"] = samples;
    }
    bool all_spiral = true, all_gb = true;
    double min_re = std::numeric_limits<double>::infinity(), max_dev = 0.0;
    for (const auto& f : fs) {
      for (double r : cfg.radii) {
        const auto s = spiral_membership(f, alpha, r, cfg.angles);
        all_spiral = all_spiral && s.member;
        min_re = std::min(min_re, s.min_re);
        if (gb) {
          const auto g = gb_membership(f, b, r, cfg.angles);
          all_gb = all_gb && g.member;
          max_dev = std::max(max_dev, g.max_dev);
        }
      }
    }
    j["spiral_member"] = all_spiral;
    j["min_re"] = min_re;
    if (gb) {
      j["gb_member"] = all_gb;
      j["max_dev"] = max_dev;
    }
    j["grid"] = grid_json(cfg, cfg.input.empty() ? order : long(fs.front().order()));
  } else if (cfg.check == "growth") {
    std::vector<ComplexSeries> fs;
    if (!cfg.input.empty()) {
      fs.push_back(load_series(cfg.input));
    } else {
      SubclassSpec s;
      s.kind = Subclass::StarlikeOrder;
      s.alpha = alpha;
      const auto p = reduce(s).params;
      for (int i = 0; i < samples; ++i) {
        fs.push_back(f_from_schwarz(sample_mixed(derive_seed(seed, std::uint64_t(i)), cfg.degree), p, order));
      }
      j["seed"] = seed;
      j["instances"] = samples;
    }
    bool ok = true, coeff_ok = true;
    double worst = std::numeric_limits<double>::infinity(), max_second = 0.0;
    for (const auto& f : fs) {
      const auto g = growth_check(f, alpha, cfg.radii, cfg.angles);
      const auto c = second_coeff_check(f, alpha);
      ok = ok && g.ok;
      coeff_ok = coeff_ok && c.ok;
      worst = std::min(worst, g.worst_slack);
      max_second = std::max(max_second, c.value);
    }
    j["beta"] = 1.0 / (2.0 * (1.0 - alpha));
    j["growth_ok"] = ok;
    j["worst_slack"] = worst;
    j["second_coeff_ok"] = coeff_ok;
    j["max_second_derivative"] = max_second;
    j["second_derivative_bound"] = 4.0 * (1.0 - alpha);
    j["grid"] = grid_json(cfg, cfg.input.empty() ? order : long(fs.front().order()));
  } else if (cfg.check == "kbeta") {
    const double beta = cfg.kbeta;
    const auto info = kbeta_starlike_order(beta);
    const auto k = kbeta(beta, order);
    j["beta"] = beta;
    j["starlike_order"] = info.starlike_order;
    j["not_univalent_expected"] = info.not_univalent_expected;
    auto rows = ordered_json::array();
    for (double r : cfg.radii) {
      ordered_json row;
      row["r"] = r;
      row["abs_k_at_minus_r"] = std::abs(evaluate(k, cd(-r)));
      row["growth_bound"] = r / std::pow(1.0 - r, 1.0 / beta);
      rows.push_back(std::move(row));
    }
    j["growth_at_minus_r"] = std::move(rows);
    j["series"] = to_json(k);
  } else {
    throw UsageError("unknown jack check: '" + cfg.check + "' (expected thm33|gb|minh2|growth|kbeta)");
  }
  write_json(out, j);
}

// ---- report ------------------------------------------------------------------

void cmd_report(const RunConfig& cfg, std::ostream& out) {
  const auto red = resolve(cfg);
  ordered_json j = reduction_json(cfg, red);
  j["n_max"] = cfg.n_max;
  auto bounds = ordered_json::array();
  for (int n = 2; n <= cfg.n_max; ++n) bounds.push_back(bound_json(bound_for(red, n)));
  j["bounds"] = std::move(bounds);
  const auto d = build_extremal(red, cfg.which, 2, cfg.n_max, cfg.order.value_or(64));
  j["extremal"] = extremal_json(d);
  const auto fuzz = run_fuzz(cfg, red, 200);
  j["fuzz"] = fuzz_json(fuzz);
  ordered_json margins;
  margins["extremal"] = d.membership.margin;
  margins["fuzz_min"] = fuzz.min_margin;
  j["membership_margins"] = std::move(margins);
  write_json(out, j);
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buffer;
  std::ostream& sink = cfg.output_path.empty() ? out : buffer;
  switch (cfg.command) {
    case Command::Bound: cmd_bound(cfg, sink); break;
    case Command::Classify: cmd_classify(cfg, sink); break;
    case Command::Extremal: cmd_extremal(cfg, sink); break;
    case Command::Verify: cmd_verify(cfg, sink); break;
    case Command::Jack: cmd_jack(cfg, sink); break;
    case Command::Report: cmd_report(cfg, sink); break;
  }
  if (!cfg.output_path.empty()) {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw ParameterDomainError("cannot write output file: " + cfg.output_path);
    file << buffer.str();
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Coefficient bounds, extremal functions and randomized checks for subordination classes"};
  app.name("schlicht");
  app.require_subcommand(1);

  std::string class_name = "S", gamma_text = "1,0", n_text = "2:10", format_text = "json";
  std::vector<double> radii;
  long order = 0;
  int samples = 0;
  std::uint64_t seed = 0;

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--class", class_name, "class name (S, K, starlike-gamma, convex-gamma, Sc, B, M, N, Sbeta, janowski, starlike-order, SP)");
    sub->add_option("--gamma", gamma_text, "complex order as re,im");
    sub->add_option("--lambda", cfg.subclass.lambda, "lambda in [0, 1]");
    sub->add_option("--A", cfg.subclass.A, "A");
    sub->add_option("--B", cfg.subclass.B, "B");
    sub->add_option("--beta", cfg.subclass.beta, "beta for Sc, B, M, N, Sbeta");
    sub->add_option("--alpha", cfg.subclass.alpha, "alpha for starlike-order, SP and jack checks");
    sub->add_option("--mu", cfg.subclass.mu, "mu > -1 for K and B");
    sub->add_option("--m", cfg.subclass.m, "Cauchy-Euler order m >= 2 for K");
    sub->add_option("--params-json", cfg.params_json, "file with {gamma, lambda, A, B}");
    sub->add_option("--format", format_text, "json | csv | table");
    sub->add_option("--output", cfg.output_path, "write the result to this file");
    sub->add_option("--order", order, "truncation order");
    sub->add_option("--threads", cfg.threads, "worker threads (capped by SCHLICHT_THREADS)");
  };

  auto* bound = app.add_subcommand("bound", "coefficient bounds for a range of n");
  auto* classify = app.add_subcommand("classify", "reduce a subclass and classify the A_k regime");
  auto* extremal = app.add_subcommand("extremal", "extremal function and sharpness certificate");
  auto* verify = app.add_subcommand("verify", "randomized Schwarz-function search for violations");
  auto* jack = app.add_subcommand("jack", "spirallike / G_b / growth checks");
  auto* report = app.add_subcommand("report", "consolidated dossier for one parameter set");
  for (auto* sub : {bound, classify, extremal, verify, jack, report}) add_params(sub);
  for (auto* sub : {bound, classify, extremal}) sub->add_option("--n", n_text, "index or lo:hi range");
  extremal->add_option("--which", cfg.which, "auto | case1 | case2 | koebe | convex | corollary");
  report->add_option("--which", cfg.which, "extremal kind (see extremal)");
  for (auto* sub : {verify, jack, report}) {
    sub->add_option("--samples", samples, "number of Schwarz samples");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--degree", cfg.degree, "Schwarz polynomial degree");
  }
  for (auto* sub : {verify, report}) sub->add_option("--n-max", cfg.n_max, "largest coefficient index");
  jack->add_option("--check", cfg.check, "thm33 | gb | minh2 | growth | kbeta")->required();
  jack->add_option("--b", cfg.b, "G_b radius (default |1 + e^{-2i alpha}|/4)");
  jack->add_option("--kbeta", cfg.kbeta, "beta for the k_beta example");
  jack->add_option("--input", cfg.input, "series JSON file to check");
  jack->add_option("--radii", radii, "grid radii, comma separated")->delimiter(',');
  jack->add_option("--angles", cfg.angles, "grid angles");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 1;
  }

  try {
    if (bound->parsed()) cfg.command = Command::Bound;
    if (classify->parsed()) cfg.command = Command::Classify;
    if (extremal->parsed()) cfg.command = Command::Extremal;
    if (verify->parsed()) cfg.command = Command::Verify;
    if (jack->parsed()) cfg.command = Command::Jack;
    if (report->parsed()) cfg.command = Command::Report;
    auto* active = app.get_subcommands().front();

    cfg.subclass.kind = parse_subclass(class_name);
    cfg.subclass.gamma = parse_complex(gamma_text);
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_text);
    if (format_text == "json") cfg.format = Format::Json;
    else if (format_text == "csv") cfg.format = Format::Csv;
    else if (format_text == "table") cfg.format = Format::Table;
    else throw UsageError("unknown format: " + format_text);
    if (active->count("--order")) cfg.order = order;
    if (active->get_option_no_throw("--samples") && active->count("--samples")) cfg.samples = samples;
    if (active->get_option_no_throw("--seed") && active->count("--seed")) cfg.seed = seed;
    if (!radii.empty()) cfg.radii = radii;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return run(cfg, out, err);
}

}  // namespace schlicht::cli
