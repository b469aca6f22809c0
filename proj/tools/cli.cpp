#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eqbif/analyzer.hpp"
#include "eqbif/bifurcation_index.hpp"
#include "eqbif/degree.hpp"
#include "eqbif/error.hpp"
#include "eqbif/json_io.hpp"
#include "eqbif/so2_rep.hpp"
#include "eqbif/spectrum.hpp"
#include "eqbif/spectrum_cache.hpp"

namespace eqbif::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  std::string gamma = "hemisphere";
  std::optional<double> lambda_max;
  std::optional<int> m_scan_max;
  unsigned p_minus = 0;
  unsigned p_plus = 0;
  std::size_t m0 = 1;
  std::string sign = "+";
  std::size_t scan_bound = 0;
  std::uint64_t subset_budget = std::uint64_t{1} << 20;
  int mode = -1;
  std::size_t eigenspace = 0;
  std::string weights;
  std::string candidates;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Sign parse_sign(const std::string& s) { return (s == "+" || s == "positive") ? Sign::positive : Sign::negative; }

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("malformed " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<SignedEigenvalue> parse_candidates(const std::string& text) {
  std::vector<SignedEigenvalue> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
      throw UsageError("candidate '" + tok + "' must look like +3 or -3");
    }
    SignedEigenvalue c;
    c.sign = tok[0] == '+' ? Sign::positive : Sign::negative;
    c.index = parse_count(tok.substr(1), "candidate index");
    out.push_back(c);
  }
  return out;
}

SO2Rep parse_weights(const std::string& text) {
  std::vector<SO2Rep::Entry> entries;
  for (const std::string& tok : split(text, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw UsageError("weight '" + tok + "' must look like m:k");
    entries.emplace_back(parse_count(tok.substr(0, colon), "weight"),
                         parse_count(tok.substr(colon + 1), "multiplicity"));
  }
  return SO2Rep::from_weights(std::move(entries));
}

std::string config_line(const SystemConfig& c) {
  return "n=" + std::to_string(c.n) + " gamma=" + c.radius.label() + " p-=" + std::to_string(c.p_minus) +
         " p+=" + std::to_string(c.p_plus);
}

void header(std::ostream& out) { out << "# eqbif " << EQBIF_VERSION_STRING << '\n'; }

void emit_json(std::ostream& out, json doc) { out << doc.dump(2) << '\n'; }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int spectrum() {
    const BallRadius radius = parse_gamma(o_.gamma);
    const Spectrum s = load_spectrum(radius, o_.lambda_max.value());
    if (!table()) {
      emit_json(out_, json{{"tool_version", EQBIF_VERSION_STRING}, {"spectrum", s}});
      return 0;
    }
    header(out_);
    out_ << "spectrum n=" << s.n << " gamma=" << s.radius.label() << " lambda_max=" << fmt(s.lambda_max) << '\n';
    char line[256];
    std::snprintf(line, sizeof line, "%4s %18s %8s %-12s %6s %6s  %s\n", "j", "lambda", "exact", "modes", "mu", "nu",
                  "eigenspace");
    out_ << line;
    for (std::size_t j = 0; j < s.records.size(); ++j) {
      const auto& r = s.records[j];
      std::string modes;
      for (int m : r.gamma_set) modes += (modes.empty() ? "" : ",") + std::to_string(m);
      const std::string exact = r.lambda_exact ? std::to_string(*r.lambda_exact) : "-";
      std::snprintf(line, sizeof line, "%4zu %18s %8s %-12s %6llu %6llu  ", j + 1, fmt(r.lambda).c_str(),
                    exact.c_str(), ("{" + modes + "}").c_str(), static_cast<unsigned long long>(r.mu),
                    static_cast<unsigned long long>(r.nu));
      out_ << line << r.eigenspace.to_string() << '\n';
    }
    for (const auto& note : s.notes) out_ << "note: " << note << '\n';
    return 0;
  }

  int decompose() {
    if (o_.mode < 0) throw UsageError("decompose needs --m");
    const SO2Rep rep = so2_decompose(o_.n, o_.mode);
    const std::uint64_t dim = harmonic_dim(o_.n, o_.mode);
    if (!table()) {
      emit_json(out_, json{{"tool_version", EQBIF_VERSION_STRING},
                           {"n", o_.n},
                           {"m", o_.mode},
                           {"dimension", dim},
                           {"rep", rep},
                           {"display", rep.to_string()}});
      return 0;
    }
    header(out_);
    out_ << "H^" << o_.n << "_" << o_.mode << " (dim " << dim << ") = " << rep.to_string() << '\n';
    return 0;
  }

  int degree() {
    const int chosen = (o_.mode >= 0) + (o_.eigenspace > 0) + !o_.weights.empty();
    if (chosen != 1) throw UsageError("degree needs exactly one of --m, --eigenspace, --weights");
    SO2Rep rep;
    std::string label;
    if (o_.mode >= 0) {
      rep = so2_decompose(o_.n, o_.mode);
      label = "H^" + std::to_string(o_.n) + "_" + std::to_string(o_.mode);
    } else if (o_.eigenspace > 0) {
      const auto records = records_for(o_.eigenspace);
      if (o_.eigenspace > records.size()) {
        throw Error(ErrorCode::out_of_range, "only " + std::to_string(records.size()) + " eigenvalues available");
      }
      rep = records[o_.eigenspace - 1].eigenspace;
      label = "V(lambda_" + std::to_string(o_.eigenspace) + ")";
    } else {
      rep = parse_weights(o_.weights);
      label = "custom";
    }
    const EulerElement deg = deg_neg_id(rep);
    if (!table()) {
      emit_json(out_, json{{"tool_version", EQBIF_VERSION_STRING},
                           {"space", label},
                           {"rep", rep},
                           {"degree", deg},
                           {"display", deg.to_string()}});
      return 0;
    }
    header(out_);
    out_ << "deg(-Id) on " << label << " = " << rep.to_string() << '\n';
    out_ << "degree: " << deg.to_string() << '\n';
    return 0;
  }

  int index() {
    const SystemConfig config = make_config();
    const Sign sign = parse_sign(o_.sign);
    const auto records = records_for(o_.m0);
    const IndexRequest req{records, o_.m0, sign, config.p_minus, config.p_plus};
    const EulerElement index = index_product(req);
    const SO2Rep lower = lower_eigenspaces(req);
    const ConeReport cone = cone_predicates(req);

    json closed;
    std::string closed_text;
    try {
      const ClosedFormIndex cf = index_closed_form(req);
      const bool agrees = cf.agrees_with(index);
      if (!agrees) throw Error(ErrorCode::internal, "closed form disagrees with the product formula");
      closed = json{{"coord0", cf.coord0.str()},
                    {"top", cf.top ? json::array({cf.top->first, cf.top->second.str()}) : json(nullptr)},
                    {"zero_from", cf.zero_from},
                    {"exact_spectrum", cf.exact_spectrum},
                    {"agrees", agrees}};
      closed_text = "coord0=" + cf.coord0.str();
      if (cf.top) closed_text += " coord" + std::to_string(cf.top->first) + "=" + cf.top->second.str();
      closed_text += " zero from " + std::to_string(cf.zero_from) + (agrees ? " (agrees)" : " (DISAGREES)");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::closed_form_regime) throw;
      closed = json{{"skipped", e.what()}};
      closed_text = std::string("skipped: ") + e.what();
    }

    const std::string point = std::string(sign == Sign::positive ? "+" : "-") + "lambda_" + std::to_string(o_.m0);
    if (!table()) {
      emit_json(out_, json{{"tool_version", EQBIF_VERSION_STRING},
                           {"config", config},
                           {"point", point},
                           {"lambda", records[o_.m0 - 1].lambda},
                           {"lower", lower},
                           {"eigenspace", records[o_.m0 - 1].eigenspace},
                           {"index", index},
                           {"display", index.to_string()},
                           {"closed_form", closed},
                           {"cone", cone}});
      return 0;
    }
    header(out_);
    out_ << "index at " << point << " (lambda=" << fmt(records[o_.m0 - 1].lambda) << ") " << config_line(config)
         << '\n';
    out_ << "lower eigenspaces: " << lower.to_string() << '\n';
    out_ << "eigenspace:        " << records[o_.m0 - 1].eigenspace.to_string() << '\n';
    out_ << "index:             " << index.to_string() << '\n';
    out_ << "closed form:       " << closed_text << '\n';
    out_ << "cone:              implied=" << (cone.implied ? to_string(*cone.implied) : "none")
         << " actual=" << to_string(cone.actual) << " consistent=" << (cone.consistent ? "yes" : "no") << '\n';
    return 0;
  }

  int alternative() {
    const SystemConfig config = make_config();
    const std::vector<SignedEigenvalue> candidates = parse_candidates(o_.candidates);
    std::size_t needed = 1;
    for (const auto& c : candidates) needed = std::max(needed, c.index);
    const auto records = records_for(needed);
    const Certificate cert = certify_alternative(candidates, config, records, lambda_max());
    return emit_certificate(with_tolerances(cert));
  }

  int certify_unbounded() {
    const SystemConfig config = make_config();
    if (!config.radius.is_hemisphere()) {
      throw UsageError("certify unbounded needs --gamma hemisphere");
    }
    const std::size_t bound = o_.scan_bound > 0 ? o_.scan_bound : std::max<std::size_t>(o_.m0, 8);
    return emit_certificate(eqbif::certify_unbounded(config, o_.m0, parse_sign(o_.sign), bound, o_.subset_budget));
  }

  int certify_bounded() {
    const SystemConfig config = make_config();
    const auto records = records_for(o_.m0);
    return emit_certificate(
        with_tolerances(bounded_necessary(config, records, o_.m0, parse_sign(o_.sign), lambda_max())));
  }

  int certify_symmetry() {
    const SystemConfig config = make_config();
    const auto records = records_for(o_.m0);
    return emit_certificate(
        with_tolerances(symmetry_breaking(config, records, o_.m0, parse_sign(o_.sign), lambda_max())));
  }

 private:
  bool table() const { return o_.format == "table"; }

  std::optional<double> lambda_max() const { return o_.lambda_max; }

  SystemConfig make_config() const {
    SystemConfig c;
    c.n = o_.n;
    c.radius = parse_gamma(o_.gamma);
    c.p_minus = o_.p_minus;
    c.p_plus = o_.p_plus;
    return c;
  }

  Certificate with_tolerances(Certificate cert) const {
    if (lambda_max() && !cert.config.radius.is_hemisphere()) cert.tolerances = tolerances_;
    return cert;
  }

  Spectrum load_spectrum(const BallRadius& radius, double lambda_max) {
    if (radius.is_hemisphere() || o_.no_cache) {
      return assemble_spectrum(o_.n, radius, lambda_max, o_.m_scan_max, tolerances_);
    }
    std::optional<std::filesystem::path> dir;
    if (!o_.cache_dir.empty()) {
      dir = std::filesystem::path(o_.cache_dir);
    } else {
      dir = SpectrumCache::default_directory();
    }
    if (!dir) return assemble_spectrum(o_.n, radius, lambda_max, o_.m_scan_max, tolerances_);

    const SpectrumCache cache(*dir);
    std::vector<std::string> warnings;
    std::optional<Spectrum> cached = cache.load(o_.n, radius, lambda_max, tolerances_, warnings);
    if (!cached) {
      cached = assemble_spectrum(o_.n, radius, lambda_max, o_.m_scan_max, tolerances_);
      cache.store(*cached, warnings);
    }
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
    return *cached;
  }

  std::vector<EigenvalueRecord> records_for(std::size_t needed) {
    const BallRadius radius = parse_gamma(o_.gamma);
    if (auto lm = lambda_max()) return load_spectrum(radius, *lm).records;
    if (!radius.is_hemisphere()) throw UsageError("--lambda-max is required unless --gamma is hemisphere");
    return hemisphere_spectrum(o_.n, static_cast<int>(std::max<std::size_t>(needed, 1)));
  }

  int emit_certificate(const Certificate& cert) {
    if (!table()) {
      emit_json(out_, json(cert));
      return exit_code(cert.verdict);
    }
    header(out_);
    out_ << "certificate: " << to_string(cert.kind) << '\n';
    out_ << "config:      " << config_line(cert.config) << '\n';
    out_ << "subject:    ";
    for (const auto& s : cert.subject) out_ << ' ' << s.label();
    out_ << '\n';
    if (!cert.evidence.empty()) {
      out_ << "evidence:\n";
      for (const auto& e : cert.evidence) {
        out_ << "  " << e.point.label() << " (lambda=" << fmt(e.point.value) << "): " << e.index.to_string() << '\n';
      }
    }
    if (cert.sum) out_ << "sum:         " << cert.sum->to_string() << '\n';
    if (!cert.conditions.empty()) {
      out_ << "conditions:\n";
      for (const auto& c : cert.conditions) out_ << "  [" << c.status << "] " << c.statement << '\n';
    }
    out_ << "reasoning:\n";
    for (const auto& r : cert.reasoning) out_ << "  " << r << '\n';
    out_ << "verdict:     " << to_string(cert.verdict) << '\n';
    return exit_code(cert.verdict);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Tolerances tolerances_;
};

void add_system(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "sphere dimension n >= 2")->required()->check(CLI::Range(2, 1000));
  app->add_option("--gamma", o.gamma, "ball radius: hemisphere, [p*]pi[/q] or radians")->capture_default_str();
}

void add_signature(CLI::App* app, Options& o) {
  app->add_option("--p-minus", o.p_minus, "number of negative diagonal coefficients");
  app->add_option("--p-plus", o.p_plus, "number of positive diagonal coefficients");
}

void add_point(CLI::App* app, Options& o) {
  app->add_option("--m0", o.m0, "1-based eigenvalue index")->required()->check(CLI::PositiveNumber);
  app->add_option("--sign", o.sign, "+ or -")->check(CLI::IsMember({"+", "-", "positive", "negative"}));
}

CLI::Option* add_spectrum_source(CLI::App* app, Options& o) {
  auto* opt = app->add_option("--lambda-max", o.lambda_max, "spectrum bound")->check(CLI::PositiveNumber);
  app->add_option("--m-scan-max", o.m_scan_max, "highest mode scanned off the hemisphere");
  app->add_option("--cache-dir", o.cache_dir, "spectrum cache directory (default: $EQBIF_CACHE_DIR)");
  app->add_flag("--no-cache", o.no_cache, "do not read or write the spectrum cache");
  return opt;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
}

}  // namespace

BallRadius parse_gamma(const std::string& text) {
  if (text == "hemisphere") return BallRadius::hemisphere();
  static const std::regex pi_form(R"(^(\d+)?\*?pi(?:/(\d+))?$)");
  std::smatch match;
  if (std::regex_match(text, match, pi_form)) {
    const double p = match[1].matched ? static_cast<double>(parse_count(match[1].str(), "multiple of pi")) : 1.0;
    const double q = match[2].matched ? static_cast<double>(parse_count(match[2].str(), "divisor of pi")) : 1.0;
    if (q == 0.0) throw std::invalid_argument("zero divisor in '" + text + "'");
    return BallRadius::radians(p * std::numbers::pi / q);
  }
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("cannot read gamma '" + text + "'");
  return BallRadius::radians(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equivariant bifurcation analysis of gradient systems on geodesic balls of spheres", "eqbif"};
  app.set_version_flag("--version", std::string("eqbif ") + EQBIF_VERSION_STRING);
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Dirichlet eigenvalues with their SO(2)-eigenspaces");
  add_system(spectrum, o);
  add_spectrum_source(spectrum, o)->required();
  add_format(spectrum, o);

  auto* decompose = app.add_subcommand("decompose", "SO(2)-weights of the harmonic space H^n_m");
  decompose->add_option("--n", o.n, "sphere dimension n >= 2")->required()->check(CLI::Range(2, 1000));
  decompose->add_option("--m", o.mode, "harmonic degree")->required()->check(CLI::NonNegativeNumber);
  add_format(decompose, o);

  auto* degree = app.add_subcommand("degree", "Degree of -Id on a named representation");
  add_system(degree, o);
  degree->add_option("--m", o.mode, "harmonic space H^n_m")->check(CLI::NonNegativeNumber);
  degree->add_option("--eigenspace", o.eigenspace, "eigenspace of lambda_j")->check(CLI::PositiveNumber);
  degree->add_option("--weights", o.weights, "explicit weights, e.g. 0:3,1:2");
  add_spectrum_source(degree, o);
  add_format(degree, o);

  auto* index = app.add_subcommand("index", "SO(2)-bifurcation index with closed form and cone report");
  add_system(index, o);
  add_signature(index, o);
  add_point(index, o);
  add_spectrum_source(index, o);
  add_format(index, o);

  auto* alternative = app.add_subcommand("alternative", "Index sum over an explicit candidate set");
  add_system(alternative, o);
  add_signature(alternative, o);
  alternative->add_option("--candidates", o.candidates, "signed 1-based indices, e.g. +1,-1,+2")->required();
  add_spectrum_source(alternative, o);
  add_format(alternative, o);

  auto* certify = app.add_subcommand("certify", "Certificates for global continua and symmetry breaking");
  certify->require_subcommand(1);
  auto* unbounded = certify->add_subcommand("unbounded", "Unbounded continuum on the hemisphere");
  add_system(unbounded, o);
  add_signature(unbounded, o);
  add_point(unbounded, o);
  unbounded->add_option("--scan-bound", o.scan_bound, "largest eigenvalue index examined (default max(m0, 8))");
  unbounded->add_option("--subset-budget", o.subset_budget, "largest subset count enumerated by brute force");
  add_format(unbounded, o);
  auto* bounded = certify->add_subcommand("bounded-necessary", "Necessary conditions for a bounded continuum");
  add_system(bounded, o);
  add_signature(bounded, o);
  add_point(bounded, o);
  add_spectrum_source(bounded, o);
  add_format(bounded, o);
  auto* symmetry = certify->add_subcommand("symmetry-breaking", "Global symmetry-breaking bifurcation point");
  add_system(symmetry, o);
  add_signature(symmetry, o);
  add_point(symmetry, o);
  add_spectrum_source(symmetry, o);
  add_format(symmetry, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  Runner runner(o, out, err);
  try {
    if (spectrum->parsed()) return runner.spectrum();
    if (decompose->parsed()) return runner.decompose();
    if (degree->parsed()) return runner.degree();
    if (index->parsed()) return runner.index();
    if (alternative->parsed()) return runner.alternative();
    if (unbounded->parsed()) return runner.certify_unbounded();
    if (bounded->parsed()) return runner.certify_bounded();
    if (symmetry->parsed()) return runner.certify_symmetry();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace eqbif::cli
