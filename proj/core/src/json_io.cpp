#include "eqbif/json_io.hpp"

#include <algorithm>

#include "eqbif/error.hpp"

namespace eqbif {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::parse_error, what);
}

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing key '") + key + "'");
  return j.at(key);
}

BigInt parse_bigint(const json& j) {
  require(j.is_string(), "coefficient must be a decimal string");
  const std::string s = j.get<std::string>();
  const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  require(s.size() > digits_from &&
              std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                          [](char c) { return c >= '0' && c <= '9'; }),
          "malformed integer '" + s + "'");
  return BigInt(s);
}

const char* sign_token(Sign s) { return s == Sign::positive ? "+" : "-"; }

}  // namespace

void to_json(json& j, const EulerElement& a) {
  json coeffs = json::array();
  for (const auto& [i, c] : a.terms()) coeffs.push_back(json::array({i, c.str()}));
  j = json{{"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, EulerElement& a) {
  const json& coeffs = field(j, "coeffs");
  require(coeffs.is_array(), "coeffs must be an array");
  std::vector<EulerElement::Term> terms;
  for (const json& t : coeffs) {
    require(t.is_array() && t.size() == 2 && t[0].is_number_unsigned(), "coefficient entry must be [index, \"c\"]");
    terms.emplace_back(t[0].get<std::uint64_t>(), parse_bigint(t[1]));
  }
  a = EulerElement::from_terms(std::move(terms));
}

void to_json(json& j, const SO2Rep& rep) {
  json weights = json::array();
  for (const auto& [m, k] : rep.weights()) weights.push_back(json::array({m, k}));
  j = json{{"weights", std::move(weights)}};
}

void from_json(const json& j, SO2Rep& rep) {
  const json& weights = field(j, "weights");
  require(weights.is_array(), "weights must be an array");
  std::vector<SO2Rep::Entry> entries;
  for (const json& w : weights) {
    require(w.is_array() && w.size() == 2 && w[0].is_number_unsigned() && w[1].is_number_unsigned(),
            "weight entry must be [m, k]");
    entries.emplace_back(w[0].get<std::uint64_t>(), w[1].get<std::uint64_t>());
  }
  rep = SO2Rep::from_weights(std::move(entries));
}

void to_json(json& j, const BallRadius& r) {
  if (r.is_hemisphere()) {
    j = "hemisphere";
  } else {
    j = r.value();
  }
}

void from_json(const json& j, BallRadius& r) {
  if (j.is_string()) {
    require(j.get<std::string>() == "hemisphere", "radius token must be \"hemisphere\"");
    r = BallRadius::hemisphere();
    return;
  }
  require(j.is_number(), "radius must be \"hemisphere\" or a number");
  r = BallRadius::radians(j.get<double>());
}

void to_json(json& j, const Tolerances& t) {
  j = json{{"series_start", t.series_start},
           {"ode_abs", t.ode_abs},
           {"ode_rel", t.ode_rel},
           {"renormalize_above", t.renormalize_above},
           {"scan_start", t.scan_start},
           {"scan_step_max", t.scan_step_max},
           {"scan_step_fraction", t.scan_step_fraction},
           {"bisection_rel", t.bisection_rel},
           {"cluster_rel", t.cluster_rel},
           {"ambiguity_rel", t.ambiguity_rel},
           {"root_value", t.root_value},
           {"signature", t.signature()}};
}

void from_json(const json& j, Tolerances& t) {
  auto get = [&](const char* key, double& out) {
    const json& v = field(j, key);
    require(v.is_number(), std::string("tolerance '") + key + "' must be a number");
    out = v.get<double>();
  };
  get("series_start", t.series_start);
  get("ode_abs", t.ode_abs);
  get("ode_rel", t.ode_rel);
  get("renormalize_above", t.renormalize_above);
  get("scan_start", t.scan_start);
  get("scan_step_max", t.scan_step_max);
  get("scan_step_fraction", t.scan_step_fraction);
  get("bisection_rel", t.bisection_rel);
  get("cluster_rel", t.cluster_rel);
  get("ambiguity_rel", t.ambiguity_rel);
  get("root_value", t.root_value);
}

void to_json(json& j, const EigenvalueRecord& rec) {
  j = json{{"lambda", rec.lambda},
           {"lambda_exact", rec.lambda_exact ? json(*rec.lambda_exact) : json(nullptr)},
           {"gamma", rec.gamma_set},
           {"eigenspace", rec.eigenspace},
           {"mu", rec.mu},
           {"nu", rec.nu}};
}

void from_json(const json& j, EigenvalueRecord& rec) {
  require(field(j, "lambda").is_number(), "lambda must be a number");
  rec.lambda = j.at("lambda").get<double>();
  const json& exact = field(j, "lambda_exact");
  if (exact.is_null()) {
    rec.lambda_exact.reset();
  } else {
    require(exact.is_number_integer(), "lambda_exact must be an integer or null");
    rec.lambda_exact = exact.get<std::int64_t>();
  }
  const json& gamma = field(j, "gamma");
  require(gamma.is_array(), "gamma must be an array");
  rec.gamma_set.clear();
  for (const json& g : gamma) {
    require(g.is_number_integer(), "gamma entries must be integers");
    rec.gamma_set.push_back(g.get<int>());
  }
  rec.eigenspace = field(j, "eigenspace").get<SO2Rep>();
  require(field(j, "mu").is_number_unsigned() && field(j, "nu").is_number_unsigned(), "mu and nu must be counts");
  rec.mu = j.at("mu").get<std::uint64_t>();
  rec.nu = j.at("nu").get<std::uint64_t>();
}

void to_json(json& j, const Spectrum& s) {
  j = json{{"n", s.n},
           {"radius", s.radius},
           {"lambda_max", s.lambda_max},
           {"tolerances", s.tolerances},
           {"top_mode", s.top_mode},
           {"notes", s.notes},
           {"records", s.records}};
}

void from_json(const json& j, Spectrum& s) {
  require(field(j, "n").is_number_integer(), "n must be an integer");
  s.n = j.at("n").get<int>();
  from_json(field(j, "radius"), s.radius);
  require(field(j, "lambda_max").is_number(), "lambda_max must be a number");
  s.lambda_max = j.at("lambda_max").get<double>();
  s.tolerances = field(j, "tolerances").get<Tolerances>();
  require(field(j, "top_mode").is_number_integer(), "top_mode must be an integer");
  s.top_mode = j.at("top_mode").get<int>();
  const json& notes = field(j, "notes");
  require(notes.is_array(), "notes must be an array");
  s.notes.clear();
  for (const json& n : notes) {
    require(n.is_string(), "notes must be strings");
    s.notes.push_back(n.get<std::string>());
  }
  const json& records = field(j, "records");
  require(records.is_array(), "records must be an array");
  s.records.clear();
  for (const json& r : records) s.records.push_back(r.get<EigenvalueRecord>());
}

void to_json(json& j, const SystemConfig& c) {
  j = json{{"n", c.n}, {"gamma", c.radius}, {"p_minus", c.p_minus}, {"p_plus", c.p_plus}};
}

void to_json(json& j, const SignedEigenvalue& v) {
  j = json{{"label", v.label()}, {"sign", sign_token(v.sign)}, {"index", v.index}, {"lambda_signed", v.value}};
}

void to_json(json& j, const ConeReport& r) {
  j = json{{"exponent", r.exponent},
           {"dim_eigenspace", r.dim_eigenspace},
           {"dim_lower", r.dim_lower},
           {"exponent_even", r.exponent_even},
           {"dim_even_and_product_even", r.dim_even_and_product_even},
           {"dim_even_and_product_odd", r.dim_even_and_product_odd},
           {"implied", r.implied ? json(to_string(*r.implied)) : json(nullptr)},
           {"actual", to_string(r.actual)},
           {"consistent", r.consistent}};
}

void to_json(json& j, const Certificate& c) {
  const auto& p = c.parameters;
  json params = json::object();
  if (p.m0 > 0) {
    params["m0"] = p.m0;
    params["sign"] = sign_token(p.sign);
  }
  if (c.kind == CertificateKind::unbounded) {
    params["scan_bound"] = p.scan_bound;
    params["subset_budget"] = p.subset_budget;
  }
  params["lambda_max"] = p.lambda_max ? json(*p.lambda_max) : json(nullptr);
  if (c.kind == CertificateKind::alternative_sum) params["candidates"] = p.candidates;

  json evidence = json::array();
  for (const auto& e : c.evidence) {
    evidence.push_back(json{{"label", e.point.label()}, {"lambda_signed", e.point.value}, {"index", e.index}});
  }
  json conditions = json::array();
  for (const auto& cond : c.conditions) {
    conditions.push_back(json{{"statement", cond.statement}, {"status", cond.status}});
  }
  j = json{{"kind", to_string(c.kind)},
           {"config", c.config},
           {"parameters", std::move(params)},
           {"subject", c.subject},
           {"evidence", std::move(evidence)},
           {"sum", c.sum ? json(*c.sum) : json(nullptr)},
           {"verdict", to_string(c.verdict)},
           {"reasoning", c.reasoning},
           {"conditions", std::move(conditions)},
           {"subsets_enumerated", c.subsets_enumerated},
           {"structural_cases", c.structural_cases},
           {"tool_version", EQBIF_VERSION_STRING},
           {"tolerances", c.tolerances}};
}

std::vector<std::string> validate_certificate_json(const json& j) {
  std::vector<std::string> errors;
  auto fail = [&](const std::string& s) { errors.push_back(s); };
  if (!j.is_object()) {
    fail("certificate must be an object");
    return errors;
  }
  for (const char* key : {"kind", "config", "subject", "evidence", "sum", "verdict", "tool_version", "tolerances"}) {
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  }
  if (!errors.empty()) return errors;

  static const std::vector<std::string> kinds = {"unbounded", "necessary_conditions", "symmetry_breaking",
                                                 "alternative_sum"};
  static const std::vector<std::string> verdicts = {"proved", "refuted", "hypothesis_not_met", "inconclusive"};
  auto in = [](const json& v, const std::vector<std::string>& vocab) {
    return v.is_string() && std::find(vocab.begin(), vocab.end(), v.get<std::string>()) != vocab.end();
  };
  auto euler_ok = [](const json& e) {
    try {
      (void)e.get<EulerElement>();
      return true;
    } catch (const std::exception&) {
      return false;
    }
  };

  if (!in(j["kind"], kinds)) fail("unknown kind");
  if (!in(j["verdict"], verdicts)) fail("unknown verdict");
  const json& config = j["config"];
  if (!config.is_object()) {
    fail("config must be an object");
  } else {
    if (!config.contains("n") || !config["n"].is_number_integer()) fail("config.n must be an integer");
    if (!config.contains("gamma") || !(config["gamma"] == "hemisphere" || config["gamma"].is_number())) {
      fail("config.gamma must be \"hemisphere\" or a number");
    }
    for (const char* key : {"p_minus", "p_plus"}) {
      if (!config.contains(key) || !config[key].is_number_unsigned()) {
        fail(std::string("config.") + key + " must be a count");
      }
    }
  }
  if (!j["subject"].is_array()) {
    fail("subject must be an array");
  } else {
    for (const json& s : j["subject"]) {
      if (!s.is_object() || !s.contains("lambda_signed") || !s["lambda_signed"].is_number()) {
        fail("subject entries need a numeric lambda_signed");
      }
    }
  }
  if (!j["evidence"].is_array()) {
    fail("evidence must be an array");
  } else {
    for (const json& e : j["evidence"]) {
      if (!e.is_object() || !e.contains("lambda_signed") || !e["lambda_signed"].is_number()) {
        fail("evidence entries need a numeric lambda_signed");
      } else if (!e.contains("index") || !euler_ok(e["index"])) {
        fail("evidence index is not an Euler ring element");
      }
    }
  }
  if (!j["sum"].is_null() && !euler_ok(j["sum"])) fail("sum must be null or an Euler ring element");
  if (!j["tool_version"].is_string()) fail("tool_version must be a string");
  if (!j["tolerances"].is_object() || !j["tolerances"].contains("signature")) {
    fail("tolerances must be an object with a signature");
  }
  return errors;
}

}  // namespace eqbif
