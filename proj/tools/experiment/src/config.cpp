#include "fraclab/experiment/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "fraclab/error.hpp"
#include "fraclab/grid.hpp"
#include "fraclab/oracle.hpp"

namespace fraclab::experiment {

using json = nlohmann::json;

namespace {

constexpr Kind kKinds[] = {Kind::oracle, Kind::linear, Kind::sqg,
                           Kind::ks,     Kind::besov,  Kind::selftest};

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  for (std::size_t i = 0; i < offset; ++i) line += text[i] == '\n';
  return line;
}

// Lines on which `"key"` appears as an object key.
std::vector<int> key_lines(std::string_view text, const std::string& key) {
  std::vector<int> lines;
  const std::string quoted = json(key).dump();
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') lines.push_back(line_of_offset(text, pos));
    pos += quoted.size();
  }
  return lines;
}

std::string where(std::string_view text, const std::string& key) {
  const auto lines = key_lines(text, key);
  if (lines.empty()) return "";
  return " (line " + std::to_string(lines.front()) + ")";
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void restrict_keys(const json& object, const std::string& scope,
                     std::initializer_list<const char*> allowed) const {
    if (!object.is_object()) throw ConfigError("'" + scope + "' must be an object");
    for (const auto& item : object.items()) {
      bool known = false;
      for (const char* name : allowed) known = known || item.key() == name;
      if (!known) {
        throw ConfigError("unknown key '" + item.key() + "' in " + scope + where(text_, item.key()));
      }
    }
  }

  template <class T>
  void read(const json& object, const char* key, T& out) const {
    if (!object.contains(key)) return;
    try {
      out = object.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("key '") + key + "' has the wrong type" + where(text_, key));
    }
  }

  void read_number(const json& object, const char* key, double& out) const {
    if (!object.contains(key)) return;
    const json& v = object.at(key);
    if (!v.is_number()) {
      throw ConfigError(std::string("key '") + key + "' must be a number" + where(text_, key));
    }
    out = v.get<double>();
  }

  void read_optional_int(const json& object, const char* key, std::optional<int>& out) const {
    if (!object.contains(key)) return;
    const json& v = object.at(key);
    if (v.is_null()) {
      out.reset();
    } else if (v.is_number_integer()) {
      out = v.get<int>();
    } else {
      throw ConfigError(std::string("key '") + key + "' must be an integer or null" +
                        where(text_, key));
    }
  }

  // Located error for a range violation on `key`.
  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    throw ConfigError(message + where(text_, key));
  }

 private:
  std::string_view text_;
};

json parse_strict(std::string_view text) {
  // Duplicate keys are caught per object while parsing; nlohmann would
  // otherwise keep the last value silently.
  std::vector<std::set<std::string>> seen;
  std::string duplicate;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        seen.emplace_back();
        break;
      case json::parse_event_t::object_end:
        seen.pop_back();
        break;
      case json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!seen.back().insert(key).second && duplicate.empty()) duplicate = key;
        break;
      }
      default:
        break;
    }
    return true;
  };
  json document;
  try {
    document = json::parse(text.begin(), text.end(), callback, true, true);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << "config parse error at line " << line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)
        << ": " << e.what();
    throw ConfigError(msg.str());
  }
  if (!duplicate.empty()) {
    std::ostringstream msg;
    msg << "duplicate key '" << duplicate << "'";
    const auto lines = key_lines(text, duplicate);
    if (!lines.empty()) {
      msg << " at lines";
      for (std::size_t i = 0; i < lines.size(); ++i) msg << (i ? ", " : " ") << lines[i];
    }
    throw ConfigError(msg.str());
  }
  if (!document.is_object()) throw ConfigError("config must be a JSON object");
  return document;
}

// Window for torus runs: [max(1, 10 first_sample), 0.1 xi_min^-alpha].
FitWindow torus_window(double length, double alpha, double first_sample) {
  const double xi_min = 2.0 * std::numbers::pi / length;
  return {std::max(1.0, 10.0 * first_sample), 0.1 * std::pow(xi_min, -alpha)};
}

ClaimKind default_claim(Kind kind) {
  switch (kind) {
    case Kind::sqg:
      return ClaimKind::sqg;
    case Kind::ks:
      return ClaimKind::keller_segel;
    default:
      return ClaimKind::linear;
  }
}

bool is_grid_run(Kind kind) { return kind == Kind::linear || kind == Kind::sqg || kind == Kind::ks; }

void check_density(const OracleDensity& d) {
  try {
    if (d.form == "ball_indicator") {
      (void)RadialSpectralDensity::ball_indicator(d.dimension, d.radius);
    } else if (d.form == "gaussian") {
      (void)RadialSpectralDensity::gaussian(d.dimension, d.sigma);
    } else if (d.form == "power_law") {
      (void)RadialSpectralDensity::power_law(d.dimension, d.exponent, d.r_lo, d.r_hi);
    } else {
      throw ConfigError("density form must be ball_indicator, gaussian or power_law (got '" +
                        d.form + "')");
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::oracle:
      return "oracle";
    case Kind::linear:
      return "linear";
    case Kind::sqg:
      return "sqg";
    case Kind::ks:
      return "ks";
    case Kind::besov:
      return "besov";
    case Kind::selftest:
      return "selftest";
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : kKinds) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) +
                    "' (expected oracle, linear, sqg, ks, besov or selftest)");
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.kind == b.kind && a.claim == b.claim && a.n == b.n && a.length == b.length &&
         a.initial == b.initial && a.density == b.density && a.time == b.time &&
         a.window.lo == b.window.lo && a.window.hi == b.window.hi &&
         a.smallness_budget == b.smallness_budget && a.tolerance == b.tolerance &&
         a.output_dir == b.output_dir && a.input == b.input && a.besov == b.besov;
}

ExperimentConfig default_config(Kind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.claim.kind = default_claim(kind);
  c.initial.envelope_exponent = c.claim.s - 1.0;
  if (kind == Kind::oracle) {
    c.time = {0.05, 1e4, 10.0, 40};
    c.window = {c.time.first_sample, c.time.final_time};
    c.tolerance = 0.02;
  } else if (is_grid_run(kind)) {
    c.window = torus_window(c.length, c.claim.alpha, c.time.first_sample);
    c.time.final_time = c.window.hi;
    // The linear flow is applied exactly, so one step per sample interval.
    c.time.dt = kind == Kind::linear ? c.time.final_time : 0.05;
    c.tolerance = 0.2;
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  try {
    c.claim.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  switch (c.kind) {
    case Kind::oracle:
    case Kind::linear:
      if (c.claim.kind != ClaimKind::linear) {
        throw ConfigError(std::string(to_string(c.kind)) + " experiments require a linear claim");
      }
      break;
    case Kind::sqg:
      if (c.claim.kind != ClaimKind::sqg && c.claim.kind != ClaimKind::sqg_lebesgue) {
        throw ConfigError("sqg experiments require an sqg or sqg_lebesgue claim");
      }
      break;
    case Kind::ks:
      if (c.claim.kind != ClaimKind::keller_segel) {
        throw ConfigError("ks experiments require a keller_segel claim");
      }
      break;
    case Kind::besov:
      try {
        c.besov.validate();
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
      }
      break;
    case Kind::selftest:
      break;
  }
  if (c.kind == Kind::oracle) check_density(c.density);
  if (is_grid_run(c.kind)) {
    try {
      (void)Grid2D(c.n, c.length);
      c.initial.validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
    if (!(c.time.dt > 0.0 && std::isfinite(c.time.dt))) throw ConfigError("time.dt must be > 0");
    if (!(c.smallness_budget > 0.0)) throw ConfigError("smallness_budget must be > 0");
  }
  if (c.kind == Kind::oracle || is_grid_run(c.kind)) {
    if (!(c.time.first_sample > 0.0 && c.time.final_time > c.time.first_sample &&
          std::isfinite(c.time.final_time))) {
      throw ConfigError("time schedule requires 0 < first_sample < final");
    }
    if (c.time.per_decade < 1) throw ConfigError("time.per_decade must be >= 1");
    if (!(c.window.lo < c.window.hi)) throw ConfigError("window requires lo < hi");
    if (!(c.tolerance > 0.0 && std::isfinite(c.tolerance))) {
      throw ConfigError("tolerance must be > 0");
    }
  }
}

ExperimentConfig parse_config(std::string_view text, std::optional<Kind> kind_hint) {
  const json doc = parse_strict(text);
  const Reader in(text);
  in.restrict_keys(doc, "config",
                   {"kind", "claim", "alpha", "s", "ell", "p", "r", "grid", "initial", "seed",
                    "density", "time", "window", "smallness_budget", "tolerance", "output_dir",
                    "input", "besov"});

  std::optional<Kind> kind = kind_hint;
  if (doc.contains("kind")) {
    std::string name;
    in.read(doc, "kind", name);
    const Kind declared = parse_kind(name);
    if (kind && *kind != declared) {
      in.fail("kind", "config kind '" + name + "' does not match the subcommand '" +
                          std::string(to_string(*kind)) + "'");
    }
    kind = declared;
  }
  if (!kind) throw ConfigError("config has no 'kind' and none was given on the command line");

  ExperimentConfig c = default_config(*kind);

  if (doc.contains("claim")) {
    std::string name;
    in.read(doc, "claim", name);
    try {
      c.claim.kind = parse_claim_kind(name);
    } catch (const InvalidArgument& e) {
      in.fail("claim", e.what());
    }
  }
  in.read_number(doc, "alpha", c.claim.alpha);
  in.read_number(doc, "s", c.claim.s);
  in.read_number(doc, "ell", c.claim.ell);
  in.read_number(doc, "p", c.claim.p);
  in.read_number(doc, "r", c.claim.r);

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    in.restrict_keys(g, "grid", {"n", "length"});
    in.read(g, "n", c.n);
    in.read_number(g, "length", c.length);
  }

  c.initial.envelope_exponent = c.claim.s - 1.0;
  if (doc.contains("initial")) {
    const json& i = doc.at("initial");
    in.restrict_keys(i, "initial", {"amplitude", "j_lo", "j_hi", "envelope_exponent", "cutoff"});
    in.read_number(i, "amplitude", c.initial.amplitude);
    in.read_optional_int(i, "j_lo", c.initial.j_lo);
    in.read_optional_int(i, "j_hi", c.initial.j_hi);
    in.read_number(i, "envelope_exponent", c.initial.envelope_exponent);
    in.read_number(i, "cutoff", c.initial.cutoff);
  }
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      in.fail("seed", "seed must be a nonnegative integer");
    }
    c.initial.seed = v.get<std::uint64_t>();
  }

  if (doc.contains("density")) {
    const json& d = doc.at("density");
    in.restrict_keys(d, "density",
                     {"form", "dimension", "radius", "sigma", "exponent", "r_lo", "r_hi"});
    in.read(d, "form", c.density.form);
    in.read(d, "dimension", c.density.dimension);
    in.read_number(d, "radius", c.density.radius);
    in.read_number(d, "sigma", c.density.sigma);
    in.read_number(d, "exponent", c.density.exponent);
    in.read_number(d, "r_lo", c.density.r_lo);
    in.read_number(d, "r_hi", c.density.r_hi);
  }

  // Time and window defaults depend on alpha and the grid for torus runs.
  if (is_grid_run(c.kind)) {
    c.window = torus_window(c.length, c.claim.alpha, c.time.first_sample);
    c.time.final_time = c.window.hi;
  }
  bool dt_given = false, final_given = false, first_given = false;
  if (doc.contains("time")) {
    const json& t = doc.at("time");
    in.restrict_keys(t, "time", {"dt", "final", "first_sample", "per_decade"});
    dt_given = t.contains("dt");
    final_given = t.contains("final");
    first_given = t.contains("first_sample");
    in.read_number(t, "dt", c.time.dt);
    in.read_number(t, "final", c.time.final_time);
    in.read_number(t, "first_sample", c.time.first_sample);
    in.read(t, "per_decade", c.time.per_decade);
  }
  if (is_grid_run(c.kind)) {
    if (first_given) {
      c.window = torus_window(c.length, c.claim.alpha, c.time.first_sample);
      if (!final_given) c.time.final_time = c.window.hi;
    }
    if (c.kind == Kind::linear && !dt_given) c.time.dt = c.time.final_time;
  } else if (c.kind == Kind::oracle) {
    c.window = {c.time.first_sample, c.time.final_time};
  }
  if (doc.contains("window")) {
    const json& w = doc.at("window");
    in.restrict_keys(w, "window", {"lo", "hi"});
    in.read_number(w, "lo", c.window.lo);
    in.read_number(w, "hi", c.window.hi);
  }

  in.read_number(doc, "smallness_budget", c.smallness_budget);
  in.read_number(doc, "tolerance", c.tolerance);
  in.read(doc, "output_dir", c.output_dir);
  in.read(doc, "input", c.input);
  if (doc.contains("besov")) {
    const json& b = doc.at("besov");
    in.restrict_keys(b, "besov", {"s", "p", "r"});
    in.read_number(b, "s", c.besov.s);
    auto read_index = [&](const char* key, double& out) {
      if (!b.contains(key)) return;
      if (b.at(key).is_string() && b.at(key).get<std::string>() == "inf") {
        out = kInfinity;
      } else {
        in.read_number(b, key, out);
      }
    };
    read_index("p", c.besov.p);
    read_index("r", c.besov.r);
  }

  try {
    validate(c);
  } catch (const ConfigError& e) {
    // Attach a location when the message names a top-level claim parameter.
    const std::string msg = e.what();
    for (const char* key : {"alpha", "ell", "s", "p", "r"}) {
      if (doc.contains(key) && msg.find(std::string(key) + " ") != std::string::npos) {
        in.fail(key, msg);
      }
    }
    throw;
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<Kind> kind_hint) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return parse_config(buffer.str(), kind_hint);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  using ojson = nlohmann::ordered_json;
  auto index = [](double v) { return std::isinf(v) ? ojson("inf") : ojson(v); };
  auto optional_int = [](const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); };
  ojson out;
  out["kind"] = to_string(c.kind);
  out["claim"] = to_string(c.claim.kind);
  out["alpha"] = c.claim.alpha;
  out["s"] = c.claim.s;
  out["ell"] = c.claim.ell;
  out["p"] = c.claim.p;
  out["r"] = c.claim.r;
  out["grid"] = {{"n", c.n}, {"length", c.length}};
  out["initial"] = {{"amplitude", c.initial.amplitude},
                    {"j_lo", optional_int(c.initial.j_lo)},
                    {"j_hi", optional_int(c.initial.j_hi)},
                    {"envelope_exponent", c.initial.envelope_exponent},
                    {"cutoff", c.initial.cutoff}};
  out["seed"] = c.initial.seed;
  out["density"] = {{"form", c.density.form},         {"dimension", c.density.dimension},
                    {"radius", c.density.radius},     {"sigma", c.density.sigma},
                    {"exponent", c.density.exponent}, {"r_lo", c.density.r_lo},
                    {"r_hi", c.density.r_hi}};
  out["time"] = {{"dt", c.time.dt},
                 {"final", c.time.final_time},
                 {"first_sample", c.time.first_sample},
                 {"per_decade", c.time.per_decade}};
  out["window"] = {{"lo", c.window.lo}, {"hi", c.window.hi}};
  out["smallness_budget"] = c.smallness_budget;
  out["tolerance"] = c.tolerance;
  out["output_dir"] = c.output_dir;
  out["input"] = c.input;
  out["besov"] = {{"s", c.besov.s}, {"p", index(c.besov.p)}, {"r", index(c.besov.r)}};
  return out;
}

std::vector<double> sample_times(const ExperimentConfig& c) {
  return log_spaced_times(c.time.first_sample, c.time.final_time, c.time.per_decade);
}

RunConfig make_run_config(const ExperimentConfig& c) {
  RunConfig run;
  run.grid = Grid2D(c.n, c.length);
  run.alpha = c.claim.alpha;
  run.dt = c.time.dt;
  run.final_time = c.time.final_time;
  run.initial = c.initial;
  run.sample_times = sample_times(c);
  run.smallness_budget = c.smallness_budget;
  const double p = c.claim.p;
  switch (c.kind) {
    case Kind::sqg:
      run.smallness_norm = {1.0 + 2.0 / p - c.claim.alpha, p, 1.0};
      break;
    case Kind::ks:
      run.smallness_norm = {-1.0 + 2.0 / p, p, 1.0};
      break;
    default:
      // Linear data are sized in the space they are assumed to lie in.
      run.smallness_norm = {-c.claim.s, p, kInfinity};
      run.smallness_budget = std::max(c.smallness_budget, c.initial.amplitude);
      break;
  }
  if (c.claim.kind == ClaimKind::sqg_lebesgue) {
    run.lebesgue_norms = {c.claim.r};
  } else {
    const double decay_index = c.claim.kind == ClaimKind::linear ? p : c.claim.r;
    run.norms.push_back({c.claim.ell, decay_index, 1.0});
  }
  run.norms.push_back({-c.claim.s, p, kInfinity});
  return run;
}

}  // namespace fraclab::experiment
