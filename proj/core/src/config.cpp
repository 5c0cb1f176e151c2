#include "risnoma/bench/config.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace risnoma::bench {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument("config: " + path + ": " + msg);
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

std::uint64_t as_u64(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<double> as_numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <class E>
E as_enum(const json& v, const std::string& path, const std::map<std::string, E>& names) {
  const std::string s = as_string(v, path);
  const auto it = names.find(s);
  if (it == names.end()) {
    std::string allowed;
    for (const auto& [k, _] : names) allowed += (allowed.empty() ? "" : ", ") + k;
    fail(path, "unknown value '" + s + "' (allowed: " + allowed + ")");
  }
  return it->second;
}

template <class E>
std::vector<E> as_enum_list(const json& v, const std::string& path,
                            const std::map<std::string, E>& names) {
  if (!v.is_array()) fail(path, "expected an array of strings");
  std::vector<E> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const E e = as_enum(v[i], path + "[" + std::to_string(i) + "]", names);
    for (E seen : out) {
      if (seen == e) fail(path, "duplicate entry '" + v[i].get<std::string>() + "'");
    }
    out.push_back(e);
  }
  return out;
}

using Handler = std::function<void(const json&, const std::string&)>;

void walk(const json& obj, const std::string& path, const std::map<std::string, Handler>& handlers) {
  if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string child = path.empty() ? it.key() : path + "." + it.key();
    const auto h = handlers.find(it.key());
    if (h == handlers.end()) fail(child, "unknown field");
    h->second(it.value(), child);
  }
}

const std::map<std::string, Axis> kAxes{{"TransmitPowerDbm", Axis::TransmitPowerDbm},
                                        {"TotalPowerDbm", Axis::TotalPowerDbm}};
const std::map<std::string, Metric> kMetrics{{"Outage", Metric::Outage},
                                             {"ErgodicRate", Metric::ErgodicRate},
                                             {"ThroughputDL", Metric::ThroughputDL},
                                             {"ThroughputDT", Metric::ThroughputDT}};
const std::map<std::string, Variant> kVariants{{"NOMA_pSIC", Variant::NOMA_pSIC},
                                               {"NOMA_ipSIC", Variant::NOMA_ipSIC},
                                               {"OMA", Variant::OMA},
                                               {"DoublePRIS", Variant::DoublePRIS}};
const std::map<std::string, Engine> kEngines{{"MonteCarlo", Engine::MonteCarlo},
                                             {"Analytic", Engine::Analytic},
                                             {"Asymptotic", Engine::Asymptotic}};
const std::map<std::string, FamilyParam> kFamily{{"elements", FamilyParam::Elements},
                                                 {"M", FamilyParam::M},
                                                 {"N", FamilyParam::N},
                                                 {"m_na", FamilyParam::MNa},
                                                 {"omega_ri_dbm", FamilyParam::OmegaRiDbm}};
const std::map<std::string, SicMode> kSic{{"pSIC", SicMode::Perfect}, {"ipSIC", SicMode::Imperfect}};
const std::map<std::string, NoiseNormModel> kNorm{{"paper_approx", NoiseNormModel::PaperApprox},
                                                  {"exact", NoiseNormModel::Exact}};
const std::map<std::string, RisMode> kRis{{"PRIS_ARIS", RisMode::PrisAris},
                                          {"DOUBLE_PRIS", RisMode::DoublePris}};

void parse_system(const json& j, const std::string& path, SystemConfig& c) {
  auto num = [](double& dst) { return [&dst](const json& v, const std::string& p) { dst = as_number(v, p); }; };
  auto dbm = [](double& dst) {
    return [&dst](const json& v, const std::string& p) { dst = dbm_to_mw(as_number(v, p)); };
  };
  walk(j, path,
       {{"M", [&](const json& v, const std::string& p) { c.M = as_int(v, p); }},
        {"N", [&](const json& v, const std::string& p) { c.N = as_int(v, p); }},
        {"beta", num(c.beta)},
        {"a_n", num(c.a_n)},
        {"a_m", num(c.a_m)},
        {"R_n", num(c.R_n)},
        {"R_m", num(c.R_m)},
        {"kappa_db", [&](const json& v, const std::string& p) { c.fading.kappa = db_to_linear(as_number(v, p)); }},
        {"m_na", num(c.fading.m_na)},
        {"omega_na", num(c.fading.omega_na)},
        {"sigma2_dbm", dbm(c.sigma2)},
        {"sigma_a2_dbm", dbm(c.sigma_a2)},
        {"omega_ri_dbm", dbm(c.omega_ri)},
        {"alpha", num(c.alpha)},
        {"eta_db", [&](const json& v, const std::string& p) { c.eta = db_to_linear(as_number(v, p)); }},
        {"d_h1", num(c.d_h1)},
        {"d_h2", num(c.d_h2)},
        {"d_g1", num(c.d_g1)},
        {"d_gn", num(c.d_gn)},
        {"d_gm", num(c.d_gm)},
        {"sic", [&](const json& v, const std::string& p) { c.sic = as_enum(v, p, kSic); }},
        {"noise_norm", [&](const json& v, const std::string& p) { c.noise_norm = as_enum(v, p, kNorm); }},
        {"ris_mode", [&](const json& v, const std::string& p) { c.ris_mode = as_enum(v, p, kRis); }}});
}

void parse_budget(const json& j, const std::string& path, PowerConsts& b) {
  std::set<std::string> seen;
  auto both = [&](double& dst, const std::string& stem, bool is_dbm) {
    return [&dst, &seen, stem, is_dbm](const json& v, const std::string& p) {
      if (!seen.insert(stem).second) fail(p, "give either " + stem + "_dbm or " + stem + "_mw, not both");
      const double x = as_number(v, p);
      if (!is_dbm && x < 0.0) fail(p, "must be >= 0");
      dst = is_dbm ? dbm_to_mw(x) : x;
    };
  };
  walk(j, path,
       {{"p_aris_dbm", both(b.P_aris, "p_aris", true)},
        {"p_aris_mw", both(b.P_aris, "p_aris", false)},
        {"p_sw_dbm", both(b.P_sw, "p_sw", true)},
        {"p_sw_mw", both(b.P_sw, "p_sw", false)},
        {"p_dc_dbm", both(b.P_dc, "p_dc", true)},
        {"p_dc_mw", both(b.P_dc, "p_dc", false)}});
}

void parse_sweep(const json& j, const std::string& path, SweepSpec& s) {
  bool have_points = false;
  walk(j, path,
       {{"axis", [&](const json& v, const std::string& p) { s.axis = as_enum(v, p, kAxes); }},
        {"points_dbm",
         [&](const json& v, const std::string& p) {
           if (have_points) fail(p, "give either points_dbm or range_dbm, not both");
           have_points = true;
           s.points = as_numbers(v, p);
         }},
        {"range_dbm",
         [&](const json& v, const std::string& p) {
           if (have_points) fail(p, "give either points_dbm or range_dbm, not both");
           have_points = true;
           const auto r = as_numbers(v, p);
           if (r.size() != 3 || !(r[2] > 0.0) || r[1] < r[0]) {
             fail(p, "expected [start, stop, step] with step > 0 and stop >= start");
           }
           s.points.clear();
           const auto n = static_cast<int>(std::floor((r[1] - r[0]) / r[2] + 1e-9));
           for (int i = 0; i <= n; ++i) s.points.push_back(r[0] + i * r[2]);
         }},
        {"metrics", [&](const json& v, const std::string& p) { s.metrics = as_enum_list(v, p, kMetrics); }},
        {"variants", [&](const json& v, const std::string& p) { s.variants = as_enum_list(v, p, kVariants); }},
        {"engines", [&](const json& v, const std::string& p) { s.engines = as_enum_list(v, p, kEngines); }},
        {"trials", [&](const json& v, const std::string& p) { s.trials = as_u64(v, p); }},
        {"seed", [&](const json& v, const std::string& p) { s.seed = as_u64(v, p); }},
        {"workers", [&](const json& v, const std::string& p) { s.workers = as_int(v, p); }},
        {"dn_rate",
         [&](const json& v, const std::string& p) {
           s.dn_rate_conditional =
               as_enum(v, p, std::map<std::string, bool>{{"unconditional", false}, {"conditional", true}});
         }},
        {"family", [&](const json& v, const std::string& p) {
           s.family = Family{};
           walk(v, p,
                {{"param", [&](const json& x, const std::string& q) { s.family.param = as_enum(x, q, kFamily); }},
                 {"values", [&](const json& x, const std::string& q) { s.family.values = as_numbers(x, q); }}});
           if (s.family.param == FamilyParam::None) fail(p, "family needs a param");
           if (s.family.values.empty()) fail(p + ".values", "must not be empty");
         }}});
}

void parse_quadrature(const json& j, const std::string& path, QuadConfig& q) {
  walk(j, path,
       {{"U", [&](const json& v, const std::string& p) { q.U = as_int(v, p); }},
        {"I", [&](const json& v, const std::string& p) { q.I = as_int(v, p); }},
        {"P", [&](const json& v, const std::string& p) { q.P = as_int(v, p); }},
        {"K", [&](const json& v, const std::string& p) { q.K = as_int(v, p); }},
        {"mu_b", [&](const json& v, const std::string& p) { q.mu_b = as_number(v, p); }},
        {"eps_2f1", [&](const json& v, const std::string& p) { q.eps_2f1 = as_number(v, p); }}});
}

void parse_validation(const json& j, const std::string& path, ValidationSettings& vs) {
  auto num = [](double& dst) { return [&dst](const json& v, const std::string& p) { dst = as_number(v, p); }; };
  walk(j, path,
       {{"slope_window_dbm",
         [&](const json& v, const std::string& p) {
           const auto w = as_numbers(v, p);
           if (w.size() != 2 || !(w[1] > w[0])) fail(p, "expected [lo, hi] with hi > lo");
           vs.slope_lo_dbm = w[0];
           vs.slope_hi_dbm = w[1];
         }},
        {"slope_step_db", num(vs.slope_step_db)},
        {"outage_rel_tol", num(vs.outage_rel_tol)},
        {"outage_sigmas", num(vs.outage_sigmas)},
        {"rate_rel_tol", num(vs.rate_rel_tol)},
        {"rate_sigmas", num(vs.rate_sigmas)},
        {"diversity_tol", num(vs.diversity_tol)},
        {"floor_slope_max", num(vs.floor_slope_max)},
        {"rate_slope_tol", num(vs.rate_slope_tol)}});
}

SweepSpec default_spec() {
  SweepSpec s;
  for (double p = -10.0; p <= 30.0; p += 5.0) s.points.push_back(p);
  s.metrics = {Metric::Outage};
  s.variants = {Variant::NOMA_pSIC, Variant::NOMA_ipSIC, Variant::OMA};
  s.engines = {Engine::MonteCarlo, Engine::Analytic};
  return s;
}

SweepSpec parse_json(const json& doc) {
  SweepSpec s = default_spec();
  walk(doc, "",
       {{"name", [&](const json& v, const std::string& p) { s.name = as_string(v, p); }},
        {"system", [&](const json& v, const std::string& p) { parse_system(v, p, s.base); }},
        {"power_budget", [&](const json& v, const std::string& p) { parse_budget(v, p, s.budget); }},
        {"sweep", [&](const json& v, const std::string& p) { parse_sweep(v, p, s); }},
        {"quadrature", [&](const json& v, const std::string& p) { parse_quadrature(v, p, s.qc); }},
        {"validation", [&](const json& v, const std::string& p) { parse_validation(v, p, s.validation); }}});
  validate_spec(s);
  return s;
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + origin + ": " + e.what());
  }
}

template <class E>
std::string name_of(const std::map<std::string, E>& names, E e) {
  for (const auto& [k, v] : names) {
    if (v == e) return k;
  }
  return "?";
}

}  // namespace

void validate_spec(const SweepSpec& s) {
  if (s.points.empty()) fail("sweep.points_dbm", "must not be empty");
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    if (!(s.points[i] > s.points[i - 1])) fail("sweep.points_dbm", "must be strictly increasing");
  }
  if (s.metrics.empty()) fail("sweep.metrics", "need at least one metric");
  if (s.variants.empty()) fail("sweep.variants", "need at least one variant");
  if (s.engines.empty()) fail("sweep.engines", "need at least one engine");
  if (s.trials < 1) fail("sweep.trials", "must be >= 1");
  if (s.workers < 0) fail("sweep.workers", "must be >= 0");
  try {
    check_quad(s.qc);
  } catch (const std::exception& e) {
    fail("quadrature", e.what());
  }
  try {
    validate_config(s.base);
  } catch (const std::exception& e) {
    fail("system", e.what());
  }
  for (double v : s.family.values) {
    const bool count = s.family.param == FamilyParam::Elements || s.family.param == FamilyParam::M ||
                       s.family.param == FamilyParam::N;
    if (count && (v < 1.0 || v != std::floor(v))) fail("sweep.family.values", "element counts must be positive integers");
    if (s.family.param == FamilyParam::MNa && v < 0.5) fail("sweep.family.values", "m_na must be >= 0.5");
  }
}

SweepSpec parse_config(const std::string& json_text) {
  return parse_json(parse_text(json_text, "<text>"));
}

SweepSpec load_config(const std::string& path, const std::optional<std::string>& preset) {
  json doc = json::object();
  if (preset) doc = parse_text(preset_json(*preset), "preset " + *preset);
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    doc.merge_patch(parse_text(ss.str(), path));
  }
  return parse_json(doc);
}

std::string spec_to_json(const SweepSpec& s) {
  const SystemConfig& c = s.base;
  json doc;
  if (!s.name.empty()) doc["name"] = s.name;
  doc["system"] = {
      {"M", c.M},
      {"N", c.N},
      {"beta", c.beta},
      {"a_n", c.a_n},
      {"a_m", c.a_m},
      {"R_n", c.R_n},
      {"R_m", c.R_m},
      {"kappa_db", 10.0 * std::log10(c.fading.kappa)},
      {"m_na", c.fading.m_na},
      {"omega_na", c.fading.omega_na},
      {"sigma2_dbm", mw_to_dbm(c.sigma2)},
      {"sigma_a2_dbm", mw_to_dbm(c.sigma_a2)},
      {"omega_ri_dbm", mw_to_dbm(c.omega_ri)},
      {"alpha", c.alpha},
      {"eta_db", 10.0 * std::log10(c.eta)},
      {"d_h1", c.d_h1},
      {"d_h2", c.d_h2},
      {"d_g1", c.d_g1},
      {"d_gn", c.d_gn},
      {"d_gm", c.d_gm},
      {"sic", name_of(kSic, c.sic)},
      {"noise_norm", name_of(kNorm, c.noise_norm)},
      {"ris_mode", name_of(kRis, c.ris_mode)}};
  doc["power_budget"] = {{"p_aris_mw", s.budget.P_aris}, {"p_sw_mw", s.budget.P_sw}, {"p_dc_mw", s.budget.P_dc}};
  json sweep;
  sweep["axis"] = name_of(kAxes, s.axis);
  sweep["points_dbm"] = s.points;
  for (Metric m : s.metrics) sweep["metrics"].push_back(name_of(kMetrics, m));
  for (Variant v : s.variants) sweep["variants"].push_back(name_of(kVariants, v));
  for (Engine e : s.engines) sweep["engines"].push_back(name_of(kEngines, e));
  sweep["trials"] = s.trials;
  sweep["seed"] = s.seed;
  sweep["workers"] = s.workers;
  sweep["dn_rate"] = s.dn_rate_conditional ? "conditional" : "unconditional";
  if (s.family.param != FamilyParam::None) {
    sweep["family"] = {{"param", name_of(kFamily, s.family.param)}, {"values", s.family.values}};
  }
  doc["sweep"] = sweep;
  doc["quadrature"] = {{"U", s.qc.U}, {"I", s.qc.I}, {"P", s.qc.P}, {"K", s.qc.K},
                       {"mu_b", s.qc.mu_b}, {"eps_2f1", s.qc.eps_2f1}};
  const ValidationSettings& v = s.validation;
  doc["validation"] = {{"slope_window_dbm", {v.slope_lo_dbm, v.slope_hi_dbm}},
                       {"slope_step_db", v.slope_step_db},
                       {"outage_rel_tol", v.outage_rel_tol},
                       {"outage_sigmas", v.outage_sigmas},
                       {"rate_rel_tol", v.rate_rel_tol},
                       {"rate_sigmas", v.rate_sigmas},
                       {"diversity_tol", v.diversity_tol},
                       {"floor_slope_max", v.floor_slope_max},
                       {"rate_slope_tol", v.rate_slope_tol}};
  return doc.dump(2) + "\n";
}

const char* to_string(Axis a) { return a == Axis::TransmitPowerDbm ? "TransmitPowerDbm" : "TotalPowerDbm"; }

const char* to_string(Metric m) {
  switch (m) {
    case Metric::Outage: return "Outage";
    case Metric::ErgodicRate: return "ErgodicRate";
    case Metric::ThroughputDL: return "ThroughputDL";
    case Metric::ThroughputDT: return "ThroughputDT";
  }
  return "?";
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::NOMA_pSIC: return "NOMA_pSIC";
    case Variant::NOMA_ipSIC: return "NOMA_ipSIC";
    case Variant::OMA: return "OMA";
    case Variant::DoublePRIS: return "DoublePRIS";
  }
  return "?";
}

const char* to_string(Engine e) {
  switch (e) {
    case Engine::MonteCarlo: return "MonteCarlo";
    case Engine::Analytic: return "Analytic";
    case Engine::Asymptotic: return "Asymptotic";
  }
  return "?";
}

const char* to_string(FamilyParam f) {
  switch (f) {
    case FamilyParam::None: return "none";
    case FamilyParam::Elements: return "elements";
    case FamilyParam::M: return "M";
    case FamilyParam::N: return "N";
    case FamilyParam::MNa: return "m_na";
    case FamilyParam::OmegaRiDbm: return "omega_ri_dbm";
  }
  return "?";
}

}  // namespace risnoma::bench
