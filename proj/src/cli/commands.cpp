#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "germforge/cli.hpp"
#include "germforge/error.hpp"
#include "germforge/oracle.hpp"
#include "germforge/problem.hpp"

namespace germforge::cli {

namespace {

using json = nlohmann::json;

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json dim_json(const QuotientDim& d) { return d.finite ? json(d.value) : json("infinite"); }

json ideal_json(const Ideal& I) {
  json out = json::array();
  for (const auto& g : I.generators()) out.push_back(g.to_string());
  return out;
}

json field_json(const VectorField& X) {
  json out = json::array();
  for (const auto& a : X) out.push_back(a.is_zero() ? std::string("0") : a.to_string());
  return out;
}

json module_json(const VectorFieldModule& M) {
  json out = json::array();
  for (const auto& X : M.generators()) out.push_back(field_json(X));
  return out;
}

/// A precondition failure that is not an engine error (bad option values).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::GenericitySuspect:
    case ErrorCode::RadicalUnavailable:
    case ErrorCode::PositiveDimensionalCriticalLocus:
    case ErrorCode::NonrationalPoints:
      return 3;
    default:
      return 2;
  }
}

class Context {
 public:
  Context(const Invocation& inv, const ProblemFile* file) : inv_(inv), file_(file) {}

  /// flag, then file option, then default
  std::string option(const std::string& key, const std::string& fallback) const {
    if (auto it = inv_.flags.find(key); it != inv_.flags.end()) return it->second;
    if (file_)
      if (auto it = file_->options.find(key); it != file_->options.end()) return it->second;
    return fallback;
  }
  bool given(const std::string& key) const {
    return inv_.flags.count(key) || (file_ && file_->options.count(key));
  }
  bool boolean(const std::string& key) const {
    auto v = option(key, "false");
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("option '" + key + "' expects true or false, got '" + v + "'");
  }
  int integer(const std::string& key, int fallback, int min) const {
    auto v = option(key, std::to_string(fallback));
    int out = 0;
    try {
      std::size_t used = 0;
      out = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw UsageError("option '" + key + "' expects an integer, got '" + v + "'");
    }
    if (out < min) throw UsageError("option '" + key + "' must be at least " + std::to_string(min));
    return out;
  }
  std::string choice(const std::string& key, const std::string& fallback, std::initializer_list<const char*> allowed) const {
    auto v = option(key, fallback);
    for (auto a : allowed)
      if (v == a) return v;
    std::string msg = "option '" + key + "' must be one of";
    for (auto a : allowed) msg += std::string(" ") + a;
    throw UsageError(msg + ", got '" + v + "'");
  }
  std::vector<std::uint64_t> seeds() const {
    std::string v;
    if (inv_.flags.count("seeds")) {
      v = inv_.flags.at("seeds");
    } else if (!inv_.env_seeds.empty()) {
      v = inv_.env_seeds;
    } else {
      v = option("seeds", "11,13");
    }
    std::vector<std::uint64_t> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UsageError("seeds must be a comma-separated list of non-negative integers, got '" + v + "'");
      out.push_back(std::stoull(item));
    }
    if (out.empty()) throw UsageError("at least one seed is required");
    return out;
  }

  template <class T>
  const T& pick(const std::map<std::string, T>& table, const std::vector<std::string>& order, const std::string& key,
                const std::string& conventional, const char* what) const {
    std::string name;
    if (given(key)) {
      name = option(key, "");
    } else if (order.size() == 1) {
      name = order.front();
    } else if (table.count(conventional)) {
      name = conventional;
    } else if (order.empty()) {
      throw Error(ErrorCode::UnknownName, std::string("the problem declares no ") + what);
    } else {
      throw Error(ErrorCode::UnknownName,
                  std::string("several ") + what + "s declared; choose one with --" + key);
    }
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorCode::UnknownName, std::string("no ") + what + " named '" + name + "'");
    used_[key] = name;
    return it->second;
  }
  const Ideal& ideal() const { return pick(file_->ideals, file_->ideal_names, "ideal", "I", "ideal"); }
  const Polynomial& poly() const { return pick(file_->polys, file_->poly_names, "poly", "f", "poly"); }
  const Unfolding& unfolding() const {
    return pick(file_->unfoldings, file_->unfolding_names, "unfolding", "F", "unfolding");
  }
  const Ideal& subideal() const {
    if (!given("subideal")) throw UsageError("--theta-mode via-subideal needs --subideal naming I'");
    auto name = option("subideal", "");
    auto it = file_->ideals.find(name);
    if (it == file_->ideals.end()) throw Error(ErrorCode::UnknownName, "no ideal named '" + name + "'");
    used_["subideal"] = name;
    return it->second;
  }

  RadicalMode radical_mode() const {
    bool assume = boolean("assume-reduced");
    bool saturate = boolean("saturate");
    if (assume && saturate) throw UsageError("--assume-reduced and --saturate exclude each other");
    if (assume) return RadicalMode::AssumeReduced;
    if (saturate) return RadicalMode::Saturation;
    return RadicalMode::Radical;
  }

  const std::map<std::string, std::string>& used() const { return used_; }

 private:
  const Invocation& inv_;
  const ProblemFile* file_;
  mutable std::map<std::string, std::string> used_;
};

struct Result {
  json results = json::object();
  std::vector<std::string> warnings;
  int exit_code = 0;
};

void warn(Result& r, const std::string& w) {
  if (std::find(r.warnings.begin(), r.warnings.end(), w) == r.warnings.end()) r.warnings.push_back(w);
}

/// Θ in effect for tangent computations, with the ideal it is applied to.
VectorFieldModule theta_for(const Context& ctx, const Ideal& I, bool vanishing, Result& r) {
  auto mode = ctx.choice("theta-mode", "direct", {"direct", "via-subideal"});
  if (mode == "direct") return vanishing ? theta_vanishing(I) : theta_preserving(I);
  const Ideal& sub = ctx.subideal();
  if (!sub.contains(I)) throw Error(ErrorCode::PreconditionViolated, "the ideal is not contained in the subideal I'");
  warn(r, "THETA_VIA_SUBIDEAL");
  return vanishing ? theta_vanishing(sub) : theta_preserving(sub);
}

QuotientDim codim_with(const Polynomial& f, const Ideal& I, const Ideal& tau) {
  if (!I.contains(f)) throw Error(ErrorCode::FNotInIdeal, "f is not in I");
  if (!I.contains(tau)) throw Error(ErrorCode::PreconditionViolated, "the tangent ideal is not contained in I");
  return relative_quotient_dimension(I, tau);
}

void cmd_codim(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto theta_e = theta_for(ctx, I, false, r);
  auto theta = theta_for(ctx, I, true, r);
  auto tau_e = tangent_ideal(f, theta_e);
  auto c_ext = codim_with(f, I, tau_e);
  auto c = codim_with(f, I, tangent_ideal(f, theta));
  r.results["c_ext"] = dim_json(c_ext);
  r.results["c"] = dim_json(c);
  r.results["tau_ext"] = ideal_json(tau_e);
  r.results["milnor"] = dim_json(milnor_number(f.embed(I.ring())));
}

void cmd_tangent(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto tau = tangent_ideal(f, theta_for(ctx, I, false, r));
  r.results["tau_ext"] = ideal_json(tau);
  json sb = json::array();
  for (const auto& g : tau.standard_basis_polys()) sb.push_back(g.to_string());
  r.results["standard_basis"] = sb;
  r.results["colength"] = dim_json(quotient_dimension(tau));
  r.results["contained_in_ideal"] = I.contains(tau);
}

void cmd_theta(const Context& ctx, Result& r) {
  const auto& I = ctx.ideal();
  auto pres = theta_for(ctx, I, false, r);
  auto van = theta_for(ctx, I, true, r);
  r.results["preserving"] = module_json(pres);
  r.results["vanishing"] = module_json(van);
  r.results["variables"] = I.ring()->names();
}

void cmd_primitive(const Context& ctx, Result& r) {
  const auto& I = ctx.ideal();
  int N = ctx.integer("trunc", 6, 1);
  auto P = primitive_ideal(I, N);
  r.results["generators"] = ideal_json(P.ideal);
  r.results["truncation"] = P.truncation;
  r.results["matches_square"] = P.matches_square ? json(*P.matches_square) : json(nullptr);
  warn(r, "TRUNCATED_MODULO_M^" + std::to_string(P.truncation + 1));
}

void cmd_versal_check(const Context& ctx, Result& r) {
  const auto& F = ctx.unfolding();
  const auto& I = ctx.ideal();
  auto Ib = Ideal(F.base_ring(), [&] {
    std::vector<Polynomial> g;
    for (const auto& p : I.generators()) g.push_back(p.embed(F.base_ring()));
    return g;
  }(), I.order());
  r.results["versal"] = versality_check(F, Ib);
  r.results["parameters"] = F.parameter_count();
}

void cmd_versal_build(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto F = build_versal_unfolding(f, I);
  json dirs = json::array();
  std::vector<std::string> params;
  for (std::size_t i = 0; i < F.parameter_count(); ++i) {
    dirs.push_back(F.parameter_derivative(i).to_string());
    params.push_back(F.total_ring()->name(F.parameters()[i]));
  }
  r.results["parameters"] = params;
  r.results["directions"] = dirs;
  r.results["unfolding"] = F.polynomial().to_string();
  std::string decl = "unfolding F params";
  for (const auto& p : params) decl += " " + p;
  r.results["declaration"] = decl + " = " + F.polynomial().to_string() + ";";
}

void cmd_determinacy(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  r.results["bound"] = determinacy_bound(f, I);
  r.results["c_ext"] = dim_json(extended_codim(f, I).value);
}

void cmd_locus(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto L = positive_codim_locus(f, I);
  r.results["generators"] = ideal_json(L);
  r.results["empty"] = L.is_unit();
  r.results["dimension"] = L.is_zero() ? static_cast<int>(L.nvars()) : krull_dimension(L);
  r.results["contains_origin"] = !L.with_order(MonomialOrder::local()).is_unit();
}

void cmd_classify(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& J = ctx.ideal();
  auto c = classify_Ddk(f, J);
  r.results["verdict"] = verdict_name(c.verdict);
  r.results["d"] = c.d;
  r.results["k"] = c.k;
  json forms = json::array();
  for (const auto& l : c.forms) forms.push_back(l.to_string());
  r.results["forms"] = forms;
}

void cmd_morse(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto method = ctx.choice("method", "jet", {"jet", "oracle", "both"});
  std::optional<std::size_t> jet, oracle;
  if (method != "oracle") {
    auto mode = ctx.radical_mode();
    auto jc = jet_context(I, 1);
    auto M = morse_component_ideal(jc, mode);
    for (const auto& n : M.notes) warn(r, n);
    if (mode == RadicalMode::AssumeReduced) warn(r, "ASSUMED_REDUCED");
    r.results["radical_mode"] = radical_mode_name(mode);
    r.results["certified_reduced"] = M.certified_reduced;
    jet = morse_number(f, I, MorseMethod::Jet, mode);
    r.results["jet"] = *jet;
  }
  if (method != "jet") {
    auto rep = empirical_splitting(f, I, ctx.seeds(), ctx.integer("degree-bound", 0, 0));
    for (const auto& fl : rep.flags) warn(r, fl);
    warn(r, "GENERICITY_NOT_CERTIFIED");
    oracle = rep.morse;
    r.results["oracle"] = *oracle;
    r.results["seeds"] = rep.seeds;
  }
  r.results["morse"] = jet ? *jet : *oracle;
  if (jet && oracle) {
    r.results["agree"] = *jet == *oracle;
    if (*jet != *oracle) {
      warn(r, "METHODS_DISAGREE");
      r.exit_code = 3;
    }
  }
}

json splitting_json(const SplittingReport& rep) {
  json out;
  json sigma = json::object();
  for (auto [k, c] : rep.sigma) sigma[std::to_string(k)] = c;
  out["sigma"] = sigma;
  out["c_ext"] = rep.c_ext;
  out["corrected"] = rep.corrected;
  out["morse"] = rep.morse;
  out["stable"] = rep.stable;
  out["seeds"] = rep.seeds;
  json runs = json::array();
  for (const auto& run : rep.runs) {
    json j;
    j["seed"] = run.seed;
    j["deformation"] = run.deformation.to_string();
    j["morse"] = run.morse;
    j["corrected"] = run.corrected;
    j["morse_global"] = run.morse_global;
    j["corrected_global"] = run.corrected_global;
    j["located_all"] = run.located_all;
    j["drift_free"] = run.drift_free;
    json pts = json::array();
    for (const auto& p : run.points_on_support) {
      json pj;
      json coords = json::array();
      for (const auto& q : p.point) coords.push_back(q.get_str());
      pj["point"] = coords;
      pj["codim"] = p.codim;
      pts.push_back(pj);
    }
    j["points_on_support"] = pts;
    runs.push_back(j);
  }
  out["runs"] = runs;
  return out;
}

void cmd_split(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto rep = empirical_splitting(f, I, ctx.seeds(), ctx.integer("degree-bound", 0, 0));
  r.results = splitting_json(rep);
  for (const auto& fl : rep.flags) warn(r, fl);
  warn(r, "GENERICITY_NOT_CERTIFIED");
}

void cmd_conserve(const Context& ctx, Result& r) {
  const auto& f = ctx.poly();
  const auto& I = ctx.ideal();
  auto seeds = ctx.seeds();
  auto mode = ctx.radical_mode();
  auto rep = conservation_check(f, I, ctx.integer("trials", 3, 1), mode, seeds.front());
  r.results["holds"] = rep.holds;
  r.results["expected"] = rep.expected;
  r.results["totals"] = rep.totals;
  r.results["local_totals"] = rep.local_totals;
  json ts = json::array();
  for (const auto& t : rep.t_values) ts.push_back(t.get_str());
  r.results["t_values"] = ts;
  r.results["radical_mode"] = radical_mode_name(mode);
  for (const auto& fl : rep.flags) warn(r, fl);
  if (mode == RadicalMode::AssumeReduced) warn(r, "ASSUMED_REDUCED");
}

void cmd_hilbert(const Context& ctx, Result& r) {
  const auto& I = ctx.ideal();
  int top = ctx.integer("trunc", 6, 0);
  json vals = json::array();
  for (int m = 0; m <= top; ++m) vals.push_back(hilbert_samuel(I, m));
  r.results["values"] = vals;
  r.results["max_m"] = top;
}

void cmd_jet_dump(const Context& ctx, Result& r) {
  const auto& I = ctx.ideal();
  int k = ctx.integer("jet-order", 1, 1);
  auto jc = jet_context(I, k);
  r.results["k"] = k;
  r.results["variables"] = jc.ring->names();
  json Q = json::array();
  for (const auto& q : jc.Q) Q.push_back(q.to_string());
  r.results["Q"] = Q;
  r.results["J1"] = ideal_json(jc.J1);
  r.results["J2"] = ideal_json(jc.J2);
  std::string text = "ring";
  for (const auto& v : jc.ring->names()) text += " " + v;
  text += ";\n";
  auto list = [](const Ideal& J) {
    std::string s;
    for (std::size_t i = 0; i < J.generators().size(); ++i) s += (i ? ", " : "") + J.generators()[i].to_string();
    return s;
  };
  text += "ideal J1 = " + list(jc.J1) + ";\n";
  text += "ideal J2 = " + list(jc.J2) + ";\n";
  r.results["problem"] = text;
}

const std::map<std::string, std::function<void(const Context&, Result&)>>& table() {
  static const std::map<std::string, std::function<void(const Context&, Result&)>> t = {
      {"codim", cmd_codim},           {"tangent", cmd_tangent},   {"theta", cmd_theta},
      {"primitive", cmd_primitive},   {"versal-check", cmd_versal_check},
      {"versal-build", cmd_versal_build}, {"determinacy", cmd_determinacy},
      {"locus", cmd_locus},           {"classify", cmd_classify}, {"morse", cmd_morse},
      {"split", cmd_split},           {"conserve", cmd_conserve}, {"hilbert", cmd_hilbert},
      {"jet-dump", cmd_jet_dump},
  };
  return t;
}

json error_json(const std::string& code, const std::string& message) {
  json e;
  e["code"] = code;
  e["message"] = message;
  return e;
}

Outcome finish(json doc, int code) { return {doc.dump(2) + "\n", code}; }

}  // namespace

Outcome usage_error(const std::string& command, const std::string& message) {
  json doc;
  doc["command"] = command;
  doc["status"] = "error";
  doc["error"] = error_json("USAGE", message);
  return finish(doc, 2);
}

Outcome run(const Invocation& inv) {
  auto start = std::chrono::steady_clock::now();
  json doc;
  doc["command"] = inv.command;
  doc["input_digest"] = digest(inv.input);
  doc["flags"] = inv.flags;
  auto timing = [&] {
    if (!inv.flags.count("timing")) return;
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing_ms"] = ms;
  };
  auto fail = [&](const std::string& code, const std::string& message, int exit) {
    doc["status"] = "error";
    doc["error"] = error_json(code, message);
    timing();
    return finish(doc, exit);
  };

  auto it = table().find(inv.command);
  if (it == table().end()) return fail("UNKNOWN_COMMAND", "unknown command '" + inv.command + "'", 2);

  try {
    auto file = parse_problem(inv.input, MonomialOrder::local());
    Context ctx(inv, &file);
    auto order = ctx.choice("order", "ds", {"ds", "dp"});
    if (order == "dp")
      for (auto& [name, I] : file.ideals) I = I.with_order(MonomialOrder::global());
    Result r;
    it->second(ctx, r);
    doc["status"] = "ok";
    doc["results"] = r.results;
    doc["warnings"] = r.warnings;
    doc["order"] = order;
    doc["names"] = ctx.used();
    timing();
    return finish(doc, r.exit_code);
  } catch (const ParseError& e) {
    doc["status"] = "error";
    auto err = error_json(error_code_name(e.code()), e.what());
    err["line"] = e.line();
    err["column"] = e.column();
    doc["error"] = err;
    timing();
    return finish(doc, 2);
  } catch (const Error& e) {
    return fail(error_code_name(e.code()), e.what(), exit_code_for(e.code()));
  } catch (const UsageError& e) {
    return fail("USAGE", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("INTERNAL_ERROR", e.what(), 1);
  }
}

}  // namespace germforge::cli
