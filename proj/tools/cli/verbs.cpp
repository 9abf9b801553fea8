#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "app.hpp"
#include "pspec/error.hpp"
#include "pspec/groebner.hpp"
#include "pspec/ideals.hpp"
#include "pspec/parse.hpp"
#include "pspec/torus.hpp"

namespace pspec::cli {
namespace {

using nlohmann::json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

struct Context {
  const PoissonStructure& s;
  const Options& opt;

  std::string str(const Poly& p) const { return to_string(p, s.names()); }
  std::string str(const RatFunc& f) const { return to_string(f, s.names()); }

  std::vector<std::string> strs(const std::vector<Poly>& ps) const {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(str(p));
    return out;
  }

  std::string bracket_name(std::size_t i, std::size_t j) const {
    return "{" + s.names()[i] + "," + s.names()[j] + "}";
  }

  const std::string& need(const std::optional<std::string>& v, const char* flag) const {
    if (!v) throw DomainError(std::string("missing required option ") + flag);
    return *v;
  }

  Ideal ideal_from(const std::string& text) const {
    return Ideal(s.nvars(), parse_poly_list(text, s.names()), MonomialOrder(opt.order));
  }

  std::vector<Coeff> coeffs(const std::optional<std::string>& v, const char* flag) const {
    return parse_coeff_list(need(v, flag));
  }

  PencilSpec pencil() const { return {coeffs(opt.lambda, "--lambda"), coeffs(opt.mu, "--mu")}; }

  std::vector<Poly> positional_polys(std::size_t min, std::size_t max) const {
    const auto& args = opt.positional;
    if (args.size() < min || args.size() > max) {
      throw DomainError("expected " + (min == max ? std::to_string(min) : std::to_string(min) + " to " + std::to_string(max)) +
                        " expressions, got " + std::to_string(args.size()));
    }
    std::vector<Poly> out;
    for (const auto& a : args) out.push_back(parse_poly(a, s.names()));
    return out;
  }
};

std::string tuple(const std::vector<std::string>& parts) { return "(" + join(parts, ",") + ")"; }

std::string coeff_or_dash(const std::optional<Coeff>& c) { return c ? to_string(*c) : "-"; }

json coeff_json(const std::optional<Coeff>& c) { return c ? json(to_string(*c)) : json(nullptr); }

Report bracket_table(const Context& c) {
  Report r;
  json entries = json::array();
  for (std::size_t i = 0; i < c.s.nvars(); ++i) {
    for (std::size_t j = i + 1; j < c.s.nvars(); ++j) {
      const std::string v = c.str(c.s.generator_bracket(i, j));
      r.lines.push_back(c.bracket_name(i, j) + " = " + v);
      entries.push_back({{"i", i + 1}, {"j", j + 1}, {"value", v}});
    }
  }
  r.data["brackets"] = entries;
  return r;
}

Report bracket_verb(const Context& c) {
  const auto fg = c.positional_polys(2, 2);
  const Poly b = bracket(c.s, fg[0], fg[1]);
  Report r;
  r.lines.push_back("{" + c.str(fg[0]) + ", " + c.str(fg[1]) + "} = " + c.str(b));
  r.data["f"] = c.str(fg[0]);
  r.data["g"] = c.str(fg[1]);
  r.data["value"] = c.str(b);
  if (c.s.validated()) {
    const bool agree = bracket_by_determinant(c.s, fg[0], fg[1]) == b;
    r.lines.push_back("determinant check: " + std::string(agree ? "agrees" : "DISAGREES"));
    r.data["determinant_agrees"] = agree;
  }
  return r;
}

Report jacobiator_verb(const Context& c) {
  const std::size_t n = c.s.nvars();
  std::vector<std::vector<Poly>> triples;
  if (c.opt.positional.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          triples.push_back({Poly::variable(n, i), Poly::variable(n, j), Poly::variable(n, k)});
        }
      }
    }
  } else {
    triples.push_back(c.positional_polys(3, 3));
  }
  Report r;
  bool all_zero = true;
  json entries = json::array();
  for (const auto& t : triples) {
    const Poly j = jacobiator(c.s, t[0], t[1], t[2]);
    all_zero = all_zero && j.is_zero();
    const std::string args = c.str(t[0]) + ", " + c.str(t[1]) + ", " + c.str(t[2]);
    r.lines.push_back("jacobiator(" + args + ") = " + c.str(j));
    entries.push_back({{"f", c.str(t[0])}, {"g", c.str(t[1])}, {"h", c.str(t[2])}, {"value", c.str(j)}});
  }
  r.lines.push_back("JACOBI IDENTITY: " + yes_no(all_zero));
  r.data["jacobiators"] = entries;
  r.verdict = all_zero;
  return r;
}

Report plucker_verb(const Context& c) {
  if (!c.s.validated()) throw DomainError("plucker needs a structure built from pairs");
  const std::size_t n = c.s.nvars();
  std::vector<std::array<std::size_t, 4>> quads;
  if (c.opt.positional.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) quads.push_back({i, j, k, l});
  } else {
    if (c.opt.positional.size() != 4) throw DomainError("plucker takes four column indices");
    std::array<std::size_t, 4> q{};
    for (std::size_t a = 0; a < 4; ++a) {
      const auto& text = c.opt.positional[a];
      if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw DomainError("plucker: '" + text + "' is not a column index");
      }
      const auto v = std::stoul(text);
      if (v == 0) throw RangeError("plucker: column indices start at 1");
      q[a] = v - 1;
    }
    quads.push_back(q);
  }
  Report r;
  bool all_zero = true;
  json entries = json::array();
  for (const auto& [i, j, k, l] : quads) {
    const Poly v = plucker_relation(c.s.e_matrix(), i, j, k, l);
    all_zero = all_zero && v.is_zero();
    const std::string idx = std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                            std::to_string(l + 1);
    r.lines.push_back("plucker(" + idx + ")=" + c.str(v));
    entries.push_back({{"columns", {i + 1, j + 1, k + 1, l + 1}}, {"value", c.str(v)}});
  }
  r.data["relations"] = entries;
  r.verdict = all_zero;
  return r;
}

Report depend_verb(const Context& c) {
  std::vector<RatFunc> fs;
  if (c.opt.positional.empty()) {
    fs = c.s.rational_functions();
    if (fs.empty()) throw DomainError("depend needs a structure built from pairs or explicit expressions");
  } else {
    for (const auto& p : c.positional_polys(1, c.opt.positional.size())) fs.emplace_back(p);
  }
  const std::size_t rk = jacobian_rank(fs);
  const bool dependent = rk < fs.size();
  Report r;
  r.lines.push_back("DEPENDENT: " + yes_no(dependent) + " (rank " + std::to_string(rk) + " of " +
                    std::to_string(fs.size()) + ")");
  r.data["rank"] = rk;
  r.data["count"] = fs.size();
  r.data["dependent"] = dependent;
  r.verdict = dependent;
  return r;
}

Report poisson_ideal_verb(const Context& c) {
  const Ideal ideal = c.ideal_from(c.need(c.opt.ideal, "--ideal"));
  const bool yes = is_poisson_ideal(c.s, ideal);
  Report r;
  r.lines.push_back("POISSON IDEAL: " + yes_no(yes));
  r.data["ideal"] = c.strs(ideal.generators());
  r.data["poisson"] = yes;
  r.verdict = yes;
  return r;
}

Report residually_null_verb(const Context& c) {
  const Ideal ideal = c.ideal_from(c.need(c.opt.ideal, "--ideal"));
  const bool yes = is_residually_null(c.s, ideal);
  Report r;
  r.lines.push_back("RESIDUALLY NULL: " + yes_no(yes));
  r.data["ideal"] = c.strs(ideal.generators());
  r.data["residually_null"] = yes;
  r.verdict = yes;
  return r;
}

Report gamma_verb(const Context& c) {
  const GammaData g = gamma_of(c.s, c.ideal_from(c.need(c.opt.ideal, "--ideal")));
  std::vector<std::string> entries;
  json gj = json::array();
  for (const auto& e : g.entries) {
    entries.push_back("(" + std::to_string(int(e.gamma)) + "," + std::to_string(int(e.delta)) + ")");
    gj.push_back({int(e.gamma), int(e.delta)});
  }
  std::string line = "gamma=" + tuple(entries);
  std::vector<std::string> vs;
  for (const auto& v : g.v_gamma) vs.push_back(c.str(v));
  if (g.dense) {
    line += " dense; V={" + join(vs, ", ") + "}";
  } else {
    line += " not dense";
  }
  Report r;
  r.lines.push_back(line);
  r.lines.push_back("S={" + join(c.strs(g.s_gamma), ", ") + "}");
  r.data["gamma"] = gj;
  r.data["dense"] = g.dense;
  r.data["S"] = c.strs(g.s_gamma);
  if (g.dense) r.data["V"] = vs;
  return r;
}

Report pencil_verb(const Context& c) {
  const auto gens = pencil_generators(c.s, c.pencil());
  const Ideal ideal(c.s.nvars(), gens, MonomialOrder(c.opt.order));
  const bool poisson = is_poisson_ideal(c.s, ideal);
  Report r;
  r.lines.push_back("pencil=(" + join(c.strs(gens), ", ") + ")");
  r.lines.push_back("POISSON IDEAL: " + yes_no(poisson));
  r.data["pencil"] = c.strs(gens);
  r.data["poisson"] = poisson;
  r.verdict = poisson;
  return r;
}

Report classify_verb(const Context& c) {
  const auto point = c.coeffs(c.opt.point, "--point");
  const ClassificationReport cr = classify_point(c.s, point);
  std::string line;
  if (cr.condition1) {
    line = "POISSON via condition (1), witness i=" + std::to_string(*cr.condition1 + 1);
  } else if (cr.condition2) {
    line = "POISSON via condition (2), g dependent";
  } else if (cr.final) {
    line = "POISSON via condition (3), rank " + std::to_string(*cr.jacobian_rank_at_point);
  } else {
    line = "NOT POISSON: no condition holds, rank " + std::to_string(*cr.jacobian_rank_at_point);
  }
  line += "; direct check: ";
  if (cr.direct_verdict) {
    line += "all brackets vanish";
  } else {
    const auto [k, l] = *cr.nonvanishing;
    line += c.bracket_name(k, l) + "(p)=" + to_string(evaluate(c.s.generator_bracket(k, l), point));
  }
  Report r;
  r.lines.push_back(line);
  r.lines.push_back("g=(" + join(c.strs(cr.g), ", ") + ")");
  if (cr.final != cr.direct_verdict) r.lines.push_back("INCONSISTENT: criterion and direct check disagree");
  json conds;
  conds["1"] = cr.condition1 ? json(*cr.condition1 + 1) : json(nullptr);
  conds["2"] = cr.condition2;
  conds["3"] = cr.condition3 ? json(*cr.condition3) : json(nullptr);
  r.data["conditions"] = conds;
  r.data["rank_at_point"] = cr.jacobian_rank_at_point ? json(*cr.jacobian_rank_at_point) : json(nullptr);
  r.data["g"] = c.strs(cr.g);
  r.data["direct"] = cr.direct_verdict;
  r.data["poisson"] = cr.final;
  r.verdict = cr.final;
  return r;
}

Report primitive_verb(const Context& c) {
  std::optional<Ideal> candidate;
  if (c.opt.candidate) candidate = c.ideal_from(*c.opt.candidate);
  const PrimitiveReport pr = analyze_primitive_candidate(c.s, c.pencil(), candidate);
  Report r;
  r.lines.push_back("pencil=(" + join(c.strs(pr.pencil), ", ") + ")");
  r.lines.push_back("pencil proper: yes");
  r.lines.push_back("pencil Poisson: " + yes_no(pr.pencil_poisson));
  r.lines.push_back("pencil residually null: " + yes_no(pr.pencil_residually_null));
  if (pr.not_primitive) r.lines.push_back("NOT POISSON PRIMITIVE: the pencil ideal is residually null");
  r.data["pencil"] = c.strs(pr.pencil);
  r.data["pencil_poisson"] = pr.pencil_poisson;
  r.data["pencil_residually_null"] = pr.pencil_residually_null;
  r.data["not_primitive"] = pr.not_primitive;
  bool ok = pr.pencil_poisson && !pr.not_primitive;
  if (pr.candidate) {
    const auto& cand = *pr.candidate;
    r.lines.push_back("candidate contains pencil: yes");
    r.lines.push_back("candidate Poisson: " + yes_no(cand.poisson));
    r.lines.push_back("candidate residually null: " + yes_no(cand.residually_null));
    r.lines.push_back("candidate proper: " + yes_no(cand.proper));
    r.lines.push_back("candidate prime: not checked");
    r.data["candidate"] = {{"generators", c.strs(candidate->generators())},
                           {"poisson", cand.poisson},
                           {"residually_null", cand.residually_null},
                           {"proper", cand.proper},
                           {"prime", "not checked"}};
    ok = ok && cand.poisson && !cand.residually_null && cand.proper;
  }
  r.verdict = ok;
  return r;
}

Report smooth_verb(const Context& c) {
  const bool yes = smoothness_check(c.s, c.coeffs(c.opt.mu, "--mu"));
  Report r;
  r.lines.push_back("SMOOTH: " + yes_no(yes));
  r.data["smooth"] = yes;
  r.verdict = yes;
  return r;
}

Report torus_verb(const Context& c) {
  const TorusElement h(c.coeffs(c.opt.h, "--h"));
  const WeightReport w = weight_report(c.s, h);
  const bool autom = poisson_auto_check(c.s, h);
  std::vector<std::string> sigma, tau;
  json sj = json::array(), tj = json::array();
  for (std::size_t i = 0; i < w.sigma.size(); ++i) {
    sigma.push_back(coeff_or_dash(w.sigma[i]));
    tau.push_back(coeff_or_dash(w.tau[i]));
    sj.push_back(coeff_json(w.sigma[i]));
    tj.push_back(coeff_json(w.tau[i]));
  }
  Report r;
  r.lines.push_back("H': " + yes_no(w.in_hprime));
  r.lines.push_back("sigma=" + tuple(sigma) + " tau=" + tuple(tau));
  if (w.in_hprime) {
    r.lines.push_back("rho=" + to_string(*w.rho) + " product=" + to_string(w.product) +
                      " criterion=" + (*w.rho_criterion ? "true" : "false"));
  }
  r.lines.push_back("POISSON AUTOMORPHISM: " + yes_no(autom));
  r.data["in_hprime"] = w.in_hprime;
  r.data["sigma"] = sj;
  r.data["tau"] = tj;
  r.data["rho"] = coeff_json(w.rho);
  r.data["product"] = to_string(w.product);
  r.data["rho_criterion"] = w.rho_criterion ? json(*w.rho_criterion) : json(nullptr);
  r.data["poisson_automorphism"] = autom;
  r.verdict = autom;
  return r;
}

Report h_check_verb(const Context& c) {
  const TorusElement h(c.coeffs(c.opt.h, "--h"));
  const bool yes = h_group_check(c.s, h);
  Report r;
  r.lines.push_back("IN H: " + yes_no(yes));
  r.data["in_h"] = yes;
  r.verdict = yes;
  return r;
}

using Handler = Report (*)(const Context&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"bracket-table", bracket_table},
      {"bracket", bracket_verb},
      {"jacobiator", jacobiator_verb},
      {"plucker", plucker_verb},
      {"depend", depend_verb},
      {"is-poisson-ideal", poisson_ideal_verb},
      {"is-residually-null", residually_null_verb},
      {"gamma", gamma_verb},
      {"pencil", pencil_verb},
      {"classify-point", classify_verb},
      {"primitive", primitive_verb},
      {"smooth", smooth_verb},
      {"torus", torus_verb},
      {"h-check", h_check_verb},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report dispatch(const std::string& verb, const PoissonStructure& s, const Options& opt) {
  const auto it = handlers().find(verb);
  if (it == handlers().end()) throw DomainError("unknown verb '" + verb + "'");
  Report r = it->second(Context{s, opt});
  r.verb = verb;
  return r;
}

std::string render(const Report& r, Format format) {
  if (format == Format::text) {
    std::string out;
    for (const auto& line : r.lines) out += line + "\n";
    return out;
  }
  json doc;
  doc["verb"] = r.verb;
  doc["result"] = r.data;
  doc["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace pspec::cli
