#include "commands.hpp"

#include <sstream>

#include "famloc/binomiality.hpp"
#include "famloc/errors.hpp"
#include "famloc/toric.hpp"

namespace famloc::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string braces(const std::vector<Polynomial>& ps) { return "{" + join(strings_of(ps)) + "}"; }

std::string rational_list(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& q : v) s.push_back(q.get_str());
  return join(s);
}

json rational_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

std::string closed_text(const Ideal& I) { return simplify(ConstructibleSet::closed(I)).to_string(); }

TermOrder::Kind order_kind(const RunOptions& o) {
  if (o.order == "grevlex") return TermOrder::Kind::Grevlex;
  if (o.order == "lex") return TermOrder::Kind::Lex;
  throw PreconditionError("unknown order '" + o.order + "' (expected grevlex or lex)");
}

LocusOptions locus_options(const RunOptions& o) {
  LocusOptions l;
  l.max_minor_size = o.max_minor_size;
  l.max_branch_depth = o.max_branch_depth;
  if (o.containment == "normal-form") {
    l.containment = ContainmentMethod::NormalForm;
  } else if (o.containment == "ansatz-elimination") {
    l.containment = ContainmentMethod::Ansatz;
    l.method = SolvabilityMethod::Elimination;
  } else if (o.containment == "ansatz-minors") {
    l.containment = ContainmentMethod::Ansatz;
    l.method = SolvabilityMethod::Minors;
  } else {
    throw PreconditionError("unknown containment method '" + o.containment + "'");
  }
  return l;
}

DimLocusOptions dim_options(const RunOptions& o) {
  DimLocusOptions d;
  d.seed = o.seed;
  d.trials = o.trials;
  return d;
}

const IdealDecl& pick(const ProblemFile& p, const std::string& requested, const char* fallback,
                      std::size_t index) {
  if (!requested.empty()) return p.ideal(requested);
  if (p.has_ideal(fallback)) return p.ideal(fallback);
  if (p.ideals.size() <= index)
    throw PreconditionError("the problem declares too few ideals for this command");
  return p.ideals[index];
}

Ideal parameter_free(const IdealDecl& d, const ProblemFile& p) {
  Ring plain = RingSpec::make({}, p.vars);
  std::vector<Polynomial> gens;
  try {
    for (const auto& g : d.ideal.generators_with_relations()) gens.push_back(embed(g, plain));
  } catch (const RingMismatch&) {
    throw PreconditionError("ideal '" + d.name + "' must not use parameters or auxiliary variables");
  }
  return Ideal(plain, std::move(gens));
}

const ActionSpec& pick_action(const ProblemFile& p, const std::string& name, ActionSpec& fallback) {
  if (!name.empty()) return p.action(name).spec;
  fallback = trivial_action(p.vars);
  return fallback;
}

RunResult locus_result(const ConstructibleSet& A) {
  RunResult r;
  r.text = A.to_string();
  r.machine = {{"locus", to_json(A)}};
  return r;
}

RunResult dim_result(const DimLocusResult& d, json extra = json::object()) {
  RunResult r;
  r.text = closed_text(d.locus);
  r.low_confidence = d.low_confidence;
  extra["locus"] = to_json(d.locus);
  extra["low_confidence"] = d.low_confidence;
  r.machine = extra;
  return r;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> all{
      "gb",           "cgs",           "containment-locus", "coincidence-locus",
      "fiber-dim-locus", "binomial-locus", "monomial-locus", "unital-locus",
      "stabilizer-locus", "grading",    "veronese",          "toric-check"};
  return all;
}

json to_json(const Ideal& I) { return strings_of(I.generators()); }

json to_json(const ConstructibleSet& A) {
  json pieces = json::array();
  for (const auto& piece : A.pieces())
    pieces.push_back({{"closed", to_json(piece.closed)}, {"off", to_json(piece.off)}});
  return {{"pieces", pieces}, {"text", A.to_string()}};
}

json machine_document(const std::string& subcommand, const RunResult& r) {
  return {{"schema", "famloc-result"},
          {"version", kMachineSchemaVersion},
          {"command", subcommand},
          {"low_confidence", r.low_confidence},
          {"result", r.machine}};
}

RunResult run_command(const std::string& sub, const ProblemFile& p, const RunOptions& o) {
  if (sub == "gb") {
    const auto& d = pick(p, o.ideal, "I", 0);
    const Ring& R = d.ideal.ring();
    auto kind = order_kind(o);
    auto gb = buchberger(d.ideal, kind == TermOrder::Kind::Lex ? lex_order(*R) : grevlex_order(*R));
    RunResult r;
    r.text = braces(gb.elements);
    r.machine = {{"ideal", d.name}, {"order", o.order}, {"basis", strings_of(gb.elements)}};
    return r;
  }
  if (sub == "cgs") {
    const auto& d = pick(p, o.ideal, "I", 0);
    CgsOptions c;
    c.max_branch_depth = o.max_branch_depth;
    auto sys = relative_reduced_gb(d.ideal, order_kind(o), c);
    RunResult r;
    std::ostringstream text;
    json segs = json::array();
    for (std::size_t k = 0; k < sys.segments.size(); ++k) {
      const auto& s = sys.segments[k];
      ConstructibleSet cond(d.ideal.ring()->param_ring(), {s.condition});
      text << (k ? "\n" : "") << "segment " << k + 1 << ": " << cond.to_string() << "\n  basis "
           << braces(s.basis);
      segs.push_back({{"condition", to_json(cond)}, {"basis", strings_of(s.basis)}});
    }
    r.text = text.str();
    r.machine = {{"ideal", d.name}, {"order", o.order}, {"segments", segs}};
    return r;
  }
  if (sub == "containment-locus" || sub == "coincidence-locus") {
    const auto& a = pick(p, o.ideal, "I", 0);
    const auto& b = pick(p, o.other, "J", 1);
    auto l = locus_options(o);
    auto A = sub == "containment-locus" ? containment_locus(a.ideal, b.ideal, l)
                                        : coincidence_locus(a.ideal, b.ideal, l);
    auto r = locus_result(A);
    r.machine["ideals"] = {a.name, b.name};
    return r;
  }
  if (sub == "fiber-dim-locus") {
    if (!o.dim) throw PreconditionError("fiber-dim-locus needs --dim");
    const auto& d = pick(p, o.ideal, "I", 0);
    return dim_result(fiber_dim_locus(d.ideal, *o.dim, dim_options(o)),
                      {{"ideal", d.name}, {"dim", *o.dim}, {"seed", o.seed}});
  }
  if (sub == "binomial-locus" || sub == "monomial-locus") {
    const auto& d = pick(p, o.ideal, "I", 0);
    BinomialOptions bo;
    bo.fiber_kind = order_kind(o);
    bo.max_branch_depth = o.max_branch_depth;
    auto r = locus_result(sub == "binomial-locus" ? binomial_locus(d.ideal, bo)
                                                  : monomial_locus(d.ideal, bo));
    r.machine["ideal"] = d.name;
    return r;
  }
  if (sub == "unital-locus") {
    const auto& d = pick(p, o.ideal, "I", 0);
    if (o.prime)
      return dim_result(unital_locus_prime(d.ideal, dim_options(o)),
                        {{"ideal", d.name}, {"method", "prime"}, {"seed", o.seed}});
    auto r = locus_result(unital_locus(d.ideal, locus_options(o)));
    r.machine["ideal"] = d.name;
    return r;
  }
  if (sub == "stabilizer-locus") {
    const auto& d = pick(p, o.ideal, "I", 0);
    ActionSpec fallback;
    const auto& G = pick_action(p, o.action, fallback);
    auto T = torus_action(p.vars, G.ring->params());
    auto st = stabilizer_locus(parameter_free(d, p), T, G, dim_options(o));
    RunResult r;
    r.low_confidence = st.low_confidence;
    r.text = "dimension: " + std::to_string(st.dimension) + "\nlocus: " + closed_text(st.locus);
    r.machine = {{"ideal", d.name},
                 {"action", o.action.empty() ? "trivial" : o.action},
                 {"dimension", st.dimension},
                 {"locus", to_json(st.locus)},
                 {"seed", o.seed}};
    return r;
  }
  if (sub == "grading") {
    const auto& d = pick(p, o.ideal, "I", 0);
    ActionSpec fallback;
    const auto& G = pick_action(p, o.action, fallback);
    GradingOptions go;
    go.dim = dim_options(o);
    if (o.witness_point) go.point = parse_point(*o.witness_point);
    Ideal I = parameter_free(d, p);
    auto g = grading_of_ideal(I, G, go);
    RunResult r;
    r.low_confidence = g.low_confidence;
    std::ostringstream text;
    text << "rank: " << g.rank;
    json m = {{"ideal", d.name}, {"rank", g.rank}, {"seed", o.seed}};
    if (!G.ring->params().empty()) {
      m["group_coordinates"] = G.ring->params();
      m["locus"] = to_json(g.locus);
    }
    if (g.witness) {
      if (!G.ring->params().empty())
        text << "\nwitness: " << join(G.ring->params()) << " = " << rational_list(*g.witness);
      text << "\ntransformed: " << g.transformed->to_string() << "\ndegrees:";
      json degs = json::object();
      for (std::size_t v = 0; v < g.degrees.size(); ++v) {
        std::vector<std::string> s;
        for (const auto& e : g.degrees[v]) s.push_back(e.get_str());
        text << "\n  " << I.ring()->name(v) << ": (" << join(s) << ")";
        degs[I.ring()->name(v)] = s;
      }
      m["witness"] = rational_json(*g.witness);
      m["transformed"] = to_json(*g.transformed);
      m["degrees"] = degs;
    } else {
      text << "\nwitness: none found\nlocus: " << closed_text(g.locus);
      m["witness"] = nullptr;
    }
    r.text = text.str();
    r.machine = m;
    return r;
  }
  if (sub == "veronese") {
    const auto& d = pick(p, o.ideal, "I", 0);
    Ideal I = parameter_free(d, p);
    auto K = veronese_ideal(I, o.veronese_degree, o.names);
    auto monos = veronese_monomials(I.ring(), o.veronese_degree);
    RunResult r;
    std::ostringstream text;
    json map = json::object();
    for (std::size_t k = 0; k < monos.size(); ++k) {
      auto m = Polynomial::monomial(I.ring(), monos[k]).to_string();
      text << K.ring()->name(k) << " = " << m << "\n";
      map[K.ring()->name(k)] = m;
    }
    text << braces(K.generators());
    r.text = text.str();
    r.machine = {{"ideal", d.name},
                 {"degree", o.veronese_degree},
                 {"variables", map},
                 {"basis", to_json(K)}};
    return r;
  }
  if (sub == "toric-check") {
    const auto& d = pick(p, o.ideal, "I", 0);
    ToricOptions to;
    to.veronese_degree = o.veronese_degree;
    to.names = o.names;
    to.dim = dim_options(o);
    to.max_gl_size = o.max_gl_size;
    if (o.witness_point) to.point = parse_point(*o.witness_point);
    auto t = projective_toric_check(parameter_free(d, p), to);
    RunResult r;
    r.low_confidence = t.low_confidence;
    std::ostringstream text;
    text << "verdict: " << to_string(t.verdict) << "\nembedded: " << t.embedded.to_string();
    json m = {{"ideal", d.name},
              {"verdict", to_string(t.verdict)},
              {"veronese_degree", o.veronese_degree},
              {"embedded", to_json(t.embedded)}};
    if (t.witness) {
      text << "\nwitness: " << rational_list(*t.witness);
      m["witness"] = rational_json(*t.witness);
    }
    if (t.transformed) {
      text << "\ntransformed: " << t.transformed->to_string();
      m["transformed"] = to_json(*t.transformed);
    }
    if (t.locus && t.verdict != ToricVerdict::Toric) {
      text << "\nlocus: " << closed_text(*t.locus);
      m["locus"] = to_json(*t.locus);
    }
    r.text = text.str();
    r.machine = m;
    return r;
  }
  throw PreconditionError("unknown subcommand '" + sub + "'");
}

}  // namespace famloc::cli
