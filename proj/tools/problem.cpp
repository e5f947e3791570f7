#include "problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "famloc/errors.hpp"
#include "famloc/parse.hpp"

namespace famloc::cli {

namespace {

struct Span {
  std::string_view text;
  std::size_t column;  // 1-based column of text[0]
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Span trim(Span s) {
  std::size_t b = 0, e = s.text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s.text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s.text[e - 1]))) --e;
  return {s.text.substr(b, e - b), s.column + b};
}

std::vector<Span> split_top_level(Span s, char sep) {
  std::vector<Span> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    char c = i < s.text.size() ? s.text[i] : sep;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim({s.text.substr(start, i - start), s.column + start}));
      start = i + 1;
    }
  }
  return out;
}

class LineReader {
 public:
  LineReader(std::size_t line, std::string_view text) : line_(line), text_(text) {}

  std::size_t line() const { return line_; }
  /// Column of the next non-blank character.
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, column(), msg); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  std::string identifier(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(std::string("expected ") + what);
    std::size_t b = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(b, pos_ - b));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_space();
    std::size_t save = pos_;
    if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
      auto id = identifier("word");
      if (id == w) return true;
    }
    pos_ = save;
    return false;
  }

  Span rest() {
    skip_space();
    Span s{text_.substr(pos_), pos_ + 1};
    pos_ = text_.size();
    return trim(s);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected text");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t line_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> identifier_list(LineReader& r, const char* what) {
  std::vector<std::string> out;
  for (const auto& part : split_top_level(r.rest(), ',')) {
    if (part.text.empty()) r.fail_at(part.column, std::string("expected ") + what);
    LineReader sub(r.line(), part.text);
    auto id = sub.identifier(what);
    if (!sub.at_end()) r.fail_at(part.column + sub.column() - 1, "unexpected text");
    out.push_back(id);
  }
  return out;
}

Rational parse_rational(Span s, std::size_t line) {
  std::string t(s.text);
  bool ok = !t.empty();
  std::size_t i = (ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  std::size_t digits = 0, slashes = 0;
  for (; i < t.size() && ok; ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) ++digits;
    else if (t[i] == '/' && digits > 0 && slashes == 0) ++slashes;
    else ok = false;
  }
  if (!ok || digits == 0 || t.back() == '/') throw ParseError(line, s.column, "expected a rational number");
  if (t[0] == '+') t.erase(0, 1);
  Rational q(t);
  if (q.get_den() == 0) throw ParseError(line, s.column, "zero denominator");
  q.canonicalize();
  return q;
}

std::string canonical(const Polynomial& p) { return p.to_string(); }

Ring make_ring(const ProblemFile& p) {
  Ring base = RingSpec::make(p.params, p.vars, p.aux);
  if (p.relations.empty()) return base;
  std::vector<Polynomial> rels;
  for (const auto& t : p.relations) rels.push_back(parse_polynomial(t, base));
  return base->with_relations(rels);
}

struct Builder {
  ProblemFile p;
  bool ring_fixed = false;
  std::set<std::string> names;  // ideals and actions

  Ring ring_or_fail(LineReader& r) {
    if (!ring_fixed) {
      if (p.vars.empty()) r.fail("declare 'vars' before ideals and actions");
      p.ring = make_ring(p);
      ring_fixed = true;
    }
    return p.ring;
  }

  void declare_symbols(LineReader& r, std::vector<std::string>& into, const char* what) {
    if (ring_fixed) r.fail("ring declarations must precede ideals and actions");
    std::size_t col = r.column();
    for (auto& id : identifier_list(r, what)) {
      auto used = [&](const std::vector<std::string>& v) {
        return std::find(v.begin(), v.end(), id) != v.end();
      };
      if (used(p.params) || used(p.vars) || used(p.aux))
        r.fail_at(col, "symbol '" + id + "' declared twice");
      into.push_back(id);
    }
  }

  void new_name(LineReader& r, const std::string& name, std::size_t col) {
    if (!names.insert(name).second) r.fail_at(col, "name '" + name + "' declared twice");
  }
};

Polynomial parse_at(Span s, const Ring& ring, std::size_t line) {
  if (s.text.empty()) throw ParseError(line, s.column, "expected a polynomial");
  return parse_polynomial(s.text, ring, line, s.column);
}

void finish_action(ActionDecl& a, const std::vector<std::string>& vars, std::size_t line) {
  if (a.kind != ActionKind::Explicit) return;
  Ring base = RingSpec::make(a.params, vars);
  std::vector<Polynomial> rels;
  for (const auto& t : a.relations) rels.push_back(parse_polynomial(t, base, line));
  Ring R = rels.empty() ? base : base->with_relations(rels);
  if (a.identity.size() != a.params.size())
    throw ParseError(line, 1, "action '" + a.name + "' needs an identity with " +
                                  std::to_string(a.params.size()) + " coordinates");
  ActionSpec spec{R, {}, {}, a.identity};
  auto fill = [&](const auto& src, auto& dst, const char* which) {
    for (const auto& [v, t] : src) dst.emplace(v, parse_polynomial(t, R, line));
    for (const auto& v : vars)
      if (!dst.count(v))
        throw ParseError(line, 1, std::string("action '") + a.name + "' has no " + which +
                                      " image for '" + v + "'");
  };
  fill(a.forward, spec.forward, "forward");
  fill(a.inverse, spec.inverse, "inverse");
  a.spec = std::move(spec);
}

}  // namespace

const IdealDecl& ProblemFile::ideal(std::string_view name) const {
  for (const auto& d : ideals)
    if (d.name == name) return d;
  throw PreconditionError("no ideal named '" + std::string(name) + "'");
}

const ActionDecl& ProblemFile::action(std::string_view name) const {
  for (const auto& d : actions)
    if (d.name == name) return d;
  throw PreconditionError("no action named '" + std::string(name) + "'");
}

bool ProblemFile::has_ideal(std::string_view name) const {
  return std::any_of(ideals.begin(), ideals.end(), [&](const auto& d) { return d.name == name; });
}

bool ProblemFile::has_action(std::string_view name) const {
  return std::any_of(actions.begin(), actions.end(), [&](const auto& d) { return d.name == name; });
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  Span all = trim({text, 1});
  if (all.text.empty()) return out;
  for (const auto& part : split_top_level(all, ',')) out.push_back(parse_rational(part, 1));
  return out;
}

ProblemFile parse_problem(std::string_view text) {
  Builder b;
  std::vector<std::string> lines;
  {
    std::string cur;
    std::istringstream in{std::string(text)};
    while (std::getline(in, cur)) {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      auto hash = cur.find('#');
      if (hash != std::string::npos) cur.erase(hash);
      lines.push_back(cur);
    }
  }
  std::optional<ActionDecl> open;
  std::size_t open_line = 0;
  std::set<std::string> fwd_seen, inv_seen;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    LineReader r(ln + 1, lines[ln]);
    if (r.at_end()) continue;

    if (open) {
      if (r.accept('}')) {
        r.expect_end();
        finish_action(*open, b.p.vars, open_line);
        b.p.actions.push_back(std::move(*open));
        open.reset();
        continue;
      }
      std::size_t kcol = r.column();
      auto kw = r.identifier("a keyword");
      if (kw == "params") {
        std::size_t col = r.column();
        for (auto& id : identifier_list(r, "a group coordinate")) {
          if (std::find(b.p.vars.begin(), b.p.vars.end(), id) != b.p.vars.end() ||
              std::find(open->params.begin(), open->params.end(), id) != open->params.end())
            r.fail_at(col, "group coordinate '" + id + "' clashes with another symbol");
          open->params.push_back(id);
        }
      } else if (kw == "relation") {
        Ring base = RingSpec::make(open->params, b.p.vars);
        auto poly = parse_at(r.rest(), base, r.line());
        if (!poly.is_zero()) open->relations.push_back(canonical(poly));
      } else if (kw == "identity") {
        open->identity.clear();
        for (const auto& part : split_top_level(r.rest(), ','))
          open->identity.push_back(parse_rational(part, r.line()));
      } else if (kw == "forward" || kw == "inverse") {
        std::size_t vcol = r.column();
        auto v = r.identifier("a variable");
        if (std::find(b.p.vars.begin(), b.p.vars.end(), v) == b.p.vars.end())
          r.fail_at(vcol, "'" + v + "' is not a declared variable");
        auto& seen = kw == "forward" ? fwd_seen : inv_seen;
        if (!seen.insert(v).second) r.fail_at(vcol, "image of '" + v + "' given twice");
        r.expect('=');
        Ring base = RingSpec::make(open->params, b.p.vars);
        auto poly = parse_at(r.rest(), base, r.line());
        (kw == "forward" ? open->forward : open->inverse).emplace_back(v, canonical(poly));
      } else {
        r.fail_at(kcol, "unknown keyword '" + kw + "' in action block");
      }
      continue;
    }

    std::size_t kcol = r.column();
    auto kw = r.identifier("a keyword");
    if (kw == "params") {
      b.declare_symbols(r, b.p.params, "a parameter");
    } else if (kw == "vars") {
      b.declare_symbols(r, b.p.vars, "a variable");
    } else if (kw == "aux") {
      b.declare_symbols(r, b.p.aux, "an auxiliary variable");
    } else if (kw == "relation") {
      if (b.ring_fixed) r.fail_at(kcol, "relations must precede ideals and actions");
      if (b.p.vars.empty()) r.fail_at(kcol, "declare 'vars' before relations");
      Ring base = RingSpec::make(b.p.params, b.p.vars, b.p.aux);
      auto poly = parse_at(r.rest(), base, r.line());
      if (!poly.is_zero()) b.p.relations.push_back(canonical(poly));
    } else if (kw == "ideal") {
      b.ring_or_fail(r);
      std::size_t ncol = r.column();
      auto name = r.identifier("an ideal name");
      b.new_name(r, name, ncol);
      r.expect('=');
      std::vector<Polynomial> gens;
      IdealDecl d{name, {}, std::nullopt, Ideal(b.p.ring)};
      for (const auto& part : split_top_level(r.rest(), ',')) {
        auto poly = parse_at(part, b.p.ring, r.line());
        if (poly.is_zero()) continue;
        d.generators.push_back(canonical(poly));
        gens.push_back(std::move(poly));
      }
      d.ideal = Ideal(b.p.ring, std::move(gens));
      b.p.ideals.push_back(std::move(d));
    } else if (kw == "action") {
      b.ring_or_fail(r);
      std::size_t ncol = r.column();
      auto name = r.identifier("an action name");
      b.new_name(r, name, ncol);
      if (r.accept('{')) {
        r.expect_end();
        open = ActionDecl{};
        open->name = name;
        open_line = r.line();
        fwd_seen.clear();
        inv_seen.clear();
        continue;
      }
      r.expect('=');
      std::size_t kindcol = r.column();
      auto kind = r.identifier("torus, gl or trivial");
      r.expect_end();
      ActionDecl a;
      a.name = name;
      std::vector<std::string> avoid = b.p.params;
      avoid.insert(avoid.end(), b.p.aux.begin(), b.p.aux.end());
      if (kind == "torus") {
        a.kind = ActionKind::Torus;
        a.spec = torus_action(b.p.vars, avoid);
      } else if (kind == "gl") {
        a.kind = ActionKind::GL;
        a.spec = gl_action(b.p.vars);
      } else if (kind == "trivial") {
        a.kind = ActionKind::Trivial;
        a.spec = trivial_action(b.p.vars);
      } else {
        r.fail_at(kindcol, "unknown action kind '" + kind + "'");
      }
      b.p.actions.push_back(std::move(a));
    } else if (kw == "orbit") {
      b.ring_or_fail(r);
      std::size_t ncol = r.column();
      auto name = r.identifier("an ideal name");
      r.expect('=');
      std::size_t scol = r.column();
      auto src = r.identifier("an ideal name");
      if (!b.p.has_ideal(src)) r.fail_at(scol, "undeclared ideal '" + src + "'");
      if (!r.accept_word("under")) r.fail("expected 'under'");
      std::size_t acol = r.column();
      auto act = r.identifier("an action name");
      if (!b.p.has_action(act)) r.fail_at(acol, "undeclared action '" + act + "'");
      r.expect_end();
      b.new_name(r, name, ncol);
      const auto& source = b.p.ideal(src);
      if (source.orbit) r.fail_at(scol, "orbits of orbit ideals are not supported");
      Ring plain = RingSpec::make({}, b.p.vars);
      std::vector<Polynomial> gens;
      try {
        for (const auto& g : source.ideal.generators()) gens.push_back(embed(g, plain));
      } catch (const RingMismatch&) {
        r.fail_at(scol, "ideal '" + src + "' uses parameters or auxiliary variables");
      }
      IdealDecl d{name, {}, std::make_pair(src, act),
                  orbit_ideal(Ideal(plain, std::move(gens)), b.p.action(act).spec)};
      b.p.ideals.push_back(std::move(d));
    } else {
      r.fail_at(kcol, "unknown keyword '" + kw + "'");
    }
  }
  if (open) throw ParseError(open_line, 1, "action block is not closed");
  if (!b.ring_fixed) {
    if (b.p.vars.empty()) throw ParseError(lines.size() + 1, 1, "no 'vars' declaration");
    b.p.ring = make_ring(b.p);
  }
  return std::move(b.p);
}

std::string render_problem(const ProblemFile& p) {
  std::ostringstream out;
  auto list = [&](const char* kw, const std::vector<std::string>& v) {
    if (v.empty()) return;
    out << kw << ' ';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << '\n';
  };
  list("params", p.params);
  list("vars", p.vars);
  list("aux", p.aux);
  for (const auto& r : p.relations) out << "relation " << r << '\n';
  for (const auto& a : p.actions) {
    switch (a.kind) {
      case ActionKind::Torus: out << "action " << a.name << " = torus\n"; continue;
      case ActionKind::GL: out << "action " << a.name << " = gl\n"; continue;
      case ActionKind::Trivial: out << "action " << a.name << " = trivial\n"; continue;
      case ActionKind::Explicit: break;
    }
    out << "action " << a.name << " {\n";
    if (!a.params.empty()) {
      out << "  params ";
      for (std::size_t i = 0; i < a.params.size(); ++i) out << (i ? ", " : "") << a.params[i];
      out << '\n';
    }
    for (const auto& r : a.relations) out << "  relation " << r << '\n';
    if (!a.identity.empty()) {
      out << "  identity ";
      for (std::size_t i = 0; i < a.identity.size(); ++i)
        out << (i ? ", " : "") << a.identity[i].get_str();
      out << '\n';
    }
    for (const auto& [v, t] : a.forward) out << "  forward " << v << " = " << t << '\n';
    for (const auto& [v, t] : a.inverse) out << "  inverse " << v << " = " << t << '\n';
    out << "}\n";
  }
  for (const auto& d : p.ideals) {
    if (d.orbit) {
      out << "orbit " << d.name << " = " << d.orbit->first << " under " << d.orbit->second << '\n';
      continue;
    }
    out << "ideal " << d.name << " = ";
    if (d.generators.empty()) out << '0';
    for (std::size_t i = 0; i < d.generators.size(); ++i) out << (i ? ", " : "") << d.generators[i];
    out << '\n';
  }
  return out.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.params != b.params || a.vars != b.vars || a.aux != b.aux || a.relations != b.relations)
    return false;
  if (a.ideals.size() != b.ideals.size() || a.actions.size() != b.actions.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    const auto &x = a.ideals[i], &y = b.ideals[i];
    if (x.name != y.name || x.generators != y.generators || x.orbit != y.orbit) return false;
  }
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    const auto &x = a.actions[i], &y = b.actions[i];
    if (x.name != y.name || x.kind != y.kind || x.params != y.params ||
        x.relations != y.relations || x.identity != y.identity || x.forward != y.forward ||
        x.inverse != y.inverse)
      return false;
  }
  return true;
}

}  // namespace famloc::cli
