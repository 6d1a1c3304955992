#include "nambu/registry.hpp"

#include <fstream>
#include <sstream>

#include "nambu/errors.hpp"
#include "nambu/parser.hpp"

namespace nambu {

LieAlgebraSpec AlgebraEntry::spec() const {
  LieAlgebraSpec s;
  s.id = id;
  s.dim = dim;
  for (const auto& [i, j, k, expr] : constants)
    s.constants.push_back({i - 1, j - 1, k - 1, parse(expr)});
  return s;
}

const AlgebraEntry* Registry::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& piece : split(s, ','))
    if (!piece.empty()) out.push_back(parse_rat(piece));
  return out;
}

ParamSpec parse_param_line(const std::string& rest) {
  // <name> [exclude: a,b] [sweep: a,b]
  ParamSpec p;
  std::istringstream is(rest);
  is >> p.name;
  std::string tail;
  std::getline(is, tail);
  tail = trim(tail);
  auto grab = [&](const std::string& kw) -> std::string {
    size_t at = tail.find(kw + ":");
    if (at == std::string::npos) return "";
    size_t from = at + kw.size() + 1;
    size_t to = tail.size();
    for (const std::string& other : {std::string("exclude"), std::string("sweep")}) {
      size_t o = tail.find(other + ":", from);
      if (o != std::string::npos && o < to) to = o;
    }
    return trim(tail.substr(from, to - from));
  };
  p.exclude = parse_rat_list(grab("exclude"));
  p.sweep = parse_rat_list(grab("sweep"));
  return p;
}

PairSweep parse_pairsweep_line(const std::string& rest) {
  // <n1>,<n2>: (a,b) (c,d) ...
  PairSweep ps;
  size_t colon = rest.find(':');
  if (colon == std::string::npos) throw FormatError("pairsweep needs ':'");
  auto names = split(rest.substr(0, colon), ',');
  if (names.size() != 2) throw FormatError("pairsweep needs two names");
  ps.first = names[0];
  ps.second = names[1];
  std::string tail = rest.substr(colon + 1);
  size_t pos = 0;
  while ((pos = tail.find('(', pos)) != std::string::npos) {
    size_t end = tail.find(')', pos);
    if (end == std::string::npos) throw FormatError("pairsweep: unbalanced (");
    auto vals = split(tail.substr(pos + 1, end - pos - 1), ',');
    if (vals.size() != 2) throw FormatError("pairsweep: need (a,b)");
    ps.values.emplace_back(parse_rat(vals[0]), parse_rat(vals[1]));
    pos = end + 1;
  }
  return ps;
}

ClaimCase parse_eta_line(const std::string& rest) {
  ClaimCase c;
  std::string body = rest;
  if (body.rfind("if ", 0) == 0) {
    size_t sep = body.find("::");
    if (sep == std::string::npos) throw FormatError("eta if-case needs '::'");
    c.cond = trim(body.substr(3, sep - 3));
    body = trim(body.substr(sep + 2));
  }
  for (const auto& piece : split(body, '|')) {
    size_t colon = piece.find(':');
    if (colon == std::string::npos) throw FormatError("eta component needs label:");
    ClaimComp cc;
    cc.label = trim(piece.substr(0, colon));
    cc.expr = trim(piece.substr(colon + 1));
    for (size_t i = 0; i + 1 < cc.label.size(); ++i)
      if (cc.label[i] >= cc.label[i + 1])
        throw FormatError("eta component label not strictly increasing: " + cc.label);
    c.comps.push_back(std::move(cc));
  }
  return c;
}

Erratum parse_erratum_line(const std::string& rest) {
  // <field> | <check> | printed: <text> [| note: <text>]
  auto pieces = split(rest, '|');
  if (pieces.size() < 3) throw FormatError("erratum needs field | check | printed:");
  Erratum e;
  e.field = pieces[0];
  e.check = pieces[1];
  for (size_t i = 2; i < pieces.size(); ++i) {
    if (pieces[i].rfind("printed:", 0) == 0)
      e.printed = trim(pieces[i].substr(8));
    else if (pieces[i].rfind("note:", 0) == 0)
      e.note = trim(pieces[i].substr(5));
    else
      throw FormatError("erratum: unknown clause " + pieces[i]);
  }
  return e;
}

std::array<std::string, 4> parse_field_row(const std::string& s) {
  auto comps = split(s, ',');
  if (comps.size() != 4) throw FormatError("field row needs 4 components: " + s);
  return {comps[0], comps[1], comps[2], comps[3]};
}

}  // namespace

Registry registry_parse(std::istream& in, std::vector<LoadIssue>* issues) {
  Registry reg;
  std::string line;
  int lineno = 0;
  AlgebraEntry* alg = nullptr;
  SubEntry* sub = nullptr;
  std::vector<AlgebraEntry> parsed;

  auto fail = [&](const std::string& msg) {
    throw FormatError("registry line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream is(t);
    std::string kw;
    is >> kw;
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);

    if (kw == "algebra") {
      if (alg) fail("nested algebra");
      parsed.emplace_back();
      alg = &parsed.back();
      alg->id = rest;
    } else if (kw == "end") {
      if (!alg) fail("end without algebra");
      alg = nullptr;
    } else if (kw == "sub") {
      if (!alg || sub) fail("sub outside algebra");
      alg->subs.emplace_back();
      sub = &alg->subs.back();
      sub->type = rest;
    } else if (kw == "endsub") {
      if (!sub) fail("endsub without sub");
      sub = nullptr;
    } else if (!alg) {
      fail("directive outside algebra: " + kw);
    } else if (kw == "tex") {
      alg->tex = rest;
    } else if (kw == "dim") {
      alg->dim = std::stoi(rest);
    } else if (kw == "param") {
      (sub ? sub->params : alg->params).push_back(parse_param_line(rest));
    } else if (kw == "pairsweep") {
      (sub ? sub->pairs : alg->pairs).push_back(parse_pairsweep_line(rest));
    } else if (kw == "C") {
      if (sub) fail("C inside sub");
      std::istringstream cs(rest);
      int i, j, k;
      if (!(cs >> i >> j >> k)) fail("C needs i j k expr");
      std::string expr;
      std::getline(cs, expr);
      expr = trim(expr);
      if (i >= j) fail("constants stored for i<j only");
      alg->constants.emplace_back(i, j, k, expr);
    } else if (kw == "frame") {
      if (sub) fail("frame inside sub (use fields)");
      auto comps = split(rest, ';');
      if (comps.size() != 4) fail("frame row needs 4 entries split by ';'");
      alg->frame.push_back({comps[0], comps[1], comps[2], comps[3]});
    } else if (kw == "noframe") {
      alg->noframe = rest;
    } else if (kw == "eta") {
      (sub ? sub->eta : alg->eta).push_back(parse_eta_line(rest));
    } else if (kw == "noclaim") {
      alg->noclaim = rest.empty() ? "blank table cell" : rest;
    } else if (kw == "outofclass") {
      if (sub)
        sub->outofclass = rest;
      else
        alg->outofclass = rest;
    } else if (kw == "zeroclaim") {
      if (!sub) fail("zeroclaim outside sub");
      sub->zeroclaim = true;
    } else if (kw == "unverifiable") {
      if (!sub) fail("unverifiable outside sub");
      sub->unverifiable = rest.empty() ? "unreconstructible as printed" : rest;
    } else if (kw == "basis") {
      if (!sub) fail("basis outside sub");
      for (const auto& b : split(rest, ';')) sub->basis.push_back(b);
    } else if (kw == "fields") {
      if (!sub) fail("fields outside sub");
      for (const auto& row : split(rest, ';')) sub->fields.push_back(parse_field_row(row));
    } else if (kw == "erratum") {
      (sub ? sub->errata : alg->errata).push_back(parse_erratum_line(rest));
    } else if (kw == "note") {
      (sub ? sub->notes : alg->notes).push_back(rest);
    } else {
      fail("unknown directive: " + kw);
    }
  }
  if (alg) throw FormatError("unterminated algebra block");

  // Jacobi gate per entry over its sweep
  for (auto& e : parsed) {
    bool ok = true;
    std::string why;
    try {
      LieAlgebraSpec spec = e.spec();
      for (const auto& env : sweep_bindings(e.params, e.pairs)) {
        BoundConstants c = bind_constants(spec, env);
        JacobiReport jr = jacobi_check(c);
        if (!jr.ok) {
          ok = false;
          why = "Jacobi violation at triple (" + std::to_string(jr.i + 1) + "," +
                std::to_string(jr.j + 1) + "," + std::to_string(jr.k + 1) +
                ") binding " + binding_str(env) +
                "; transcription typo suspected, route to errata ledger";
          break;
        }
      }
    } catch (const Error& err) {
      ok = false;
      why = err.what();
    }
    if (ok) {
      reg.entries.push_back(std::move(e));
    } else if (issues) {
      issues->push_back({e.id, why});
    } else {
      throw JacobiViolation(e.id + ": " + why);
    }
  }
  return reg;
}

Registry registry_load(const std::string& path, std::vector<LoadIssue>* issues) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open registry: " + path);
  return registry_parse(in, issues);
}

namespace {

void save_param(std::ostream& os, const ParamSpec& p, const char* indent) {
  os << indent << "param " << p.name;
  if (!p.exclude.empty()) {
    os << " exclude: ";
    for (size_t i = 0; i < p.exclude.size(); ++i)
      os << (i ? "," : "") << rat_str(p.exclude[i]);
  }
  if (!p.sweep.empty()) {
    os << " sweep: ";
    for (size_t i = 0; i < p.sweep.size(); ++i)
      os << (i ? "," : "") << rat_str(p.sweep[i]);
  }
  os << "\n";
}

void save_pair(std::ostream& os, const PairSweep& p, const char* indent) {
  os << indent << "pairsweep " << p.first << "," << p.second << ":";
  for (const auto& [a, b] : p.values)
    os << " (" << rat_str(a) << "," << rat_str(b) << ")";
  os << "\n";
}

void save_eta(std::ostream& os, const ClaimCase& c, const char* indent) {
  os << indent << "eta ";
  if (!c.cond.empty()) os << "if " << c.cond << " :: ";
  for (size_t i = 0; i < c.comps.size(); ++i) {
    if (i) os << " | ";
    os << c.comps[i].label << ": " << c.comps[i].expr;
  }
  os << "\n";
}

void save_erratum(std::ostream& os, const Erratum& e, const char* indent) {
  os << indent << "erratum " << e.field << " | " << e.check
     << " | printed: " << e.printed;
  if (!e.note.empty()) os << " | note: " << e.note;
  os << "\n";
}

}  // namespace

std::string registry_save(const Registry& reg) {
  std::ostringstream os;
  os << "# Lie algebra registry: 4D real Lie algebras, frames, claimed\n";
  os << "# structures and subalgebra rows, with the errata ledger.\n";
  for (const auto& a : reg.entries) {
    os << "algebra " << a.id << "\n";
    if (!a.tex.empty()) os << "  tex " << a.tex << "\n";
    os << "  dim " << a.dim << "\n";
    for (const auto& p : a.params) save_param(os, p, "  ");
    for (const auto& p : a.pairs) save_pair(os, p, "  ");
    for (const auto& [i, j, k, expr] : a.constants)
      os << "  C " << i << " " << j << " " << k << " " << expr << "\n";
    for (const auto& row : a.frame)
      os << "  frame " << row[0] << " ; " << row[1] << " ; " << row[2] << " ; "
         << row[3] << "\n";
    if (!a.noframe.empty()) os << "  noframe " << a.noframe << "\n";
    for (const auto& c : a.eta) save_eta(os, c, "  ");
    if (!a.noclaim.empty()) os << "  noclaim " << a.noclaim << "\n";
    if (!a.outofclass.empty()) os << "  outofclass " << a.outofclass << "\n";
    for (const auto& e : a.errata) save_erratum(os, e, "  ");
    for (const auto& n : a.notes) os << "  note " << n << "\n";
    for (const auto& s : a.subs) {
      os << "  sub " << s.type << "\n";
      if (!s.basis.empty()) {
        os << "    basis ";
        for (size_t i = 0; i < s.basis.size(); ++i)
          os << (i ? " ; " : "") << s.basis[i];
        os << "\n";
      }
      for (const auto& p : s.params) save_param(os, p, "    ");
      for (const auto& p : s.pairs) save_pair(os, p, "    ");
      if (!s.fields.empty()) {
        os << "    fields ";
        for (size_t i = 0; i < s.fields.size(); ++i) {
          if (i) os << " ; ";
          os << s.fields[i][0] << "," << s.fields[i][1] << "," << s.fields[i][2]
             << "," << s.fields[i][3];
        }
        os << "\n";
      }
      for (const auto& c : s.eta) save_eta(os, c, "    ");
      if (s.zeroclaim) os << "    zeroclaim\n";
      if (!s.outofclass.empty()) os << "    outofclass " << s.outofclass << "\n";
      if (!s.unverifiable.empty()) os << "    unverifiable " << s.unverifiable << "\n";
      for (const auto& e : s.errata) save_erratum(os, e, "    ");
      for (const auto& n : s.notes) os << "    note " << n << "\n";
      os << "  endsub\n";
    }
    os << "end\n\n";
  }
  return os.str();
}

std::vector<ParamEnv> sweep_bindings(const std::vector<ParamSpec>& params,
                                     const std::vector<PairSweep>& pairs) {
  static const std::vector<Rat> kDefault = {rat(-2), rat(-1), rat(-1, 2),
                                            rat(1, 2), rat(1), rat(2)};
  std::vector<ParamEnv> envs = {ParamEnv{}};
  for (const auto& p : params) {
    std::vector<Rat> values = p.sweep.empty() ? kDefault : p.sweep;
    std::vector<Rat> admissible;
    for (const auto& v : values) {
      bool excluded = false;
      for (const auto& x : p.exclude)
        if (v == x) excluded = true;
      if (!excluded) admissible.push_back(v);
    }
    std::vector<ParamEnv> next;
    for (const auto& env : envs)
      for (const auto& v : admissible) {
        ParamEnv e = env;
        e[p.name] = v;
        next.push_back(std::move(e));
      }
    envs = std::move(next);
  }
  for (const auto& ps : pairs) {
    std::vector<ParamEnv> next;
    for (const auto& env : envs)
      for (const auto& [a, b] : ps.values) {
        ParamEnv e = env;
        e[ps.first] = a;
        e[ps.second] = b;
        next.push_back(std::move(e));
      }
    envs = std::move(next);
  }
  return envs;
}

bool cond_holds(const std::string& cond, const ParamEnv& env) {
  if (trim(cond).empty()) return true;
  for (const auto& atom : split(cond, '&')) {
    size_t neq = atom.find("!=");
    size_t eq = atom.find('=');
    bool negated = neq != std::string::npos;
    size_t at = negated ? neq : eq;
    if (at == std::string::npos) throw FormatError("condition needs = or !=: " + atom);
    std::string lhs = trim(atom.substr(0, at));
    std::string rhs = trim(atom.substr(at + (negated ? 2 : 1)));
    ExpPoly l = parse(lhs, env), r = parse(rhs, env);
    ExpPoly diff = l - r;
    if (!diff.params_used().empty())
      throw UnboundParameter(*diff.params_used().begin());
    bool equal = diff.is_zero();
    if (negated == equal) return false;
  }
  return true;
}

std::string binding_str(const ParamEnv& env) {
  std::string s;
  for (const auto& [k, v] : env) {
    if (!s.empty()) s += ";";
    s += k + "=" + rat_str(v);
  }
  return s;
}

}  // namespace nambu
