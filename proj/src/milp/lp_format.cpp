#include "sliceprov/milp/lp_format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sliceprov::milp {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_terms(std::string& out, const std::vector<Term>& terms, const Model& m) {
  bool first = true;
  for (const auto& t : terms) {
    if (first) {
      if (t.coeff < 0)
        out += "- " + num(-t.coeff);
      else
        out += num(t.coeff);
      first = false;
    } else {
      out += t.coeff < 0 ? " - " + num(-t.coeff) : " + " + num(t.coeff);
    }
    out += " " + m.variables()[t.var].name;
  }
  if (first) out += "0";
}

const char* sense_str(Sense s) {
  switch (s) {
    case Sense::le: return "<=";
    case Sense::eq: return "=";
    case Sense::ge: return ">=";
  }
  return "<=";
}

struct Tokenizer {
  std::vector<std::string> toks;
  size_t pos = 0;

  explicit Tokenizer(const std::string& text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    };
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '\\') {  // comment to end of line
        flush();
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
        continue;
      }
      if (c == '+' || c == '-' || c == ':') {
        // '<=' '>=' '=' handled below; sign/colon are standalone unless part
        // of a number exponent, which never starts a token here.
        flush();
        toks.emplace_back(1, c);
        continue;
      }
      if (c == '<' || c == '>' || c == '=') {
        flush();
        std::string op(1, c);
        if (i + 1 < text.size() && text[i + 1] == '=') {
          op += '=';
          ++i;
        }
        toks.push_back(op);
        continue;
      }
      cur += c;
    }
    flush();
  }

  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos];
  }
  std::string next() {
    if (done()) throw std::invalid_argument("lp parse: unexpected end of input");
    return toks[pos++];
  }
};

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

bool keyword(const std::string& t, const char* kw) {
  if (t.size() != std::string(kw).size()) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(t[i])) != std::tolower(static_cast<unsigned char>(kw[i])))
      return false;
  return true;
}

bool section_start(Tokenizer& tk) {
  const std::string& t = tk.peek();
  return keyword(t, "subject") || keyword(t, "bounds") || keyword(t, "general") ||
         keyword(t, "binary") || keyword(t, "binaries") || keyword(t, "end") ||
         keyword(t, "generals");
}

struct RawTerm {
  double coeff;
  std::string var;
};

// Parses a linear expression up to a sense token or section boundary.
std::vector<RawTerm> parse_expr(Tokenizer& tk) {
  std::vector<RawTerm> terms;
  double sign = 1.0;
  bool pending_sign = false;
  while (!tk.done()) {
    const std::string& t = tk.peek();
    if (t == "<=" || t == ">=" || t == "=" || (!pending_sign && section_start(tk))) break;
    if (t == "+") {
      tk.next();
      pending_sign = true;
      continue;
    }
    if (t == "-") {
      tk.next();
      sign = -sign;
      pending_sign = true;
      continue;
    }
    if (is_number(t)) {
      double c = sign * std::strtod(tk.next().c_str(), nullptr);
      if (!tk.done() && !is_number(tk.peek()) && tk.peek() != "+" && tk.peek() != "-" &&
          tk.peek() != "<=" && tk.peek() != ">=" && tk.peek() != "=" && !section_start(tk)) {
        terms.push_back({c, tk.next()});
      } else {
        terms.push_back({c, ""});  // bare constant (only "0" is emitted)
      }
    } else {
      terms.push_back({sign, tk.next()});
    }
    sign = 1.0;
    pending_sign = false;
  }
  return terms;
}

}  // namespace

std::string write_lp(const Model& m) {
  std::string out = "Minimize\n obj: ";
  std::vector<Term> obj_terms;
  for (size_t i = 0; i < m.objective().size(); ++i)
    if (m.objective()[i] != 0.0) obj_terms.push_back({static_cast<int>(i), m.objective()[i]});
  append_terms(out, obj_terms, m);
  out += "\nSubject To\n";
  for (const auto& c : m.constraints()) {
    out += " " + c.name + ": ";
    append_terms(out, c.terms, m);
    out += std::string(" ") + sense_str(c.sense) + " " + num(c.rhs) + "\n";
  }
  out += "Bounds\n";
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& v : m.variables()) {
    out += " ";
    if (v.lower == -inf && v.upper == inf) {
      out += v.name + " free";
    } else if (v.upper == inf) {
      out += num(v.lower) + " <= " + v.name;
    } else {
      out += num(v.lower) + " <= " + v.name + " <= " + num(v.upper);
    }
    out += "\n";
  }
  std::string generals, binaries;
  for (const auto& v : m.variables()) {
    if (v.kind == VarKind::integer) generals += " " + v.name + "\n";
    if (v.kind == VarKind::binary) binaries += " " + v.name + "\n";
  }
  if (!generals.empty()) out += "General\n" + generals;
  if (!binaries.empty()) out += "Binary\n" + binaries;
  out += "End\n";
  return out;
}

Model parse_lp(const std::string& text) {
  Tokenizer tk(text);
  if (!keyword(tk.peek(), "minimize") && !keyword(tk.peek(), "min"))
    throw std::invalid_argument("lp parse: expected Minimize");
  tk.next();

  struct RawCons {
    std::string name;
    std::vector<RawTerm> terms;
    Sense sense;
    double rhs;
  };

  auto named_expr = [&](std::vector<RawTerm>& terms, std::string& name) {
    // optional "label :" prefix
    if (!tk.done() && tk.pos + 1 < tk.toks.size() && tk.toks[tk.pos + 1] == ":" &&
        !is_number(tk.peek())) {
      name = tk.next();
      tk.next();  // ':'
    }
    terms = parse_expr(tk);
  };

  std::string obj_name;
  std::vector<RawTerm> obj;
  named_expr(obj, obj_name);

  if (!keyword(tk.next(), "subject") || !keyword(tk.next(), "to"))
    throw std::invalid_argument("lp parse: expected Subject To");

  std::vector<RawCons> cons;
  while (!tk.done() && !section_start(tk)) {
    RawCons c;
    named_expr(c.terms, c.name);
    std::string op = tk.next();
    if (op == "<=")
      c.sense = Sense::le;
    else if (op == ">=")
      c.sense = Sense::ge;
    else if (op == "=")
      c.sense = Sense::eq;
    else
      throw std::invalid_argument("lp parse: expected constraint sense, got " + op);
    std::string rhs = tk.next();
    double sign = 1.0;
    if (rhs == "-") {
      sign = -1.0;
      rhs = tk.next();
    } else if (rhs == "+") {
      rhs = tk.next();
    }
    if (!is_number(rhs)) throw std::invalid_argument("lp parse: bad rhs " + rhs);
    c.rhs = sign * std::strtod(rhs.c_str(), nullptr);
    if (c.name.empty()) c.name = "c" + std::to_string(cons.size());
    cons.push_back(std::move(c));
  }

  struct Bound {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    bool seen = false;
  };
  std::vector<std::string> var_order;
  std::unordered_map<std::string, Bound> bounds;
  std::unordered_map<std::string, VarKind> kinds;
  auto touch = [&](const std::string& v) {
    if (!bounds.count(v)) {
      bounds[v];
      var_order.push_back(v);
    }
  };
  for (const auto& t : obj)
    if (!t.var.empty()) touch(t.var);
  for (const auto& c : cons)
    for (const auto& t : c.terms)
      if (!t.var.empty()) touch(t.var);

  while (!tk.done()) {
    std::string sec = tk.next();
    if (keyword(sec, "end")) break;
    if (keyword(sec, "bounds")) {
      while (!tk.done() && !section_start(tk)) {
        // forms:  L <= x <= U   |   L <= x   |   x <= U   |   x free
        std::string a = tk.next();
        double neg = 1.0;
        if (a == "-") {
          neg = -1.0;
          a = tk.next();
        }
        if (is_number(a)) {
          double lo = neg * std::strtod(a.c_str(), nullptr);
          if (tk.next() != "<=") throw std::invalid_argument("lp parse: bad bound line");
          std::string v = tk.next();
          touch(v);
          bounds[v].lower = lo;
          bounds[v].seen = true;
          if (!tk.done() && tk.peek() == "<=") {
            tk.next();
            std::string u = tk.next();
            double usign = 1.0;
            if (u == "-") {
              usign = -1.0;
              u = tk.next();
            }
            bounds[v].upper = usign * std::strtod(u.c_str(), nullptr);
          }
        } else {
          std::string v = a;
          touch(v);
          if (!tk.done() && keyword(tk.peek(), "free")) {
            tk.next();
            bounds[v].lower = -std::numeric_limits<double>::infinity();
            bounds[v].seen = true;
          } else if (!tk.done() && tk.peek() == "<=") {
            tk.next();
            std::string u = tk.next();
            double usign = 1.0;
            if (u == "-") {
              usign = -1.0;
              u = tk.next();
            }
            bounds[v].upper = usign * std::strtod(u.c_str(), nullptr);
            bounds[v].seen = true;
          } else {
            throw std::invalid_argument("lp parse: bad bound line at " + v);
          }
        }
      }
    } else if (keyword(sec, "general") || keyword(sec, "generals")) {
      while (!tk.done() && !section_start(tk)) {
        std::string v = tk.next();
        touch(v);
        kinds[v] = VarKind::integer;
      }
    } else if (keyword(sec, "binary") || keyword(sec, "binaries")) {
      while (!tk.done() && !section_start(tk)) {
        std::string v = tk.next();
        touch(v);
        kinds[v] = VarKind::binary;
        if (!bounds[v].seen) bounds[v].upper = 1.0;
      }
    } else {
      throw std::invalid_argument("lp parse: unexpected section " + sec);
    }
  }

  Model m;
  for (const auto& v : var_order) {
    VarKind k = kinds.count(v) ? kinds[v] : VarKind::continuous;
    double up = bounds[v].upper;
    if (k == VarKind::binary && !bounds[v].seen) up = 1.0;
    m.add_variable(v, k, bounds[v].lower, up);
  }
  for (const auto& t : obj)
    if (!t.var.empty() && t.coeff != 0.0)
      m.add_objective_coeff(m.variable_index(t.var), t.coeff);
  for (const auto& c : cons) {
    std::vector<Term> terms;
    double shift = 0.0;
    for (const auto& t : c.terms) {
      if (t.var.empty())
        shift += t.coeff;
      else
        terms.push_back({m.variable_index(t.var), t.coeff});
    }
    m.add_constraint(c.name, std::move(terms), c.sense, c.rhs - shift);
  }
  return m;
}

}  // namespace sliceprov::milp
