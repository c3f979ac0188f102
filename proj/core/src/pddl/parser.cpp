// Copyright 2026 The plan-x Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planx/pddl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <unordered_set>

namespace planx::pddl {
namespace {

struct Token {
  enum class Kind { LParen, RParen, Symbol, Integer, End };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t number = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& file,
        std::vector<Diagnostic>& diags)
      : text_(text), file_(file), diags_(diags) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      tok.kind = Token::Kind::LParen;
      tok.text = "(";
      return tok;
    }
    if (c == ')') {
      advance();
      tok.kind = Token::Kind::RParen;
      tok.text = ")";
      return tok;
    }
    std::string word;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) {
      word.push_back(text_[pos_]);
      advance();
    }
    if (word.empty()) {
      error(tok.line, tok.col,
            std::string("lexical error: unexpected character '") + c + "'");
      advance();
      return next();
    }
    bool numeric = !word.empty() &&
                   std::all_of(word.begin(), word.end(), [](unsigned char ch) {
                     return std::isdigit(ch);
                   });
    if (numeric) {
      tok.kind = Token::Kind::Integer;
      std::from_chars(word.data(), word.data() + word.size(), tok.number);
      tok.text = word;
      return tok;
    }
    for (char ch : word) {
      unsigned char u = static_cast<unsigned char>(ch);
      if (!(std::isalnum(u) || ch == '-' || ch == '_' || ch == '?' ||
            ch == ':' || ch == '=' || ch == '.')) {
        error(tok.line, tok.col,
              "lexical error: invalid character '" + std::string(1, ch) +
                  "' in token '" + word + "'");
        break;
      }
    }
    tok.kind = Token::Kind::Symbol;
    tok.text = to_lower(std::move(word));
    return tok;
  }

 private:
  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void error(int line, int col, const std::string& msg) {
    diags_.push_back({file_, line, col, msg});
  }

  std::string_view text_;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// S-expression tree built before semantic analysis, so diagnostics can point
// at the offending node.
struct Node {
  bool is_list = false;
  Token token;              // leaf only
  std::vector<Node> items;  // list only
  int line = 1;
  int col = 1;

  bool is_symbol(std::string_view s) const {
    return !is_list && token.kind == Token::Kind::Symbol && token.text == s;
  }
  const std::string& text() const { return token.text; }
};

class Reader {
 public:
  Reader(std::string_view text, const std::string& file,
         std::vector<Diagnostic>& diags)
      : lexer_(text, file, diags), file_(file), diags_(diags) {
    cur_ = lexer_.next();
  }

  // Reads every top-level form in the input.
  std::vector<Node> read_all() {
    std::vector<Node> forms;
    while (cur_.kind != Token::Kind::End && diags_.empty()) {
      forms.push_back(read());
    }
    return forms;
  }

 private:
  Node read() {
    Node node;
    node.line = cur_.line;
    node.col = cur_.col;
    if (cur_.kind == Token::Kind::LParen) {
      node.is_list = true;
      next();
      while (cur_.kind != Token::Kind::RParen) {
        if (cur_.kind == Token::Kind::End) {
          diags_.push_back({file_, node.line, node.col, "unbalanced '('"});
          return node;
        }
        node.items.push_back(read());
      }
      next();
      return node;
    }
    if (cur_.kind == Token::Kind::RParen) {
      diags_.push_back({file_, cur_.line, cur_.col, "unexpected ')'"});
      next();
      return node;
    }
    node.token = cur_;
    next();
    return node;
  }

  void next() { cur_ = lexer_.next(); }

  Lexer lexer_;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  Token cur_;
};

bool valid_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '-' || c == '_';
  });
}

class Analyzer {
 public:
  Analyzer(const std::string& file, std::vector<Diagnostic>& diags)
      : file_(file), diags_(diags) {}

  void error(const Node& at, const std::string& msg) {
    diags_.push_back({file_, at.line, at.col, msg});
  }

  // Parses "name1 name2 - type name3 - type2 ..." with default type object.
  std::vector<TypedName> typed_list(const std::vector<Node>& items,
                                    size_t start = 0) {
    std::vector<TypedName> out;
    std::vector<size_t> pending;
    for (size_t i = start; i < items.size(); ++i) {
      const Node& n = items[i];
      if (n.is_list) {
        error(n, "expected a name, found a list");
        continue;
      }
      if (n.text() == "-") {
        if (i + 1 >= items.size() || items[i + 1].is_list) {
          error(n, "expected a type after '-'");
          break;
        }
        const std::string& ty = items[i + 1].text();
        for (size_t idx : pending) out[idx].type = ty;
        pending.clear();
        ++i;
        continue;
      }
      out.push_back({n.text(), "object"});
      pending.push_back(out.size() - 1);
    }
    return out;
  }

  Atom atom(const Node& n) {
    Atom a;
    if (!n.is_list || n.items.empty() || n.items[0].is_list) {
      error(n, "expected an atom (predicate args...)");
      return a;
    }
    a.pred = n.items[0].text();
    for (size_t i = 1; i < n.items.size(); ++i) {
      if (n.items[i].is_list) {
        error(n.items[i], "atom arguments must be names");
        continue;
      }
      a.args.push_back(n.items[i].text());
    }
    return a;
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
  std::vector<Diagnostic>& diags_;
};

// Checks that every atom argument is a known parameter/object whose type is a
// subtype of the predicate's declared parameter type.
void check_atom(Analyzer& az, const Domain& domain, const Atom& a,
                const Node& at,
                const std::unordered_map<std::string, std::string>& term_types,
                const std::string& where) {
  const Predicate* pred = domain.find_predicate(a.pred);
  if (pred == nullptr) {
    az.error(at, "undeclared predicate '" + a.pred + "' in " + where);
    return;
  }
  if (pred->params.size() != a.args.size()) {
    az.error(at, "arity mismatch: predicate '" + a.pred + "' takes " +
                     std::to_string(pred->params.size()) + " arguments, got " +
                     std::to_string(a.args.size()));
    return;
  }
  for (size_t i = 0; i < a.args.size(); ++i) {
    auto it = term_types.find(a.args[i]);
    if (it == term_types.end()) {
      az.error(at, (a.args[i].front() == '?' ? "unbound variable '"
                                             : "undeclared object '") +
                       a.args[i] + "' in " + where);
      continue;
    }
    if (!domain.is_subtype(it->second, pred->params[i].type)) {
      az.error(at, "type mismatch in " + where + ": argument " +
                       std::to_string(i + 1) + " of '" + a.pred + "' is '" +
                       a.args[i] + "' of type " + it->second +
                       ", expected " + pred->params[i].type);
    }
  }
}

const std::set<std::string> kSupportedRequirements = {
    ":strips", ":typing", ":action-costs", ":negative-preconditions"};

void parse_action(Analyzer& az, Domain& domain, const Node& form) {
  ActionSchema action;
  if (form.items.size() < 2 || form.items[1].is_list) {
    az.error(form, "expected action name after :action");
    return;
  }
  action.name = form.items[1].text();

  std::unordered_map<std::string, std::string> var_types;
  const Node* precondition = nullptr;
  const Node* effect = nullptr;
  for (size_t i = 2; i + 1 < form.items.size(); i += 2) {
    const Node& key = form.items[i];
    const Node& val = form.items[i + 1];
    if (key.is_symbol(":parameters")) {
      if (!val.is_list) {
        az.error(val, "expected a parameter list");
        continue;
      }
      action.params = az.typed_list(val.items);
      for (const TypedName& p : action.params) {
        if (p.name.empty() || p.name[0] != '?')
          az.error(val, "parameter '" + p.name + "' must start with '?'");
        if (!domain.has_type(p.type))
          az.error(val, "unknown type '" + p.type + "' in parameter list of '" +
                            action.name + "'");
        if (!var_types.emplace(p.name, p.type).second)
          az.error(val, "duplicate parameter '" + p.name + "'");
      }
    } else if (key.is_symbol(":precondition")) {
      precondition = &val;
    } else if (key.is_symbol(":effect")) {
      effect = &val;
    } else {
      az.error(key, "unexpected token in action body");
    }
  }

  auto literal_of = [&](const Node& n, bool allow_negated,
                        const std::string& where) -> std::optional<Literal> {
    if (n.is_list && !n.items.empty() && n.items[0].is_symbol("not")) {
      if (!allow_negated) {
        az.error(n, "negation not allowed in " + where);
        return std::nullopt;
      }
      if (n.items.size() != 2) {
        az.error(n, "(not ...) takes exactly one atom");
        return std::nullopt;
      }
      Atom a = az.atom(n.items[1]);
      check_atom(az, domain, a, n, var_types, where);
      return Literal{std::move(a), true};
    }
    Atom a = az.atom(n);
    check_atom(az, domain, a, n, var_types, where);
    return Literal{std::move(a), false};
  };

  if (precondition != nullptr && precondition->is_list &&
      !precondition->items.empty()) {
    std::vector<const Node*> conjuncts;
    if (precondition->items[0].is_symbol("and")) {
      for (size_t i = 1; i < precondition->items.size(); ++i)
        conjuncts.push_back(&precondition->items[i]);
    } else {
      conjuncts.push_back(precondition);
    }
    for (const Node* c : conjuncts) {
      auto lit = literal_of(*c, true, "precondition of '" + action.name + "'");
      if (lit) action.precondition.push_back(std::move(*lit));
    }
  }

  if (effect != nullptr && effect->is_list && !effect->items.empty()) {
    std::vector<const Node*> effects;
    if (effect->items[0].is_symbol("and")) {
      for (size_t i = 1; i < effect->items.size(); ++i)
        effects.push_back(&effect->items[i]);
    } else {
      effects.push_back(effect);
    }
    for (const Node* e : effects) {
      if (e->is_list && !e->items.empty() && e->items[0].is_symbol("increase")) {
        if (action.cost.kind != CostTerm::Kind::None) {
          az.error(*e, "multiple (increase ...) clauses in '" + action.name + "'");
          continue;
        }
        if (e->items.size() != 3 || !e->items[1].is_list ||
            e->items[1].items.size() != 1 ||
            !e->items[1].items[0].is_symbol("total-cost")) {
          az.error(*e, "only (increase (total-cost) <amount>) is supported");
          continue;
        }
        const Node& amount = e->items[2];
        if (!amount.is_list && amount.token.kind == Token::Kind::Integer) {
          action.cost.kind = CostTerm::Kind::Constant;
          action.cost.constant = amount.token.number;
        } else if (amount.is_list && amount.items.size() == 2 &&
                   !amount.items[0].is_list && !amount.items[1].is_list &&
                   amount.items[1].text().front() == '?') {
          action.cost.kind = CostTerm::Kind::Fluent;
          action.cost.fluent = amount.items[0].text();
          action.cost.fluent_arg = amount.items[1].text();
          const FluentDecl* fl = domain.find_fluent(action.cost.fluent);
          if (fl == nullptr) {
            az.error(amount, "undeclared fluent '" + action.cost.fluent + "'");
          } else if (fl->params.size() != 1) {
            az.error(amount, "cost fluent '" + action.cost.fluent +
                                 "' must take exactly one parameter");
          }
          auto it = var_types.find(action.cost.fluent_arg);
          if (it == var_types.end()) {
            az.error(amount, "unbound variable '" + action.cost.fluent_arg +
                                 "' in cost term");
          } else if (fl != nullptr && fl->params.size() == 1 &&
                     !domain.is_subtype(it->second, fl->params[0].type)) {
            az.error(amount, "cost fluent argument type mismatch");
          }
        } else {
          az.error(amount, "cost amount must be an integer or (fluent ?param)");
        }
        continue;
      }
      auto lit = literal_of(*e, true, "effect of '" + action.name + "'");
      if (!lit) continue;
      if (lit->negated)
        action.delete_effects.push_back(std::move(lit->atom));
      else
        action.add_effects.push_back(std::move(lit->atom));
    }
  }

  if (domain.find_action(action.name) != nullptr)
    az.error(form, "duplicate action '" + action.name + "'");
  domain.actions.push_back(std::move(action));
  domain.rebuild_index();
}

}  // namespace

ParseResult<Domain> parse_domain(std::string_view text,
                                 const std::string& filename) {
  ParseResult<Domain> result;
  Reader reader(text, filename, result.diagnostics);
  std::vector<Node> forms = reader.read_all();
  if (!result.diagnostics.empty()) return result;
  Analyzer az(filename, result.diagnostics);

  if (forms.size() != 1 || !forms[0].is_list || forms[0].items.size() < 2 ||
      !forms[0].items[0].is_symbol("define")) {
    Node at = forms.empty() ? Node{} : forms[0];
    az.error(at, "expected a single (define (domain ...) ...) form");
    return result;
  }
  const Node& define = forms[0];
  const Node& head = define.items[1];
  if (!head.is_list || head.items.size() != 2 || !head.items[0].is_symbol("domain")) {
    az.error(head, "expected (domain <name>)");
    return result;
  }

  Domain domain;
  domain.name = head.items[1].text();
  domain.rebuild_index();

  for (size_t i = 2; i < define.items.size(); ++i) {
    const Node& section = define.items[i];
    if (!section.is_list || section.items.empty() || section.items[0].is_list) {
      az.error(section, "expected a (:section ...) form");
      continue;
    }
    const std::string& tag = section.items[0].text();
    if (tag == ":requirements") {
      for (size_t k = 1; k < section.items.size(); ++k) {
        const std::string& req = section.items[k].text();
        domain.requirements.push_back(req);
        if (!kSupportedRequirements.count(req))
          az.error(section.items[k], "unsupported requirement '" + req + "'");
      }
    } else if (tag == ":types") {
      for (TypedName& t : az.typed_list(section.items, 1)) {
        if (!valid_name(t.name))
          az.error(section, "invalid type name '" + t.name + "'");
        if (t.name == "object") {
          az.error(section, "'object' is implicit and cannot be redeclared");
          continue;
        }
        domain.types.push_back(std::move(t));
      }
      domain.rebuild_index();
      // Parents must themselves be declared (or be object); the hierarchy is
      // a forest rooted at object, so a cycle shows up as an undeclared or
      // repeated name on the path to the root.
      for (const TypedName& t : domain.types) {
        if (!domain.has_type(t.type))
          az.error(section, "unknown parent type '" + t.type + "' of '" +
                                t.name + "'");
      }
      std::unordered_set<std::string> seen;
      for (const TypedName& t : domain.types) {
        if (!seen.insert(t.name).second)
          az.error(section, "type '" + t.name + "' declared twice");
      }
      for (const TypedName& t : domain.types) {
        std::unordered_set<std::string> path;
        std::string cur = t.name;
        while (cur != "object" && domain.has_type(cur)) {
          if (!path.insert(cur).second) {
            az.error(section, "cyclic type hierarchy at '" + cur + "'");
            break;
          }
          const TypedName* tn = nullptr;
          for (const TypedName& cand : domain.types)
            if (cand.name == cur) tn = &cand;
          if (tn == nullptr) break;
          cur = tn->type;
        }
      }
    } else if (tag == ":predicates") {
      for (size_t k = 1; k < section.items.size(); ++k) {
        const Node& p = section.items[k];
        if (!p.is_list || p.items.empty() || p.items[0].is_list) {
          az.error(p, "expected (name ?v - type ...)");
          continue;
        }
        Predicate pred;
        pred.name = p.items[0].text();
        pred.params = az.typed_list(p.items, 1);
        std::unordered_set<std::string> names;
        for (const TypedName& param : pred.params) {
          if (param.name.empty() || param.name[0] != '?')
            az.error(p, "predicate parameters must start with '?'");
          if (!domain.has_type(param.type))
            az.error(p, "unknown type '" + param.type + "' in predicate '" +
                            pred.name + "'");
          if (!names.insert(param.name).second)
            az.error(p, "duplicate variable '" + param.name +
                            "' in predicate '" + pred.name + "'");
        }
        if (domain.find_predicate(pred.name) != nullptr)
          az.error(p, "predicate '" + pred.name + "' declared twice");
        domain.predicates.push_back(std::move(pred));
        domain.rebuild_index();
      }
    } else if (tag == ":functions") {
      for (size_t k = 1; k < section.items.size(); ++k) {
        const Node& f = section.items[k];
        if (!f.is_list || f.items.empty() || f.items[0].is_list) {
          az.error(f, "expected (name ?v - type ...)");
          continue;
        }
        FluentDecl fl;
        fl.name = f.items[0].text();
        fl.params = az.typed_list(f.items, 1);
        for (const TypedName& param : fl.params)
          if (!domain.has_type(param.type))
            az.error(f, "unknown type '" + param.type + "' in fluent '" +
                            fl.name + "'");
        domain.fluents.push_back(std::move(fl));
        domain.rebuild_index();
      }
    } else if (tag == ":constants") {
      for (TypedName& c : az.typed_list(section.items, 1)) {
        if (!domain.has_type(c.type))
          az.error(section, "unknown type '" + c.type + "' of constant '" +
                                c.name + "'");
        domain.constants.push_back(std::move(c));
      }
      domain.rebuild_index();
    } else if (tag == ":action") {
      parse_action(az, domain, section);
    } else {
      az.error(section, "unsupported section '" + tag + "'");
    }
  }

  if (!result.diagnostics.empty()) return result;
  result.value = std::move(domain);
  return result;
}

namespace {

// Shared by parse_problem and parse_literal_list: interprets one s-expression
// as a literal or numeric assignment.
bool read_init_item(Analyzer& az, const Node& n, std::vector<Literal>& literals,
                    std::vector<FluentAssignment>& fluents, bool allow_negated) {
  if (!n.is_list || n.items.empty()) {
    az.error(n, "expected a literal");
    return false;
  }
  if (n.items[0].is_symbol("=")) {
    if (n.items.size() != 3 || !n.items[1].is_list ||
        n.items[1].items.empty() || n.items[2].is_list ||
        n.items[2].token.kind != Token::Kind::Integer) {
      az.error(n, "expected (= (fluent args...) <integer>)");
      return false;
    }
    FluentAssignment fa;
    fa.fluent = n.items[1].items[0].text();
    for (size_t i = 1; i < n.items[1].items.size(); ++i)
      fa.args.push_back(n.items[1].items[i].text());
    fa.value = n.items[2].token.number;
    fluents.push_back(std::move(fa));
    return true;
  }
  if (n.items[0].is_symbol("not")) {
    if (!allow_negated) {
      az.error(n, "negated literal not allowed here");
      return false;
    }
    if (n.items.size() != 2) {
      az.error(n, "(not ...) takes exactly one atom");
      return false;
    }
    Atom a = az.atom(n.items[1]);
    literals.push_back({std::move(a), true});
    return true;
  }
  Atom a = az.atom(n);
  literals.push_back({std::move(a), false});
  return true;
}

}  // namespace

ParseResult<Problem> parse_problem(std::string_view text, const Domain& domain,
                                   const std::string& filename) {
  ParseResult<Problem> result;
  Reader reader(text, filename, result.diagnostics);
  std::vector<Node> forms = reader.read_all();
  if (!result.diagnostics.empty()) return result;
  Analyzer az(filename, result.diagnostics);

  if (forms.size() != 1 || !forms[0].is_list || forms[0].items.size() < 2 ||
      !forms[0].items[0].is_symbol("define")) {
    Node at = forms.empty() ? Node{} : forms[0];
    az.error(at, "expected a single (define (problem ...) ...) form");
    return result;
  }
  const Node& define = forms[0];
  const Node& head = define.items[1];
  if (!head.is_list || head.items.size() != 2 ||
      !head.items[0].is_symbol("problem")) {
    az.error(head, "expected (problem <name>)");
    return result;
  }

  Problem problem;
  problem.name = head.items[1].text();

  // Term type map for ground literal checking: constants plus objects.
  std::unordered_map<std::string, std::string> term_types;
  for (const TypedName& c : domain.constants) term_types[c.name] = c.type;

  std::vector<std::pair<const Node*, Atom>> init_atoms;
  std::vector<std::pair<const Node*, Literal>> goal_literals;
  const Node* init_section = nullptr;
  const Node* goal_section = nullptr;

  for (size_t i = 2; i < define.items.size(); ++i) {
    const Node& section = define.items[i];
    if (!section.is_list || section.items.empty() || section.items[0].is_list) {
      az.error(section, "expected a (:section ...) form");
      continue;
    }
    const std::string& tag = section.items[0].text();
    if (tag == ":domain") {
      if (section.items.size() == 2) problem.domain_name = section.items[1].text();
      if (problem.domain_name != domain.name)
        az.error(section, "problem references domain '" + problem.domain_name +
                              "' but was parsed against '" + domain.name + "'");
    } else if (tag == ":objects") {
      for (TypedName& obj : az.typed_list(section.items, 1)) {
        if (!domain.has_type(obj.type))
          az.error(section, "unknown type '" + obj.type + "' of object '" +
                                obj.name + "'");
        if (term_types.count(obj.name))
          az.error(section, "object '" + obj.name + "' declared twice");
        term_types[obj.name] = obj.type;
        problem.objects.push_back(std::move(obj));
      }
    } else if (tag == ":init") {
      init_section = &section;
    } else if (tag == ":goal") {
      goal_section = &section;
    } else if (tag == ":metric") {
      if (section.items.size() == 3 && section.items[1].is_symbol("minimize") &&
          section.items[2].is_list && section.items[2].items.size() == 1 &&
          section.items[2].items[0].is_symbol("total-cost")) {
        problem.minimize_total_cost = true;
      } else {
        az.error(section, "only (:metric minimize (total-cost)) is supported");
      }
    } else {
      az.error(section, "unsupported section '" + tag + "'");
    }
  }

  if (init_section != nullptr) {
    for (size_t k = 1; k < init_section->items.size(); ++k) {
      const Node& n = init_section->items[k];
      std::vector<Literal> lits;
      if (!read_init_item(az, n, lits, problem.init_fluents, false)) continue;
      for (Literal& lit : lits) {
        check_atom(az, domain, lit.atom, n, term_types, "init");
        problem.init.push_back(std::move(lit.atom));
      }
    }
  }

  if (goal_section != nullptr) {
    if (goal_section->items.size() != 2 || !goal_section->items[1].is_list) {
      az.error(*goal_section, "expected (:goal <condition>)");
    } else {
      const Node& cond = goal_section->items[1];
      std::vector<const Node*> conjuncts;
      if (!cond.items.empty() && cond.items[0].is_symbol("and")) {
        for (size_t k = 1; k < cond.items.size(); ++k)
          conjuncts.push_back(&cond.items[k]);
      } else if (!cond.items.empty()) {
        conjuncts.push_back(&cond);
      }
      for (const Node* c : conjuncts) {
        if (c->is_list && !c->items.empty() &&
            (c->items[0].is_symbol("or") || c->items[0].is_symbol("and") ||
             c->items[0].is_symbol("forall") || c->items[0].is_symbol("exists") ||
             c->items[0].is_symbol("imply"))) {
          az.error(*c, "goal must be a conjunction of ground literals");
          continue;
        }
        std::vector<Literal> lits;
        std::vector<FluentAssignment> unused;
        if (!read_init_item(az, *c, lits, unused, true)) continue;
        if (!unused.empty()) {
          az.error(*c, "numeric assignment not allowed in goal");
          continue;
        }
        for (Literal& lit : lits) {
          check_atom(az, domain, lit.atom, *c, term_types, "goal");
          problem.goal.push_back(std::move(lit));
        }
      }
    }
  }

  // Normalization: problems over cost-bearing domains carry an explicit
  // (= (total-cost) 0) even when the source text omits it.
  if (domain.has_positive_costs() &&
      domain.find_fluent("total-cost") != nullptr) {
    bool has_total_cost = false;
    for (const FluentAssignment& fa : problem.init_fluents)
      if (fa.fluent == "total-cost") has_total_cost = true;
    if (!has_total_cost) problem.init_fluents.push_back({"total-cost", {}, 0});
  }

  for (const FluentAssignment& fa : problem.init_fluents) {
    const FluentDecl* fl = domain.find_fluent(fa.fluent);
    if (fl == nullptr) {
      az.error(*init_section, "numeric assignment to undeclared fluent '" +
                                  fa.fluent + "'");
      continue;
    }
    if (fl->params.size() != fa.args.size()) {
      az.error(*init_section, "fluent '" + fa.fluent + "' takes " +
                                  std::to_string(fl->params.size()) +
                                  " arguments");
      continue;
    }
    for (size_t i = 0; i < fa.args.size(); ++i) {
      auto it = term_types.find(fa.args[i]);
      if (it == term_types.end())
        az.error(*init_section,
                 "undeclared object '" + fa.args[i] + "' in fluent assignment");
      else if (!domain.is_subtype(it->second, fl->params[i].type))
        az.error(*init_section,
                 "type mismatch in assignment to '" + fa.fluent + "'");
    }
    if (fa.value < 0)
      az.error(*init_section, "fluent '" + fa.fluent + "' must be non-negative");
  }

  if (!result.diagnostics.empty()) return result;
  result.value = std::move(problem);
  return result;
}

ParseResult<LiteralList> parse_literal_list(std::string_view text,
                                            const std::string& context) {
  ParseResult<LiteralList> result;
  Reader reader(text, context, result.diagnostics);
  std::vector<Node> forms = reader.read_all();
  if (!result.diagnostics.empty()) return result;
  Analyzer az(context, result.diagnostics);

  // Accept one (and ...) wrapper around the whole sequence.
  if (forms.size() == 1 && forms[0].is_list && !forms[0].items.empty() &&
      forms[0].items[0].is_symbol("and")) {
    std::vector<Node> inner(forms[0].items.begin() + 1, forms[0].items.end());
    forms = std::move(inner);
  } else if (forms.size() == 1 && forms[0].is_list && forms[0].items.empty()) {
    forms.clear();  // bare (and) or ()
  }

  LiteralList list;
  for (const Node& n : forms) {
    read_init_item(az, n, list.literals, list.fluents, true);
  }
  if (!result.diagnostics.empty()) return result;
  result.value = std::move(list);
  return result;
}

}  // namespace planx::pddl
