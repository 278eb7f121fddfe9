#include "modrad/expr.hpp"

#include <cctype>

#include "modrad/config.hpp"

namespace modrad {
namespace expr {

namespace {

struct Tok {
  enum Kind { Id, Int, LParen, RParen, LBrack, RBrack, Comma, End } kind;
  std::string id;
  long val = 0;
  size_t pos = 0;
};

struct Lexer {
  const std::string& text;
  size_t at = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  Tok next() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    Tok t;
    t.pos = at;
    if (at >= text.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = text[at];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      size_t start = at;
      while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
        v = v * 10 + (text[at] - '0');
        if (v > 1000000000L) throw Error(Errc::ParseError, err("integer too large", start));
        ++at;
      }
      t.kind = Tok::Int;
      t.val = v;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = at;
      while (at < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[at])) || text[at] == '_'))
        ++at;
      t.kind = Tok::Id;
      t.id = text.substr(start, at - start);
      return t;
    }
    ++at;
    switch (c) {
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case '[': t.kind = Tok::LBrack; return t;
      case ']': t.kind = Tok::RBrack; return t;
      case ',': t.kind = Tok::Comma; return t;
    }
    throw Error(Errc::ParseError, err(std::string("unexpected character '") + c + "'", t.pos));
  }

  static std::string err(const std::string& what, size_t pos) {
    return what + " at offset " + std::to_string(pos);
  }
};

struct Parser {
  Lexer lex;
  Tok cur;

  explicit Parser(const std::string& t) : lex(t) { cur = lex.next(); }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError, Lexer::err(what, cur.pos));
  }

  void advance() { cur = lex.next(); }

  void expect(Tok::Kind k, const char* what) {
    if (cur.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  long take_int() {
    if (cur.kind != Tok::Int) fail("expected an integer");
    long v = cur.val;
    advance();
    return v;
  }

  // "[" int {"," int} "]", empty allowed when may_be_empty
  std::vector<long> int_list(bool may_be_empty) {
    expect(Tok::LBrack, "'['");
    std::vector<long> out;
    if (cur.kind == Tok::RBrack) {
      if (!may_be_empty) fail("expected an integer");
      advance();
      return out;
    }
    out.push_back(take_int());
    while (cur.kind == Tok::Comma) {
      advance();
      out.push_back(take_int());
    }
    expect(Tok::RBrack, "']'");
    return out;
  }

  // elem := int | "(" int {"," int} ")"
  std::vector<long> element() {
    if (cur.kind == Tok::Int) return {take_int()};
    if (cur.kind != Tok::LParen) fail("expected an element");
    advance();
    std::vector<long> out;
    out.push_back(take_int());
    while (cur.kind == Tok::Comma) {
      advance();
      out.push_back(take_int());
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  std::vector<std::vector<long>> element_list() {
    expect(Tok::LBrack, "'['");
    std::vector<std::vector<long>> out;
    if (cur.kind == Tok::RBrack) {
      advance();
      return out;
    }
    out.push_back(element());
    while (cur.kind == Tok::Comma) {
      advance();
      out.push_back(element());
    }
    expect(Tok::RBrack, "']'");
    return out;
  }

  NodePtr object() {
    auto node = top();
    if (cur.kind != Tok::End) fail("trailing input");
    return node;
  }

  NodePtr top() {
    if (cur.kind != Tok::Id) fail("expected an expression");
    const std::string head = cur.id;
    const size_t pos = cur.pos;
    if (head == "Zn" || head == "prod" || head == "idealization" || head == "loc" ||
        head == "Zmod" || head == "cyc" || head == "ideal" || head == "sub")
      return form(head, pos);
    fail("unknown form '" + head + "'");
  }

  NodePtr ring_node() {
    auto node = top();
    if (node->head == "Zn" || node->head == "prod" || node->head == "idealization" ||
        node->head == "loc")
      return node;
    throw Error(Errc::ParseError, Lexer::err("expected a ring", node->pos));
  }

  NodePtr module_node() {
    auto node = top();
    if (node->head == "Zmod" || node->head == "cyc" || node->head == "prod") return node;
    throw Error(Errc::ParseError, Lexer::err("expected a module", node->pos));
  }

  NodePtr form(const std::string& head, size_t pos) {
    advance();
    auto node = std::make_shared<Node>();
    node->head = head;
    node->pos = pos;
    expect(Tok::LParen, "'('");
    if (head == "Zn") {
      node->nums.push_back(take_int());
    } else if (head == "Zmod") {
      node->nums.push_back(take_int());
      while (cur.kind == Tok::Comma) {
        advance();
        node->nums.push_back(take_int());
      }
    } else if (head == "prod") {
      node->kids.push_back(top());
      while (cur.kind == Tok::Comma) {
        advance();
        node->kids.push_back(top());
      }
      for (const auto& kid : node->kids)
        if (kid->head == "ideal" || kid->head == "sub")
          throw Error(Errc::ParseError,
                      Lexer::err("prod argument must be a ring or a module", kid->pos));
    } else if (head == "idealization") {
      node->kids.push_back(ring_node());
      expect(Tok::Comma, "','");
      node->kids.push_back(module_node());
    } else if (head == "loc") {
      node->kids.push_back(ring_node());
      expect(Tok::Comma, "','");
      node->nums = int_list(false);
    } else if (head == "cyc" || head == "ideal") {
      node->kids.push_back(ring_node());
      expect(Tok::Comma, "','");
      node->nums = int_list(true);
    } else {  // sub
      node->kids.push_back(module_node());
      expect(Tok::Comma, "','");
      node->elems = element_list();
    }
    expect(Tok::RParen, "')'");
    return node;
  }
};

void print_into(const Node& node, std::string& out) {
  out += node.head;
  out += '(';
  if (node.head == "Zn" || node.head == "Zmod") {
    for (size_t i = 0; i < node.nums.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(node.nums[i]);
    }
  } else if (node.head == "prod") {
    for (size_t i = 0; i < node.kids.size(); ++i) {
      if (i) out += ',';
      print_into(*node.kids[i], out);
    }
  } else if (node.head == "idealization") {
    print_into(*node.kids[0], out);
    out += ',';
    print_into(*node.kids[1], out);
  } else if (node.head == "sub") {
    print_into(*node.kids[0], out);
    out += ",[";
    for (size_t i = 0; i < node.elems.size(); ++i) {
      if (i) out += ',';
      const auto& e = node.elems[i];
      if (e.size() == 1) {
        out += std::to_string(e[0]);
      } else {
        out += '(';
        for (size_t j = 0; j < e.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(e[j]);
        }
        out += ')';
      }
    }
    out += ']';
  } else {  // loc, cyc, ideal
    print_into(*node.kids[0], out);
    out += ",[";
    for (size_t i = 0; i < node.nums.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(node.nums[i]);
    }
    out += ']';
  }
  out += ')';
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  return a->kind == b->kind && a->n == b->n && a->zero == b->zero && a->one == b->one &&
         a->add == b->add && a->mul == b->mul;
}

// reinterpret a structurally identical module over the given ring instance
ModulePtr rebase(const ModulePtr& M, const RingPtr& R) {
  if (M->ring == R) return M;
  if (!same_ring(M->ring, R)) throw Error(Errc::RingMismatch, "module over a different ring");
  return Module::raw(R, M->n, M->add, M->act, M->zero, M->exponent, M->names, M->label, false);
}

RingPtr require_ring(const Value& v, size_t pos) {
  if (v.kind != ValueKind::Ring)
    throw Error(Errc::ParseError, Lexer::err("expected a ring", pos));
  if (!v.ring)
    throw Error(Errc::DegenerateLocalization, "the localization collapsed to the zero ring");
  return v.ring;
}

RingPtr product_ring(const std::vector<RingPtr>& parts) {
  bool residue = true;
  std::vector<long> moduli;
  for (const auto& p : parts) {
    if (p->kind != RingKind::ResidueProduct) {
      residue = false;
      break;
    }
    moduli.insert(moduli.end(), p->moduli.begin(), p->moduli.end());
  }
  if (residue) return Ring::residue(moduli);

  long size = 1;
  const int k = int(parts.size());
  for (const auto& p : parts) {
    size *= p->n;
    if (size > caps().carrier)
      throw Error(Errc::CapExceeded, "carrier " + std::to_string(size) + " exceeds cap " +
                                         std::to_string(caps().carrier));
  }
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * parts[i + 1]->n;
  const int n = int(size);
  std::vector<int> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  std::string label;
  for (int i = 0; i < k; ++i) label += (i ? "x" : "") + parts[i]->label;
  for (int x = 0; x < n; ++x) {
    names[x] = "(";
    for (int i = 0; i < k; ++i)
      names[x] += (i ? "," : "") + parts[i]->name_of(int(x / stride[i] % parts[i]->n));
    names[x] += ")";
    for (int y = 0; y < n; ++y) {
      long a = 0, m = 0;
      for (int i = 0; i < k; ++i) {
        int xi = int(x / stride[i] % parts[i]->n), yi = int(y / stride[i] % parts[i]->n);
        a += long(parts[i]->addv(xi, yi)) * stride[i];
        m += long(parts[i]->mulv(xi, yi)) * stride[i];
      }
      add[size_t(x) * n + y] = int(a);
      mul[size_t(x) * n + y] = int(m);
    }
  }
  long zero = 0, one = 0;
  for (int i = 0; i < k; ++i) {
    zero += long(parts[i]->zero) * stride[i];
    one += long(parts[i]->one) * stride[i];
  }
  return Ring::table(n, std::move(add), std::move(mul), int(zero), int(one), std::move(label),
                     RingKind::Table, std::move(names), false);
}

std::vector<int> check_ring_elems(const RingPtr& R, const std::vector<long>& xs, size_t pos) {
  std::vector<int> out;
  out.reserve(xs.size());
  for (long x : xs) {
    if (x < 0 || x >= R->n)
      throw Error(Errc::BadElement, Lexer::err("ring element " + std::to_string(x) +
                                                   " outside 0.." + std::to_string(R->n - 1),
                                               pos));
    out.push_back(int(x));
  }
  return out;
}

Value eval_node(const Node& node) {
  Value v;
  if (node.head == "Zn") {
    v.kind = ValueKind::Ring;
    v.ring = Ring::residue({node.nums[0]});
  } else if (node.head == "Zmod") {
    v.kind = ValueKind::Module;
    v.module = Module::integer_module(node.nums);
    v.ring = v.module->ring;
    for (long d : node.nums) v.part_sizes.push_back(int(d));
  } else if (node.head == "prod") {
    std::vector<Value> kids;
    kids.reserve(node.kids.size());
    for (const auto& kid : node.kids) kids.push_back(eval_node(*kid));
    bool rings = kids[0].kind == ValueKind::Ring;
    for (const auto& kid : kids)
      if ((kid.kind == ValueKind::Ring) != rings)
        throw Error(Errc::ParseError,
                    Lexer::err("prod arguments mix rings and modules", node.pos));
    if (rings) {
      std::vector<RingPtr> parts;
      for (size_t i = 0; i < kids.size(); ++i)
        parts.push_back(require_ring(kids[i], node.kids[i]->pos));
      v.kind = ValueKind::Ring;
      v.ring = product_ring(parts);
    } else {
      std::vector<ModulePtr> parts;
      parts.push_back(kids[0].module);
      for (size_t i = 1; i < kids.size(); ++i)
        parts.push_back(rebase(kids[i].module, parts[0]->ring));
      v.kind = ValueKind::Module;
      v.module = Module::product(parts);
      v.ring = v.module->ring;
      for (const auto& p : parts) v.part_sizes.push_back(p->n);
    }
  } else if (node.head == "idealization") {
    Value rv = eval_node(*node.kids[0]);
    Value mv = eval_node(*node.kids[1]);
    RingPtr R = require_ring(rv, node.kids[0]->pos);
    ModulePtr M = mv.module;
    if (!M->adapter()) M = rebase(M, R);
    v.kind = ValueKind::Ring;
    v.ext = idealization(R, M);
    v.ring = v.ext->ring;
  } else if (node.head == "loc") {
    Value rv = eval_node(*node.kids[0]);
    RingPtr R = require_ring(rv, node.kids[0]->pos);
    auto gens = check_ring_elems(R, node.nums, node.pos);
    v.kind = ValueKind::Ring;
    v.loc = localize_ring(R, multiplicative_set(R, gens));
    v.ring = v.loc->ring;  // stays null when the set meets zero
  } else if (node.head == "cyc") {
    Value rv = eval_node(*node.kids[0]);
    RingPtr R = require_ring(rv, node.kids[0]->pos);
    auto gens = check_ring_elems(R, node.nums, node.pos);
    v.kind = ValueKind::Module;
    v.module = Module::cyclic(R, ideal_generated(R, gens));
    v.ring = R;
  } else if (node.head == "ideal") {
    Value rv = eval_node(*node.kids[0]);
    RingPtr R = require_ring(rv, node.kids[0]->pos);
    auto gens = check_ring_elems(R, node.nums, node.pos);
    v.kind = ValueKind::Ideal;
    v.ring = R;
    v.ideal = ideal_generated(R, gens);
  } else {  // sub
    Value mv = eval_node(*node.kids[0]);
    ModulePtr M = mv.module;
    std::vector<int> gens;
    gens.reserve(node.elems.size());
    for (const auto& e : node.elems) {
      if (e.size() == 1) {
        if (e[0] < 0 || e[0] >= M->n)
          throw Error(Errc::BadElement,
                      Lexer::err("element " + std::to_string(e[0]) + " outside 0.." +
                                     std::to_string(M->n - 1),
                                 node.pos));
        gens.push_back(int(e[0]));
      } else {
        if (mv.part_sizes.size() != e.size())
          throw Error(Errc::BadElement,
                      Lexer::err("tuple arity " + std::to_string(e.size()) +
                                     " does not match the module's " +
                                     std::to_string(mv.part_sizes.size()) + " components",
                                 node.pos));
        long idx = 0;
        for (size_t i = 0; i < e.size(); ++i) {
          if (e[i] < 0 || e[i] >= mv.part_sizes[i])
            throw Error(Errc::BadElement,
                        Lexer::err("component " + std::to_string(e[i]) + " outside 0.." +
                                       std::to_string(mv.part_sizes[i] - 1),
                                   node.pos));
          idx = idx * mv.part_sizes[i] + e[i];
        }
        gens.push_back(int(idx));
      }
    }
    v.kind = ValueKind::Submodule;
    v.module = M;
    v.ring = M->ring;
    v.part_sizes = mv.part_sizes;
    v.sub = submodule_generated(M, gens);
  }
  return v;
}

}  // namespace

NodePtr parse_object(const std::string& text) { return Parser(text).object(); }

std::string print_node(const Node& node) {
  std::string out;
  print_into(node, out);
  return out;
}

Value eval_object(const Node& node) {
  Value v = eval_node(node);
  v.text = print_node(node);
  return v;
}

Value eval_object(const std::string& text) { return eval_object(*parse_object(text)); }

}  // namespace expr
}  // namespace modrad
