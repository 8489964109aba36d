#include "ignatiev/logic.hpp"

#include <vector>

#include "parse_util.hpp"

namespace ign {

struct Formula::Node {
  Kind kind;
  unsigned index = 0;
  std::vector<Formula> kids;
};

Formula Formula::top() {
  static const Formula t{std::make_shared<const Node>(Node{Kind::Top, 0, {}})};
  return t;
}

Formula Formula::conj(Formula left, Formula right) {
  return Formula{std::make_shared<const Node>(Node{Kind::And, 0, {std::move(left), std::move(right)}})};
}

Formula Formula::dia(unsigned index, Formula sub) {
  return Formula{std::make_shared<const Node>(Node{Kind::Dia, index, {std::move(sub)}})};
}

Formula Formula::nabla(unsigned index, Formula sub) {
  return Formula{std::make_shared<const Node>(Node{Kind::Nabla, index, {std::move(sub)}})};
}

Formula::Kind Formula::kind() const { return node_->kind; }
unsigned Formula::index() const { return node_->index; }
const Formula& Formula::left() const { return node_->kids[0]; }
const Formula& Formula::right() const { return node_->kids[1]; }
const Formula& Formula::child() const { return node_->kids[0]; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->index != other.node_->index) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    if (!(node_->kids[i] == other.node_->kids[i])) return false;
  }
  return true;
}

namespace {

Formula parse_conj(detail::Cursor& c);

unsigned parse_index(detail::Cursor& c) {
  std::uint64_t n = c.nat();
  if (n > 0xffffffffULL) c.fail("modality index too large");
  return static_cast<unsigned>(n);
}

Formula parse_unary(detail::Cursor& c) {
  char ch = c.peek();
  switch (ch) {
    case 'T':
      c.expect('T');
      return Formula::top();
    case '(': {
      c.expect('(');
      Formula f = parse_conj(c);
      c.expect(')');
      return f;
    }
    case 'D': {
      c.expect('D');
      unsigned n = parse_index(c);
      return Formula::dia(n, parse_unary(c));
    }
    case 'N': {
      c.expect('N');
      unsigned n = parse_index(c);
      return Formula::nabla(n, parse_unary(c));
    }
    default:
      c.fail("expected 'T', '(', 'D' or 'N'");
  }
}

Formula parse_conj(detail::Cursor& c) {
  Formula f = parse_unary(c);
  while (c.try_eat('&')) f = Formula::conj(std::move(f), parse_unary(c));
  return f;
}

void print_into(const Formula& a, std::string& out) {
  switch (a.kind()) {
    case Formula::Kind::Top:
      out += 'T';
      break;
    case Formula::Kind::And:
      out += '(';
      print_into(a.left(), out);
      out += " & ";
      print_into(a.right(), out);
      out += ')';
      break;
    case Formula::Kind::Dia:
      out += 'D';
      out += std::to_string(a.index());
      out += ' ';
      print_into(a.child(), out);
      break;
    case Formula::Kind::Nabla:
      out += 'N';
      out += std::to_string(a.index());
      out += ' ';
      print_into(a.child(), out);
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  detail::Cursor c{text};
  Formula f = parse_conj(c);
  c.expect_end();
  return f;
}

std::string print_formula(const Formula& a) {
  std::string out;
  print_into(a, out);
  return out;
}

IgnatievPoint eval(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Top:
      return IgnatievPoint::top();
    case Formula::Kind::And:
      return glb(eval(a.left()), eval(a.right()));
    case Formula::Kind::Dia:
      return diamond(a.index(), eval(a.child()));
    case Formula::Kind::Nabla:
      return nabla(a.index(), eval(a.child()));
  }
  throw std::logic_error("unreachable");
}

bool entails(const Formula& a, const Formula& b) { return leq(eval(a), eval(b)); }

}  // namespace ign
