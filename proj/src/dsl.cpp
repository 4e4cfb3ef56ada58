#include <cctype>
#include <stdexcept>
#include <string>

#include "ehrhart/cli.hpp"

namespace ehrhart::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    std::string name = ident();
    expect('(');
    ExprPtr result;
    if (name == "S" || name == "T" || name == "crossodd" || name == "box") {
      long a = integer();
      expect(',');
      long b = integer();
      if (name == "S") result = expr_s(a, b);
      else if (name == "T") result = expr_t(a, b);
      else if (name == "crossodd") result = expr_cross_odd(a, b);
      else result = expr_box(a, b);
    } else if (name == "simplex" || name == "unitcube" || name == "symcube" ||
               name == "cross") {
      long d = integer();
      if (name == "simplex") result = expr_simplex(d);
      else if (name == "unitcube") result = expr_unit_cube(d);
      else if (name == "symcube") result = expr_sym_cube(d);
      else result = expr_cross(d);
    } else if (name == "join") {
      ExprPtr l = expr();
      expect(',');
      ExprPtr r = expr();
      result = expr_join(std::move(l), std::move(r));
    } else if (name == "prism" || name == "dilate") {
      ExprPtr inner = expr();
      expect(',');
      long v = integer();
      result = name == "prism" ? expr_prism(std::move(inner), v)
                               : expr_dilate(std::move(inner), v);
    } else if (name == "pyr") {
      result = expr_pyramid(expr());
    } else {
      fail("unknown construction '" + name + "'");
    }
    expect(')');
    return result;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace ehrhart::cli
