#include "elhgeo/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "elhgeo/error.hpp"

namespace elhgeo {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("'") + ch + "'");
    ++pos_;
  }

  std::string word(const char* what) {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail(what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string name(const char* what) {
    skip_ws();
    const auto start = pos_;
    std::string w = word(what);
    if (!is_valid_name(w)) {
      pos_ = start;
      fail(what);
    }
    return w;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(line_, pos_ + 1, expected);
  }

  std::size_t pos() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Concept concept_expr(Cursor& in) {
  in.skip_ws();
  const auto start = in.pos();
  std::string w = in.word("concept");
  if (w == "Top") return Concept::top();
  if (w == "Bottom") return Concept::bottom();
  if (w == "And") {
    in.expect('(');
    std::vector<Concept> parts;
    parts.push_back(concept_expr(in));
    do {
      parts.push_back(concept_expr(in));
    } while (!in.peek(')'));
    in.expect(')');
    Concept folded = std::move(parts.back());
    for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
      folded = Concept::conj(std::move(*it), std::move(folded));
    return folded;
  }
  if (w == "Some") {
    in.expect('(');
    std::string role = in.name("role name");
    Concept filler = concept_expr(in);
    in.expect(')');
    return Concept::exists(std::move(role), std::move(filler));
  }
  if (!is_valid_name(w)) {
    in.reset(start);
    in.fail("concept");
  }
  return Concept::atomic(std::move(w));
}

constexpr const char* kStatement =
    "SubClassOf, SubRoleOf, ClassAssertion or RoleAssertion";

Axiom statement(Cursor& in) {
  in.skip_ws();
  const auto start = in.pos();
  const std::string head = in.word(kStatement);
  const auto close = [&in](Axiom ax) {
    in.expect(')');
    if (!in.at_end()) in.fail("end of statement");
    return ax;
  };
  if (head == "SubClassOf") {
    in.expect('(');
    Concept sub = concept_expr(in);
    Concept sup = concept_expr(in);
    return close(ConceptInclusion{std::move(sub), std::move(sup)});
  }
  if (head == "SubRoleOf") {
    in.expect('(');
    std::string sub = in.name("role name");
    std::string sup = in.name("role name");
    return close(RoleInclusion{std::move(sub), std::move(sup)});
  }
  if (head == "ClassAssertion") {
    in.expect('(');
    Concept c = concept_expr(in);
    std::string ind = in.name("individual name");
    return close(ConceptAssertion{std::move(c), std::move(ind)});
  }
  if (head == "RoleAssertion") {
    in.expect('(');
    std::string role = in.name("role name");
    std::string a = in.name("individual name");
    std::string b = in.name("individual name");
    return close(RoleAssertion{std::move(role), std::move(a), std::move(b)});
  }
  in.reset(start);
  in.fail(kStatement);
}

Axiom parse_line(std::string_view line, std::size_t line_no) {
  Cursor in(line, line_no);
  Axiom ax = statement(in);
  if (contains_bottom(ax))
    throw Error(ErrorKind::BottomNotSupported,
                "line " + std::to_string(line_no) + ": Bottom is not supported");
  return ax;
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Ontology o;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos || line[first] == '#') continue;
    o.add(parse_line(line, line_no));
  }
  return o;
}

Axiom parse_axiom(std::string_view text) {
  // Surrounding blank lines are fine; exactly one statement.
  std::size_t line_no = 0;
  std::optional<Axiom> found;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r\f\v") == std::string_view::npos)
      continue;
    if (found) throw SyntaxError(line_no, 1, "a single statement");
    found = parse_line(line, line_no);
  }
  if (!found) throw SyntaxError(1, 1, "statement");
  return *found;
}

Concept parse_concept(std::string_view text) {
  Cursor in(text, 1);
  Concept c = concept_expr(in);
  if (!in.at_end()) in.fail("end of concept");
  return c;
}

std::string serialize(const Ontology& o) {
  std::vector<std::string> lines;
  lines.reserve(o.size());
  for (const auto& ax : o.tbox()) lines.push_back(to_string(ax));
  for (const auto& ax : o.abox()) lines.push_back(to_string(ax));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace elhgeo
