#include "indseq/builder.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "indseq/errors.hpp"
#include "indseq/graph6.hpp"

namespace indseq {

namespace {

bool is_family(std::string_view name) {
  return name == "path" || name == "cycle" || name == "complete" ||
         name == "empty" || name == "star" || name == "complete_bipartite" ||
         name == "union" || name == "join";
}

bool is_short(std::string_view name) {
  return name == "K" || name == "P" || name == "C" || name == "E" || name == "S";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expression();
    skip_space();
    if (at_ < text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  struct Arg {
    bool is_number = false;
    int number = 0;
    Graph graph;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("builder expression at offset " + std::to_string(at_) +
                     ": " + why);
  }

  void skip_space() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  bool peek(char c) {
    skip_space();
    return at_ < text_.size() && text_[at_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++at_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = at_;
    while (at_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_')) {
      ++at_;
    }
    if (start == at_) fail("expected a graph name");
    return std::string(text_.substr(start, at_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = at_;
    while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) ++at_;
    if (start == at_) fail("expected an integer");
    if (at_ - start > 4) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, at_ - start)));
  }

  Arg argument() {
    skip_space();
    if (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      return Arg{true, integer(), {}};
    }
    return Arg{false, 0, expression()};
  }

  Graph expression() {
    const std::string name = identifier();
    if (is_short(name) && at_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      return family(short_name(name), {Arg{true, integer(), {}}});
    }
    if (!is_family(name)) fail("unknown graph name '" + name + "'");
    expect('(');
    std::vector<Arg> args{argument()};
    while (peek(',')) {
      ++at_;
      args.push_back(argument());
    }
    expect(')');
    return family(name, args);
  }

  static std::string short_name(const std::string& letter) {
    if (letter == "K") return "complete";
    if (letter == "P") return "path";
    if (letter == "C") return "cycle";
    if (letter == "E") return "empty";
    return "star";
  }

  Graph family(const std::string& name, const std::vector<Arg>& args) {
    auto numbers = [&](std::size_t count) {
      if (args.size() != count) {
        fail(name + " takes " + std::to_string(count) + " integer argument(s)");
      }
      for (const auto& a : args) {
        if (!a.is_number) fail(name + " takes integer arguments");
      }
    };
    if (name == "union" || name == "join") {
      if (args.size() < 2) fail(name + " takes at least two graphs");
      for (const auto& a : args) {
        if (a.is_number) fail(name + " takes graph arguments");
      }
      Graph acc = args[0].graph;
      for (std::size_t i = 1; i < args.size(); ++i) {
        acc = name == "union" ? disjoint_union(acc, args[i].graph)
                              : join(acc, args[i].graph);
      }
      return acc;
    }
    if (name == "complete_bipartite") {
      numbers(2);
      return complete_bipartite(args[0].number, args[1].number);
    }
    numbers(1);
    const int n = args[0].number;
    if (name == "path") return path(n);
    if (name == "cycle") return cycle(n);
    if (name == "complete") return complete(n);
    if (name == "empty") return empty(n);
    return star(n);
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

}  // namespace

Graph parse_builder(std::string_view expression) {
  return Parser(expression).parse();
}

bool looks_like_builder(std::string_view text) {
  std::size_t at = text.find_first_not_of(" \t\r\n");
  if (at == std::string_view::npos) return false;
  std::size_t end = at;
  while (end < text.size() &&
         (std::isalpha(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
    ++end;
  }
  const std::string_view name = text.substr(at, end - at);
  if (is_family(name)) return true;
  // name( is never graph6, which has no parentheses.
  if (!name.empty() && end < text.size() && text[end] == '(') return true;
  return is_short(name) && end < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[end]));
}

Graph parse_graph_text(std::string_view text) {
  if (looks_like_builder(text)) return parse_builder(text);
  return read_graph6(text);
}

}  // namespace indseq
