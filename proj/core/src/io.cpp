#include "legfront/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "legfront/error.hpp"

namespace legfront {

namespace {

struct Token {
  std::string_view text;
  std::size_t line, column;
};

// Whitespace-separated tokens with '#' comments stripped.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
    } else {
      const std::size_t start = i, start_col = column;
      while (i < text.size() && text[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++column;
      }
      out.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

bool parse_int(std::string_view s, int& value) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

FrontDiagram parse_front(std::string_view text) {
  std::vector<FrontEvent> events;
  for (const Token& t : tokenize(text)) {
    const char head = t.text.front();
    EventKind kind;
    if (head == 'L') {
      kind = EventKind::LeftCusp;
    } else if (head == 'R') {
      kind = EventKind::RightCusp;
    } else if (head == 'X') {
      kind = EventKind::Crossing;
    } else {
      throw Error::syntax("unknown event '" + std::string(t.text) + "'", t.line, t.column);
    }
    const std::string_view digits = t.text.substr(1);
    int position = 0;
    if (!all_digits(digits) || !parse_int(digits, position)) {
      throw Error::syntax("expected a strand position after '" + std::string(1, head) +
                              "' in '" + std::string(t.text) + "'",
                          t.line, t.column + 1);
    }
    events.push_back({kind, position});
  }
  return FrontDiagram::validate(std::move(events));
}

std::string serialize_front(const FrontDiagram& d) {
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += ' ';
    out += to_string(d[k]);
  }
  out += '\n';
  return out;
}

GridDiagram parse_grid(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t i = 0;
  auto expect = [&](std::string_view word) {
    if (i >= tokens.size()) {
      const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
      throw Error::syntax("expected '" + std::string(word) + "' before end of input", line, 1);
    }
    if (tokens[i].text != word) {
      throw Error::syntax("expected '" + std::string(word) + "', found '" +
                              std::string(tokens[i].text) + "'",
                          tokens[i].line, tokens[i].column);
    }
    ++i;
  };
  auto number = [&]() {
    if (i >= tokens.size()) {
      const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
      throw Error::syntax("expected a number before end of input", line, 1);
    }
    int v = 0;
    if (!all_digits(tokens[i].text) || !parse_int(tokens[i].text, v)) {
      throw Error::syntax("expected a number, found '" + std::string(tokens[i].text) + "'",
                          tokens[i].line, tokens[i].column);
    }
    ++i;
    return v;
  };

  expect("grid");
  const int n = number();
  std::vector<int> xs, os;
  expect("X:");
  for (int k = 0; k < n; ++k) xs.push_back(number());
  expect("O:");
  for (int k = 0; k < n; ++k) os.push_back(number());
  if (i != tokens.size()) {
    throw Error::syntax("trailing input '" + std::string(tokens[i].text) + "'",
                        tokens[i].line, tokens[i].column);
  }
  return GridDiagram::validate(std::move(xs), std::move(os));
}

std::string serialize_grid(const GridDiagram& g) {
  std::ostringstream os;
  os << "grid " << g.size() << "\nX:";
  for (int v : g.xs()) os << ' ' << v;
  os << "\nO:";
  for (int v : g.os()) os << ' ' << v;
  os << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

}  // namespace legfront
