#include "charval/group_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "charval/error.hpp"

namespace charval {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Permutation parse_generator(std::string_view text, int degree, std::size_t line) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* open = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) fail(line, i + 1, "nested '('");
      cycles.emplace_back();
      open = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!open) fail(line, i + 1, "unmatched ')'");
      open = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) fail(line, i + 1, "point outside a cycle");
      std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) fail(line, start + 1, "point too large");
        ++i;
      }
      if (value < 1 || value > degree) {
        fail(line, start + 1, "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      open->push_back(static_cast<int>(value - 1));
    } else {
      fail(line, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  if (open) fail(line, text.size() + 1, "unterminated cycle");
  try {
    return perm_from_cycles(cycles, degree);
  } catch (const Error& e) {
    fail(line, 1, e.what());
  }
}

}  // namespace

GroupDescription parse_group_text(std::string_view text) {
  GroupDescription description;
  bool have_degree = false;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(pos, end - pos));
    ++line_number;
    pos = end + 1;
    if (is_blank(line)) continue;
    if (!have_degree) {
      std::istringstream in{std::string(line)};
      std::string keyword;
      long degree = 0;
      std::string rest;
      if (!(in >> keyword) || keyword != "degree") fail(line_number, 1, "expected `degree N`");
      if (!(in >> degree) || degree < 1) fail(line_number, 8, "degree must be a positive integer");
      if (in >> rest) fail(line_number, 1, "trailing text after degree");
      description.degree = static_cast<int>(degree);
      have_degree = true;
      continue;
    }
    description.generators.push_back(parse_generator(line, description.degree, line_number));
  }
  if (!have_degree) fail(line_number == 0 ? 1 : line_number, 1, "missing `degree N` line");
  return description;
}

GroupDescription read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str());
}

std::string format_group_text(int degree, const std::vector<Permutation>& generators) {
  std::string out = "degree " + std::to_string(degree) + "\n";
  for (const auto& g : generators) out += g.to_cycle_string() + "\n";
  return out;
}

}  // namespace charval
