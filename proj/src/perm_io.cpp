#include "saxl/perm_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "saxl/error.hpp"

namespace saxl {
namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree)
      : text_(text), degree_(degree) {}

  Permutation parse() {
    std::vector<std::vector<Point>> cycles;
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty permutation");
    while (pos_ < text_.size()) {
      expect('(');
      std::vector<Point> cycle;
      skip_space();
      if (peek() != ')') {
        cycle.push_back(number());
        skip_space();
        while (peek() == ',') {
          ++pos_;
          cycle.push_back(number());
          skip_space();
        }
      }
      expect(')');
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_space();
    }
    try {
      return Permutation::from_cycles(degree_, cycles);
    } catch (const Error& e) {
      throw ParseError(0, e.what());
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Point number() {
    skip_space();
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > degree_) throw ParseError(start, "point exceeds degree");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a point number");
    if (value == 0) throw ParseError(start, "points are 1-indexed");
    return static_cast<Point>(value - 1);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::string format_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ',';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

GeneratorFile parse_generator_file(std::istream& in) {
  GeneratorFile file;
  bool have_degree = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    if (!have_degree) {
      std::istringstream header{std::string(view)};
      std::string keyword;
      long long degree = 0;
      std::string rest;
      if (!(header >> keyword >> degree) || keyword != "degree" || degree < 1 ||
          (header >> rest)) {
        throw ParseError(0, "line " + std::to_string(line_no) +
                                ": expected header 'degree N'");
      }
      file.degree = static_cast<std::size_t>(degree);
      have_degree = true;
      continue;
    }
    try {
      file.generators.push_back(parse_cycles(view, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError(0, "missing 'degree N' header");
  return file;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_generator_file(in);
}

void write_generator_file(std::ostream& out, const GeneratorFile& file) {
  out << "degree " << file.degree << '\n';
  for (const auto& g : file.generators) out << format_cycles(g) << '\n';
}

}  // namespace saxl
