#ifndef SAXL_PERM_IO_HPP
#define SAXL_PERM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/permutation.hpp"

namespace saxl {

/// Parses disjoint-cycle notation over 1-indexed points, e.g. "(1,2,3)(4,5)".
/// "()" denotes the identity. Throws ParseError on malformed input.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Inverse of parse_cycles: 1-indexed cycles, "()" for the identity.
std::string format_cycles(const Permutation& p);

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Generator files: a mandatory "degree N" header, then one permutation per
/// line in cycle notation. Blank lines and '#' comments are ignored.
GeneratorFile parse_generator_file(std::istream& in);
GeneratorFile read_generator_file(const std::filesystem::path& path);
void write_generator_file(std::ostream& out, const GeneratorFile& file);

}  // namespace saxl

#endif  // SAXL_PERM_IO_HPP
