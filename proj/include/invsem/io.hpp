// io.hpp -- .sgp and .slt file formats
//
// .sgp (UTF-8 text): line 1 `n`; lines 2..n+1 hold n space-separated
// element indices each (row i lists the products i*j); optionally a line
// `inv:` followed by n indices. Comments run from '#' to end of line.
//
// .slt: line 1 `n`; then either `meet:` followed by n rows of n indices,
// or `hasse:` followed by lines `i < j`. Comments as above.
#ifndef INVSEM_IO_HPP_
#define INVSEM_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "invsem/semigroup.hpp"
#include "invsem/semilattice.hpp"

namespace invsem {

struct SgpData {
  int order = 0;
  std::vector<int> table;
  std::optional<std::vector<int>> inv;
};

SgpData read_sgp(std::istream& in);
SgpData read_sgp_file(const std::string& path);
Semilattice read_slt(std::istream& in);
Semilattice read_slt_file(const std::string& path);

// canonical serialization (table rows, then an inv: line)
std::string write_sgp(const FiniteInverseSemigroup& s);

enum class InputKind { sgp, slt };
// by file extension; ".slt" -> slt, anything else -> sgp
InputKind guess_kind(const std::string& path);

// FNV-1a 64-bit over the raw bytes, as "fnv1a64:<hex>"
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace invsem

#endif  // INVSEM_IO_HPP_
