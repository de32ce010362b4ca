#include "invsem/io.hpp"

#include <fstream>
#include <sstream>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

// tokenizes with '#'-to-eol comments stripped
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_index(const std::string& tok, int bound, const std::string& what) {
  int value = 0;
  try {
    std::size_t pos = 0;
    value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw InvalidInput(what + ": expected an index, got '" + tok + "'");
  }
  if (value < 0 || (bound >= 0 && value >= bound))
    throw InvalidInput(what + ": index " + tok + " out of range");
  return value;
}

}  // namespace

SgpData read_sgp(std::istream& in) {
  auto tokens = tokenize(in);
  if (tokens.empty()) throw InvalidInput("sgp: empty input");
  std::size_t pos = 0;
  int n = parse_index(tokens[pos++], -1, "sgp order");
  SgpData data;
  data.order = n;
  data.table.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    if (pos >= tokens.size())
      throw InvalidInput("sgp: table truncated, expected " +
                         std::to_string(n * n) + " entries");
    data.table.push_back(parse_index(tokens[pos++], n, "sgp table"));
  }
  if (pos < tokens.size()) {
    if (tokens[pos] != "inv:")
      throw InvalidInput("sgp: unexpected token '" + tokens[pos] + "'");
    ++pos;
    std::vector<int> inv;
    for (int i = 0; i < n; ++i) {
      if (pos >= tokens.size()) throw InvalidInput("sgp: inv line truncated");
      inv.push_back(parse_index(tokens[pos++], n, "sgp inv"));
    }
    data.inv = std::move(inv);
  }
  if (pos != tokens.size())
    throw InvalidInput("sgp: trailing tokens after the table");
  return data;
}

SgpData read_sgp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_sgp(in);
}

Semilattice read_slt(std::istream& in) {
  auto tokens = tokenize(in);
  if (tokens.empty()) throw InvalidInput("slt: empty input");
  std::size_t pos = 0;
  int n = parse_index(tokens[pos++], -1, "slt order");
  if (pos >= tokens.size()) {
    if (n == 0) return Semilattice::from_meet_table(0, {});
    throw InvalidInput("slt: missing meet: or hasse: section");
  }
  const std::string section = tokens[pos++];
  if (section == "meet:") {
    std::vector<int> meet;
    for (int i = 0; i < n * n; ++i) {
      if (pos >= tokens.size()) throw InvalidInput("slt: meet table truncated");
      meet.push_back(parse_index(tokens[pos++], n, "slt meet"));
    }
    if (pos != tokens.size()) throw InvalidInput("slt: trailing tokens");
    return Semilattice::from_meet_table(n, std::move(meet));
  }
  if (section == "hasse:") {
    std::vector<std::pair<int, int>> below;
    while (pos < tokens.size()) {
      if (pos + 3 > tokens.size() || tokens[pos + 1] != "<")
        throw InvalidInput("slt: expected lines of the form `i < j`");
      int lo = parse_index(tokens[pos], n, "slt hasse");
      int hi = parse_index(tokens[pos + 2], n, "slt hasse");
      below.emplace_back(lo, hi);
      pos += 3;
    }
    return Semilattice::from_covers(n, below);
  }
  throw InvalidInput("slt: unknown section '" + section + "'");
}

Semilattice read_slt_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_slt(in);
}

std::string write_sgp(const FiniteInverseSemigroup& s) {
  std::ostringstream os;
  const int n = s.order();
  os << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << s.product(i, j);
    }
    os << "\n";
  }
  os << "inv:";
  for (int i = 0; i < n; ++i) os << ' ' << s.inverse(i);
  os << "\n";
  return os.str();
}

InputKind guess_kind(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".slt") == 0)
    return InputKind::slt;
  return InputKind::sgp;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace invsem
