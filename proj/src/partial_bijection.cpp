#include "invsem/partial_bijection.hpp"

#include <algorithm>
#include <sstream>

#include "invsem/errors.hpp"

namespace invsem {

PartialBijection::PartialBijection(std::size_t universe_size,
                                   std::vector<int> mapping)
    : _map(std::move(mapping)) {
  if (_map.size() != universe_size)
    throw InvalidInput("partial bijection: mapping length " +
                       std::to_string(_map.size()) + " != universe size " +
                       std::to_string(universe_size));
  std::vector<char> seen(universe_size, 0);
  for (std::size_t i = 0; i < _map.size(); ++i) {
    int j = _map[i];
    if (j == undefined) continue;
    if (j < 0 || static_cast<std::size_t>(j) >= universe_size)
      throw InvalidInput("partial bijection: image " + std::to_string(j) +
                         " of " + std::to_string(i) + " out of range");
    if (seen[j])
      throw InvalidInput("partial bijection: not injective, image " +
                         std::to_string(j) + " repeated");
    seen[j] = 1;
  }
}

PartialBijection PartialBijection::identity(std::size_t universe_size) {
  PartialBijection pb(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) pb._map[i] = static_cast<int>(i);
  return pb;
}

PartialBijection PartialBijection::partial_identity(
    std::size_t universe_size, const std::vector<int>& domain) {
  PartialBijection pb(universe_size);
  for (int i : domain) {
    if (i < 0 || static_cast<std::size_t>(i) >= universe_size)
      throw InvalidInput("partial identity: point out of range");
    pb._map[i] = i;
  }
  return pb;
}

std::size_t PartialBijection::rank() const {
  std::size_t r = 0;
  for (int v : _map)
    if (v != undefined) ++r;
  return r;
}

std::vector<int> PartialBijection::domain() const {
  std::vector<int> d;
  for (std::size_t i = 0; i < _map.size(); ++i)
    if (_map[i] != undefined) d.push_back(static_cast<int>(i));
  return d;
}

std::vector<int> PartialBijection::image() const {
  std::vector<int> im;
  for (int v : _map)
    if (v != undefined) im.push_back(v);
  std::sort(im.begin(), im.end());
  return im;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection inv(_map.size());
  for (std::size_t i = 0; i < _map.size(); ++i)
    if (_map[i] != undefined) inv._map[_map[i]] = static_cast<int>(i);
  return inv;
}

bool PartialBijection::is_idempotent() const {
  for (std::size_t i = 0; i < _map.size(); ++i)
    if (_map[i] != undefined && _map[i] != static_cast<int>(i)) return false;
  return true;
}

bool PartialBijection::is_restriction_of(const PartialBijection& other) const {
  if (_map.size() != other._map.size())
    throw InvalidInput("natural_leq: universe size mismatch");
  for (std::size_t i = 0; i < _map.size(); ++i)
    if (_map[i] != undefined && _map[i] != other._map[i]) return false;
  return true;
}

std::uint64_t PartialBijection::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ _map.size();
  for (int v : _map) {
    h ^= static_cast<std::uint64_t>(v + 1);
    h *= 1099511628211ull;
  }
  return h;
}

std::string PartialBijection::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::size_t i = 0; i < _map.size(); ++i) {
    if (_map[i] == undefined) continue;
    if (!first) os << ", ";
    first = false;
    os << i << "↦" << _map[i];
  }
  os << "]/n=" << _map.size();
  return os.str();
}

PartialBijection compose(const PartialBijection& a, const PartialBijection& b) {
  if (a.universe_size() != b.universe_size())
    throw InvalidInput("compose: universe size mismatch (" +
                       std::to_string(a.universe_size()) + " vs " +
                       std::to_string(b.universe_size()) + ")");
  std::vector<int> m(a.universe_size(), PartialBijection::undefined);
  for (std::size_t i = 0; i < a.universe_size(); ++i) {
    int j = a.apply(static_cast<int>(i));
    if (j == PartialBijection::undefined) continue;
    m[i] = b.apply(j);
  }
  return PartialBijection(a.universe_size(), std::move(m));
}

bool natural_leq(const PartialBijection& a, const PartialBijection& b) {
  return a.is_restriction_of(b);
}

std::ostream& operator<<(std::ostream& os, const PartialBijection& pb) {
  return os << pb.to_string();
}

}  // namespace invsem
