// partial_bijection.hpp -- injective partial maps on {0,...,n-1}
//
// Composition is LEFT-TO-RIGHT throughout this project: (a * b) maps
// i to b(a(i)), i.e. a is applied first, matching the postfix x.a
// convention. Half the literature composes the other way round; every
// algorithm here (Green's relations from domains/images, Munn products,
// partial automorphism monoids) assumes this orientation.
#ifndef INVSEM_PARTIAL_BIJECTION_HPP_
#define INVSEM_PARTIAL_BIJECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace invsem {

class PartialBijection {
 public:
  static constexpr int undefined = -1;

  PartialBijection() = default;

  // the nowhere-defined map on a universe of the given size
  explicit PartialBijection(std::size_t universe_size)
      : _map(universe_size, undefined) {}

  // mapping[i] is the image of i, or `undefined`; must be injective
  PartialBijection(std::size_t universe_size, std::vector<int> mapping);

  static PartialBijection identity(std::size_t universe_size);
  // the identity restricted to `domain`
  static PartialBijection partial_identity(std::size_t universe_size,
                                           const std::vector<int>& domain);

  std::size_t universe_size() const { return _map.size(); }

  bool defined_at(int i) const { return _map[i] != undefined; }
  int apply(int i) const { return _map[i]; }

  std::size_t rank() const;
  std::vector<int> domain() const;
  std::vector<int> image() const;

  PartialBijection inverse() const;

  // true iff the map is the identity on its domain (a partial identity);
  // these are exactly the idempotents of the symmetric inverse monoid
  bool is_idempotent() const;

  // natural partial order: *this is a restriction of `other`
  bool is_restriction_of(const PartialBijection& other) const;

  const std::vector<int>& mapping() const { return _map; }

  bool operator==(const PartialBijection& other) const {
    return _map == other._map;
  }
  bool operator!=(const PartialBijection& other) const {
    return !(*this == other);
  }
  // lexicographic on (universe_size, mapping); used for canonical element order
  bool operator<(const PartialBijection& other) const {
    if (_map.size() != other._map.size()) return _map.size() < other._map.size();
    return _map < other._map;
  }

  std::uint64_t hash() const;

  // renders as "[0|->1, 2|->0]/n=3" with a UTF-8 arrow
  std::string to_string() const;

 private:
  std::vector<int> _map;
};

// a applied first, then b
PartialBijection compose(const PartialBijection& a, const PartialBijection& b);

inline PartialBijection operator*(const PartialBijection& a,
                                  const PartialBijection& b) {
  return compose(a, b);
}

inline PartialBijection invert(const PartialBijection& a) {
  return a.inverse();
}

inline bool is_idempotent(const PartialBijection& a) {
  return a.is_idempotent();
}

// a <= b in the natural partial order (a is a restriction of b)
bool natural_leq(const PartialBijection& a, const PartialBijection& b);

std::ostream& operator<<(std::ostream& os, const PartialBijection& pb);

}  // namespace invsem

namespace std {

template <>
struct hash<invsem::PartialBijection> {
  size_t operator()(const invsem::PartialBijection& pb) const {
    return static_cast<size_t>(pb.hash());
  }
};

}  // namespace std

#endif  // INVSEM_PARTIAL_BIJECTION_HPP_
