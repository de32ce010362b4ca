// bitset.hpp -- dynamic bitset used for element subsets and ideal rows
#ifndef INVSEM_BITSET_HPP_
#define INVSEM_BITSET_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace invsem {

class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t size)
      : _size(size), _words((size + 63) / 64, 0) {}

  std::size_t size() const { return _size; }

  void set(std::size_t i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i) {
    _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool test(std::size_t i) const {
    return (_words[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : _words) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool none() const {
    for (auto w : _words)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & ~other._words[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < _words.size(); ++i) _words[i] |= other._words[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < _words.size(); ++i) _words[i] &= other._words[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool operator==(const Bitset& other) const {
    return _size == other._size && _words == other._words;
  }
  bool operator!=(const Bitset& other) const { return !(*this == other); }

  // canonical order: by popcount, then by smallest differing member
  bool canonical_less(const Bitset& other) const {
    std::size_t ca = count(), cb = other.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < _words.size(); ++i) {
      std::uint64_t d = _words[i] ^ other._words[i];
      if (d) {
        // the set owning the smallest differing element comes first
        return _words[i] & (d & ~(d - 1));
      }
    }
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t wi = 0; wi < _words.size(); ++wi) {
      std::uint64_t w = _words[wi];
      while (w) {
        out.push_back(static_cast<int>(wi * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < _words.size(); ++wi) {
      std::uint64_t w = _words[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ _size;
    for (auto w : _words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t _size = 0;
  std::vector<std::uint64_t> _words;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    return static_cast<std::size_t>(b.hash());
  }
};

}  // namespace invsem

#endif  // INVSEM_BITSET_HPP_
