#include "invsem/connectivity.hpp"

#include <string>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

bool strictly_below(const FiniteInverseSemigroup& s, int a, int b) {
  return a != b && s.natural_leq(a, b);
}

bool in_n_or_e(const FiniteInverseSemigroup& s, int x) {
  return s.is_nongroup(x) || s.is_idempotent(x);
}

// idempotents of <x>
std::vector<int> monogenic_idempotents(const FiniteInverseSemigroup& s, int x) {
  std::vector<int> out;
  s.closure_of({x}).for_each([&](int y) {
    if (s.is_idempotent(y)) out.push_back(y);
  });
  return out;
}

bool step_ok(const FiniteInverseSemigroup& s, int prev, int cur, int x,
             bool tight) {
  // stage x_k = e_k x satisfies x_k x_k^-1 = e_k since e_k <= x x^-1
  int xk = s.product(cur, x);
  if (!x_covers(s, prev, xk)) return false;
  if (!tight) return true;
  if (!in_n_or_e(s, xk)) return false;  // tight covering is defined on N u E
  int prod = s.product(prev, xk);
  return s.is_nongroup(prod) || prod == prev;
}

std::optional<Bypass> find_bypass(const FiniteInverseSemigroup& s, int e,
                                  int x, bool tight) {
  if (!s.is_idempotent(e))
    throw InvalidInput("bypass: e is not an idempotent");
  int top = s.product(x, s.inverse(x));
  if (!strictly_below(s, e, top))
    throw InvalidInput("bypass: e is not strictly below x x^-1");
  if (tight && !in_n_or_e(s, x))
    throw InvalidInput("bypass: x is a nonidempotent group element");

  std::vector<int> interval;  // idempotents strictly between e and x x^-1
  for (int f : s.idempotents())
    if (strictly_below(s, e, f) && strictly_below(s, f, top))
      interval.push_back(f);

  std::vector<int> chain{e};
  std::optional<Bypass> result;
  // iterative deepening: shortest chain first, then index-lexicographic
  auto rec = [&](auto&& self, std::size_t want_len) -> bool {
    if (chain.size() == want_len) {
      if (!step_ok(s, chain.back(), top, x, tight)) return false;
      chain.push_back(top);
      std::vector<int> stages;
      for (int ek : chain) stages.push_back(s.product(ek, x));
      result = Bypass{x, chain, std::move(stages), tight};
      chain.pop_back();
      return true;
    }
    for (int f : interval) {
      if (!strictly_below(s, chain.back(), f)) continue;
      if (!step_ok(s, chain.back(), f, x, tight)) continue;
      chain.push_back(f);
      if (self(self, want_len)) {
        chain.pop_back();
        return true;
      }
      chain.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len <= interval.size() + 1; ++len)
    if (rec(rec, len)) break;
  if (result) validate_bypass(s, *result);
  return result;
}

}  // namespace

bool x_covers(const FiniteInverseSemigroup& s, int e, int x) {
  if (!s.is_idempotent(e)) throw InvalidInput("x_covers: e is not idempotent");
  int top = s.product(x, s.inverse(x));
  if (!strictly_below(s, e, top)) return false;
  for (int f : monogenic_idempotents(s, x))
    if (strictly_below(s, e, f) && strictly_below(s, f, top)) return false;
  return true;
}

bool tightly_covers(const FiniteInverseSemigroup& s, int e, int x) {
  if (!in_n_or_e(s, x))
    throw InvalidInput("tightly_covers: x is a nonidempotent group element");
  if (!x_covers(s, e, x)) return false;
  int ex = s.product(e, x);
  return s.is_nongroup(ex) || ex == e;
}

std::optional<Bypass> find_short_bypass(const FiniteInverseSemigroup& s, int e,
                                        int x) {
  return find_bypass(s, e, x, /*tight=*/false);
}

std::optional<Bypass> find_tight_bypass(const FiniteInverseSemigroup& s, int e,
                                        int x) {
  return find_bypass(s, e, x, /*tight=*/true);
}

void validate_bypass(const FiniteInverseSemigroup& s, const Bypass& b) {
  auto fail = [&](const std::string& why) {
    throw InvariantFailure("bypass invalid: " + why);
  };
  if (b.chain.size() < 2) fail("chain shorter than two idempotents");
  if (b.stages.size() != b.chain.size()) fail("stage count mismatch");
  int top = s.product(b.x, s.inverse(b.x));
  if (b.chain.back() != top) fail("chain does not end at x x^-1");
  for (std::size_t k = 0; k < b.chain.size(); ++k) {
    if (!s.is_idempotent(b.chain[k])) fail("chain entry not idempotent");
    if (b.stages[k] != s.product(b.chain[k], b.x)) fail("stage is not e_k x");
    if (k == 0) continue;
    if (!strictly_below(s, b.chain[k - 1], b.chain[k]))
      fail("chain does not strictly ascend");
    int xk = b.stages[k];
    // x_k x_k^-1 = e_k
    if (s.product(xk, s.inverse(xk)) != b.chain[k]) fail("x_k x_k^-1 != e_k");
    // fresh closure of <x_k>: no idempotent strictly between e_{k-1}, e_k
    for (int f : monogenic_idempotents(s, xk))
      if (strictly_below(s, b.chain[k - 1], f) &&
          strictly_below(s, f, b.chain[k]))
        fail("an idempotent of <x_k> interrupts the covering");
    if (b.tight) {
      if (!in_n_or_e(s, xk)) fail("tight stage outside N u E");
      int prod = s.product(b.chain[k - 1], xk);
      if (!s.is_nongroup(prod) && prod != b.chain[k - 1])
        fail("tight condition fails at step " + std::to_string(k));
    }
  }
}

bool is_shortly_connected(const FiniteInverseSemigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    int top = s.product(x, s.inverse(x));
    for (int e : s.idempotents()) {
      if (!strictly_below(s, e, top)) continue;
      if (!find_short_bypass(s, e, x)) return false;
    }
  }
  return true;
}

bool is_tightly_connected(const FiniteInverseSemigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (!in_n_or_e(s, x)) continue;
    int top = s.product(x, s.inverse(x));
    for (int e : s.idempotents()) {
      if (!strictly_below(s, e, top)) continue;
      if (!find_tight_bypass(s, e, x)) return false;
    }
  }
  return true;
}

bool order_ideal_check(const FiniteInverseSemigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (!in_n_or_e(s, x)) continue;
    for (int y = 0; y < s.order(); ++y)
      if (s.natural_leq(y, x) && !in_n_or_e(s, y)) return false;
  }
  return true;
}

bool jones_remark_agrees(const FiniteInverseSemigroup& s) {
  return is_tightly_connected(s) ==
         (is_shortly_connected(s) && order_ideal_check(s));
}

}  // namespace invsem
