#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "km/algebra/gwa_algebra.hpp"

namespace km {

enum class Strategy { Leftmost, Rightmost, Random };

/// Linear combination of words in x, y, h.
template <typename V>
using WordSum = std::map<std::string, V>;

namespace detail {

inline bool is_normal_word(const std::string& w) {
  // x^i h^k or y^j h^k
  std::size_t k = 0;
  while (k < w.size() && w[k] == 'x') ++k;
  if (k == 0) {
    while (k < w.size() && w[k] == 'y') ++k;
  }
  while (k < w.size() && w[k] == 'h') ++k;
  return k == w.size();
}

inline std::vector<std::size_t> redexes(const std::string& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const char a = w[i], b = w[i + 1];
    if ((a == 'h' && (b == 'x' || b == 'y')) || (a == 'x' && b == 'y') || (a == 'y' && b == 'x')) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace detail

/// Rewrites with hx → xh − x, hy → yh + y, xy → v(h), yx → v(h − 1) until
/// every word is x^i h^k or y^j h^k. Independent of BasisElement products.
template <typename R>
GwaElement<R> normal_form(const WordSum<typename R::value_type>& input, const ContextPtr<R>& ctx, Strategy strategy,
                          unsigned seed = 0) {
  using V = typename R::value_type;
  std::mt19937 rng(seed);
  const auto& v0 = ctx->v();
  const auto& v1 = ctx->v_shift(-1);
  WordSum<V> pending = input;
  WordSum<V> done;
  auto add = [](WordSum<V>& m, const std::string& w, const V& c) {
    auto [it, fresh] = m.emplace(w, c);
    if (!fresh) it->second = it->second + c;
    if (km::is_zero(it->second)) m.erase(it);
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string w = node.key();
    const V coeff = node.mapped();
    const auto red = detail::redexes(w);
    if (red.empty()) {
      add(done, w, coeff);
      continue;
    }
    std::size_t pos = red.front();
    if (strategy == Strategy::Rightmost) pos = red.back();
    if (strategy == Strategy::Random) pos = red[std::uniform_int_distribution<std::size_t>(0, red.size() - 1)(rng)];
    const std::string pre = w.substr(0, pos), post = w.substr(pos + 2);
    const std::string pair = w.substr(pos, 2);
    if (pair == "hx") {
      add(pending, pre + "xh" + post, coeff);
      add(pending, pre + "x" + post, -coeff);
    } else if (pair == "hy") {
      add(pending, pre + "yh" + post, coeff);
      add(pending, pre + "y" + post, coeff);
    } else {
      const auto& poly = pair == "xy" ? v0 : v1;
      for (long k = 0; k <= poly.degree(); ++k) {
        if (km::is_zero(poly.c[k])) continue;
        add(pending, pre + std::string(k, 'h') + post, coeff * poly.c[k]);
      }
    }
  }
  GwaElement<R> out(ctx);
  for (const auto& [w, c] : done) {
    const long nx = static_cast<long>(std::count(w.begin(), w.end(), 'x'));
    const long ny = static_cast<long>(std::count(w.begin(), w.end(), 'y'));
    const long nh = static_cast<long>(std::count(w.begin(), w.end(), 'h'));
    out += GwaElement<R>::monomial(ctx, nx - ny, nh, c);
  }
  return out;
}

/// Parses "3*x^2*h - y" into words with ℚ(T) coefficients.
WordSum<Scalar> parse_word_sum(std::string_view text);

template <typename R>
WordSum<typename R::value_type> convert_word_sum(const WordSum<Scalar>& s, const R& ring) {
  WordSum<typename R::value_type> out;
  for (const auto& [w, c] : s) out.emplace(w, ring.from_scalar(c));
  return out;
}

}  // namespace km
