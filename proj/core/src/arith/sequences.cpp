#include "hrr/arith/sequences.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hrr {

namespace {

// Grow-only memo table. Readers take a shared lock; a miss recomputes the
// whole prefix under the exclusive lock and publishes it at once.
template <class T, class Builder>
class PrefixCache {
public:
  explicit PrefixCache(Builder build) : build_(std::move(build)) {}

  T get(std::size_t k) {
    {
      std::shared_lock lock(mu_);
      if (k < values_.size()) return values_[k];
    }
    std::unique_lock lock(mu_);
    if (k >= values_.size()) values_ = build_(std::max(2 * k + 2, values_.size()));
    return values_[k];
  }

private:
  Builder build_;
  std::shared_mutex mu_;
  std::vector<T> values_;
};

std::vector<Rational> build_bernoulli(std::size_t count) {
  const PowerSeries gf = bernoulli_generating_series(count);
  std::vector<Rational> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = gf[k] * factorial(static_cast<unsigned>(k));
  return out;
}

std::vector<Rational> build_modified(std::size_t count) {
  const PowerSeries gf = modified_bernoulli_generating_series(count);
  return gf.coeffs();
}

std::vector<Polynomial1> build_chebyshev(std::size_t count) {
  std::vector<Polynomial1> t;
  t.reserve(count);
  t.push_back(Polynomial1("x", {1}));
  if (count > 1) t.push_back(Polynomial1("x", {0, 1}));
  const Polynomial1 two_x("x", {0, 2});
  while (t.size() < count) t.push_back(two_x * t[t.size() - 1] - t[t.size() - 2]);
  return t;
}

auto& bernoulli_cache() {
  static PrefixCache<Rational, decltype(&build_bernoulli)> c(&build_bernoulli);
  return c;
}
auto& modified_cache() {
  static PrefixCache<Rational, decltype(&build_modified)> c(&build_modified);
  return c;
}
auto& chebyshev_cache() {
  static PrefixCache<Polynomial1, decltype(&build_chebyshev)> c(&build_chebyshev);
  return c;
}

}  // namespace

PowerSeries bernoulli_generating_series(std::size_t order) {
  // (e^t - 1)/t = sum t^k/(k+1)!, inverted.
  PowerSeries d(order);
  for (std::size_t k = 0; k < order; ++k) d.at(k) = factorial(static_cast<unsigned>(k + 1)).inverse();
  return d.inverse();
}

PowerSeries modified_bernoulli_generating_series(std::size_t order) {
  // sinh(x/2)/(x/2) = sum (x/2)^{2m} / (2m+1)!
  PowerSeries s(order);
  for (std::size_t k = 0; k < order; k += 2)
    s.at(k) = Rational(1, 2).pow(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k + 1));
  return s.log() * Rational(1, 2);
}

Rational bernoulli(unsigned k) { return bernoulli_cache().get(k); }

Rational modified_bernoulli(unsigned k) {
  if (k % 2 != 0) throw std::invalid_argument("modified_bernoulli: index must be even");
  return modified_cache().get(k);
}

Polynomial1 chebyshev(unsigned n) { return chebyshev_cache().get(n); }

Polynomial1 chebyshev_even_lambda(unsigned k) {
  const Polynomial1 t = chebyshev(2 * k);
  // T_{2k}(x) = sum_j a_j (x^2)^j with x^2 = lambda/4 + 1.
  std::vector<Rational> half;
  for (int i = 0; i <= t.degree(); i += 2) half.push_back(t.coeff(static_cast<unsigned>(i)));
  const Polynomial1 in_x2("x2", half);
  return in_x2.compose(Polynomial1("lambda", {1, Rational(1, 4)}));
}

}  // namespace hrr
