#include <array>
#include <stdexcept>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

namespace domlab {

namespace {

constexpr std::array<int, 7> kOrders = {2, 3, 4, 5, 7, 8, 9};

struct Spec {
  int q;
  int p;
  int degree;
  // Monic modulus, coefficients low to high (leading 1 included).
  std::array<int, 4> modulus;
};

constexpr std::array<Spec, 7> kSpecs = {{
    {2, 2, 1, {0, 1, 0, 0}},
    {3, 3, 1, {0, 1, 0, 0}},
    {4, 2, 2, {1, 1, 1, 0}},  // x^2 + x + 1
    {5, 5, 1, {0, 1, 0, 0}},
    {7, 7, 1, {0, 1, 0, 0}},
    {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
    {9, 3, 2, {1, 0, 1, 0}},  // x^2 + 1
}};

std::vector<int> digits(int value, int p, int degree) {
  std::vector<int> d(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int value = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) value = value * p + *it;
  return value;
}

int poly_mul(int a, int b, const Spec& s) {
  const auto x = digits(a, s.p, s.degree);
  const auto y = digits(b, s.p, s.degree);
  std::vector<int> prod(static_cast<std::size_t>(2 * s.degree - 1), 0);
  for (int i = 0; i < s.degree; ++i) {
    for (int j = 0; j < s.degree; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % s.p;
  }
  for (int top = 2 * s.degree - 2; top >= s.degree; --top) {
    const int c = prod[top];
    if (c == 0) continue;
    for (int i = 0; i <= s.degree; ++i) {
      const int idx = top - s.degree + i;
      prod[idx] = ((prod[idx] - c * s.modulus[i]) % s.p + s.p) % s.p;
    }
  }
  prod.resize(static_cast<std::size_t>(s.degree));
  return undigits(prod, s.p);
}

void check_axioms(const FieldTable& f) {
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.mul(a, 0) != 0) {
      throw std::logic_error("field identities fail");
    }
    bool has_neg = false;
    bool has_inv = (a == 0);
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) {
        throw std::logic_error("field commutativity fails");
      }
      has_neg = has_neg || f.add(a, b) == 0;
      has_inv = has_inv || f.mul(a, b) == 1;
      for (int c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
            f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) {
          throw std::logic_error("field associativity/distributivity fails");
        }
      }
    }
    if (!has_neg || !has_inv) throw std::logic_error("field inverses missing");
  }
}

}  // namespace

std::span<const int> supported_orders() { return kOrders; }

bool is_supported_order(int q) {
  for (int o : kOrders) {
    if (o == q) return true;
  }
  return false;
}

FieldTable::FieldTable(int q, std::vector<int> add, std::vector<int> mul)
    : q_(q), add_(std::move(add)), mul_(std::move(mul)) {}

FieldTable field(int q) {
  const Spec* spec = nullptr;
  for (const auto& s : kSpecs) {
    if (s.q == q) spec = &s;
  }
  if (spec == nullptr) throw UnsupportedOrder(q);
  std::vector<int> add(static_cast<std::size_t>(q * q));
  std::vector<int> mul(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, spec->p, spec->degree);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, spec->p, spec->degree);
      std::vector<int> sum(static_cast<std::size_t>(spec->degree));
      for (int i = 0; i < spec->degree; ++i) sum[i] = (da[i] + db[i]) % spec->p;
      add[static_cast<std::size_t>(a * q + b)] = undigits(sum, spec->p);
      mul[static_cast<std::size_t>(a * q + b)] = poly_mul(a, b, *spec);
    }
  }
  FieldTable f(q, std::move(add), std::move(mul));
  check_axioms(f);
  return f;
}

}  // namespace domlab
