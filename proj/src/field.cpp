#include "field.hpp"

#include <algorithm>

namespace fjump {

namespace {

constexpr uint64_t kMaxPrime = (uint64_t(1) << 31) - 1;
constexpr uint64_t kMaxExtOrder = uint64_t(1) << 31;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((__uint128_t(a) * b) % p);
}

// Remainder of a mod b in F_p[t]; vectors are coefficient lists, lowest degree first.
std::vector<uint64_t> poly_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b, uint64_t p) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  size_t db = b.size();  // b monic of degree db-1
  while (a.size() >= db) {
    uint64_t c = a.back();
    size_t shift = a.size() - db;
    if (c != 0) {
      for (size_t i = 0; i < db; ++i) {
        uint64_t sub = mulmod(c, b[i], p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime_field(uint64_t p) {
  if (p < 2 || p > kMaxPrime) fail_pre("field characteristic out of range: " + std::to_string(p));
  if (!is_prime_u64(p)) fail_pre("field characteristic is not prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  f.k_ = 1;
  f.q_ = p;
  return f;
}

Field Field::extension(uint64_t p, uint32_t k, std::vector<uint64_t> modulus) {
  if (k == 1) {
    if (!modulus.empty()) fail_pre("modulus given for a prime field");
    return prime_field(p);
  }
  Field f = prime_field(p);
  if (k < 1 || k > 16) fail_pre("extension degree out of range: " + std::to_string(k));
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtOrder) fail_pre("field order p^k too large");
  }
  if (modulus.size() != size_t(k) + 1) fail_pre("modulus degree must equal the extension degree");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) fail_pre("modulus must be monic");
  // Irreducibility by trial division against every monic polynomial of degree 1..k/2.
  for (uint32_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) {
      count *= p;
      if (count > 2000000) fail_pre("modulus too large to verify irreducibility");
    }
    std::vector<uint64_t> cand(d + 1, 0);
    cand[d] = 1;
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t v = idx;
      for (uint32_t i = 0; i < d; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      if (poly_rem(modulus, cand, p).empty())
        fail_pre("modulus is reducible over F_" + std::to_string(p));
    }
  }
  f.k_ = k;
  f.q_ = q;
  f.modulus_ = std::move(modulus);
  return f;
}

std::vector<uint64_t> Field::decode(FqElem a) const {
  std::vector<uint64_t> d(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqElem Field::encode(const std::vector<uint64_t>& digits) const {
  FqElem a = 0;
  for (size_t i = std::min<size_t>(digits.size(), k_); i-- > 0;) a = a * p_ + digits[i];
  return a;
}

FqElem Field::gen() const {
  if (k_ == 1) fail_pre("prime field has no extension generator");
  return p_;  // the element t
}

FqElem Field::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += (long long)p_;
  return FqElem(r);
}

FqElem Field::from_decimal(const std::string& digits) const {
  uint64_t r = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') fail_parse("bad digit in integer literal");
    r = (r * 10 + uint64_t(ch - '0')) % p_;
  }
  return r;
}

FqElem Field::add(FqElem a, FqElem b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = decode(a), db = decode(b);
  for (uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::neg(FqElem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  auto d = decode(a);
  for (auto& c : d) c = c == 0 ? 0 : p_ - c;
  return encode(d);
}

FqElem Field::mul(FqElem a, FqElem b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  auto da = decode(a), db = decode(b);
  std::vector<uint64_t> prod(2 * k_ - 1, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  return encode(poly_rem(std::move(prod), modulus_, p_));
}

FqElem Field::pow(FqElem a, uint64_t n) const {
  FqElem r = 1, base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FqElem Field::inv(FqElem a) const {
  if (a == 0) fail_internal("division by zero in F_" + std::to_string(q_));
  if (k_ == 1) return pow(a, p_ - 2);
  return pow(a, q_ - 2);
}

FqElem Field::pth_root(FqElem c) const {
  if (k_ == 1) return c;  // x -> x^p is the identity on F_p
  uint64_t e = 1;
  for (uint32_t i = 0; i + 1 < k_; ++i) e *= p_;  // p^{k-1}
  return pow(c, e);
}

FqElem Field::frobenius_root(FqElem c, uint64_t e) const {
  if (k_ == 1) return c;
  for (uint64_t i = 0, steps = e % k_; i < steps; ++i) c = pth_root(c);
  return c;
}

FqElem Field::frobenius_power(FqElem c, uint64_t e) const {
  if (k_ == 1) return c;
  for (uint64_t i = 0, steps = e % k_; i < steps; ++i) c = pow(c, p_);
  return c;
}

std::string Field::coeff_to_string(FqElem c) const {
  if (k_ == 1 || c < p_) return std::to_string(c % q_);
  auto d = decode(c);
  std::string out;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool Field::coeff_needs_parens(FqElem c) const {
  if (k_ == 1) return false;
  auto d = decode(c);
  int nonzero = 0;
  for (auto v : d)
    if (v != 0) ++nonzero;
  return nonzero > 1;
}

}  // namespace fjump
