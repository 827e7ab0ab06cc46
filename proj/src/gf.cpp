#include "costas/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace costas::gf {

namespace {

int mod_p(long long v, int p) {
  const long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod_p(int a, int p) {
  // p is prime and small; Fermat via repeated multiplication.
  long long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

std::vector<int> trimmed(std::vector<int> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Remainder of a by monic b over GF(p).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  a = trimmed(std::move(a));
  while (a.size() > db && !a.empty()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t t = 0; t <= db; ++t) a[shift + t] = mod_p(a[shift + t] - lead * b[t], p);
    a = trimmed(std::move(a));
  }
  return a;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool prime_power(int q, int& p, int& m) {
  if (q < 2) return false;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      m = 0;
      int r = q;
      while (r % d == 0) {
        r /= d;
        ++m;
      }
      return r == 1;
    }
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, const char* what) {
  s = trim(s);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

const std::map<int, std::vector<int>>& configured_moduli() {
  static const std::map<int, std::vector<int>> table{
      {8, {1, 0, 1, 1}},     // 1 + x^2 + x^3
      {16, {1, 0, 0, 1, 1}}, // 1 + x^3 + x^4
      {27, {1, 0, 2, 1}},    // 1 + 2x^2 + x^3
  };
  return table;
}

} // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int>& ascending_coefficients) {
  auto f = trimmed(ascending_coefficients);
  for (auto& c : f) c = mod_p(c, p);
  f = trimmed(std::move(f));
  if (f.size() < 2) return false;
  const int lead_inv = inverse_mod_p(f.back(), p);
  for (auto& c : f) c = static_cast<int>(static_cast<long long>(c) * lead_inv % p);
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    // All monic divisors of degree d: lower coefficients enumerate p^d values.
    long long count = 1;
    for (int t = 0; t < d; ++t) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(static_cast<std::size_t>(d + 1));
      long long c = code;
      for (int t = 0; t < d; ++t) {
        g[static_cast<std::size_t>(t)] = static_cast<int>(c % p);
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field: extension degree must be at least 1");
  std::uint64_t q = 1;
  for (int t = 0; t < m; ++t) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kFieldOrderGuard) {
      throw std::length_error("field: order exceeds guard " + std::to_string(kFieldOrderGuard));
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  if (m == 1 && modulus.empty()) modulus = {0, 1};
  for (auto& c : modulus) c = mod_p(c, p);
  modulus = trimmed(std::move(modulus));
  if (static_cast<int>(modulus.size()) - 1 != m) {
    throw std::invalid_argument("field: modulus degree " + std::to_string(static_cast<int>(modulus.size()) - 1) +
                                " does not match extension degree " + std::to_string(m));
  }
  const int lead_inv = inverse_mod_p(modulus.back(), p);
  for (auto& c : modulus) c = static_cast<int>(static_cast<long long>(c) * lead_inv % p);
  if (m == 1) {
    // Every degree-1 modulus gives the same constant arithmetic.
    modulus = {0, 1};
  } else if (!is_irreducible(p, modulus)) {
    throw std::invalid_argument("field: modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  modulus_ = std::move(modulus);
  factors_ = distinct_prime_factors(q_ - 1);

  // Smallest primitive element by slow arithmetic, then tables.
  auto pow_slow = [&](FieldElement a, std::uint64_t e) {
    FieldElement r = one();
    while (e > 0) {
      if (e & 1) r = mul_polynomial(r, a);
      a = mul_polynomial(a, a);
      e >>= 1;
    }
    return r;
  };
  FieldElement g{1};
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (auto r : factors_) {
      if (pow_slow(FieldElement{cand}, (q_ - 1) / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = FieldElement{cand};
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  FieldElement cur = one();
  for (std::uint32_t t = 0; t + 1 < q_; ++t) {
    exp_[t] = cur.value;
    log_[cur.value] = t;
    cur = mul_polynomial(cur, g);
  }
}

Field Field::parse(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto caret = head.find('^');
  if (caret == std::string_view::npos) {
    const auto p = parse_int(head, "field characteristic");
    if (colon != std::string_view::npos) {
      throw std::invalid_argument("field spec '" + std::string(spec) + "': modulus requires p^m form");
    }
    if (p > static_cast<long long>(kFieldOrderGuard)) {
      throw std::length_error("field: order exceeds guard " + std::to_string(kFieldOrderGuard));
    }
    return standard(static_cast<int>(p));
  }
  const auto p = static_cast<int>(parse_int(head.substr(0, caret), "field characteristic"));
  const auto m = static_cast<int>(parse_int(head.substr(caret + 1), "field degree"));
  if (colon == std::string_view::npos) {
    int q = 1;
    for (int t = 0; t < m; ++t) q *= p;
    if (!is_prime(p) || m < 1) throw std::invalid_argument("field spec '" + std::string(spec) + "': invalid p^m");
    return standard(q);
  }
  std::vector<int> coeffs;
  auto rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    coeffs.push_back(static_cast<int>(parse_int(rest.substr(0, comma), "modulus coefficient")));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Field(p, m, std::move(coeffs));
}

Field Field::standard(int q) {
  int p = 0, m = 0;
  if (!prime_power(q, p, m)) throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
  if (m == 1) return prime(p);
  if (auto it = configured_moduli().find(q); it != configured_moduli().end()) return Field(p, m, it->second);
  // Smallest monic irreducible by encoding of the lower coefficients.
  for (int code = 0; code < q; ++code) {
    std::vector<int> f(static_cast<std::size_t>(m + 1));
    int c = code;
    for (int t = 0; t < m; ++t) {
      f[static_cast<std::size_t>(t)] = c % p;
      c /= p;
    }
    f[static_cast<std::size_t>(m)] = 1;
    if (is_irreducible(p, f)) return Field(p, m, std::move(f));
  }
  throw std::logic_error("field: no irreducible polynomial found");
}

std::string Field::spec() const {
  if (m_ == 1) return std::to_string(p_);
  std::ostringstream os;
  os << p_ << '^' << m_ << ':';
  for (std::size_t t = 0; t < modulus_.size(); ++t) {
    if (t) os << ',';
    os << modulus_[t];
  }
  return os.str();
}

FieldElement Field::x() const {
  if (m_ == 1) return zero();
  return FieldElement{static_cast<std::uint32_t>(p_)};
}

FieldElement Field::element(std::uint32_t encoding) const {
  if (encoding >= q_) {
    throw std::out_of_range("field element encoding " + std::to_string(encoding) + " >= q = " + std::to_string(q_));
  }
  return FieldElement{encoding};
}

FieldElement Field::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty field element");
  if (std::all_of(text.begin(), text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    const auto v = parse_int(text, "field element");
    if (v < 0 || v >= static_cast<long long>(q_)) {
      throw std::invalid_argument("field element " + std::string(text) + " out of range for q = " + std::to_string(q_));
    }
    return FieldElement{static_cast<std::uint32_t>(v)};
  }
  if (m_ == 1) throw std::invalid_argument("polynomial notation '" + std::string(text) + "' needs an extension field");
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  FieldElement acc = zero();
  std::size_t pos = 0;
  const auto bad = [&] { return std::invalid_argument("cannot parse field element '" + std::string(text) + "'"); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw bad();
    }
    long long coef = 1;
    bool have_coef = false;
    const auto start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coef = parse_int(std::string_view(s).substr(start, pos - start), "coefficient");
      have_coef = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) throw bad();
      ++pos;
    }
    long long exponent = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const auto es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es) throw bad();
        exponent = parse_int(std::string_view(s).substr(es, pos - es), "exponent");
      }
    } else if (!have_coef) {
      throw bad();
    }
    const FieldElement c{static_cast<std::uint32_t>(mod_p(sign * coef, p_))};
    acc = add(acc, mul(c, pow(FieldElement{static_cast<std::uint32_t>(p_)}, exponent)));
  }
  return acc;
}

std::string Field::format(FieldElement e) const {
  if (m_ == 1 || e.value == 0) return std::to_string(e.value);
  const auto d = digits(e);
  std::string out;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (d[t] == 0) continue;
    if (!out.empty()) out += '+';
    if (t == 0) {
      out += std::to_string(d[t]);
      continue;
    }
    if (d[t] != 1) out += std::to_string(d[t]);
    out += 'x';
    if (t > 1) out += '^' + std::to_string(t);
  }
  return out;
}

std::vector<int> Field::digits(FieldElement e) const {
  std::vector<int> d(static_cast<std::size_t>(m_));
  auto v = e.value;
  for (int t = 0; t < m_; ++t) {
    d[static_cast<std::size_t>(t)] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
    v /= static_cast<std::uint32_t>(p_);
  }
  return d;
}

FieldElement Field::from_digits(const std::vector<int>& d) const {
  std::uint32_t v = 0;
  for (std::size_t t = d.size(); t-- > 0;) v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(d[t]);
  return FieldElement{v};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return FieldElement{a.value ^ b.value};
  if (m_ == 1) return FieldElement{(a.value + b.value) % q_};
  auto da = digits(a);
  const auto db = digits(b);
  for (std::size_t t = 0; t < da.size(); ++t) da[t] = (da[t] + db[t]) % p_;
  return from_digits(da);
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return FieldElement{(q_ - a.value) % q_};
  auto da = digits(a);
  for (auto& c : da) c = (p_ - c) % p_;
  return from_digits(da);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return zero();
  const auto n = q_ - 1;
  return FieldElement{exp_[(log_[a.value] + log_[b.value]) % n]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("field: inverse of zero");
  const auto n = q_ - 1;
  return FieldElement{exp_[(n - log_[a.value]) % n]};
}

FieldElement Field::pow(FieldElement a, long long e) const {
  if (a.value == 0) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("field: negative power of zero");
    return zero();
  }
  const long long n = static_cast<long long>(q_) - 1;
  const long long em = ((e % n) + n) % n;
  const auto t = static_cast<long long>(log_[a.value]) * em % n;
  return FieldElement{exp_[static_cast<std::size_t>(t)]};
}

FieldElement Field::mul_polynomial(FieldElement a, FieldElement b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * m_), 0);
  for (std::size_t s = 0; s < da.size(); ++s)
    for (std::size_t t = 0; t < db.size(); ++t) prod[s + t] = (prod[s + t] + da[s] * db[t]) % p_;
  auto r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(static_cast<std::size_t>(m_), 0);
  return from_digits(r);
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("field: order of zero");
  const auto n = q_ - 1;
  return n / std::gcd(log_[a.value], n);
}

bool Field::is_primitive(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("field: zero is never primitive");
  const long long n = static_cast<long long>(q_) - 1;
  for (auto r : factors_)
    if (pow(a, n / r) == one()) return false;
  return true;
}

std::vector<FieldElement> Field::primitive_elements() const {
  if (q_ > kFieldOrderGuard) throw std::length_error("field: primitive element scan exceeds guard");
  std::vector<FieldElement> out;
  for (std::uint32_t v = 1; v < q_; ++v)
    if (is_primitive(FieldElement{v})) out.push_back(FieldElement{v});
  return out;
}

LogTable::LogTable(const Field& field, FieldElement generator) : generator_(generator), q_(field.order()) {
  if (generator.value == 0 || !field.is_primitive(generator)) {
    throw std::invalid_argument("log table: generator " + field.format(generator) + " is not primitive");
  }
  exp_.resize(static_cast<std::size_t>(q_ - 1));
  log_.assign(static_cast<std::size_t>(q_), 0);
  FieldElement cur = field.one();
  for (int t = 0; t < q_ - 1; ++t) {
    exp_[static_cast<std::size_t>(t)] = cur.value;
    log_[cur.value] = t == 0 ? q_ - 1 : t;
    cur = field.mul(cur, generator);
  }
}

FieldElement LogTable::exp(long long e) const {
  const long long n = q_ - 1;
  return FieldElement{exp_[static_cast<std::size_t>(((e % n) + n) % n)]};
}

int LogTable::dlog(FieldElement e) const {
  if (e.value == 0) throw std::domain_error("discrete log of zero");
  if (e.value >= static_cast<std::uint32_t>(q_)) throw std::out_of_range("discrete log: element outside field");
  return log_[e.value];
}

std::vector<FieldElement> g3_admissible(const Field& field) {
  std::vector<FieldElement> out;
  for (auto phi : field.primitive_elements()) {
    const auto one_minus = field.sub(field.one(), phi);
    if (one_minus.value != 0 && field.is_primitive(one_minus)) out.push_back(phi);
  }
  return out;
}

std::vector<FieldElement> g3_cube_admissible(const Field& field) {
  std::vector<FieldElement> out;
  for (auto phi : g3_admissible(field)) {
    const auto t = field.sub(field.one(), field.inv(phi));
    if (t.value != 0 && field.is_primitive(t)) out.push_back(phi);
  }
  return out;
}

std::vector<int> prime_powers(int lo, int hi) {
  std::vector<int> out;
  for (int q = std::max(lo, 2); q <= hi; ++q) {
    int p = 0, m = 0;
    if (prime_power(q, p, m)) out.push_back(q);
  }
  return out;
}

} // namespace costas::gf
