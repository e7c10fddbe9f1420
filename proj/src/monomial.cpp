#include "bicomm/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bicomm/error.hpp"

namespace bicomm {

namespace {

void trim_vec(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::uint32_t> unit_vec(std::uint32_t index, std::uint32_t exponent) {
  if (index == 0) throw Error(ErrorCode::BadIndex, "variable index 0");
  std::vector<std::uint32_t> v(index, 0);
  v[index - 1] = exponent;
  trim_vec(v);
  return v;
}

void add_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

bool vec_divides(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> y, std::vector<std::uint32_t> z) : y_(std::move(y)), z_(std::move(z)) {
  trim();
}

void Monomial::trim() {
  trim_vec(y_);
  trim_vec(z_);
}

Monomial Monomial::y(std::uint32_t index, std::uint32_t exponent) { return Monomial(unit_vec(index, exponent), {}); }

Monomial Monomial::z(std::uint32_t index, std::uint32_t exponent) { return Monomial({}, unit_vec(index, exponent)); }

std::uint32_t Monomial::y_degree() const noexcept { return std::accumulate(y_.begin(), y_.end(), 0u); }

std::uint32_t Monomial::z_degree() const noexcept { return std::accumulate(z_.begin(), z_.end(), 0u); }

std::uint32_t Monomial::max_index() const noexcept {
  return static_cast<std::uint32_t>(std::max(y_.size(), z_.size()));
}

std::vector<std::uint32_t> Monomial::multidegree() const {
  std::vector<std::uint32_t> m(max_index(), 0);
  for (std::size_t i = 0; i < y_.size(); ++i) m[i] += y_[i];
  for (std::size_t i = 0; i < z_.size(); ++i) m[i] += z_[i];
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  return vec_divides(y_, other.y_) && vec_divides(z_, other.z_);
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error(ErrorCode::InvalidArgument, divisor.to_string() + " does not divide " + to_string());
  Monomial q = *this;
  for (std::size_t i = 0; i < divisor.y_.size(); ++i) q.y_[i] -= divisor.y_[i];
  for (std::size_t i = 0; i < divisor.z_.size(); ++i) q.z_[i] -= divisor.z_[i];
  q.trim();
  return q;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  add_into(y_, other.y_);
  add_into(z_, other.z_);
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  auto vmax = [](const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> r(std::max(u.size(), v.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = std::max(i < u.size() ? u[i] : 0u, i < v.size() ? v[i] : 0u);
    return r;
  };
  return Monomial(vmax(a.y_, b.y_), vmax(a.z_, b.z_));
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  auto disjoint = [](const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != 0 && v[i] != 0) return false;
    return true;
  };
  return disjoint(a.y_, b.y_) && disjoint(a.z_, b.z_);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  auto emit = [&out](char var, const std::vector<std::uint32_t>& exps) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += var;
      out += std::to_string(i + 1);
      if (exps[i] > 1) {
        out += '^';
        out += std::to_string(exps[i]);
      }
    }
  };
  emit('y', y_);
  emit('z', z_);
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = y_.size() * 0x9e3779b97f4a7c15ull;
  for (auto e : y_) h = (h ^ e) * 0x100000001b3ull;
  h ^= 0xabcdefull;
  for (auto e : z_) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

Monomial parse_monomial(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return Monomial();
  Monomial m;
  std::size_t pos = 0;
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error(ErrorCode::Syntax, "expected digits in monomial '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(s.substr(start, pos - start)));
  };
  while (true) {
    if (pos >= s.size() || (s[pos] != 'y' && s[pos] != 'z'))
      throw Error(ErrorCode::Syntax, "expected y or z in monomial '" + s + "'");
    char var = s[pos++];
    std::uint32_t index = number();
    std::uint32_t exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      exponent = number();
    }
    m *= var == 'y' ? Monomial::y(index, exponent) : Monomial::z(index, exponent);
    if (pos == s.size()) break;
    if (s[pos] != '*') throw Error(ErrorCode::Syntax, "unexpected '" + std::string(1, s[pos]) + "' in monomial");
    ++pos;
  }
  return m;
}

}  // namespace bicomm
