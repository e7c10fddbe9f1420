#include "bicomm/structalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bicomm/parallel.hpp"

namespace bicomm {

StructureAlgebra::StructureAlgebra(std::uint32_t dim, Field field) : dim_(dim), field_(field) {
  if (dim == 0) throw Error(ErrorCode::BadElement, "dimension must be positive");
}

void StructureAlgebra::set_product(std::uint32_t i, std::uint32_t j, std::vector<Scalar> coefficients) {
  if (i >= dim_ || j >= dim_) throw Error(ErrorCode::BadElement, "basis index out of range");
  if (coefficients.size() != dim_)
    throw Error(ErrorCode::BadElement, "product e" + std::to_string(i) + "e" + std::to_string(j) + " needs " +
                                           std::to_string(dim_) + " coefficients");
  for (const auto& c : coefficients)
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient over " + c.field().name());
  if (std::all_of(coefficients.begin(), coefficients.end(), [](const Scalar& c) { return c.is_zero(); }))
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(coefficients);
}

const std::vector<Scalar>* StructureAlgebra::product(std::uint32_t i, std::uint32_t j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

AlgebraElement StructureAlgebra::zero() const { return AlgebraElement(dim_, Scalar::zero(field_)); }

AlgebraElement StructureAlgebra::basis(std::uint32_t i) const {
  if (i >= dim_) throw Error(ErrorCode::BadElement, "basis index out of range");
  auto v = zero();
  v[i] = Scalar::one(field_);
  return v;
}

void StructureAlgebra::check(const AlgebraElement& a) const {
  if (a.size() != dim_) throw Error(ErrorCode::BadElement, "element has " + std::to_string(a.size()) + " coordinates");
}

AlgebraElement StructureAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  auto out = zero();
  for (const auto& [ij, coeffs] : table_) {
    const Scalar& ca = a[ij.first];
    const Scalar& cb = b[ij.second];
    if (ca.is_zero() || cb.is_zero()) continue;
    Scalar c = ca * cb;
    for (std::uint32_t k = 0; k < dim_; ++k)
      if (!coeffs[k].is_zero()) out[k] += c * coeffs[k];
  }
  return out;
}

StructureAlgebra StructureAlgebra::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Syntax, std::string("algebra file: ") + e.what());
  }
  auto scalar = [](Field field, const nlohmann::json& v) {
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    if (v.is_number_integer()) return Scalar(field, v.get<long>());
    throw Error(ErrorCode::Syntax, "algebra file: scalars are strings or integers");
  };
  try {
    const auto dim = j.at("dim").get<std::uint32_t>();
    Field field = Field::parse(j.value("field", std::string("q")));
    StructureAlgebra alg(dim, field);
    for (const auto& entry : j.at("table")) {
      if (!entry.is_array() || entry.size() != 3) throw Error(ErrorCode::Syntax, "table entries are [i, j, [c...]]");
      std::vector<Scalar> coeffs;
      for (const auto& c : entry[2]) coeffs.push_back(scalar(field, c));
      alg.set_product(entry[0].get<std::uint32_t>(), entry[1].get<std::uint32_t>(), std::move(coeffs));
    }
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Syntax, std::string("algebra file: ") + e.what());
  }
}

std::string StructureAlgebra::to_json() const {
  // one table entry per line keeps golden files readable
  std::ostringstream out;
  out << "{\n  \"dim\": " << dim_ << ",\n  \"field\": " << nlohmann::json(field_.name()).dump() << ",\n  \"table\": [";
  bool first = true;
  for (const auto& [ij, coeffs] : table_) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_string());
    out << (first ? "\n    " : ",\n    ") << "[" << ij.first << ", " << ij.second << ", " << cs.dump() << "]";
    first = false;
  }
  out << (first ? "]\n}" : "\n  ]\n}");
  return out.str();
}

namespace {

AlgebraElement evaluate_term(const NATerm& t, const std::vector<AlgebraElement>& args, const StructureAlgebra& alg) {
  if (t.is_leaf()) return args[t.index() - 1];
  return alg.multiply(evaluate_term(t.left(), args, alg), evaluate_term(t.right(), args, alg));
}

bool is_zero(const AlgebraElement& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

// Polynomial in the generic coordinates t_{i,k}; keys are exponent vectors.
using Generic = std::map<std::vector<std::uint32_t>, Scalar>;

void generic_add(Generic& acc, const std::vector<std::uint32_t>& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Generic generic_mul(const Generic& a, const Generic& b) {
  Generic out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<std::uint32_t> key(std::max(ka.size(), kb.size()), 0);
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
      generic_add(out, key, ca * cb);
    }
  return out;
}

using GenericElement = std::vector<Generic>;

GenericElement generic_multiply(const GenericElement& a, const GenericElement& b, const StructureAlgebra& alg) {
  GenericElement out(alg.dim());
  for (const auto& [ij, coeffs] : alg.table()) {
    if (a[ij.first].empty() || b[ij.second].empty()) continue;
    Generic c = generic_mul(a[ij.first], b[ij.second]);
    for (std::uint32_t k = 0; k < alg.dim(); ++k) {
      if (coeffs[k].is_zero()) continue;
      for (const auto& [key, v] : c) generic_add(out[k], key, v * coeffs[k]);
    }
  }
  return out;
}

GenericElement generic_evaluate(const NATerm& t, const std::vector<GenericElement>& args, const StructureAlgebra& alg) {
  if (t.is_leaf()) return args[t.index() - 1];
  return generic_multiply(generic_evaluate(t.left(), args, alg), generic_evaluate(t.right(), args, alg), alg);
}

Scalar evaluate_generic(const Generic& p, const std::vector<Scalar>& point, Field field) {
  Scalar total = Scalar::zero(field);
  for (const auto& [key, c] : p) {
    Scalar term = c;
    for (std::size_t i = 0; i < key.size(); ++i)
      for (std::uint32_t e = 0; e < key[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

// Substitutes t_var = value, keeping the exponent layout.
Generic specialize(const Generic& p, std::size_t var, const Scalar& value) {
  Generic out;
  for (const auto& [key, c] : p) {
    Scalar term = c;
    auto k = key;
    if (var < k.size()) {
      for (std::uint32_t e = 0; e < k[var]; ++e) term *= value;
      k[var] = 0;
      while (!k.empty() && k.back() == 0) k.pop_back();
    }
    generic_add(out, k, term);
  }
  return out;
}

std::vector<AlgebraElement> point_to_args(const std::vector<Scalar>& point, std::size_t vars, std::uint32_t dim) {
  std::vector<AlgebraElement> args(vars);
  for (std::size_t i = 0; i < vars; ++i) args[i].assign(point.begin() + i * dim, point.begin() + (i + 1) * dim);
  return args;
}

IdentityCheck check_exhaustive(const NAPolynomial& f, const StructureAlgebra& alg) {
  if (!f.is_multilinear()) throw Error(ErrorCode::NotMultilinear, to_string(f) + " is not multilinear");
  const std::uint32_t vars = f.max_index();
  const std::uint32_t dim = alg.dim();
  IdentityCheck result;
  if (vars == 0) return result;
  // one task per first coordinate; the least failing tuple wins
  std::vector<std::optional<std::vector<std::uint32_t>>> first_failure(dim);
  parallel_for(dim, [&](std::size_t lead) {
    std::vector<std::uint32_t> tuple(vars, 0);
    tuple[0] = static_cast<std::uint32_t>(lead);
    while (true) {
      std::vector<AlgebraElement> args;
      for (auto i : tuple) args.push_back(alg.basis(i));
      if (!is_zero(evaluate_polynomial(f, args, alg))) {
        first_failure[lead] = tuple;
        return;
      }
      std::size_t pos = vars;
      while (pos > 1 && tuple[pos - 1] + 1 == dim) tuple[--pos] = 0;
      if (pos == 1) return;
      ++tuple[pos - 1];
    }
  });
  for (const auto& fail : first_failure)
    if (fail) {
      result.holds = false;
      result.witness_basis = *fail;
      std::vector<AlgebraElement> args;
      for (auto i : *fail) args.push_back(alg.basis(i));
      result.witness = std::move(args);
      break;
    }
  return result;
}

IdentityCheck check_symbolic(const NAPolynomial& f, const StructureAlgebra& alg) {
  const std::uint32_t vars = f.max_index();
  const std::uint32_t dim = alg.dim();
  const Field field = alg.field();
  std::vector<GenericElement> args(vars, GenericElement(dim));
  for (std::uint32_t i = 0; i < vars; ++i)
    for (std::uint32_t k = 0; k < dim; ++k) {
      std::vector<std::uint32_t> key(i * dim + k + 1, 0);
      key.back() = 1;
      args[i][k].emplace(std::move(key), Scalar::one(field));
    }
  GenericElement value(dim);
  for (const auto& [c, t] : f.terms) {
    GenericElement v = generic_evaluate(t, args, alg);
    for (std::uint32_t k = 0; k < dim; ++k)
      for (const auto& [key, coef] : v[k]) generic_add(value[k], key, c * coef);
  }
  IdentityCheck result;
  auto bad = std::find_if(value.begin(), value.end(), [](const Generic& g) { return !g.empty(); });
  if (bad == value.end()) return result;
  result.holds = false;
  // pick coordinates one variable at a time keeping the polynomial nonzero
  const std::size_t nvars = static_cast<std::size_t>(vars) * dim;
  Generic p = *bad;
  std::vector<Scalar> point(nvars, Scalar::zero(field));
  for (std::size_t v = 0; v < nvars; ++v) {
    std::uint32_t degree = 0;
    for (const auto& [key, c] : p) degree = std::max(degree, v < key.size() ? key[v] : 0u);
    const std::uint64_t limit = field.is_rational() ? degree + 1ull : field.characteristic();
    bool found = false;
    for (std::uint64_t x = 0; x < limit && !found; ++x) {
      Scalar value_x(field, static_cast<long>(x));
      Generic q = specialize(p, v, value_x);
      if (!q.empty()) {
        p = std::move(q);
        point[v] = value_x;
        found = true;
      }
    }
    if (!found) return result;  // vanishes at every point of F_p
  }
  if (!evaluate_generic(*bad, point, field).is_zero()) result.witness = point_to_args(point, vars, dim);
  return result;
}

IdentityCheck check_sample(const NAPolynomial& f, const StructureAlgebra& alg, std::size_t samples,
                           std::uint64_t seed) {
  const std::uint32_t vars = f.max_index();
  const Field field = alg.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-3, 3);
  IdentityCheck result;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<AlgebraElement> args(vars, alg.zero());
    for (auto& a : args)
      for (auto& c : a)
        c = field.is_rational()
                ? Scalar(field, small(rng))
                : Scalar(field, static_cast<long>(rng() % field.characteristic()));
    if (!is_zero(evaluate_polynomial(f, args, alg))) {
      result.holds = false;
      result.witness = std::move(args);
      return result;
    }
  }
  return result;
}

}  // namespace

AlgebraElement evaluate_polynomial(const NAPolynomial& f, const std::vector<AlgebraElement>& args,
                                   const StructureAlgebra& alg) {
  if (args.size() < f.max_index())
    throw Error(ErrorCode::BadElement, "need " + std::to_string(f.max_index()) + " arguments");
  for (const auto& a : args)
    if (a.size() != alg.dim()) throw Error(ErrorCode::BadElement, "argument has the wrong dimension");
  auto out = alg.zero();
  for (const auto& [c, t] : f.terms) {
    auto v = evaluate_term(t, args, alg);
    for (std::uint32_t k = 0; k < alg.dim(); ++k) out[k] += c * v[k];
  }
  return out;
}

IdentityCheck check_identity(const NAPolynomial& f, const StructureAlgebra& alg, CheckMode mode, std::size_t samples,
                             std::uint64_t seed) {
  if (!(f.field == alg.field())) throw Error(ErrorCode::FieldMismatch, f.field.name() + " vs " + alg.field().name());
  switch (mode) {
    case CheckMode::MultilinearExhaustive: return check_exhaustive(f, alg);
    case CheckMode::Symbolic: return check_symbolic(f, alg);
    case CheckMode::Sample: return check_sample(f, alg, samples, seed);
  }
  return {};
}

StructureAlgebra witt_truncated(std::uint32_t n, Field field) {
  StructureAlgebra alg(n, field);
  // (x^i d/dx)(x^j d/dx) = (x^j d(x^i)/dx) d/dx = i x^{i+j-1} d/dx
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = 0; i + j - 1 < n; ++j) {
      std::vector<Scalar> coeffs(n, Scalar::zero(field));
      coeffs[i + j - 1] = Scalar(field, static_cast<long>(i));
      alg.set_product(i, j, std::move(coeffs));
    }
  return alg;
}

NAPolynomial left_commutativity(Field field) { return parse_expression("x1*(x2*x3) - x2*(x1*x3)", field); }

NAPolynomial right_commutativity(Field field) { return parse_expression("(x1*x2)*x3 - (x1*x3)*x2", field); }

IdentityCheck check_bicommutative(const StructureAlgebra& alg) {
  auto left = check_identity(left_commutativity(alg.field()), alg, CheckMode::MultilinearExhaustive);
  if (!left.holds) return left;
  return check_identity(right_commutativity(alg.field()), alg, CheckMode::MultilinearExhaustive);
}

}  // namespace bicomm
