#include "bicomm/tideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "bicomm/linalg.hpp"
#include "bicomm/orders.hpp"
#include "bicomm/parallel.hpp"

namespace bicomm {

Substitution& Substitution::set(std::uint32_t index, Element image) {
  if (index == 0) throw Error(ErrorCode::BadIndex, "variable index 0");
  if (image.is_zero()) throw Error(ErrorCode::BadElement, "substitution image must be nonzero");
  images_.insert_or_assign(index, std::move(image));
  return *this;
}

const Element* Substitution::image(std::uint32_t index) const {
  auto it = images_.find(index);
  return it == images_.end() ? nullptr : &it->second;
}

Element apply_substitution(const Element& f, const Substitution& sigma) {
  const Field field = f.field();
  auto image = [&](std::uint32_t i) {
    const Element* e = sigma.image(i);
    return e != nullptr ? *e : Element::generator(field, i);
  };
  Element out(field);
  for (const auto& [i, c] : f.linear()) out = add_scaled(out, c, image(i));

  std::map<std::pair<std::uint32_t, bool>, std::vector<Poly>> powers;  // (index, is_y) -> factor^0, ^1, ...
  auto power = [&](std::uint32_t i, bool is_y, std::uint32_t e) -> const Poly& {
    auto& cache = powers[{i, is_y}];
    if (cache.empty()) {
      Element img = image(i);
      cache.push_back(Poly::monomial(field, Monomial()));
      cache.push_back(is_y ? img.left_factor() : img.right_factor());
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Poly quad(field);
  for (const auto& t : f.quadratic().terms()) {
    Poly acc = Poly::monomial(field, Monomial(), t.coef);
    for (std::uint32_t i = 1; i <= t.mono.max_index(); ++i) {
      if (auto e = t.mono.y_exp(i)) acc = acc * power(i, true, e);
      if (auto e = t.mono.z_exp(i)) acc = acc * power(i, false, e);
    }
    quad += acc;
  }
  return out + Element(field, {}, std::move(quad));
}

std::size_t TIdealSpan::dimension(const Multidegree& m) const {
  auto it = basis_by_multidegree.find(m);
  return it == basis_by_multidegree.end() ? 0 : it->second.size();
}

namespace {

std::uint32_t total(const Multidegree& m) { return std::accumulate(m.begin(), m.end(), 0u); }

Multidegree trimmed(Multidegree m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

bool leq(const Multidegree& a, const Multidegree& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void add_into(Multidegree& a, const Multidegree& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

void check_window(const ClosureWindow& w) {
  if (w.max_degree == 0 || w.max_variables == 0)
    throw Error(ErrorCode::WindowTooSmall, "window bounds must be positive");
}

// All multidegrees of length <= vars and total in [lo, hi], trimmed.
std::vector<Multidegree> multidegrees(std::uint32_t vars, std::uint32_t lo, std::uint32_t hi) {
  std::vector<Multidegree> out;
  Multidegree cur(vars, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t pos, std::uint32_t left) {
    if (pos == vars) {
      std::uint32_t t = hi - left;
      if (t >= lo) out.push_back(trimmed(cur));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(0, hi);
  std::sort(out.begin(), out.end());
  return out;
}

// All mixed monomials of a given multidegree.
std::vector<Monomial> mixed_monomials(const Multidegree& m) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> y(m.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == m.size()) {
      std::vector<std::uint32_t> z(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) z[i] = m[i] - y[i];
      Monomial mono(y, z);
      if (mono.is_mixed()) out.push_back(std::move(mono));
      return;
    }
    for (std::uint32_t a = 0; a <= m[pos]; ++a) {
      y[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

mpz_class multinomial(const std::vector<std::uint32_t>& parts) {
  mpz_class r = 1;
  std::uint32_t n = 0;
  for (auto p : parts) {
    for (std::uint32_t k = 1; k <= p; ++k) {
      ++n;
      r *= n;
      r /= k;
    }
  }
  return r;
}

// A basis element u of F_V: either x_j (left y_j, right z_j) or a mixed
// monomial w (left = right = w).
struct Substituend {
  Multidegree md;
  Monomial left;
  Monomial right;
};

struct GeneratorPart {
  Poly poly;
  std::vector<std::uint32_t> vars;     // indices with positive degree
  std::vector<std::uint32_t> degrees;  // degree per var
};

class ClosureEngine {
 public:
  ClosureEngine(const std::vector<Element>& gens, const ClosureWindow& window, Field field)
      : field_(field), window_(window) {
    check_window(window);
    for (const auto& g : gens) {
      if (!(g.field() == field_)) throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + g.field().name());
      if (g.max_degree() > window.max_degree)
        throw Error(ErrorCode::WindowTooSmall, "generator " + g.to_string() + " exceeds degree " +
                                                   std::to_string(window.max_degree));
      for (auto& [m, part] : multihomogeneous_components(g)) {
        if (!part.is_quadratic()) {
          everything_ = true;
          continue;
        }
        GeneratorPart gp{part.quadratic(), {}, {}};
        for (std::size_t i = 0; i < m.size(); ++i)
          if (m[i] > 0) {
            gp.vars.push_back(static_cast<std::uint32_t>(i + 1));
            gp.degrees.push_back(m[i]);
          }
        parts_.push_back(std::move(gp));
      }
    }
    const std::uint32_t v = window.max_variables;
    for (std::uint32_t j = 1; j <= v; ++j) {
      Multidegree md(j, 0);
      md[j - 1] = 1;
      substituends_.push_back({md, Monomial::y(j), Monomial::z(j)});
    }
    if (window.max_degree >= 3)
      for (const auto& md : multidegrees(v, 2, window.max_degree - 1))
        for (auto& w : mixed_monomials(md)) substituends_.push_back({md, w, w});
  }

  bool everything() const noexcept { return everything_; }
  Field field() const noexcept { return field_; }

  bool in_window(const Multidegree& m) const {
    return m.size() <= window_.max_variables && total(m) <= window_.max_degree;
  }

  // Lazily computes m and everything it depends on.
  const Echelon& component(const Multidegree& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      Multidegree lower = m;
      --lower[j];
      lower = trimmed(lower);
      if (total(lower) >= 2) component(lower);
    }
    return memo_.emplace(m, compute(m)).first->second;
  }

  // Computes every component of the window, one total degree at a time.
  void compute_all() {
    for (std::uint32_t n = 2; n <= window_.max_degree; ++n) {
      auto layer = multidegrees(window_.max_variables, n, n);
      std::vector<std::optional<Echelon>> results(layer.size());
      parallel_for(layer.size(), [&](std::size_t k) {
        if (!memo_.count(layer[k])) results[k] = compute(layer[k]);
      });
      for (std::size_t k = 0; k < layer.size(); ++k)
        if (results[k]) memo_.emplace(layer[k], std::move(*results[k]));
    }
  }

  const std::map<Multidegree, Echelon>& components() const noexcept { return memo_; }

 private:
  // Reads only strictly lower components, so layers can run concurrently.
  Echelon compute(const Multidegree& m) const {
    Echelon span(field_);
    if (everything_) {
      for (auto& w : mixed_monomials(m)) span.insert(Poly::monomial(field_, w));
      return span;
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      Multidegree lower = m;
      --lower[j];
      lower = trimmed(lower);
      if (total(lower) < 2) continue;
      auto it = memo_.find(lower);
      if (it == memo_.end()) throw std::logic_error("closure component computed out of order");
      const auto index = static_cast<std::uint32_t>(j + 1);
      for (const auto& row : it->second.rows()) {
        span.insert(row.times(Monomial::y(index)));
        span.insert(row.times(Monomial::z(index)));
      }
    }
    std::vector<std::size_t> fitting;
    for (std::size_t u = 0; u < substituends_.size(); ++u)
      if (leq(substituends_[u].md, m)) fitting.push_back(u);
    for (const auto& part : parts_) add_instances(part, m, fitting, span);
    return span;
  }

  // Every coefficient of the formal substitution x_i -> sum_u c_iu u whose
  // multidegree is exactly m.
  void add_instances(const GeneratorPart& part, const Multidegree& m, const std::vector<std::size_t>& fitting,
                     Echelon& span) const {
    std::vector<std::vector<std::size_t>> choice(part.vars.size());
    Multidegree sum;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t var, std::size_t from) {
      if (var == part.vars.size()) {
        if (trimmed(sum) == m) {
          Poly h = instance(part, choice);
          if (!h.is_zero()) span.insert(h);
        }
        return;
      }
      if (choice[var].size() == part.degrees[var]) {
        rec(var + 1, 0);
        return;
      }
      for (std::size_t k = from; k < fitting.size(); ++k) {
        const auto& u = substituends_[fitting[k]];
        Multidegree saved = sum;
        add_into(sum, u.md);
        if (leq(trimmed(sum), m)) {
          choice[var].push_back(fitting[k]);
          rec(var, k);
          choice[var].pop_back();
        }
        sum = std::move(saved);
      }
    };
    rec(0, 0);
  }

  // Coefficient of prod_i prod_u c_iu^{mult} in part(sigma).
  Poly instance(const GeneratorPart& part, const std::vector<std::vector<std::size_t>>& choice) const {
    // distinct substituends with multiplicities, per variable
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> counts(choice.size());
    for (std::size_t v = 0; v < choice.size(); ++v)
      for (auto u : choice[v]) {
        if (!counts[v].empty() && counts[v].back().first == u)
          ++counts[v].back().second;
        else
          counts[v].push_back({u, 1});
      }
    std::vector<Term> out;
    for (const auto& t : part.poly.terms()) {
      std::vector<std::pair<Monomial, mpz_class>> acc{{Monomial(), 1}};
      for (std::size_t v = 0; v < part.vars.size(); ++v) {
        auto factor = variable_expansion(t.mono.y_exp(part.vars[v]), t.mono.z_exp(part.vars[v]), counts[v]);
        std::vector<std::pair<Monomial, mpz_class>> next;
        for (const auto& [ma, ca] : acc)
          for (const auto& [mb, cb] : factor) next.push_back({ma * mb, ca * cb});
        acc = std::move(next);
      }
      for (auto& [mono, c] : acc) out.push_back({std::move(mono), t.coef * Scalar(field_, mpq_class(c))});
    }
    return Poly::from_terms(field_, std::move(out));
  }

  // Coefficient of prod_u c_u^{m_u} in (sum c_u left_u)^a (sum c_u right_u)^b.
  std::vector<std::pair<Monomial, mpz_class>> variable_expansion(
      std::uint32_t a, std::uint32_t b, const std::vector<std::pair<std::size_t, std::uint32_t>>& counts) const {
    std::vector<std::pair<Monomial, mpz_class>> out;
    std::vector<std::uint32_t> left(counts.size(), 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t remaining) {
      if (k == counts.size()) {
        if (remaining != 0) return;
        std::vector<std::uint32_t> right(counts.size());
        Monomial mono;
        for (std::size_t i = 0; i < counts.size(); ++i) {
          right[i] = counts[i].second - left[i];
          const auto& u = substituends_[counts[i].first];
          for (std::uint32_t e = 0; e < left[i]; ++e) mono *= u.left;
          for (std::uint32_t e = 0; e < right[i]; ++e) mono *= u.right;
        }
        std::uint32_t rsum = std::accumulate(right.begin(), right.end(), 0u);
        if (rsum != b) return;
        out.push_back({std::move(mono), multinomial(left) * multinomial(right)});
        return;
      }
      for (std::uint32_t l = 0; l <= std::min(counts[k].second, remaining); ++l) {
        left[k] = l;
        rec(k + 1, remaining - l);
      }
      left[k] = 0;
    };
    rec(0, a);
    return out;
  }

  Field field_;
  ClosureWindow window_;
  bool everything_ = false;
  std::vector<GeneratorPart> parts_;
  std::vector<Substituend> substituends_;
  std::map<Multidegree, Echelon> memo_;
};

Field field_of(const std::vector<Element>& gens, Field fallback = Field::rationals()) {
  return gens.empty() ? fallback : gens.front().field();
}

Element linear_unit(Field field, const Multidegree& m) {
  return Element::generator(field, static_cast<std::uint32_t>(m.size()));
}

TIdealSpan to_span(ClosureEngine& engine, const ClosureWindow& window) {
  TIdealSpan span{window, {}};
  const Field field = engine.field();
  if (engine.everything())
    for (std::uint32_t j = 1; j <= window.max_variables; ++j) {
      Multidegree m(j, 0);
      m[j - 1] = 1;
      span.basis_by_multidegree[m].push_back(linear_unit(field, m));
    }
  for (const auto& [m, ech] : engine.components()) {
    if (ech.rank() == 0) continue;
    auto& rows = span.basis_by_multidegree[m];
    for (auto& row : ech.rows()) rows.push_back(Element(field, {}, std::move(row)));
  }
  return span;
}

}  // namespace

bool TIdealSpan::contains(const Element& f) const {
  for (const auto& [m, part] : multihomogeneous_components(f)) {
    if (m.size() > window.max_variables || total(m) > window.max_degree)
      throw Error(ErrorCode::WindowTooSmall, part.to_string() + " lies outside the window");
    auto it = basis_by_multidegree.find(m);
    if (it == basis_by_multidegree.end()) return false;
    if (!part.is_quadratic()) continue;  // a linear component is present only when it is all of x_j
    Echelon ech(f.field());
    for (const auto& row : it->second) ech.insert(row.quadratic());
    if (!ech.contains(part.quadratic())) return false;
  }
  return true;
}

TIdealSpan t_ideal_closure_bounded(const std::vector<Element>& gens, const ClosureWindow& window) {
  ClosureEngine engine(gens, window, field_of(gens));
  engine.compute_all();
  return to_span(engine, window);
}

bool t_ideal_member_bounded(const Element& f, const std::vector<Element>& gens, const ClosureWindow& window) {
  check_window(window);
  if (f.max_degree() > window.max_degree || f.max_index() > window.max_variables)
    throw Error(ErrorCode::WindowTooSmall, f.to_string() + " lies outside the window");
  if (f.is_zero()) return true;
  ClosureEngine engine(gens, window, f.field());
  for (const auto& [m, part] : multihomogeneous_components(f)) {
    if (!part.is_quadratic()) {
      if (!engine.everything()) return false;
      continue;
    }
    if (!engine.component(m).contains(part.quadratic())) return false;
  }
  return true;
}

Element lift_weight(const Element& f, const Monomial& target) {
  if (!f.is_quadratic()) throw Error(ErrorCode::UnsupportedGenerator, "weights live in the square: " + f.to_string());
  auto [weight, coef] = weight_of(f);
  auto phi = higman_embedding(weight, target);
  if (!phi) throw Error(ErrorCode::NotDominated, weight.to_string() + " does not embed in " + target.to_string());
  const IndexMap full = phi->extended_to(f.max_index());
  Element h = apply_index_map(f, full);
  const Monomial rest = target / full.apply(weight);
  const Field field = f.field();
  for (std::uint32_t k = 1; k <= rest.max_index(); ++k) {
    for (std::uint32_t e = 0; e < rest.y_exp(k); ++e) h = multiply(Element::generator(field, k), h);
    for (std::uint32_t e = 0; e < rest.z_exp(k); ++e) h = multiply(h, Element::generator(field, k));
  }
  return h;
}

SpechtReduction specht_reduce(const Element& g, const std::vector<Element>& basis) {
  if (!g.is_quadratic()) throw Error(ErrorCode::UnsupportedGenerator, "reduction works in the square: " + g.to_string());
  for (const auto& f : basis)
    if (!f.is_quadratic()) throw Error(ErrorCode::UnsupportedGenerator, "basis element outside the square: " + f.to_string());
  SpechtReduction out{g, {}, 0};
  while (!out.remainder.is_zero()) {
    auto [weight, nu] = weight_of(out.remainder);
    out.trace.push_back(weight);
    const Element* reducer = nullptr;
    for (const auto& f : basis)
      if (!f.is_zero() && higman_leq(weight_of(f).first, weight)) {
        reducer = &f;
        break;
      }
    if (reducer == nullptr) break;
    Element h = lift_weight(*reducer, weight);
    Scalar mu = h.quadratic().coefficient(weight);
    out.remainder = add_scaled(out.remainder, -(nu / mu), h);
    ++out.cancellations;
    if (!out.remainder.is_zero() && !(weight_compare(weight_of(out.remainder).first, weight) < 0))
      throw std::logic_error("weight did not decrease");
  }
  return out;
}

SpechtSearchResult specht_basis_search(const std::vector<Element>& gens, const ClosureWindow& window) {
  SpechtSearchResult result;
  if (gens.empty()) {
    result.verified = true;
    return result;
  }
  const Field field = field_of(gens);
  ClosureEngine engine(gens, window, field);
  if (engine.everything()) {
    // x1 = 0 already forces the whole algebra
    result.basis.push_back(Element::generator(field, 1));
    result.verified = true;
    return result;
  }
  engine.compute_all();
  std::vector<Poly> rows;
  std::vector<Monomial> weights;
  for (const auto& [m, ech] : engine.components())
    for (auto& row : ech.rows()) {
      weights.push_back(row.leading().mono);
      rows.push_back(std::move(row));
    }
  result.antichain = minimal_antichain(weights);
  std::sort(result.antichain.begin(), result.antichain.end(), WeightLess());
  for (const auto& w : result.antichain) {
    // prefer an input generator carrying this weight
    const Element* chosen = nullptr;
    for (const auto& g : gens)
      if (g.is_quadratic() && multihomogeneous_components(g).size() == 1 && weight_of(g).first == w) {
        chosen = &g;
        break;
      }
    if (chosen != nullptr) {
      result.basis.push_back(*chosen);
      continue;
    }
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (weights[k] == w) {
        result.basis.push_back(Element(field, {}, rows[k]));
        break;
      }
  }
  std::vector<char> reduced(rows.size(), 0);
  parallel_for(rows.size(), [&](std::size_t k) {
    reduced[k] = specht_reduce(Element(field, {}, rows[k]), result.basis).remainder.is_zero();
  });
  result.verified = std::all_of(reduced.begin(), reduced.end(), [](char c) { return c != 0; });
  return result;
}

std::vector<Element> char_zero_two_variable_heuristic(const std::vector<Element>& gens, const ClosureWindow& window) {
  if (gens.empty()) return gens;
  const Field field = field_of(gens);
  if (!field.is_rational())
    throw Error(ErrorCode::WrongCharacteristic, "the two-variable reduction needs characteristic 0");
  std::uint32_t vars = 0;
  for (const auto& g : gens) vars = std::max(vars, g.max_index());
  if (vars <= 2) return gens;
  ClosureWindow two{window.max_degree, 2};
  auto candidate = specht_basis_search(gens, two).basis;
  if (candidate.empty()) return gens;
  ClosureWindow wide{window.max_degree, std::max(window.max_variables, vars)};
  if (t_ideal_closure_bounded(candidate, wide) == t_ideal_closure_bounded(gens, wide)) return candidate;
  return gens;
}

}  // namespace bicomm
