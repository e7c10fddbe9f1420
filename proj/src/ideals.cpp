#include "bicomm/ideals.hpp"

#include <algorithm>
#include <map>

#include "bicomm/orders.hpp"

namespace bicomm {

namespace {

std::uint32_t max_index_of(const std::vector<Element>& gens) {
  std::uint32_t d = 0;
  for (const auto& g : gens) d = std::max(d, g.max_index());
  return d;
}

void check_fields(Field field, const std::vector<Element>& gens) {
  for (const auto& g : gens)
    if (!(g.field() == field)) throw Error(ErrorCode::FieldMismatch, field.name() + " vs " + g.field().name());
}

// Finds lambda with target = sum lambda_v span[v], all polynomials.
std::optional<Vector> span_coefficients(Field field, const Poly& target, const std::vector<Poly>& span) {
  if (target.is_zero()) return Vector(span.size(), Scalar::zero(field));
  if (span.empty()) return std::nullopt;
  std::map<Monomial, std::size_t, WeightLess> rows;
  for (const auto& t : target.terms()) rows.emplace(t.mono, 0);
  for (const auto& p : span)
    for (const auto& t : p.terms()) rows.emplace(t.mono, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  Matrix a(rows.size(), Vector(span.size(), Scalar::zero(field)));
  Vector b(rows.size(), Scalar::zero(field));
  for (std::size_t v = 0; v < span.size(); ++v)
    for (const auto& t : span[v].terms()) a[rows[t.mono]][v] = t.coef;
  for (const auto& t : target.terms()) b[rows[t.mono]] = t.coef;
  return solve_linear(field, a, b, span.size()).particular;
}

// residue in ideal(gb) + span(extra)? Fills the certificate's residue and
// cofactors, and returns the coefficients on extra.
std::optional<Vector> member_modulo(Field field, const Poly& p, const GroebnerBasis& gb, const std::vector<Poly>& extra) {
  std::vector<Poly> reduced;
  reduced.reserve(extra.size());
  for (const auto& e : extra) reduced.push_back(poly_normal_form(e, gb));
  return span_coefficients(field, poly_normal_form(p, gb), reduced);
}

void fill_cofactors(MembershipCertificate& cert, const GroebnerBasis& gb) {
  Division div = divide(cert.residue, gb.generators());
  cert.cofactors = std::move(div.quotients);
}

MembershipCertificate one_sided_member(const Element& f, const std::vector<Element>& gens, bool left) {
  Field field = f.field();
  check_fields(field, gens);
  for (const auto& g : gens)
    if (!g.is_quadratic())
      throw Error(ErrorCode::UnsupportedGenerator, "one-sided ideals need generators in the square: " + g.to_string());
  MembershipCertificate cert;
  cert.mu.assign(gens.size(), Scalar::zero(field));
  cert.residue = Poly(field);
  if (f.is_zero()) {
    cert.member = true;
    return cert;
  }
  if (!f.is_quadratic()) return cert;
  const std::uint32_t d = std::max(max_index_of(gens), f.max_index());
  std::vector<Poly> ideal_gens;
  std::vector<Poly> span;
  for (const auto& g : gens) {
    span.push_back(g.quadratic());
    for (std::uint32_t j = 1; j <= d; ++j) ideal_gens.push_back(g.quadratic().times(left ? Monomial::y(j) : Monomial::z(j)));
  }
  GroebnerBasis gb = buchberger(field, ideal_gens);
  auto lambda = member_modulo(field, f.quadratic(), gb, span);
  if (!lambda) return cert;
  cert.member = true;
  cert.mu = *lambda;
  cert.residue = f.quadratic();
  for (std::size_t k = 0; k < gens.size(); ++k) cert.residue.add_scaled(-cert.mu[k], span[k]);
  fill_cofactors(cert, gb);
  return cert;
}

}  // namespace

TwoSidedPresentation TwoSidedPresentation::build(Field field, std::vector<Element> generators, std::uint32_t rank) {
  check_fields(field, generators);
  TwoSidedPresentation pres{field, std::max(rank, max_index_of(generators)), std::move(generators), {}, {}, {}, {},
                            GroebnerBasis(field)};
  const auto& gens = pres.generators;
  for (const auto& g : gens) {
    pres.s.push_back(g.right_factor());
    pres.t.push_back(g.left_factor());
  }
  std::vector<Poly> ideal_gens;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::uint32_t j = 1; j <= pres.rank; ++j) {
      ideal_gens.push_back(pres.s[k].times(Monomial::y(j)));
      ideal_gens.push_back(pres.t[k].times(Monomial::z(j)));
    }
    for (std::size_t l = 0; l < gens.size(); ++l) ideal_gens.push_back(pres.t[k] * pres.s[l]);
  }
  pres.module_ideal = buchberger(field, ideal_gens);

  // kernel of the linear parts: columns are generators, rows are indices
  Matrix a(pres.rank, Vector(gens.size(), Scalar::zero(field)));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& [i, c] : gens[k].linear()) a[i - 1][k] = c;
  LinearSolution sol = solve_linear(field, a, Vector(pres.rank, Scalar::zero(field)), gens.size());
  pres.kernel = std::move(sol.kernel);
  for (const auto& nu : pres.kernel) {
    Poly p(field);
    for (std::size_t k = 0; k < gens.size(); ++k) p.add_scaled(nu[k], gens[k].quadratic());
    pres.pi.push_back(std::move(p));
  }
  return pres;
}

MembershipCertificate two_sided_member(const Element& f, const TwoSidedPresentation& pres) {
  if (!(f.field() == pres.field)) throw Error(ErrorCode::FieldMismatch, f.field().name() + " vs " + pres.field.name());
  if (f.max_index() > pres.rank)
    return two_sided_member(f, TwoSidedPresentation::build(pres.field, pres.generators, f.max_index()));
  const Field field = pres.field;
  const auto& gens = pres.generators;
  MembershipCertificate cert;
  cert.mu.assign(gens.size(), Scalar::zero(field));
  cert.residue = Poly(field);
  if (f.is_zero()) {
    cert.member = true;
    return cert;
  }
  Matrix a(pres.rank, Vector(gens.size(), Scalar::zero(field)));
  Vector b(pres.rank, Scalar::zero(field));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& [i, c] : gens[k].linear()) a[i - 1][k] = c;
  for (const auto& [i, c] : f.linear()) b[i - 1] = c;
  LinearSolution sol = solve_linear(field, a, b, gens.size());
  if (!sol.particular) return cert;
  Vector mu = *sol.particular;
  Poly rest = f.quadratic();
  for (std::size_t k = 0; k < gens.size(); ++k) rest.add_scaled(-mu[k], gens[k].quadratic());
  auto lambda = member_modulo(field, rest, pres.module_ideal, pres.pi);
  if (!lambda) return cert;
  for (std::size_t v = 0; v < pres.kernel.size(); ++v)
    for (std::size_t k = 0; k < gens.size(); ++k) mu[k] += (*lambda)[v] * pres.kernel[v][k];
  cert.member = true;
  cert.mu = std::move(mu);
  cert.residue = f.quadratic();
  for (std::size_t k = 0; k < gens.size(); ++k) cert.residue.add_scaled(-cert.mu[k], gens[k].quadratic());
  fill_cofactors(cert, pres.module_ideal);
  return cert;
}

bool two_sided_member(const Element& f, const std::vector<Element>& generators) {
  return two_sided_member(f, TwoSidedPresentation::build(f.field(), generators, f.max_index())).member;
}

MembershipCertificate left_ideal_member(const Element& f, const std::vector<Element>& generators) {
  return one_sided_member(f, generators, true);
}

MembershipCertificate right_ideal_member(const Element& f, const std::vector<Element>& generators) {
  return one_sided_member(f, generators, false);
}

bool ideal_member(const Element& f, const std::vector<Element>& generators, IdealMode mode) {
  switch (mode) {
    case IdealMode::TwoSided: return two_sided_member(f, generators);
    case IdealMode::Left: return left_ideal_member(f, generators).member;
    case IdealMode::Right: return right_ideal_member(f, generators).member;
  }
  return false;
}

std::vector<bool> chain_strict_steps(const std::vector<std::vector<Element>>& steps, IdealMode mode) {
  std::vector<bool> strict(steps.size(), false);
  for (std::size_t j = 1; j < steps.size(); ++j) {
    const auto& prev = steps[j - 1];
    const auto& cur = steps[j];
    // multiset inclusion of prev in cur
    std::vector<bool> used(cur.size(), false);
    for (const auto& g : prev) {
      bool found = false;
      for (std::size_t k = 0; k < cur.size() && !found; ++k)
        if (!used[k] && cur[k] == g) used[k] = found = true;
      if (!found) throw Error(ErrorCode::BadChain, "step " + std::to_string(j + 1) + " drops generator " + g.to_string());
    }
    if (prev.empty() && cur.empty()) continue;
    Field field = cur.front().field();
    std::uint32_t d = std::max(max_index_of(cur), 1u);
    std::optional<TwoSidedPresentation> pres;
    if (mode == IdealMode::TwoSided) pres = TwoSidedPresentation::build(field, prev, d);
    for (std::size_t k = 0; k < cur.size() && !strict[j]; ++k) {
      if (used[k]) continue;
      bool member = mode == IdealMode::TwoSided ? two_sided_member(cur[k], *pres).member
                                                : ideal_member(cur[k], prev, mode);
      strict[j] = !member;
    }
  }
  return strict;
}

std::optional<std::size_t> chain_stabilization(const std::vector<std::vector<Element>>& steps, IdealMode mode) {
  if (steps.empty()) throw Error(ErrorCode::BadChain, "empty chain");
  auto strict = chain_strict_steps(steps, mode);
  std::size_t last = 1;
  for (std::size_t j = 0; j < strict.size(); ++j)
    if (strict[j]) last = j + 1;
  if (steps.size() > 1 && last == steps.size()) return std::nullopt;
  return last;
}

}  // namespace bicomm
