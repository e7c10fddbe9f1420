#include "bicomm/groebner.hpp"

#include <algorithm>
#include <set>

#include "bicomm/orders.hpp"

namespace bicomm {

GroebnerBasis::GroebnerBasis(Field field, std::vector<Poly> generators)
    : field_(field), generators_(std::move(generators)) {}

namespace {

// Reduces p fully by the monic polynomials in basis.
Poly reduce_full(Poly p, const std::vector<Poly>& basis) {
  Poly remainder(p.field());
  std::vector<Term> kept;
  while (!p.is_zero()) {
    const Term lead = p.leading();
    const Poly* divisor = nullptr;
    for (const auto& g : basis)
      if (g.leading().mono.divides(lead.mono)) {
        divisor = &g;
        break;
      }
    if (divisor != nullptr) {
      p.add_scaled(-(lead.coef / divisor->leading().coef), *divisor, lead.mono / divisor->leading().mono);
    } else {
      kept.push_back(lead);
      p.add_scaled(-Scalar::one(p.field()), Poly::monomial(p.field(), lead.mono, lead.coef));
    }
  }
  // kept is already in descending order
  return Poly::from_terms(remainder.field(), std::move(kept));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.leading().mono, g.leading().mono);
  Poly s = f.times(l / f.leading().mono).scaled(f.leading().coef.inverse());
  s.add_scaled(-g.leading().coef.inverse(), g, l / g.leading().mono);
  return s;
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    auto c = weight_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

}  // namespace

GroebnerBasis buchberger(Field field, const std::vector<Poly>& gens, BuchbergerStats* stats) {
  std::vector<Poly> basis;
  std::set<Pair, PairOrder> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto add = [&](Poly p) {
    p = p.monic();
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pairs.insert({lcm(basis[i].leading().mono, p.leading().mono), i, k});
    basis.push_back(std::move(p));
  };

  for (const auto& g : gens) {
    if (!(g.field() == field)) throw Error(ErrorCode::FieldMismatch, "generator over " + g.field().name());
    Poly r = reduce_full(g, basis);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    done.emplace(pr.i, pr.j);
    if (stats) ++stats->pairs_considered;
    const Monomial& li = basis[pr.i].leading().mono;
    const Monomial& lj = basis[pr.j].leading().mono;
    if (coprime(li, lj)) continue;
    // chain criterion: some k with LM(k) | lcm whose pairs with i and j are done
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading().mono.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      redundant = done.count(key(pr.i, k)) && done.count(key(pr.j, k));
    }
    if (redundant) continue;
    if (stats) ++stats->pairs_reduced;
    Poly r = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) add(std::move(r));
  }

  // minimize
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading().mono;
      const Monomial& li = basis[i].leading().mono;
      drop = lj.divides(li) && (!(lj == li) || j < i);
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly tail = minimal[i];
    Term lead = tail.leading();
    tail.add_scaled(-Scalar::one(field), Poly::monomial(field, lead.mono, lead.coef));
    minimal[i] = (Poly::monomial(field, lead.mono, lead.coef) + reduce_full(tail, others)).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return weight_compare(a.leading().mono, b.leading().mono) < 0; });
  return GroebnerBasis(field, std::move(minimal));
}

Poly poly_normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (!(p.field() == gb.field())) throw Error(ErrorCode::FieldMismatch, p.field().name() + " vs " + gb.field().name());
  return reduce_full(p, gb.generators());
}

Division divide(const Poly& p, const std::vector<Poly>& divisors) {
  Field field = p.field();
  Division out{std::vector<Poly>(divisors.size(), Poly(field)), Poly(field)};
  Poly rest = p;
  std::vector<Term> kept;
  while (!rest.is_zero()) {
    const Term lead = rest.leading();
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Term& dl = divisors[k].leading();
      if (!dl.mono.divides(lead.mono)) continue;
      Scalar c = lead.coef / dl.coef;
      Monomial q = lead.mono / dl.mono;
      out.quotients[k].add_scaled(Scalar::one(field), Poly::monomial(field, q, c));
      rest.add_scaled(-c, divisors[k], q);
      divided = true;
      break;
    }
    if (!divided) {
      kept.push_back(lead);
      rest.add_scaled(-Scalar::one(field), Poly::monomial(field, lead.mono, lead.coef));
    }
  }
  out.remainder = Poly::from_terms(field, std::move(kept));
  return out;
}

}  // namespace bicomm
