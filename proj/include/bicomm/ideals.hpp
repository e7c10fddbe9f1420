#pragma once

#include <optional>
#include <vector>

#include "bicomm/element.hpp"
#include "bicomm/groebner.hpp"
#include "bicomm/linalg.hpp"

namespace bicomm {

/// Two-sided ideal of G_d generated by g_k = l_k + p_k (linear plus quadratic).
///
/// Left and right multiplication act on G^2 as multiplication by
/// t_k = sum c_ki y_i + p_k and s_k = sum c_ki z_i + p_k, and
/// g_k.g_l = t_k s_l. The ideal is therefore
///   { sum mu_k g_k + j : mu in K^n, j in J },
/// J the ideal of K[Y, Z] generated by y_j s_k, t_k z_j and t_k s_l. With
/// pi ranging over sum nu_k p_k for nu in the kernel of the linear parts,
/// f = l_f + p_f is a member iff l_f = sum mu_k l_k is solvable and, for one
/// particular solution, p_f - sum mu_k p_k lies in J + span(pi).
struct TwoSidedPresentation {
  Field field;
  std::uint32_t rank = 0;
  std::vector<Element> generators;
  std::vector<Poly> s;
  std::vector<Poly> t;
  std::vector<Vector> kernel;  // coefficient vectors nu
  std::vector<Poly> pi;        // sum nu_k p_k per kernel vector
  GroebnerBasis module_ideal;

  /// rank 0 means the largest index among the generators.
  static TwoSidedPresentation build(Field field, std::vector<Element> generators, std::uint32_t rank = 0);
};

struct MembershipCertificate {
  bool member = false;
  Vector mu;                   // f - sum mu_k g_k = residue
  Poly residue;                // lies in the module ideal when member
  std::vector<Poly> cofactors; // residue = sum cofactors[k] * module_ideal[k]
};

/// Decides membership in the two-sided ideal; the presentation is rebuilt at
/// a larger rank when f uses more generators.
MembershipCertificate two_sided_member(const Element& f, const TwoSidedPresentation& pres);
bool two_sided_member(const Element& f, const std::vector<Element>& generators);

/// One-sided ideals generated by elements of G^2. The left ideal is
/// span(g_k) + (y_1..y_d) g_k, the right ideal span(g_k) + (z_1..z_d) g_k.
MembershipCertificate left_ideal_member(const Element& f, const std::vector<Element>& generators);
MembershipCertificate right_ideal_member(const Element& f, const std::vector<Element>& generators);

enum class IdealMode { TwoSided, Left, Right };

/// Cumulative chain of generator sets. Returns the 1-based index from which
/// every later step only adds members, or nullopt when the last step is still
/// strict (one-sided chains may grow forever).
std::optional<std::size_t> chain_stabilization(const std::vector<std::vector<Element>>& steps, IdealMode mode);

/// Which steps (2-based onward) strictly enlarge the ideal; index 0 is step 1
/// and always false.
std::vector<bool> chain_strict_steps(const std::vector<std::vector<Element>>& steps, IdealMode mode);

bool ideal_member(const Element& f, const std::vector<Element>& generators, IdealMode mode);

}  // namespace bicomm
