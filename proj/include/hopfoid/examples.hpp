#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfoid/algebroid.hpp"

namespace hopfoid {

/// Algebra on the monomials g_0^{e_0} ... g_{k-1}^{e_{k-1}}, e_i < orders[i],
/// with g_j g_i = swaps[j][i] g_i g_j for i < j and g_i^{orders[i]} equal to
/// 1 (cyclic) or 0.
struct QCommPresentation {
  std::vector<std::string> names;
  std::vector<std::size_t> orders;
  std::vector<bool> cyclic;
  std::vector<std::vector<Scalar>> swaps;

  std::size_t generators() const { return names.size(); }
  std::size_t dim() const;
  /// Mixed radix, first generator most significant.
  Index index(const std::vector<std::size_t>& exponents) const;
  std::vector<std::size_t> exponents(Index i) const;
  /// g_0 repeated e_0 times, then g_1, ...
  std::vector<std::size_t> word(Index i) const;
  Index generator_index(std::size_t g) const;
  std::string label(Index i) const;
};

struct NormalForm {
  bool zero = false;
  Scalar coeff;
  Index index = 0;
};

/// Sorts the letters of `word` by adjacent swaps, then applies the power
/// relations.  Throws std::invalid_argument naming the word on an unknown
/// letter or a missing swap coefficient.
NormalForm normal_form(const QCommPresentation& p, const std::vector<std::size_t>& word);
std::shared_ptr<const StructAlgebra> qcomm_algebra(const QCommPresentation& p);

/// A Hopf algebra together with the presentation of its underlying algebra.
struct PresentedHopf {
  QCommPresentation pres;
  HopfPtr hopf;
};

/// E, K with KE = q^2 EK, K^d = 1, E^d = 0; E^m K^n at m * d + n.
PresentedHopf slq2_A(const QRoot& q);
/// eta, kappa with kappa eta = q^-2 eta kappa, kappa^d = 1, eta^d = 0;
/// eta^i kappa^j at i * d + j.
PresentedHopf slq2_Astar(const QRoot& q);

/// Extends generator values <x_g, a_h> to all basis pairs through
/// <x, ab> = <Delta x, a (x) b> and <xy, a> = <x (x) y, Delta a>.  Every
/// coproduct leg of an x-generator must be 1 or a generator.  Rows are the
/// basis of `x`.
LinearMap extend_pairing(const PresentedHopf& a, const PresentedHopf& x, const std::vector<std::vector<Scalar>>& values);

/// <eta^i kappa^j, E^m K^n> = delta_mi (i)! q^{2j(i+n)}.
Scalar slq2_pairing_closed_form(const QRoot& q, int i, int j, int m, int n);

/// D(A), its action on A*, the Heisenberg double and the smash Hopf
/// algebroid over A*, all built from one pairing.
struct DoubleTower {
  std::shared_ptr<const DualPairing> pairing;
  DoublePtr dbl;
  ModuleAction action;
  SmashPtr heisenberg;
  SmashAlgebroid algebroid;
};

DoubleTower build_tower(std::shared_ptr<const DualPairing> pairing, const par::SweepPlan& plan = {});

struct Slq2Tower {
  int d;
  QRoot q;
  PresentedHopf A;
  PresentedHopf Astar;
  DoubleTower tower;
};

/// Throws std::invalid_argument unless d is odd and > 1 and gcd(q_exponent, d) = 1.
Slq2Tower build_slq2(int d, int q_exponent = 1, const par::SweepPlan& plan = {});

/// Pairing against the closed form on all d^4 basis pairs.
VerificationReport verify_slq2_pairing(const Slq2Tower& t, const std::string& prefix = "");

/// Recomputes every displayed formula for the tower and records one ledger
/// entry each.  Never fails; mismatches are ledger entries.
std::vector<LedgerEntry> verify_printed_formulas(const Slq2Tower& t);

/// Tags of suspected typos that a ledger entry may carry as
/// "documented:<tag>".
const std::vector<std::string>& documented_tags();

/// 1: k, 2: k[x]/(x^2), 3: upper triangular 2 x 2, 4: M_2(k).
std::shared_ptr<const StructAlgebra> base_algebra(std::size_t dim);

/// k[Z/d] with group-like basis g^i.
HopfPtr group_algebra(std::size_t d);

}  // namespace hopfoid
