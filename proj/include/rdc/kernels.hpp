#pragma once

// Named forms on C^n and R^l: Bochner-Martinelli and Cauchy kernels, the angular form,
// and the cochain chi linking the two kernels.

#include <vector>

#include "rdc/cech.hpp"
#include "rdc/form.hpp"
#include "rdc/report.hpp"

namespace rdc {

/// C_n = (-1)^{n(n-1)/2} (n-1)! / (2 pi i)^n.
Scalar bm_constant(int n);
/// Normalizing constant of the angular form on R^l.
Scalar angular_constant(int l);
/// (-1)^{n(n-1)/2}
int correspondence_sign(int n);

struct MultiIndex {
  int n = 0;
  std::vector<int> I;  // strictly increasing, 1-based

  MultiIndex(int n, std::vector<int> I);
  std::vector<int> complement() const;
  int complement_sum() const;
  int q() const { return n - static_cast<int>(I.size()) - 1; }
};

/// dz_1 ^ ... ^ dz_n
Form make_Phi(int n);
/// (-1)^{i-1} z_i dz_1 ^ .. (omit i) .. ^ dz_n
Form make_Phi_i(int n, int i);
/// (-1)^{i-1} zbar_i dzbar_1 ^ .. (omit i) .. ^ dzbar_n
Form make_Phibar_i(int n, int i);
/// sum_mu (-1)^mu zbar_{j_mu} dzbar_{J minus j_mu} for a strictly increasing J.
Form make_Phibar(int n, const std::vector<int>& J);

Form bochner_martinelli(int n);
Form bm_zero(int n);
Form cauchy(int n);
Form cauchy_zero(int n);
/// psi_l on R^l (real context with l variables).
Form angular_form(int l);
Form chi(int n, int p, const MultiIndex& I);

/// chi^0 + ... + chi^{n-2} as a cochain on the coordinate covering (total degree n-2).
Cochain correspondence_cochain(int n);

std::vector<CheckRecord> verify_correspondence(int n);

/// Sign relating the textbook Weil-lemma correspondence to the one implemented here
/// (documented constant only).
int weil_lemma_sign(int q);

}  // namespace rdc
