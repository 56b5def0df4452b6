#pragma once

// Randomized exact identity suites (fixed seeds) shared by the CLI and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "rdc/cech.hpp"
#include "rdc/hyperfunction.hpp"
#include "rdc/numeric.hpp"
#include "rdc/report.hpp"

namespace rdc {

struct RandomFormSpec {
  int max_degree = 3;         // polynomial degree of numerators
  int max_terms = 2;          // exterior terms per form
  int max_monomials = 3;      // monomials per numerator
  bool denominators = false;  // allow z_i and |z|^2 denominators
};

Polynomial random_polynomial(std::mt19937_64& rng, const VariableContext& ctx, const RandomFormSpec& spec);
/// Random form of bidegree (p, q); in a real context q is ignored and p is the degree.
Form random_form(std::mt19937_64& rng, const VariableContext& ctx, int p, int q, const RandomFormSpec& spec);
Cochain random_cochain(std::mt19937_64& rng, const Covering& covering, const VariableContext& ctx, int p, int q,
                       const RandomFormSpec& spec);
/// Random cocycle (dbar xi_01, xi_01) representing a p-hyperform.
HyperformRep random_hyperform(std::mt19937_64& rng, int n, int p, const RandomFormSpec& spec);

/// dbar^2 = 0, del^2 = 0, del dbar + dbar del = 0, graded commutativity, Leibniz and the bidegree
/// decomposition on random forms over C^n.
std::vector<CheckRecord> form_property_suite(int n, std::uint64_t seed, int trials = 40);
/// delta^2 = 0, vartheta^2 = 0, del vartheta = vartheta del, cup Leibniz, cup associativity and
/// preservation of the relative condition.
std::vector<CheckRecord> cech_property_suite(int n, std::uint64_t seed, int trials = 24);
/// d_hyper^2 = 0, commuting partials and the cocycle condition after each operation.
std::vector<CheckRecord> hyperform_property_suite(int n, std::uint64_t seed, int trials = 24);

/// Compares the compiled dbar of a form with finite differences of the compiled form at random
/// points with |z| in [0.5, 1.5] away from poles. The error at a point is
/// |fd - exact| / max(|exact|, |a(p)|).
CheckRecord dbar_consistency(const std::string& name, const Form& a, int samples, std::uint64_t seed,
                             double tolerance);

}  // namespace rdc
