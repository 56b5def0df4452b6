#pragma once

// Coverings, Cech-Dolbeault cochains and their differentials and cup products.

#include <map>
#include <string>
#include <vector>

#include "rdc/form.hpp"

namespace rdc {

struct Domain {
  enum class Kind { AllSpace, CoordNonzero, ComplementOfOrigin, ComplementOfClosedSet, NeighborhoodOf };
  Kind kind = Kind::AllSpace;
  int coordinate = 0;  // CoordNonzero: 1-based index
  std::string tag;     // ComplementOfClosedSet / NeighborhoodOf

  static Domain all_space() { return {}; }
  static Domain coord_nonzero(int i) { return {Kind::CoordNonzero, i, {}}; }
  static Domain complement_of_origin() { return {Kind::ComplementOfOrigin, 0, {}}; }
  static Domain complement_of(std::string tag) { return {Kind::ComplementOfClosedSet, 0, std::move(tag)}; }
  static Domain neighborhood_of(std::string tag) { return {Kind::NeighborhoodOf, 0, std::move(tag)}; }

  std::string str() const;
  friend bool operator==(const Domain&, const Domain&) = default;
};

/// Ordered family of open sets, optionally with a marked subfamily (the covering of X').
struct Covering {
  std::vector<Domain> sets;
  std::vector<bool> primed;  // empty or same length as sets

  int size() const { return static_cast<int>(sets.size()); }
  bool is_primed(int alpha) const { return !primed.empty() && primed[alpha]; }

  /// W_i = {z_i != 0}, i = 1..n.
  static Covering coordinate(int n);
  /// {V_0 = X minus S, V_1}: the two-set covering with V_0 primed.
  static Covering two_set(Domain v0, Domain v1);

  friend bool operator==(const Covering&, const Covering&) = default;
};

using Simplex = std::vector<int>;  // strictly increasing indices into Covering::sets

/// All strictly increasing simplices with k+1 vertices (nerve of the standard coverings is full).
std::vector<Simplex> simplices(int covering_size, int k);

/// Cochain in E^{(p,q)}(W): the Cech-degree-q1 piece lives on q1-simplices with bidegree (p, q-q1).
class Cochain {
 public:
  Cochain(Covering covering, VariableContext ctx, int p, int q);

  const Covering& covering() const { return covering_; }
  const VariableContext& context() const { return ctx_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::map<Simplex, Form>& pieces() const { return pieces_; }

  /// Form on an arbitrary vertex sequence, extended alternately (repeated vertex gives 0).
  Form at(const Simplex& vertices) const;
  void set(const Simplex& vertices, const Form& form);
  void add(const Simplex& vertices, const Form& form);

  bool is_zero() const { return pieces_.empty(); }

  Cochain operator-() const;
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Scalar& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

  std::string str() const;

 private:
  Covering covering_;
  VariableContext ctx_;
  int p_;
  int q_;
  std::map<Simplex, Form> pieces_;
  void check_compatible(const Cochain& o) const;
};

bool cochain_eq(const Cochain& a, const Cochain& b);

Cochain cech_delta(const Cochain& c);
/// (-1)^{q1} dbar on each Cech-degree-q1 piece.
Cochain dbar_signed(const Cochain& c);
Cochain vartheta(const Cochain& c);
Cochain del_total(const Cochain& c);
Cochain cup(const Cochain& x, const Cochain& y);

bool is_cocycle(const Cochain& c);
/// Relative condition: zero on every simplex with all vertices primed.
bool check_relative(const Cochain& c);

enum class DomainStatus { Verified, Violated, Unverifiable };
std::string domain_status_name(DomainStatus s);

struct DomainReport {
  DomainStatus status = DomainStatus::Verified;
  std::string detail;  // first offending simplex and denominator
};

/// Conservative check that every denominator of every stored Form is invertible on its simplex.
DomainReport domain_check(const Cochain& c);
/// Same check for a single form placed on the intersection of the given domains.
DomainReport domain_check(const Form& f, const std::vector<Domain>& domains);

// ---------------------------------------------------------------------------------------------
// Two-set relative complex E(V, V_0): pairs (xi_1 on V_1, xi_01 on V_01).

struct RelativePair {
  Form xi1;
  Form xi01;
};

RelativePair vartheta(const RelativePair& x);
RelativePair del_total(const RelativePair& x, int q);
/// (xi_1 ^ eta_1, xi_01 ^ eta_1).
RelativePair cup_relative(const RelativePair& x, const Form& eta1);
/// Cocycle condition dbar xi_1 = 0 and xi_1 = dbar xi_01.
bool is_cocycle(const RelativePair& x);

Cochain to_cochain(const RelativePair& x, const Covering& two_set, int p, int q);
RelativePair to_relative_pair(const Cochain& c);

}  // namespace rdc
