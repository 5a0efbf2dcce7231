/*
  Conserved quantities, Gagliardo-Nirenberg ratio verifiers, the critical
  exponent and the minimal blow-up rate bound.
*/
#pragma once

#include "gkdv/grid.hpp"

namespace gkdv {

double mass(const Field& f);                  // integral of f^2
double energy(const Field& f, int p);         // integral of (1/2) f_x^2 - f^{p+1}/(p+1)

// s_p = 1/2 - 2/(p-1), evaluated as (p-5)/(2(p-1)) so that the rate
// identity (1 - s_p)/3 == (p+3)/(6(p-1)) holds exactly in doubles.
double critical_exponent(int p);

// (s - s_p)/3, the divergence exponent of the minimal blow-up rate.
double blowup_rate_exponent(double s, int p);

// C * (T_star - t)^{-(s - s_p)/3}; requires t < T_star and s >= s_p.
double minimal_blowup_rate(double t, double T_star, double s, int p, double C);

// alpha solving 1/q = 1/2 - s*alpha; throws exponent_incompatibility_error
// when the solution is not in (0, 1].
double gn_alpha(double q, double s);

struct GnRatios {
  double r1;  // int |f|^q / (mass^{(q+2)/4} gradsq^{(q-2)/4})
  double r2;  // Lq / (L2^{1-alpha} ||D^s f||^alpha)
  double r3;  // sup / (mass^{1/4} gradsq^{1/4})
};

GnRatios gn_ratios(const Field& f, double q, double s);

struct ConservationRecord {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double grad_l2 = 0.0;
  double sup = 0.0;
  double hs_crit = 0.0;  // homogeneous H^{s_p} seminorm
};

ConservationRecord conservation_record(const Field& f, int p);

}  // namespace gkdv
