#pragma once

#include "nehari/grid_function.hpp"
#include "nehari/nonlinearity.hpp"
#include "nehari/problem.hpp"

namespace nehari {

/// phi(t) = int_0^t (1-2s)^{1/(p-1)} ds on [0,1/2], in closed form
/// ((p-1)/(2p)) * (1 - (1-2t)^{p/(p-1)}).
double phi_weight(double t, double p);

/// sgn(x) * |x|^alpha.
double signed_power(double x, double alpha);

/// Inverse of the p-Laplacian duality map with Dirichlet conditions:
/// u(t) = int_0^t (phi^{-1} o mu)(s) ds, mu(t) = int_t^{1/2} h(s) ds.
/// Requires h symmetric about 1/2 (relative defect <= sym_tol). The result
/// carries the analytic derivative phi^{-1} o mu and is mirrored exactly
/// about the midpoint.
GridFunction plaplace_inverse(const GridFunction& h, double p,
                              double sym_tol = 1e-8);

/// Pointwise f(u(t), du(t)).
GridFunction nemytskii(const Nonlinearity& f, const GridFunction& u,
                       const GridFunction& du);

/// T(u)(t) = int_0^1 k(t,s) f(u(s)) ds with k(t,s) = t(1-s) for t<=s,
/// s(1-t) for s<=t. O(n) via the two cumulative integrals of the Green
/// representation; output vanishes at both endpoints.
GridFunction hammerstein(const Nonlinearity& f, const GridFunction& u);

/// Kernel integral of an arbitrary node-sampled density g:
/// (1-t) int_0^t s g + t int_t^1 (1-s) g. Shared by hammerstein, the
/// alpha moments and the cone sampler.
GridFunction kernel_apply(const GridFunction& g);

/// Dispatches to plaplace_inverse(nemytskii(...)) or hammerstein(...).
GridFunction apply_T(const ProblemSpec& prob, const GridFunction& u);

/// <Ju, w> = int_0^1 |u'|^{p-2} u' w' dt.
double duality_pairing(const GridFunction& u, const GridFunction& w, double p);

/// F(u,v,w): p-Laplacian branch <Jv - Ju, w>; kernel branch
/// int v w - int u w.
double F_eval(const ProblemSpec& prob, const GridFunction& u,
              const GridFunction& v, const GridFunction& w);

}  // namespace nehari
