#pragma once

#include "pga/multivector.hpp"

namespace pga {

// Blade-complement Hodge dual fixed by e_J ^ e_J* = I, extended linearly.
Multivector hodge_dual(const Multivector& a);

// A* = rev(A_I) I_E + e_0 ginv(rev(A_E)) I_E, evaluated term by term from the
// Euclidean split. Must agree with hodge_dual on every blade.
Multivector hodge_dual_closed_form(const Multivector& a);

// Exact inverse of hodge_dual (all complement signs are +-1).
Multivector hodge_undual(const Multivector& a);

// Sign s with hodge_dual(e_J) = s e_{J^c}.
int dual_sign(BladeIndex j, const Signature& sig);

// hodge_dual(hodge_dual(X)) = double_dual_sign(k, n) X for grade-k X.
// Equals (-1)^{k (n + 1 - k)}; the dual is not assumed involutive.
int double_dual_sign(int grade, int n) noexcept;

// A v B = (A* ^ B*)*. The outer dual is applied literally, never undone.
Multivector regressive(const Multivector& a, const Multivector& b);
// (A* . B*)*
Multivector inner_dual(const Multivector& a, const Multivector& b);
// (A* x B*)*
Multivector commutator_dual(const Multivector& a, const Multivector& b);

}  // namespace pga
