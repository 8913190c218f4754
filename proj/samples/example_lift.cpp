// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

// Lifts a relation that is not densely defined and compares the three boundary triplets.

#include <iostream>

#include "linrel/boundary.hpp"

int main()
{
  using namespace linrel;

  // R = {((t, 0), t)} from C^2 to C
  Mat C(2, 1), D(1, 1);
  C << 1.0, 0.0;
  D << 1.0;
  const LinearRelation R = from_kernel_pair(C, D);
  const LiftBundle b = lift(R);

  std::cout << "dim G = " << b.G.dim() << ", dim G0 = " << b.G0.dim() << ", dim G~ = " << b.G_tilde.dim() << "\n";
  std::cout << "S_F == H: " << std::boolalpha << equal(b.S_F, b.H) << "\n";

  for (const TripletKind kind : {TripletKind::main, TripletKind::basic, TripletKind::tilde})
  {
    const BoundaryTriplet t = make_triplet(b, kind);
    std::cout << to_string(kind) << ": green residual " << green_residual(t) << ", ker Gamma0 is Friedrichs "
              << equal(kernel_gamma0(t), b.S_F) << "\n  M(-2) =\n"
              << weyl(t, -2.0).matrix << "\n";
  }

  // Theta = -1 on G~ gives an extension that is bounded below by m
  const BoundaryTriplet t = triplet_tilde(b);
  const LinearRelation A = extension_from_boundary(t, scalar_operator(t.g(), -1.0));
  std::cout << "m(A_theta) = " << lower_bound(A) << "\n";
}
