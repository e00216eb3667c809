#ifndef FPTLAB_POLY_KERNEL_HPP
#define FPTLAB_POLY_KERNEL_HPP

#include "fptlab/poly.hpp"

namespace fptlab {

// Internal kernel entry points, exposed so tests and benchmarks can pin the
// execution path. multiply_reduced / pow_reduced dispatch between these.

/// Generic reference implementation: exponent-vector terms accumulated in an
/// ordered map. Single-threaded, obviously correct; kept for testing and as
/// the fallback when exponents cannot be packed into one machine word.
Polynomial multiply_reduced_serial(const Polynomial& a, const Polynomial& b, Exponent bound);

/// Packed-monomial kernel: exponents packed into bit fields of one 64-bit
/// key so a monomial product is a single integer add. OpenMP-parallel over
/// the left operand when `threads_on` is set. Falls back to the serial
/// reference when packing is impossible.
Polynomial multiply_reduced_packed(const Polynomial& a, const Polynomial& b, Exponent bound, bool threads_on);

/// Whether the packed kernel can represent products below `bound`.
bool packable(const Polynomial& a, Exponent bound);

} // namespace fptlab

#endif
