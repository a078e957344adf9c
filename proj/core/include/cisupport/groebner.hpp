#ifndef CISUPPORT_GROEBNER_HPP
#define CISUPPORT_GROEBNER_HPP

#include "cisupport/module_gb.hpp"

namespace cisupport {

/// Reduced Gröbner basis in the ring's own order.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const PolyRing& ring);

/// Generators of I intersected with the subring on the variables NOT listed
/// in `drop`, computed with a block elimination order. Results live in the
/// original ring and involve only kept variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& drop, const PolyRing& ring);

/// Columns generate all relations among the columns of m over ring/(modulus).
/// Entries come back reduced modulo the modulus ideal.
PolyMatrix module_syzygies(const PolyMatrix& m, const std::vector<Polynomial>& modulus);

/// Krull dimension of ring/I via independent variable sets modulo the
/// leading-term ideal; the unit ideal yields -1.
int krull_dimension(const std::vector<Polynomial>& gens, const PolyRing& ring);

/// g in the radical of I, by the auxiliary-variable trick.
bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& gens,
                        const PolyRing& ring);

std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b,
                                           const PolyRing& ring);

/// Substitute variables by the given polynomials (image ring = ring of the
/// images). images.size() must equal ring.nvars().
Polynomial substitute(const Polynomial& p, const PolyRing& image_ring,
                      const std::vector<Polynomial>& images);

}  // namespace cisupport

#endif
