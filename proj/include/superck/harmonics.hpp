#pragma once

#include "superck/element.hpp"
#include "superck/operators.hpp"
#include "superck/rng.hpp"

namespace sck {

// Monomial basis of the homogeneous polynomials of one block.
std::vector<TermKey> monomial_basis(const SigPtr& sig, int block, int deg);

struct HarmonicWitness {
    SuperElement element;
    int degree = 0;
    int block = 0;
    bool laplacian_zero = false;
    bool euler_eigen = false;
    bool ok() const { return laplacian_zero && euler_eigen; }
};

struct ProjectionResult {
    bool success = false;
    HarmonicWitness witness;
    std::string reason;
};

// Fischer-type complement: solve Delta[R - |x|^2 Q] = 0 for Q exactly; the
// singular superdimensions surface as an explicit failure when the system is
// inconsistent.
ProjectionResult harmonic_project(const SuperElement& r, int block);

// Basis of spherical harmonics of one degree (kernel of the Laplacian on
// homogeneous polynomials), and a reproducible random element of it.
std::vector<SuperElement> harmonic_basis(const SigPtr& sig, int block, int deg);
SuperElement random_harmonic(const SigPtr& sig, int block, int deg, Rng& rng);

// Sphere integrals of <x,w>^j against degree-l spherical harmonics.
Scalar fh_coefficient(int M, int l, int j);
Scalar fh_coefficient_normalized(int k, int l, int j);

struct FunkHeckeReport {
    bool applicable = false;  // harmonic space may be trivial
    bool pass = false;
    std::string witness;
};

FunkHeckeReport funk_hecke_verify(const SigPtr& sig, int l, int j, Rng& rng);
FunkHeckeReport funk_hecke_normalized_verify(const SigPtr& sig, int l, int j, Rng& rng);

}  // namespace sck
