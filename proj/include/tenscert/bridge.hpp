#pragma once

#include <cstdint>

#include "tenscert/courant.hpp"
#include "tenscert/verdict.hpp"

namespace tenscert::bridge {

/// On one family: torsion and P-tensor pairings against the polynomial action
/// of the matching generators on `samples` random section triples each
/// (index tuples cycled so every one is hit), tensoriality of every candidate
/// generator, and non-tensoriality of the unit polynomial.
Verdict verify_family(const courant::FleetEntry& entry, int samples, std::uint64_t seed);

/// The anchor/pairing axiom and both Leibniz identities on `samples` random
/// instances over the given chart.
Verdict verify_courant_axioms(const courant::Chart& chart, int samples, std::uint64_t seed);

/// The S_3-symmetrization of the signature (-1) torsion generator acts on each
/// (-1) family of the fleet by an alternating form, checked on `samples`
/// random triples per family.
Verdict verify_alternating(const std::vector<courant::FleetEntry>& fleet, int samples,
                           std::uint64_t seed);

}  // namespace tenscert::bridge
