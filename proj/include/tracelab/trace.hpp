#pragma once

#include "tracelab/hom.hpp"

namespace tracelab {

// Sum of the images of all maps m -> x.
Submodule trace_submodule(const Module& m, const Module& x);

struct TraceVerdict {
    Submodule subject;
    bool is_trace;
    bool criterion_trace_eq;  // trace of the subject equals the subject
    bool criterion_hom_dim;   // dim Hom(s,s) = dim Hom(s, ambient)
    Submodule trace_of_subject;
};

// Both characterizations are computed; they agree on every valid input, and
// a disagreement throws InternalError since it would mean a broken engine.
TraceVerdict is_trace_submodule(const Submodule& s);

// phi(s) inside s for every endomorphism phi of the ambient module.
bool is_fully_invariant(const Submodule& s);

struct TraceUpToIso {
    IsoVerdict verdict;
    std::optional<ModuleMap> embedding;  // m -> x with trace image, when Yes
    Submodule trace;
};

TraceUpToIso is_trace_up_to_iso(const Module& m, const Module& x, std::uint64_t seed,
                                int trials = 64);

// Every hom from every submodule extends to an endomorphism. Finite fields
// only (the submodule lattice is enumerated).
bool is_quasi_injective(const Module& m, long long cap);

// Rank tests on the evaluation into the double dual w.r.t. the regular
// module; commutative algebras only.
bool is_torsionless(const Module& m);
bool is_reflexive(const Module& m);

struct ReflexiveCriterion {
    bool homothety_surjective;   // A ->> End(ambient)
    bool restriction_surjective; // End(ambient) ->> Hom(s, ambient)
    bool applies;                // both conditions
    bool trace_confirmed;        // when applies: the asserted trace verdict
};

ReflexiveCriterion check_reflexive_criterion(const Submodule& s);

// Right absorption t * e_j inside t; meaningful for ideals of the regular
// module, where trace submodules are in fact two-sided.
bool check_two_sidedness(const Submodule& t);

struct LeftExactness {
    bool holds;               // Tr_m(x) = Tr_m(y) /\ x
    bool induced_surjective;  // Tr_m(y) -> Tr_m(y/x) onto
};

// x must be a submodule of y; z = y/x is formed internally.
LeftExactness check_left_exactness(const Module& m, const Submodule& x, const Module& y);

struct XReflexiveInvariance {
    bool x_reflexive;
    bool fully_invariant;
};

XReflexiveInvariance is_x_reflexive_then_fully_invariant(const Submodule& s);

}  // namespace tracelab
