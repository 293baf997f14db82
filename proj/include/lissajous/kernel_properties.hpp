#ifndef LISSAJOUS_KERNEL_PROPERTIES_HPP
#define LISSAJOUS_KERNEL_PROPERTIES_HPP

namespace lissajous {

// Counts of one randomized property run.
struct PropertyTally {
    long instances = 0;
    long checks = 0;
    long failures = 0;
};

// Associativity, commutativity, distributivity, additive inverse and unit on random triples.
PropertyTally checkRingAxioms(int instances, unsigned seed);

// (fg)' = f'g + fg' on random pairs.
PropertyTally checkProductRule(int instances, unsigned seed);

// Canonicalizing an already canonical function changes neither the value nor its text.
PropertyTally checkCanonicalIdempotence(int instances, unsigned seed);

// The reduced form agrees with the raw quotient at 32 random points, and evaluation respects products.
PropertyTally checkReduction(int instances, unsigned seed, unsigned precisionBits = 192);

} // namespace lissajous

#endif
