//! Ternary multiplication on the triangular lattice.
//!
//! The ternary product of (x, y, z) is the number of lattice points in an
//! equiangular hexagon with x, y and z points along its three pairs of
//! opposite edges; ordinary multiplication is the degenerate case
//! (1, m, n). A number only representable as the row (1, 1, n) is 3-prime,
//! and there are exactly seven of them: 1, 2, 3, 5, 11, 17, 41.
//!
//! The crate provides:
//!
//! * exact product arithmetic and triangular numbers ([`ternary`]),
//! * hexagon regions with a brute-force point-counting oracle and SVG
//!   figures ([`lattice`], [`svg`]),
//! * the staged sieve and a fast direct census of 3-primes ([`sieve`]),
//! * deterministic primality plus the lucky-number and Rabinowitsch
//!   predicates ([`primality`]),
//! * the congruence-trace primality test, the derived integer
//!   factorization, and ternary-factorization enumeration
//!   ([`factorization`]).
//!
//! Sieve and census run data-parallel under the `parallel` feature (on by
//! default); `*_sequential` variants always use the serial driver.
//!
//! ```
//! use hexmul::{product, three_primes, Triple};
//!
//! let t = Triple::new(4, 3, 2).unwrap();
//! assert_eq!(product(t).unwrap(), 18);
//! assert_eq!(three_primes(100, false).unwrap(), vec![2, 3, 5, 11, 17, 41]);
//! ```

mod bits;
pub mod error;
pub mod factorization;
pub mod lattice;
pub mod primality;
pub mod sieve;
pub mod svg;
pub mod ternary;

pub use error::{Error, Result};
pub use factorization::{
    congruence_trace, count_3factorizations, enumerate_3factorizations, factor2_full,
    factor2_step, two_primality_test, CongruenceTrace, FactorizationReport, GcdSource,
    Repetition, TernaryFactorizationSet, TraceOutcome, TraceWitness,
};
pub use lattice::{Hexagon, LatticePoint, SidePair};
pub use primality::{
    euler_lucky_check, is_2prime, is_3prime_direct, rabinowitsch_check, AUGMENTED_LUCKY_NUMBERS,
    CLASS_NUMBER_ONE_DISCRIMINANTS, HEEGNER_NUMBERS,
};
pub use sieve::{
    sieve2, ternary_sieve, ternary_sieve_sequential, three_primes, three_primes_direct,
    three_primes_direct_sequential, SieveTable,
};
pub use svg::{render_svg, SvgDocument, SvgStyle};
pub use ternary::{
    product, product_inclusion, product_strip, product_symmetric, triangular, Triple,
};
