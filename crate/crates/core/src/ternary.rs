//! Exact integer arithmetic for the ternary product and triangular numbers.
//!
//! The ternary product of (x, y, z) counts the lattice points of an
//! equiangular hexagon with x, y and z points along its three pairs of
//! opposite edges. Three algebraic routes to the same value are provided:
//!
//! * symmetric:   xy + yz + zx - x - y - z + 1
//! * strip:       xy + (z-1)(x+y-1)
//! * inclusion:   xyz - (x-1)(y-1)(z-1)
//!
//! All arithmetic is checked; an `Error::Overflow` is returned instead of
//! wrapping.

use std::fmt;

use crate::error::{Error, Result};

/// Canonical factor triple with `1 <= x <= y <= z`.
///
/// The ternary product is fully commutative, so triples are stored sorted;
/// equality, ordering and hashing see only the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    x: u64,
    y: u64,
    z: u64,
}

impl Triple {
    /// Canonicalizes `(x, y, z)` by sorting. Zero components are rejected.
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        if x == 0 || y == 0 || z == 0 {
            return Err(Error::ZeroComponent);
        }
        let mut c = [x, y, z];
        c.sort_unstable();
        Ok(Triple {
            x: c[0],
            y: c[1],
            z: c[2],
        })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn components(&self) -> (u64, u64, u64) {
        (self.x, self.y, self.z)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// The k-th triangular number k(k+1)/2.
pub fn triangular(k: u64) -> Result<u64> {
    let t = u128::from(k) * (u128::from(k) + 1) / 2;
    narrow(t)
}

/// Ternary product of a canonical triple.
///
/// Computed via the strip form, whose intermediates never exceed the result.
pub fn product(t: Triple) -> Result<u64> {
    strip_raw(t.x, t.y, t.z)
}

/// Ternary product via the alternating symmetric-polynomial form.
pub fn product_symmetric(t: Triple) -> Result<u64> {
    symmetric_raw(t.x, t.y, t.z)
}

/// Ternary product via the parallelogram-plus-strips form.
pub fn product_strip(t: Triple) -> Result<u64> {
    strip_raw(t.x, t.y, t.z)
}

/// Ternary product via the inclusion-exclusion form.
pub fn product_inclusion(t: Triple) -> Result<u64> {
    inclusion_raw(t.x, t.y, t.z)
}

fn narrow(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow)
}

/// xy + yz + zx - x - y - z + 1 on raw (possibly unsorted) components.
pub(crate) fn symmetric_raw(x: u64, y: u64, z: u64) -> Result<u64> {
    let (x, y, z) = (u128::from(x), u128::from(y), u128::from(z));
    let e2 = (x * y)
        .checked_add(y * z)
        .and_then(|s| s.checked_add(z * x))
        .ok_or(Error::Overflow)?;
    let e1 = x + y + z;
    // e2 + 1 >= e1 whenever all components are >= 1, so this cannot underflow
    narrow(e2.checked_add(1).ok_or(Error::Overflow)? - e1)
}

/// xy + (z-1)(x+y-1) on raw components.
pub(crate) fn strip_raw(x: u64, y: u64, z: u64) -> Result<u64> {
    let (x, y, z) = (u128::from(x), u128::from(y), u128::from(z));
    let strips = (z - 1).checked_mul(x + y - 1).ok_or(Error::Overflow)?;
    narrow((x * y).checked_add(strips).ok_or(Error::Overflow)?)
}

/// xyz - (x-1)(y-1)(z-1) on raw components.
pub(crate) fn inclusion_raw(x: u64, y: u64, z: u64) -> Result<u64> {
    let (x, y, z) = (u128::from(x), u128::from(y), u128::from(z));
    let full = x
        .checked_mul(y)
        .and_then(|p| p.checked_mul(z))
        .ok_or(Error::Overflow)?;
    let hollow = (x - 1)
        .checked_mul(y - 1)
        .and_then(|p| p.checked_mul(z - 1))
        .ok_or(Error::Overflow)?;
    narrow(full - hollow)
}
