//! Equiangular hexagons on the triangular lattice, in cube coordinates.
//!
//! A lattice point is written (u, v, w) with u + v + w = 0. Walking the
//! boundary of an equiangular hexagon from the origin with side step-lengths
//! (a-1, b-1, c-1, a-1, b-1, c-1) visits the vertices
//!
//! ```text
//! (0,0,0) -> (A,-A,0) -> (A+B,-A,-B) -> (A+B,C-A,-B-C) -> (B,C,-B-C) -> (0,C,-C)
//! ```
//!
//! with A = a-1, B = b-1, C = c-1. Each coordinate is constant along one
//! pair of opposite edges, so the convex region is exactly the set of
//! lattice points satisfying six half-space bounds. Everything here is
//! integer arithmetic; `discrete_volume` counts points by direct
//! enumeration and deliberately never touches the product formulas.

use crate::error::{Error, Result};
use crate::ternary::{triangular, Triple};

/// Cap on enumeration work for the brute-force volume oracle.
const ENUMERATION_CELL_CAP: u128 = 100_000_000;

/// Triangular-lattice point in cube coordinates (u + v + w = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub u: i64,
    pub v: i64,
    pub w: i64,
}

impl LatticePoint {
    pub fn new(u: i64, v: i64) -> Self {
        LatticePoint { u, v, w: -u - v }
    }
}

/// Selects one of the three opposite-edge pairs of a hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SidePair {
    First,
    Second,
    Third,
}

impl SidePair {
    pub const ALL: [SidePair; 3] = [SidePair::First, SidePair::Second, SidePair::Third];

    fn index(self) -> usize {
        match self {
            SidePair::First => 0,
            SidePair::Second => 1,
            SidePair::Third => 2,
        }
    }
}

/// Convex region of an equiangular lattice hexagon with side point-counts
/// (a, b, c), anchored with one vertex at the origin.
///
/// Degenerate sides (count 1) are represented uniformly: (1, m, n) is a
/// parallelogram, (1, 1, n) a row of points, (1, 1, 1) a single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hexagon {
    sides: [u64; 3],
    u_range: (i128, i128),
    v_range: (i128, i128),
    w_range: (i128, i128),
}

impl Hexagon {
    /// Region for side counts in walk order. Counts must be at least 1.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::ZeroComponent);
        }
        let steps_a = i128::from(a) - 1;
        let steps_b = i128::from(b) - 1;
        let steps_c = i128::from(c) - 1;
        Ok(Hexagon {
            sides: [a, b, c],
            u_range: (0, steps_a + steps_b),
            v_range: (-steps_a, steps_c),
            w_range: (-steps_b - steps_c, 0),
        })
    }

    /// Region for a canonical triple.
    pub fn from_triple(t: Triple) -> Self {
        let (x, y, z) = t.components();
        Hexagon::new(x, y, z).expect("triple components are nonzero")
    }

    /// Side point-counts in walk order.
    pub fn sides(&self) -> [u64; 3] {
        self.sides
    }

    /// True if the point lies inside or on the boundary.
    pub fn contains(&self, p: LatticePoint) -> bool {
        if p.u + p.v + p.w != 0 {
            return false;
        }
        let (u, v, w) = (i128::from(p.u), i128::from(p.v), i128::from(p.w));
        self.u_range.0 <= u
            && u <= self.u_range.1
            && self.v_range.0 <= v
            && v <= self.v_range.1
            && self.w_range.0 <= w
            && w <= self.w_range.1
    }

    /// Boundary vertices in walk order starting at the origin. Consecutive
    /// vertices coincide along degenerate sides.
    pub fn vertices(&self) -> Result<[LatticePoint; 6]> {
        let a = i128::from(self.sides[0]) - 1;
        let b = i128::from(self.sides[1]) - 1;
        let c = i128::from(self.sides[2]) - 1;
        let raw = [
            (0, 0),
            (a, -a),
            (a + b, -a),
            (a + b, c - a),
            (b, c),
            (0, c),
        ];
        let mut out = [LatticePoint::new(0, 0); 6];
        for (slot, (u, v)) in out.iter_mut().zip(raw) {
            let u = i64::try_from(u).map_err(|_| Error::Overflow)?;
            let v = i64::try_from(v).map_err(|_| Error::Overflow)?;
            *slot = LatticePoint::new(u, v);
        }
        Ok(out)
    }

    /// Lattice-point count by direct enumeration over the bounding ranges.
    ///
    /// This is the geometric oracle: it checks the six half-space bounds for
    /// every candidate and never consults the algebraic product formulas.
    pub fn discrete_volume(&self) -> Result<u64> {
        let span_u = self.u_range.1 - self.u_range.0 + 1;
        let span_v = self.v_range.1 - self.v_range.0 + 1;
        let cells = span_u as u128 * span_v as u128;
        if cells > ENUMERATION_CELL_CAP {
            return Err(Error::TooLarge {
                value: cells.min(u128::from(u64::MAX)) as u64,
                max: ENUMERATION_CELL_CAP as u64,
            });
        }
        let mut count = 0u64;
        for u in self.u_range.0..=self.u_range.1 {
            for v in self.v_range.0..=self.v_range.1 {
                let w = -u - v;
                if self.w_range.0 <= w && w <= self.w_range.1 {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// The region's lattice points, in enumeration order.
    pub fn points(&self) -> Result<Vec<LatticePoint>> {
        let span_u = self.u_range.1 - self.u_range.0 + 1;
        let span_v = self.v_range.1 - self.v_range.0 + 1;
        let cells = span_u as u128 * span_v as u128;
        if cells > ENUMERATION_CELL_CAP {
            return Err(Error::TooLarge {
                value: cells.min(u128::from(u64::MAX)) as u64,
                max: ENUMERATION_CELL_CAP as u64,
            });
        }
        let mut pts = Vec::new();
        for u in self.u_range.0..=self.u_range.1 {
            for v in self.v_range.0..=self.v_range.1 {
                let w = -u - v;
                if self.w_range.0 <= w && w <= self.w_range.1 {
                    let u = i64::try_from(u).map_err(|_| Error::Overflow)?;
                    let v = i64::try_from(v).map_err(|_| Error::Overflow)?;
                    pts.push(LatticePoint::new(u, v));
                }
            }
        }
        Ok(pts)
    }

    /// Flattens the selected side pair (count k) by adjoining the two corner
    /// triangles of T_{k-1} points each, giving a parallelogram with side
    /// counts (x+k-1, y+k-1) where x and y are the other two counts.
    ///
    /// Returns the parallelogram region and the number of adjoined points,
    /// 2 T_{k-1}.
    pub fn complete_to_parallelogram(&self, pair: SidePair) -> Result<(Hexagon, u64)> {
        let i = pair.index();
        let k = self.sides[i];
        let x = self.sides[(i + 1) % 3];
        let y = self.sides[(i + 2) % 3];
        let added = triangular(k - 1)?.checked_mul(2).ok_or(Error::Overflow)?;
        let px = x.checked_add(k - 1).ok_or(Error::Overflow)?;
        let py = y.checked_add(k - 1).ok_or(Error::Overflow)?;
        Ok((Hexagon::new(1, px, py)?, added))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::{product, strip_raw};

    fn hex(a: u64, b: u64, c: u64) -> Hexagon {
        Hexagon::new(a, b, c).unwrap()
    }

    #[test]
    fn zero_side_rejected() {
        assert_eq!(Hexagon::new(0, 2, 3), Err(Error::ZeroComponent));
    }

    #[test]
    fn degenerate_regions() {
        assert_eq!(hex(1, 1, 1).discrete_volume().unwrap(), 1);
        assert_eq!(hex(1, 1, 9).discrete_volume().unwrap(), 9);
        for m in 1..=12u64 {
            for n in 1..=12u64 {
                assert_eq!(hex(1, m, n).discrete_volume().unwrap(), m * n);
            }
        }
    }

    #[test]
    fn figure_volumes() {
        assert_eq!(hex(2, 3, 4).discrete_volume().unwrap(), 18);
        assert_eq!(hex(3, 3, 3).discrete_volume().unwrap(), 19);
        assert_eq!(hex(2, 2, 2).discrete_volume().unwrap(), 7);
        assert_eq!(hex(2, 3, 3).discrete_volume().unwrap(), 14);
        assert_eq!(hex(1, 3, 3).discrete_volume().unwrap(), 9);
    }

    #[test]
    fn volume_matches_product_up_to_twelve() {
        for a in 1..=12u64 {
            for b in a..=12u64 {
                for c in b..=12u64 {
                    let t = Triple::new(a, b, c).unwrap();
                    assert_eq!(
                        Hexagon::from_triple(t).discrete_volume().unwrap(),
                        product(t).unwrap(),
                        "volume/product mismatch at ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn volume_invariant_under_side_permutations() {
        for (a, b, c) in [(2u64, 3u64, 4u64), (1, 4, 7), (5, 5, 2), (6, 1, 1)] {
            let reference = hex(a, b, c).discrete_volume().unwrap();
            for (p, q, r) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                assert_eq!(hex(p, q, r).discrete_volume().unwrap(), reference);
            }
        }
    }

    #[test]
    fn vertices_lie_on_boundary() {
        let h = hex(2, 3, 4);
        for v in h.vertices().unwrap() {
            assert_eq!(v.u + v.v + v.w, 0);
            assert!(h.contains(v));
        }
    }

    #[test]
    fn points_agree_with_volume() {
        for (a, b, c) in [(1u64, 1u64, 1u64), (2, 3, 4), (4, 4, 4), (1, 5, 5)] {
            let h = hex(a, b, c);
            let pts = h.points().unwrap();
            assert_eq!(pts.len() as u64, h.discrete_volume().unwrap());
            for p in pts {
                assert!(h.contains(p));
            }
        }
    }

    #[test]
    fn completion_examples() {
        // (3,3,3): flattening any pair adds 2 T_2 = 6 and leaves a 5x5 parallelogram
        let (par, added) = hex(3, 3, 3)
            .complete_to_parallelogram(SidePair::Third)
            .unwrap();
        assert_eq!(added, 6);
        assert_eq!(par.sides(), [1, 5, 5]);
        assert_eq!(par.discrete_volume().unwrap(), 25);

        // (1,m,n) is already a parallelogram; flattening the 1-pair is a no-op
        let (par, added) = hex(1, 6, 4)
            .complete_to_parallelogram(SidePair::First)
            .unwrap();
        assert_eq!(added, 0);
        assert_eq!(par, hex(1, 6, 4));

        // (2,2,6): flattening a 2-pair gives a 3x7 parallelogram, 2 points added
        let (par, added) = hex(2, 2, 6)
            .complete_to_parallelogram(SidePair::First)
            .unwrap();
        assert_eq!(added, 2);
        assert_eq!(par.sides(), [1, 3, 7]);
        assert_eq!(par.discrete_volume().unwrap(), 21);
    }

    #[test]
    fn completion_adds_exactly_two_corner_triangles() {
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                for c in 1..=12u64 {
                    let h = hex(a, b, c);
                    let volume = h.discrete_volume().unwrap();
                    for pair in SidePair::ALL {
                        let k = h.sides()[pair.index()];
                        let (par, added) = h.complete_to_parallelogram(pair).unwrap();
                        assert_eq!(added, 2 * triangular(k - 1).unwrap());
                        assert_eq!(
                            par.discrete_volume().unwrap(),
                            volume + added,
                            "completion volume at ({a},{b},{c}) pair {pair:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn volume_matches_raw_formula_on_unsorted_sides() {
        for a in 1..=8u64 {
            for b in 1..=8u64 {
                for c in 1..=8u64 {
                    assert_eq!(
                        hex(a, b, c).discrete_volume().unwrap(),
                        strip_raw(a, b, c).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let h = hex(1, 1 << 40, 1 << 40);
        assert!(matches!(h.discrete_volume(), Err(Error::TooLarge { .. })));
    }
}
