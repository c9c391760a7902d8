//! The congruence-trace primality test and factorization algorithm, plus
//! enumeration of ternary factorizations.
//!
//! For odd n, the residues of x(n+1-x) mod n for x = 1 .. (n+1)/2 are all
//! distinct exactly when n is 2-prime. Writing k = x-1 they are
//! -2 T_k mod n, so the whole list is generated by subtracting 2k at step k.
//! A repeated residue at indices (k, l) hands us gcd(l-k, n) and
//! gcd(l+k+1, n), both nontrivial divisors for odd composite n > 3.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::ternary::Triple;

/// Largest odd modulus accepted by the trace operations. The trace stores
/// up to (n+1)/2 residues, so this bounds memory at desk scale.
pub const MAX_TRACE_MODULUS: u64 = 100_000_000;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Indices `first < second` of the first repeated residue in a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Repetition {
    pub first: u64,
    pub second: u64,
}

/// The residue sequence -2 T_k mod n for k = 0, 1, 2, ... together with the
/// first repetition, if one occurs by k = (n-1)/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTrace {
    modulus: u64,
    residues: Vec<u64>,
    repetition: Option<Repetition>,
}

impl CongruenceTrace {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Residues in index order; the last entry is the repeated one when a
    /// repetition was found.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn repetition(&self) -> Option<Repetition> {
        self.repetition
    }
}

/// Runs the residue recurrence for odd n >= 3, stopping at the first
/// repetition or after index (n-1)/2.
pub fn congruence_trace(n: u64) -> Result<CongruenceTrace> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenInput { value: n });
    }
    if n < 3 {
        return Err(Error::TooSmall { value: n, min: 3 });
    }
    if n > MAX_TRACE_MODULUS {
        return Err(Error::TooLarge {
            value: n,
            max: MAX_TRACE_MODULUS,
        });
    }

    let last = (n - 1) / 2;
    let mut seen = BitTable::all_clear(n);
    let mut residues = Vec::new();
    let mut repetition = None;
    let mut r = 0u64;
    residues.push(r);
    seen.set(r);
    for k in 1..=last {
        // from -2 T_{k-1} to -2 T_k: subtract 2k (2k < n throughout)
        let dec = 2 * k;
        r = if r >= dec { r - dec } else { r + (n - dec) };
        residues.push(r);
        if seen.get(r) {
            let first = residues
                .iter()
                .position(|&q| q == r)
                .expect("responsible residue was recorded") as u64;
            repetition = Some(Repetition { first, second: k });
            break;
        }
        seen.set(r);
    }

    Ok(CongruenceTrace {
        modulus: n,
        residues,
        repetition,
    })
}

/// 2-primality via distinctness of the congruence classes x(n+1-x) mod n:
/// odd n is 2-prime exactly when the trace has no repetition.
pub fn two_primality_test(n: u64) -> Result<bool> {
    Ok(congruence_trace(n)?.repetition().is_none())
}

/// Which gcd of the repetition indices produced a divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdSource {
    /// gcd(l - k, n)
    IndexDifference,
    /// gcd(l + k + 1, n)
    IndexSumPlusOne,
}

/// The repetition that produced a divisor and which gcd extracted it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceWitness {
    pub repetition: Repetition,
    pub source: GcdSource,
}

/// Outcome of one trace round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceOutcome {
    /// No repetition through k = (n-1)/2; n is 2-prime.
    TwoPrime,
    /// A nontrivial divisor extracted from the first repetition.
    Divisor {
        divisor: u64,
        cofactor: u64,
        witness: TraceWitness,
    },
}

/// One round of the trace factorization for odd n >= 3: find the first
/// repetition (k, l), then report whichever of gcd(l-k, n) and
/// gcd(l+k+1, n) is a proper divisor, preferring the index difference.
pub fn factor2_step(n: u64) -> Result<TraceOutcome> {
    let trace = congruence_trace(n)?;
    let Some(rep) = trace.repetition() else {
        return Ok(TraceOutcome::TwoPrime);
    };
    let by_difference = gcd(rep.second - rep.first, n);
    if by_difference > 1 && by_difference < n {
        return Ok(TraceOutcome::Divisor {
            divisor: by_difference,
            cofactor: n / by_difference,
            witness: TraceWitness {
                repetition: rep,
                source: GcdSource::IndexDifference,
            },
        });
    }
    let by_sum = gcd(rep.second + rep.first + 1, n);
    if by_sum > 1 && by_sum < n {
        return Ok(TraceOutcome::Divisor {
            divisor: by_sum,
            cofactor: n / by_sum,
            witness: TraceWitness {
                repetition: rep,
                source: GcdSource::IndexSumPlusOne,
            },
        });
    }
    // Both gcds are nontrivial proper divisors whenever a repetition exists
    // for odd composite n > 3, and n = 3 never produces a repetition.
    unreachable!("repetition without a proper gcd divisor for n = {n}")
}

/// First nontrivial split of n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub divisor: u64,
    pub cofactor: u64,
    /// Absent when the split came from stripping the even part.
    pub witness: Option<TraceWitness>,
}

/// Complete 2-factorization of n with the witness of the first split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    n: u64,
    split: Option<Split>,
    factors: BTreeMap<u64, u32>,
}

impl FactorizationReport {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The first nontrivial split; `None` when n is 2-prime.
    pub fn split(&self) -> Option<Split> {
        self.split
    }

    /// 2-prime factors with multiplicities.
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    /// Multiplies the factorization back together.
    pub fn reconstruct(&self) -> Result<u64> {
        let mut acc = 1u64;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p).ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }
}

/// Full 2-factorization by iterating the trace step on each divisor found.
/// Powers of two are stripped first since the congruence test is only for
/// odd numbers.
pub fn factor2_full(n: u64) -> Result<FactorizationReport> {
    if n < 2 {
        return Err(Error::TooSmall { value: n, min: 2 });
    }
    let mut factors = BTreeMap::new();
    let mut split = None;

    let twos = n.trailing_zeros();
    if twos > 0 {
        factors.insert(2u64, twos);
        if n > 2 {
            split = Some(Split {
                divisor: 2,
                cofactor: n / 2,
                witness: None,
            });
        }
    }

    let odd = n >> twos;
    let mut pending = if odd > 1 { vec![odd] } else { Vec::new() };
    while let Some(m) = pending.pop() {
        match factor2_step(m)? {
            TraceOutcome::TwoPrime => {
                *factors.entry(m).or_insert(0) += 1;
            }
            TraceOutcome::Divisor {
                divisor,
                cofactor,
                witness,
            } => {
                if split.is_none() {
                    split = Some(Split {
                        divisor,
                        cofactor,
                        witness: Some(witness),
                    });
                }
                pending.push(divisor);
                pending.push(cofactor);
            }
        }
    }

    Ok(FactorizationReport { n, split, factors })
}

/// All canonical triples whose ternary product is n, including the
/// degenerate (1,1,n) and the binary-reducible (1,m,k) ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryFactorizationSet {
    n: u64,
    triples: BTreeSet<Triple>,
}

impl TernaryFactorizationSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

/// Enumerates every ternary factorization of n: for each k with
/// (k+1, k+1, k+1) still within n, factor the completed parallelogram count
/// n + 2 T_k as a*b with k < a <= b; removing the corner triangles leaves
/// the triple (k+1, a-k, b-k).
pub fn enumerate_3factorizations(n: u64) -> Result<TernaryFactorizationSet> {
    if n == 0 {
        return Err(Error::ZeroComponent);
    }
    let mut triples = BTreeSet::new();
    let mut k = 0u64;
    loop {
        let smallest = k + 1;
        // <z,z,z> = 3z^2 - 3z + 1 is the largest possible least factor bound
        let cube_corner = 3u128 * u128::from(smallest) * u128::from(smallest)
            - 3 * u128::from(smallest)
            + 1;
        if cube_corner > u128::from(n) {
            break;
        }
        let two_tk = k.checked_mul(k + 1).ok_or(Error::Overflow)?;
        let completed = n.checked_add(two_tk).ok_or(Error::Overflow)?;
        let mut a = k + 1;
        while u128::from(a) * u128::from(a) <= u128::from(completed) {
            if completed % a == 0 {
                let b = completed / a;
                triples.insert(Triple::new(smallest, a - k, b - k)?);
            }
            a += 1;
        }
        k += 1;
    }
    Ok(TernaryFactorizationSet { n, triples })
}

/// Number of ternary factorizations of n, degenerate ones included.
pub fn count_3factorizations(n: u64) -> Result<u64> {
    Ok(enumerate_3factorizations(n)?.len() as u64)
}
