//! The staged sieve for 3-primes, with the classical prime sieve as its
//! stage zero, plus a fast census that tests candidates directly.
//!
//! ## Algorithm
//!
//! Stage zero is the Sieve of Eratosthenes, producing the 2-primes up to N.
//! Stage k >= 1 eliminates, for every 2-prime p with p >= 2k+1 and
//! p^2 <= N + 2 T_k, the arithmetic progression
//!
//! ```text
//! (k+1, p-k, p-k) = p^2 - 2 T_k,  then + p, + 2p, ...
//! ```
//!
//! because adding p extends the hexagon's third side by one. Stages run for
//! 1 <= k while 3k^2 + 3k + 1 <= N (the integer-safe form of the stage
//! bound); pairs with k+1 > p-k would only revisit earlier stages and are
//! skipped. What survives is exactly the set of 3-primes in [2, N].
//!
//! ## Execution
//!
//! Every elimination pass is expressed as a list of `Progression`s and
//! replayed over the bit table in 32 KiB chunks, so a chunk stays in L1
//! while many progressions cross it. Chunks are independent, which makes
//! the parallel driver a `par_chunks_mut` over the same kernel; results are
//! bit-identical to the sequential driver. The `parallel` feature (on by
//! default) selects the driver behind the public entry points, and the
//! `*_sequential` variants always force the serial one.

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::primality::is_3prime_direct;

/// Memory budget for the sieve and census tables (one bit per integer,
/// plus the collected prime list).
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// Words per elimination chunk: 4096 words = 2^18 bits = 32 KiB.
const CHUNK_WORDS: usize = 1 << 12;

/// Completions checked against the prime bitmap before falling back to the
/// full direct test in the census.
const CENSUS_PRECHECK_DEPTH: u64 = 64;

type Apply = fn(&mut [u64], &[Progression]);

/// Eliminate `start`, `start + step`, `start + 2 step`, ...
#[derive(Debug, Clone, Copy)]
struct Progression {
    start: u64,
    step: u64,
}

fn eliminate_chunk(chunk: &mut [u64], lo: u64, progressions: &[Progression]) {
    let hi = lo + chunk.len() as u64 * 64;
    for pr in progressions {
        if pr.start >= hi {
            continue;
        }
        let mut t = if pr.start >= lo {
            pr.start
        } else {
            pr.start + (lo - pr.start).div_ceil(pr.step) * pr.step
        };
        while t < hi {
            chunk[((t - lo) / 64) as usize] &= !(1u64 << (t % 64));
            t += pr.step;
        }
    }
}

fn apply_serial(words: &mut [u64], progressions: &[Progression]) {
    for (idx, chunk) in words.chunks_mut(CHUNK_WORDS).enumerate() {
        eliminate_chunk(chunk, (idx * CHUNK_WORDS) as u64 * 64, progressions);
    }
}

#[cfg(feature = "parallel")]
fn apply_parallel(words: &mut [u64], progressions: &[Progression]) {
    use rayon::prelude::*;
    words
        .par_chunks_mut(CHUNK_WORDS)
        .enumerate()
        .for_each(|(idx, chunk)| {
            eliminate_chunk(chunk, (idx * CHUNK_WORDS) as u64 * 64, progressions);
        });
}

/// Eliminated/surviving status for 2..=N after a sieve run.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    status: BitTable,
    primes2: Vec<u64>,
    stages_run: u64,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// The 2-primes up to the limit, ascending.
    pub fn primes2(&self) -> &[u64] {
        &self.primes2
    }

    /// Stages executed, counting stage zero.
    pub fn stages_run(&self) -> u64 {
        self.stages_run
    }

    pub fn is_surviving(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.status.get(n)
    }

    /// Surviving values, ascending.
    pub fn survivors(&self) -> impl Iterator<Item = u64> + '_ {
        self.status.iter_ones()
    }

    pub fn survivor_count(&self) -> u64 {
        self.status.count_ones()
    }
}

fn check_limit(limit: u64) -> Result<()> {
    if limit < 2 {
        return Err(Error::TooSmall {
            value: limit,
            min: 2,
        });
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::TooLarge {
            value: limit,
            max: MAX_SIEVE_LIMIT,
        });
    }
    Ok(())
}

/// Prime/composite bits for 0..=limit via Eratosthenes: bootstrap primes up
/// to sqrt(limit) with a plain byte sieve, then replay their progressions.
fn prime_bits(limit: u64, apply: Apply) -> BitTable {
    let mut bits = BitTable::all_set(limit + 1);
    bits.clear(0);
    if limit >= 1 {
        bits.clear(1);
    }

    let root = limit.isqrt();
    let mut small = vec![true; root as usize + 1];
    let mut p = 2u64;
    while p * p <= root {
        if small[p as usize] {
            let mut m = p * p;
            while m <= root {
                small[m as usize] = false;
                m += p;
            }
        }
        p += 1;
    }
    let progressions: Vec<Progression> = (2..=root)
        .filter(|&p| small[p as usize])
        .map(|p| Progression {
            start: p * p,
            step: p,
        })
        .collect();
    apply(bits.words_mut(), &progressions);
    bits
}

fn sieve2_with(limit: u64, apply: Apply) -> Result<SieveTable> {
    check_limit(limit)?;
    let status = prime_bits(limit, apply);
    let primes2 = status.iter_ones().collect();
    Ok(SieveTable {
        limit,
        status,
        primes2,
        stages_run: 1,
    })
}

/// Stage zero alone: the Sieve of Eratosthenes. Survivors are the 2-primes.
pub fn sieve2(limit: u64) -> Result<SieveTable> {
    #[cfg(feature = "parallel")]
    {
        sieve2_with(limit, apply_parallel)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sieve2_with(limit, apply_serial)
    }
}

/// Largest k with 3k^2 + 3k + 1 <= limit.
#[allow(clippy::int_plus_one)] // keep the stage bound in its 3k^2 + 3k + 1 form
fn max_stage_index(limit: u64) -> u64 {
    let mut k = 0u64;
    while 3 * (k + 1) * (k + 1) + 3 * (k + 1) + 1 <= limit {
        k += 1;
    }
    k
}

fn stage_progressions(limit: u64, primes: &[u64]) -> Vec<Progression> {
    let mut progressions = Vec::new();
    for k in 1..=max_stage_index(limit) {
        let two_tk = k * (k + 1);
        let from = primes.partition_point(|&p| p < 2 * k + 1);
        for &p in &primes[from..] {
            // stage k uses p while the base value p^2 - 2 T_k stays within limit
            if p * p > limit + two_tk {
                break;
            }
            progressions.push(Progression {
                start: p * p - two_tk,
                step: p,
            });
        }
    }
    progressions
}

fn ternary_sieve_with(limit: u64, apply: Apply) -> Result<SieveTable> {
    let mut table = sieve2_with(limit, apply)?;
    let progressions = stage_progressions(limit, &table.primes2);
    apply(table.status.words_mut(), &progressions);
    table.stages_run = 1 + max_stage_index(limit);
    Ok(table)
}

/// Runs the full staged sieve; survivors are the 3-primes up to the limit.
/// Parallel when the `parallel` feature is enabled.
pub fn ternary_sieve(limit: u64) -> Result<SieveTable> {
    #[cfg(feature = "parallel")]
    {
        ternary_sieve_with(limit, apply_parallel)
    }
    #[cfg(not(feature = "parallel"))]
    {
        ternary_sieve_with(limit, apply_serial)
    }
}

/// The staged sieve on the serial driver regardless of features.
pub fn ternary_sieve_sequential(limit: u64) -> Result<SieveTable> {
    ternary_sieve_with(limit, apply_serial)
}

/// The 3-primes up to the limit, ascending; with `augmented` set, 1 is
/// prepended per the convention that 1 counts as 3-prime.
pub fn three_primes(limit: u64, augmented: bool) -> Result<Vec<u64>> {
    let table = ternary_sieve(limit)?;
    let mut out = if augmented { vec![1] } else { Vec::new() };
    out.extend(table.survivors());
    Ok(out)
}

fn census_candidate(n: u64, bits: &BitTable) -> bool {
    if !bits.get(n) {
        return false;
    }
    let full_depth = n - 2;
    let quick = CENSUS_PRECHECK_DEPTH.min(full_depth);
    for k in 1..=quick {
        if !bits.get(n + k * (k + 1)) {
            return false;
        }
    }
    if quick == full_depth {
        return true;
    }
    // survived every bitmap check; confirm the remaining completions
    is_3prime_direct(n).expect("completion values fit in u64 below the sieve budget")
}

fn census_block(lo: u64, hi: u64, bits: &BitTable) -> Vec<u64> {
    (lo..hi).filter(|&n| census_candidate(n, bits)).collect()
}

type RunBlocks = fn(u64, &BitTable) -> Vec<u64>;

fn census_serial(limit: u64, bits: &BitTable) -> Vec<u64> {
    census_block(2, limit + 1, bits)
}

#[cfg(feature = "parallel")]
fn census_parallel(limit: u64, bits: &BitTable) -> Vec<u64> {
    use rayon::prelude::*;
    const BLOCK: u64 = 1 << 16;
    let blocks = (limit - 1).div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|i| {
            let lo = 2 + i * BLOCK;
            let hi = (lo + BLOCK).min(limit + 1);
            census_block(lo, hi, bits)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn three_primes_direct_with(
    limit: u64,
    augmented: bool,
    apply: Apply,
    run: RunBlocks,
) -> Result<Vec<u64>> {
    check_limit(limit)?;
    let depth = CENSUS_PRECHECK_DEPTH;
    let bits = prime_bits(limit + depth * (depth + 1), apply);
    let mut out = if augmented { vec![1] } else { Vec::new() };
    out.extend(run(limit, &bits));
    Ok(out)
}

/// Fast census of the 3-primes up to the limit via the direct test: almost
/// every candidate dies on a bitmap lookup of its first few completions.
/// Agrees with `three_primes` everywhere.
pub fn three_primes_direct(limit: u64, augmented: bool) -> Result<Vec<u64>> {
    #[cfg(feature = "parallel")]
    {
        three_primes_direct_with(limit, augmented, apply_parallel, census_parallel)
    }
    #[cfg(not(feature = "parallel"))]
    {
        three_primes_direct_with(limit, augmented, apply_serial, census_serial)
    }
}

/// The census on the serial driver regardless of features.
pub fn three_primes_direct_sequential(limit: u64, augmented: bool) -> Result<Vec<u64>> {
    three_primes_direct_with(limit, augmented, apply_serial, census_serial)
}
