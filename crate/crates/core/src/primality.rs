//! Deterministic 64-bit primality, direct 3-primality testing, and the
//! lucky-number / Rabinowitsch verification predicates.
//!
//! `is_2prime` is a strong-pseudoprime test with a witness set proven exact
//! for all inputs below 2^64, so every predicate here is deterministic.

use crate::error::{Error, Result};

/// Heegner numbers: n > 0 such that the integers of Q(sqrt(-n)) admit
/// unique factorization.
pub const HEEGNER_NUMBERS: [u64; 9] = [1, 2, 3, 7, 11, 19, 43, 67, 163];

/// Negative field discriminants of class number one.
pub const CLASS_NUMBER_ONE_DISCRIMINANTS: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

/// Euler's lucky numbers together with 1; exactly the k for which 4k - 1
/// is a Heegner number.
pub const AUGMENTED_LUCKY_NUMBERS: [u64; 7] = [1, 2, 3, 5, 11, 17, 41];

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

// Exact for all n < 2^64 (Sinclair's 7-witness set).
const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality under ordinary (binary) multiplication, exact
/// for every u64 input.
pub fn is_2prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }

    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Direct 3-primality test: n and every hexagon-to-parallelogram completion
/// n + 2 T_k for 1 <= k <= n-2 must be 2-prime. The completion by T_{n-1}
/// corresponds to the trivial row representation and is not required to be
/// prime. 1 counts as 3-prime (the augmented convention).
pub fn is_3prime_direct(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroComponent);
    }
    if n == 1 {
        return Ok(true);
    }
    for k in 0..=n - 2 {
        let two_tk = k.checked_mul(k + 1).ok_or(Error::Overflow)?;
        let candidate = n.checked_add(two_tk).ok_or(Error::Overflow)?;
        if !is_2prime(candidate) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Euler's lucky-number predicate: j^2 - j + p is 2-prime for every j in
/// [1, p-1]. Vacuously true for p = 1.
pub fn euler_lucky_check(p: u64) -> Result<bool> {
    if p == 0 {
        return Err(Error::ZeroComponent);
    }
    for j in 1..p {
        let value = j
            .checked_mul(j)
            .map(|sq| sq - j)
            .and_then(|v| v.checked_add(p))
            .ok_or(Error::Overflow)?;
        if !is_2prime(value) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rabinowitsch criterion for a negative discriminant D = 1 mod 4:
/// x^2 - x + (1 + |D|)/4 is 2-prime for every x in [1, (|D| - 3)/4].
/// Holds exactly when the integers of Q(sqrt(D)) admit unique factorization.
pub fn rabinowitsch_check(d: i64) -> Result<bool> {
    if d >= 0 || d.rem_euclid(4) != 1 {
        return Err(Error::BadDiscriminant { value: d });
    }
    let abs = d.unsigned_abs();
    let constant = (abs + 1) / 4;
    for x in 1..=(abs - 3) / 4 {
        let value = x
            .checked_mul(x)
            .map(|sq| sq - x)
            .and_then(|v| v.checked_add(constant))
            .ok_or(Error::Overflow)?;
        if !is_2prime(value) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: plain trial division.
    fn is_prime_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn two_prime_known_values() {
        assert!(is_2prime(163));
        assert!(!is_2prime(25));
        assert!(!is_2prime(1));
        assert!(!is_2prime(0));
        assert!(is_2prime(2));
        assert!(is_2prime((1 << 61) - 1)); // Mersenne prime
        assert!(!is_2prime(561)); // Carmichael
        assert!(!is_2prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_2prime(18446744073709551557)); // largest 64-bit prime
        assert!(!is_2prime(18446744073709551555));
    }

    #[test]
    fn two_prime_matches_trial_division() {
        for n in 0..100_000u64 {
            assert_eq!(is_2prime(n), is_prime_trial(n), "mismatch at {n}");
        }
    }

    #[test]
    fn three_prime_direct_examples() {
        assert!(is_3prime_direct(5).unwrap());
        assert!(!is_3prime_direct(19).unwrap());
        assert!(is_3prime_direct(41).unwrap());
        assert!(is_3prime_direct(1).unwrap());
        assert!(is_3prime_direct(2).unwrap());
        assert!(!is_3prime_direct(7).unwrap());
        assert!(!is_3prime_direct(43).unwrap());
        assert_eq!(is_3prime_direct(0), Err(Error::ZeroComponent));
    }

    #[test]
    fn lucky_examples() {
        assert!(euler_lucky_check(41).unwrap());
        assert!(!euler_lucky_check(7).unwrap());
        assert!(euler_lucky_check(1).unwrap());
        assert_eq!(euler_lucky_check(0), Err(Error::ZeroComponent));
    }

    #[test]
    fn three_prime_lucky_and_list_agree_to_2000() {
        for n in 1..=2000u64 {
            let direct = is_3prime_direct(n).unwrap();
            let lucky = euler_lucky_check(n).unwrap();
            let listed = AUGMENTED_LUCKY_NUMBERS.contains(&n);
            assert_eq!(direct, lucky, "direct/lucky mismatch at {n}");
            assert_eq!(direct, listed, "direct/list mismatch at {n}");
        }
    }

    #[test]
    fn rabinowitsch_examples() {
        assert!(rabinowitsch_check(-163).unwrap());
        assert!(!rabinowitsch_check(-15).unwrap());
        assert!(rabinowitsch_check(-3).unwrap());
        assert_eq!(
            rabinowitsch_check(-4),
            Err(Error::BadDiscriminant { value: -4 })
        );
        assert_eq!(
            rabinowitsch_check(5),
            Err(Error::BadDiscriminant { value: 5 })
        );
    }

    #[test]
    fn rabinowitsch_scan_matches_odd_class_number_one_discriminants() {
        let mut found = Vec::new();
        let mut d = -3i64;
        while d > -200 {
            if rabinowitsch_check(d).unwrap() {
                found.push(d);
            }
            d -= 4;
        }
        assert_eq!(found, vec![-3, -7, -11, -19, -43, -67, -163]);
    }

    #[test]
    fn heegner_lucky_correspondence() {
        for &k in &AUGMENTED_LUCKY_NUMBERS {
            assert!(HEEGNER_NUMBERS.contains(&(4 * k - 1)), "4*{k}-1 not Heegner");
        }
        for &h in &HEEGNER_NUMBERS {
            if h % 4 == 3 {
                assert!(
                    AUGMENTED_LUCKY_NUMBERS.contains(&((h + 1) / 4)),
                    "({h}+1)/4 not augmented lucky"
                );
            }
        }
        // odd discriminants are minus the 4k-1 Heegner numbers; even ones are -4 and -8
        for &d in &CLASS_NUMBER_ONE_DISCRIMINANTS {
            let n = d.unsigned_abs();
            if d.rem_euclid(4) == 1 {
                assert!(HEEGNER_NUMBERS.contains(&n));
            } else {
                assert!(HEEGNER_NUMBERS.contains(&(n / 4)));
            }
        }
    }
}
