//! Modular arithmetic over word-sized integers: powers, inverses, the
//! Legendre symbol, and primality by trial division.
//!
//! Everything here works on `u64` with `u128` intermediates; the primes this
//! crate touches stay far below the range where that could overflow.

use crate::error::Error;

/// `base^exp mod m` by binary exponentiation. `m` must be nonzero.
pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m != 0, "zero modulus");
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` mod `m`, if it exists.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    assert!(m != 0, "zero modulus");
    if m == 1 {
        return Some(0);
    }
    // Extended Euclid on signed 128-bit: find x with a*x ≡ gcd (mod m).
    let (mut r0, mut r1) = (a as i128 % m as i128, m as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
    }
    if r0 != 1 {
        return None;
    }
    Some(x0.rem_euclid(m as i128) as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Trial-division primality test restricted to odd primes: `true` exactly
/// when `n` is prime and `n >= 3` is odd. (2 deliberately fails: every field
/// construction in this crate needs an odd characteristic.)
pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All odd primes `p <= bound`, ascending.
pub fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| is_odd_prime(n)).collect()
}

/// Legendre symbol `(x/p)` in {-1, 0, 1} for an odd prime `p`, computed by
/// Euler's criterion `x^((p-1)/2) mod p`.
pub fn legendre(x: u64, p: u64) -> i32 {
    debug_assert!(is_odd_prime(p), "legendre needs an odd prime, got {p}");
    let e = mod_pow(x % p, (p - 1) / 2, p);
    if e == 0 {
        0
    } else if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    }
}

/// The smallest positive quadratic nonresidue mod `p`. This is the crate-wide
/// default choice of nonresidue; every verdict downstream is independent of
/// the choice (and tested to be — see the nonresidue-override plumbing).
pub fn fixed_nonresidue(p: u64) -> u64 {
    debug_assert!(is_odd_prime(p));
    (2..p)
        .find(|&n| legendre(n, p) == -1)
        .expect("every odd prime has a nonresidue below it")
}

/// Validates a user-supplied nonresidue for `p`: nonzero mod p and a
/// quadratic nonresidue.
pub fn check_nonresidue(n: u64, p: u64) -> Result<u64, Error> {
    let n = n % p;
    if legendre(n, p) == -1 {
        Ok(n)
    } else {
        Err(Error::InvalidInput(format!(
            "{n} is not a quadratic nonresidue mod {p}"
        )))
    }
}
