//! The class number h(-p) of Q(√-p) for p ≡ 3 (mod 4), two ways:
//!
//! * by enumerating reduced binary quadratic forms of discriminant -p —
//!   the ground-truth combinatorial count; and
//! * by the Dirichlet class-number formula, which for prime p > 3 reduces
//!   to `h = -(1/p)·Σ_{k=1}^{p-1} k·(k/p)`.
//!
//! The agreement of the two (and, elsewhere, of the Gauss-sum route through
//! Q(ζ_p)) is one of the verification checks.

use crate::arith::{is_odd_prime, legendre};
use crate::error::Error;

fn require_three_mod_four(p: u64) -> Result<(), Error> {
    if !is_odd_prime(p) || p % 4 != 3 {
        Err(Error::InvalidInput(format!(
            "{p} is not a prime congruent to 3 mod 4"
        )))
    } else {
        Ok(())
    }
}

/// All reduced binary quadratic forms ax² + bxy + cy² of discriminant
/// b² - 4ac = -p, sorted by (a, b, c). Reduced means |b| ≤ a ≤ c with b ≥ 0
/// whenever |b| = a or a = c. For prime p every form of discriminant -p is
/// automatically primitive.
pub fn reduced_forms(p: u64) -> Result<Vec<(i64, i64, i64)>, Error> {
    require_three_mod_four(p)?;
    let disc = -(p as i64);
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -disc {
        for b in -a..=a {
            let numer = b * b - disc; // b² + p = 4ac
            if numer % (4 * a) != 0 {
                continue;
            }
            let c = numer / (4 * a);
            if c < a {
                continue;
            }
            if (b.abs() == a || a == c) && b < 0 {
                continue; // boundary forms are counted with b ≥ 0 only
            }
            debug_assert_eq!(b * b - 4 * a * c, disc);
            forms.push((a, b, c));
        }
        a += 1;
    }
    forms.sort_unstable();
    Ok(forms)
}

/// h(-p) as the number of reduced forms of discriminant -p.
pub fn class_number_forms(p: u64) -> Result<u64, Error> {
    Ok(reduced_forms(p)?.len() as u64)
}

/// Σ_{k=1}^{p-1} k·(k/p): the character-weighted sum in the Dirichlet
/// formula. Negative exactly when p ≡ 3 (mod 4), p > 3.
pub fn dirichlet_sum(p: u64) -> i64 {
    (1..p).map(|k| k as i64 * legendre(k, p) as i64).sum()
}

/// h(-p) by the Dirichlet class-number formula, valid for prime p > 3 with
/// p ≡ 3 (mod 4): `h = -Σ/p` where Σ is [`dirichlet_sum`]. (p = 3 is
/// excluded: the six units of Q(√-3) change the formula's normalization.)
pub fn class_number_dirichlet(p: u64) -> Result<u64, Error> {
    require_three_mod_four(p)?;
    if p == 3 {
        return Err(Error::InvalidInput(
            "the unit normalization differs at p = 3; use the forms count".into(),
        ));
    }
    let s = dirichlet_sum(p);
    if s % p as i64 != 0 {
        return Err(Error::Inconsistent(format!(
            "Dirichlet sum {s} is not divisible by {p}"
        )));
    }
    let h = -s / p as i64;
    if h <= 0 {
        return Err(Error::Inconsistent(format!(
            "Dirichlet formula produced non-positive h = {h} for p = {p}"
        )));
    }
    Ok(h as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::odd_primes_up_to;

    #[test]
    fn reduced_forms_pinned() {
        // p = 23: the classical h = 3 example.
        assert_eq!(
            reduced_forms(23).unwrap(),
            vec![(1, 1, 6), (2, -1, 3), (2, 1, 3)]
        );
        // p = 7 and the degenerate-at-the-boundary p = 3.
        assert_eq!(reduced_forms(7).unwrap(), vec![(1, 1, 2)]);
        assert_eq!(reduced_forms(3).unwrap(), vec![(1, 1, 1)]);
    }

    #[test]
    fn class_number_pinned() {
        for (p, h) in [
            (3u64, 1u64),
            (7, 1),
            (11, 1),
            (19, 1),
            (23, 3),
            (31, 3),
            (43, 1),
            (47, 5),
            (59, 3),
            (71, 7),
            (79, 5),
            (83, 3),
            (163, 1),
            (199, 9),
        ] {
            assert_eq!(class_number_forms(p).unwrap(), h, "p={p}");
        }
    }

    #[test]
    fn dirichlet_pinned() {
        assert_eq!(dirichlet_sum(7), -7);
        assert_eq!(dirichlet_sum(23), -69);
        assert_eq!(class_number_dirichlet(7).unwrap(), 1);
        assert_eq!(class_number_dirichlet(23).unwrap(), 3);
    }

    #[test]
    fn dirichlet_sum_vanishes_for_one_mod_four() {
        // k ↦ p-k pairs kill the sum when (-1/p) = 1.
        for p in [5u64, 13, 17, 29, 97] {
            assert_eq!(dirichlet_sum(p), 0, "p={p}");
        }
    }

    #[test]
    fn two_routes_agree() {
        for p in odd_primes_up_to(499) {
            if p % 4 != 3 || p == 3 {
                continue;
            }
            assert_eq!(
                class_number_forms(p).unwrap(),
                class_number_dirichlet(p).unwrap(),
                "p={p}"
            );
        }
    }

    #[test]
    fn class_parity_is_odd() {
        // Genus theory: prime discriminant -p has odd class number.
        for p in odd_primes_up_to(499) {
            if p % 4 != 3 {
                continue;
            }
            assert_eq!(class_number_forms(p).unwrap() % 2, 1, "p={p}");
        }
    }

    #[test]
    fn preconditions_enforced() {
        assert!(reduced_forms(5).is_err());
        assert!(reduced_forms(9).is_err());
        assert!(class_number_dirichlet(3).is_err());
        assert!(class_number_dirichlet(13).is_err());
    }
}
