//! The headline identities, assembled from the exact pieces.
//!
//! The multiplicity difference n₊ - n₋ of the two invariant characters in
//! the sum-space character has the Gauss-sum expression
//!
//! ```text
//! n₊ - n₋ = -(p^(2r-4)/2) · sqrt_star(p) · [ 1 - p + 2·Σ_{a≠0} 1/(1-ζ^(a²)) ]
//! ```
//!
//! which this module evaluates symbolically in Q(ζ_p) and reduces to an
//! integer. The value must then match the case-by-case closed form
//!
//! ```text
//! n₊ - n₋ = p^(2r-3)·h(-p)   (p ≡ 3 mod 4, p > 3)
//!         = 0                (p ≡ 1 mod 4)
//!         = 3^(2r-4)         (p = 3)
//! ```
//!
//! with h(-p) the class number — that match is the central verification.
//! Together with n₊ + n₋ from the cusp-space side it pins down the
//! individual multiplicities, whose integrality and nonnegativity are
//! themselves checks.

use crate::arith::{check_nonresidue, is_odd_prime};
use crate::classnum::class_number_forms;
use crate::cusp::mult_sum_closed_form;
use crate::cyclo::{decompose_quadratic, inv_sum_with, sqrt_star, CycloNum, Twist};
use crate::error::Error;
use crate::{integer, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// The three branches of the multiplicity-difference closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    /// p ≡ 3 (mod 4), p > 3: difference is p^(2r-3)·h(-p).
    ThreeMod4,
    /// p ≡ 1 (mod 4): difference vanishes.
    OneMod4,
    /// p = 3: difference is 3^(2r-4).
    PEqThree,
}

pub fn theorem_case(p: u64) -> Result<TheoremCase, Error> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    Ok(if p == 3 {
        TheoremCase::PEqThree
    } else if p % 4 == 3 {
        TheoremCase::ThreeMod4
    } else {
        TheoremCase::OneMod4
    })
}

fn require_level(r: u32) -> Result<(), Error> {
    if r < 2 {
        Err(Error::InvalidInput("level must be at least 2".into()))
    } else {
        Ok(())
    }
}

fn big_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// n₊ - n₋ evaluated through the cyclotomic field, with every intermediate
/// identity re-checked along the way:
///
/// * Σ_all 1/(1-ζ^b) = (p-1)/2,
/// * Σ_residue + Σ_nonresidue = p - 1 (each a-sweep hits its twist class
///   twice, so the two together cover everything twice),
/// * the bracket 1 - p + 2·Σ_residue equals Σ_residue - Σ_nonresidue,
/// * the final product is a rational integer.
///
/// Any violation is an internal-consistency error (a transcription bug),
/// not a failed verification.
pub fn n_diff_formula(p: u64, r: u32, nonresidue: u64) -> Result<BigInt, Error> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    require_level(r)?;
    let nr = check_nonresidue(nonresidue, p)?;

    let sum_res = inv_sum_with(p, Twist::Residue, nr)?;
    let sum_non = inv_sum_with(p, Twist::NonResidue, nr)?;
    let sum_all = inv_sum_with(p, Twist::All, nr)?;

    let half_count = crate::rational((p as i64 - 1) / 2 * 2, 2); // (p-1)/2 exactly
    if sum_all.as_rational() != Some(half_count) {
        return Err(Error::Inconsistent(format!(
            "Σ_all 1/(1-ζ^b) = {sum_all}, expected (p-1)/2"
        )));
    }
    let split = sum_res.try_add(&sum_non)?;
    if split.as_rational() != Some(integer(p as i64 - 1)) {
        return Err(Error::Inconsistent(format!(
            "Σ_res + Σ_non = {split}, expected p - 1"
        )));
    }

    let bracket = CycloNum::from_integer(p, 1 - p as i64)
        .try_add(&sum_res.scale(&integer(2)))?;
    if bracket != sum_res.try_sub(&sum_non)? {
        return Err(Error::Inconsistent(
            "bracket 1 - p + 2Σ_res != Σ_res - Σ_non".into(),
        ));
    }

    let product = sqrt_star(p)?.try_mul(&bracket)?;
    let coeff = Rational::new(-big_pow(p, 2 * r - 4), BigInt::from(2));
    let value = product.scale(&coeff);
    value.as_integer().ok_or_else(|| {
        Error::Inconsistent(format!("n₊ - n₋ evaluated to non-integer {value}"))
    })
}

/// The case-by-case closed form for n₊ - n₋, using the reduced-forms class
/// number as the independent h(-p) oracle.
pub fn expected_n_diff(p: u64, r: u32) -> Result<BigInt, Error> {
    require_level(r)?;
    Ok(match theorem_case(p)? {
        TheoremCase::PEqThree => big_pow(3, 2 * r - 4),
        TheoremCase::OneMod4 => BigInt::zero(),
        TheoremCase::ThreeMod4 => big_pow(p, 2 * r - 3) * class_number_forms(p)?,
    })
}

/// Decomposes Σ_{a≠0} 1/(1-ζ^(a²)) = A + B·sqrt_star(p) over the quadratic
/// subfield. For p ≡ 3 (mod 4), p > 3 this is the Gauss-sum form of the
/// class number: (A, B) = ((p-1)/2, h(-p)); for p ≡ 1 (mod 4) the root part
/// B vanishes.
pub fn gross_decomposition(p: u64, nonresidue: u64) -> Result<(Rational, Rational), Error> {
    let nr = check_nonresidue(nonresidue, p)?;
    decompose_quadratic(&inv_sum_with(p, Twist::Residue, nr)?)
}

/// Solves n₊ and n₋ from their sum (cusp-space closed form) and difference
/// (Gauss-sum formula). Both must come out as nonnegative integers.
pub fn solve_multiplicities(p: u64, r: u32, nonresidue: u64) -> Result<(BigInt, BigInt), Error> {
    let sum = mult_sum_closed_form(p, r)?;
    let diff = n_diff_formula(p, r, nonresidue)?;
    let two = BigInt::from(2);
    let plus_numer = &sum + &diff;
    let minus_numer = &sum - &diff;
    if &plus_numer % &two != BigInt::zero() || &minus_numer % &two != BigInt::zero() {
        return Err(Error::Inconsistent(format!(
            "sum {sum} and difference {diff} have opposite parity"
        )));
    }
    let n_plus = plus_numer / &two;
    let n_minus = minus_numer / &two;
    if n_plus < BigInt::zero() || n_minus < BigInt::zero() {
        return Err(Error::Inconsistent(format!(
            "negative multiplicity: n₊ = {n_plus}, n₋ = {n_minus}"
        )));
    }
    Ok((n_plus, n_minus))
}

/// The group-level difference: n₊ - n₋ divided by p^(r-2) must equal
/// p^(r-1)·h(-p) for p ≡ 3 (mod 4), p > 3. Returns (computed, expected).
pub fn group_level_difference(
    p: u64,
    r: u32,
    nonresidue: u64,
) -> Result<(BigInt, BigInt), Error> {
    if theorem_case(p)? != TheoremCase::ThreeMod4 {
        return Err(Error::InvalidInput(
            "group-level difference is stated for p ≡ 3 mod 4, p > 3".into(),
        ));
    }
    let diff = n_diff_formula(p, r, nonresidue)?;
    let scale = big_pow(p, r - 2);
    if &diff % &scale != BigInt::zero() {
        return Err(Error::Inconsistent(format!(
            "n₊ - n₋ = {diff} is not divisible by p^(r-2) = {scale}"
        )));
    }
    let computed = diff / scale;
    let expected = big_pow(p, r - 1) * class_number_forms(p)?;
    Ok((computed, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{fixed_nonresidue, legendre, odd_primes_up_to};
    use crate::rational;

    fn n_diff(p: u64, r: u32) -> BigInt {
        n_diff_formula(p, r, fixed_nonresidue(p)).unwrap()
    }

    #[test]
    fn n_diff_pinned_values() {
        assert_eq!(n_diff(7, 2), BigInt::from(7));
        assert_eq!(n_diff(3, 2), BigInt::from(1));
        assert_eq!(n_diff(5, 2), BigInt::from(0));
        assert_eq!(n_diff(11, 2), BigInt::from(11));
        assert_eq!(n_diff(13, 2), BigInt::from(0));
        assert_eq!(n_diff(23, 2), BigInt::from(69)); // 23 · h(-23) = 23 · 3
        assert_eq!(n_diff(3, 3), BigInt::from(9));
        assert_eq!(n_diff(7, 3), BigInt::from(343)); // 7³ · 1
    }

    #[test]
    fn n_diff_matches_closed_form_sweep() {
        for p in odd_primes_up_to(61) {
            for r in [2u32, 3] {
                assert_eq!(n_diff(p, r), expected_n_diff(p, r).unwrap(), "(p,r)=({p},{r})");
            }
        }
    }

    #[test]
    fn n_diff_is_nonresidue_invariant() {
        for p in [7u64, 11, 23] {
            let choices: Vec<u64> = (2..p).filter(|&n| legendre(n, p) == -1).collect();
            let base = n_diff_formula(p, 2, choices[0]).unwrap();
            for &nr in &choices {
                assert_eq!(n_diff_formula(p, 2, nr).unwrap(), base, "p={p} nr={nr}");
            }
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(n_diff_formula(9, 2, 2).is_err());
        assert!(n_diff_formula(7, 1, 3).is_err());
        assert!(n_diff_formula(7, 2, 2).is_err()); // 2 is a residue mod 7
        assert!(expected_n_diff(2, 2).is_err());
        assert!(theorem_case(15).is_err());
    }

    #[test]
    fn case_dispatch() {
        assert_eq!(theorem_case(3).unwrap(), TheoremCase::PEqThree);
        assert_eq!(theorem_case(7).unwrap(), TheoremCase::ThreeMod4);
        assert_eq!(theorem_case(13).unwrap(), TheoremCase::OneMod4);
    }

    #[test]
    fn gross_decomposition_pinned() {
        // (A, B) = ((p-1)/2, h(-p)) for the 3-mod-4 primes...
        for (p, h) in [(7u64, 1i64), (11, 1), (23, 3), (31, 3), (47, 5)] {
            let (a, b) = gross_decomposition(p, fixed_nonresidue(p)).unwrap();
            assert_eq!(a, rational((p as i64 - 1) / 2, 1), "p={p}");
            assert_eq!(b, rational(h, 1), "p={p}");
        }
        // ...and a vanishing root part for the 1-mod-4 primes.
        for p in [5u64, 13, 17, 29] {
            let (a, b) = gross_decomposition(p, fixed_nonresidue(p)).unwrap();
            assert_eq!(a, rational((p as i64 - 1) / 2, 1), "p={p}");
            assert_eq!(b, rational(0, 1), "p={p}");
        }
    }

    #[test]
    fn multiplicities_pinned() {
        let solve = |p, r| solve_multiplicities(p, r, fixed_nonresidue(p)).unwrap();
        assert_eq!(solve(7, 2), (BigInt::from(16), BigInt::from(9)));
        assert_eq!(solve(5, 2), (BigInt::from(4), BigInt::from(4)));
        assert_eq!(solve(3, 2), (BigInt::from(1), BigInt::from(0)));
        assert_eq!(solve(11, 2), (BigInt::from(58), BigInt::from(47)));
        assert_eq!(solve(3, 3), (BigInt::from(27), BigInt::from(18)));
        assert_eq!(solve(13, 2), (BigInt::from(88), BigInt::from(88)));
    }

    #[test]
    fn multiplicities_reconstruct_sum_and_difference() {
        for p in odd_primes_up_to(31) {
            for r in [2u32, 3] {
                let (np, nm) = solve_multiplicities(p, r, fixed_nonresidue(p)).unwrap();
                assert_eq!(&np + &nm, mult_sum_closed_form(p, r).unwrap());
                assert_eq!(&np - &nm, n_diff(p, r));
                assert!(np >= BigInt::zero() && nm >= BigInt::zero());
            }
        }
    }

    #[test]
    fn parity_rule() {
        // n₊ + n₋ is odd exactly when p ≡ 3 (mod 4).
        for p in odd_primes_up_to(61) {
            for r in [2u32, 3] {
                let sum = mult_sum_closed_form(p, r).unwrap();
                let odd = &sum % BigInt::from(2) != BigInt::zero();
                assert_eq!(odd, p % 4 == 3, "(p,r)=({p},{r}) sum={sum}");
            }
        }
    }

    #[test]
    fn group_level_difference_pinned() {
        let gl = |p, r| group_level_difference(p, r, fixed_nonresidue(p)).unwrap();
        assert_eq!(gl(7, 2), (BigInt::from(7), BigInt::from(7)));
        assert_eq!(gl(23, 2), (BigInt::from(69), BigInt::from(69)));
        assert_eq!(gl(7, 3), (BigInt::from(49), BigInt::from(49)));
        assert!(group_level_difference(5, 2, 2).is_err());
        assert!(group_level_difference(3, 2, 2).is_err());
    }
}
