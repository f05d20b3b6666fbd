//! Exact arithmetic in the cyclotomic field Q(ζ_p), p an odd prime.
//!
//! Elements are stored on the power basis {1, ζ, ..., ζ^(p-2)} with rational
//! coefficients; the single reduction rule is
//!
//! ```text
//! ζ^(p-1) = -(1 + ζ + ζ² + ... + ζ^(p-2)),        ζ^p = 1.
//! ```
//!
//! Beyond ring arithmetic this module provides the Galois action
//! σ_t(ζ) = ζ^t, quadratic Gauss sums G(x) = Σ_h ζ^(x·h²), the canonical
//! square root `sqrt_star(p) = G(1)` of (-1)^((p-1)/2)·p, the closed-form
//! inverse of 1 - ζ^b, twisted sums Σ_a 1/(1 - ζ^(t·a²)), and the
//! decomposition of a quadratic-subfield element as a + b·sqrt_star(p).
//!
//! Everything is symbolic: no complex embedding is ever chosen, so identities
//! involving √±p hold exactly or fail exactly — there are no tolerances.

use crate::arith::{check_nonresidue, fixed_nonresidue, gcd, is_odd_prime, legendre};
use crate::error::Error;
use crate::{integer, linalg, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An element of Q(ζ_p) in the power basis: `coeffs[k]` multiplies ζ^k,
/// `0 <= k <= p-2`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    prime: u64,
    coeffs: Vec<Rational>,
}

/// Which set the twisted inverse sum ranges over; see [`inv_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    /// Σ over a in F_p^× of 1/(1 - ζ^(a²)): each quadratic residue twice.
    Residue,
    /// Σ over a in F_p^× of 1/(1 - ζ^(⧄·a²)) for a fixed nonresidue ⧄.
    NonResidue,
    /// Σ over b in F_p^× of 1/(1 - ζ^b): each nonzero exponent once.
    All,
}

fn require_odd_prime(p: u64) -> Result<(), Error> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{p} is not an odd prime")))
    }
}

impl CycloNum {
    fn new_zeroed(p: u64) -> Self {
        debug_assert!(is_odd_prime(p));
        CycloNum {
            prime: p,
            coeffs: vec![Rational::zero(); (p - 1) as usize],
        }
    }

    pub fn zero(p: u64) -> Self {
        Self::new_zeroed(p)
    }

    pub fn one(p: u64) -> Self {
        Self::from_rational(p, Rational::one())
    }

    pub fn from_rational(p: u64, q: Rational) -> Self {
        let mut z = Self::new_zeroed(p);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(p: u64, n: i64) -> Self {
        Self::from_rational(p, integer(n))
    }

    /// ζ_p^k, for any integer exponent (reduced mod p).
    pub fn zeta_pow(p: u64, k: i64) -> Result<Self, Error> {
        require_odd_prime(p)?;
        let e = k.rem_euclid(p as i64) as usize;
        let mut z = Self::new_zeroed(p);
        if e == (p - 1) as usize {
            for c in &mut z.coeffs {
                *c = -Rational::one();
            }
        } else {
            z.coeffs[e] = Rational::one();
        }
        Ok(z)
    }

    /// Builds Σ_e counts[e]·ζ^e from a weight vector indexed by exponent
    /// 0..p-1 (length p), applying the ζ^(p-1) reduction for the last slot.
    /// This is the workhorse for character values, which arrive as counts of
    /// exponents rather than as basis coefficients.
    pub fn from_exponent_counts(p: u64, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize, "need one weight per exponent");
        let mut z = Self::new_zeroed(p);
        let top = counts[(p - 1) as usize];
        for (e, &c) in counts.iter().enumerate().take((p - 1) as usize) {
            if c != top {
                z.coeffs[e] = integer(c - top);
            }
        }
        z
    }

    /// Rational-weight variant of [`CycloNum::from_exponent_counts`].
    pub fn from_exponent_weights(p: u64, weights: &[Rational]) -> Self {
        assert_eq!(weights.len(), p as usize, "need one weight per exponent");
        let mut z = Self::new_zeroed(p);
        let top = &weights[(p - 1) as usize];
        for (e, w) in weights.iter().enumerate().take((p - 1) as usize) {
            if w != top {
                z.coeffs[e] = w - top;
            }
        }
        z
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, when the element lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    fn same_prime(&self, rhs: &Self) -> Result<(), Error> {
        if self.prime == rhs.prime {
            Ok(())
        } else {
            Err(Error::PrimeMismatch {
                left: self.prime,
                right: rhs.prime,
            })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_prime(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_prime(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Schoolbook product with zero-term skipping, then one reduction pass.
    /// Sparse operands (a lone ζ-power, a rational) cost O(p), dense ones
    /// O(p²) rational multiplications.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.same_prime(rhs)?;
        let n = (self.prime - 1) as usize; // basis size
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut out = Self::new_zeroed(self.prime);
        out.coeffs.clone_from_slice(&raw[..n]);
        // Exponents p..2p-4 wrap around to e-p; exponent p-1 hits the
        // reduction relation and subtracts from every coefficient.
        for (e, v) in raw.iter().enumerate().skip(n + 1) {
            out.coeffs[e - n - 1] += v;
        }
        let top = &raw[n];
        if !top.is_zero() {
            for c in &mut out.coeffs {
                *c -= top;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= q;
        }
        out
    }

    /// Multiplicative inverse, by solving the exact linear system whose
    /// columns are the basis expansions of self·ζ^j. Cross-checked in tests
    /// against the closed form for 1/(1 - ζ^b).
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = (self.prime - 1) as usize;
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        let mut col = self.coeffs.clone();
        for j in 0..n {
            for (row, m) in matrix.iter_mut().enumerate() {
                m[j] = col[row].clone();
            }
            // Advance col from self·ζ^j to self·ζ^(j+1).
            let top = col[n - 1].clone();
            for k in (1..n).rev() {
                col[k] = &col[k - 1] - &top;
            }
            col[0] = -top;
        }
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let solution = linalg::solve(matrix, rhs).ok_or_else(|| {
            Error::Inconsistent("singular multiplication matrix for nonzero element".into())
        })?;
        let out = CycloNum {
            prime: self.prime,
            coeffs: solution,
        };
        debug_assert_eq!(out.try_mul(self).unwrap(), Self::one(self.prime));
        Ok(out)
    }

    /// Galois automorphism σ_t: ζ ↦ ζ^t, for t coprime to p. Fixes Q,
    /// permutes the roots of unity, and is a ring homomorphism — the
    /// property tests lean on all three.
    pub fn galois(&self, t: u64) -> Result<Self, Error> {
        if gcd(t % self.prime, self.prime) != 1 {
            return Err(Error::InvalidInput(format!(
                "galois exponent {t} is not invertible mod {}",
                self.prime
            )));
        }
        let p = self.prime;
        let mut out = Self::new_zeroed(p);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (k as u64 * t) % p;
            if e == p - 1 {
                for o in &mut out.coeffs {
                    *o -= c;
                }
            } else {
                out.coeffs[e as usize] += c;
            }
        }
        Ok(out)
    }

    /// Complex conjugation ζ ↦ ζ^(-1), i.e. σ_(p-1).
    pub fn conj(&self) -> Self {
        self.galois(self.prime - 1)
            .expect("p-1 is always coprime to p")
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(p={}, {})", self.prime, self)
    }
}

impl fmt::Display for CycloNum {
    /// Human-readable power-basis form, e.g. `3/2 - 2*z^3` with z = ζ_p.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b> $trait<&'b CycloNum> for &'a CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &'b CycloNum) -> CycloNum {
                self.$checked(rhs).expect("cyclotomic prime mismatch")
            }
        }
        impl $trait<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &'b CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        assert_eq!(self.prime, rhs.prime, "cyclotomic prime mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -c.clone();
        }
        out
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

/// Quadratic Gauss sum G(x) = Σ_{h mod p} ζ^(x·h²). For x ≢ 0 this equals
/// (x/p)·sqrt_star(p); for x ≡ 0 it degenerates to p.
pub fn gauss_sum(p: u64, x: u64) -> Result<CycloNum, Error> {
    require_odd_prime(p)?;
    let x = x % p;
    let mut counts = vec![0i64; p as usize];
    for h in 0..p {
        counts[((x * ((h * h) % p)) % p) as usize] += 1;
    }
    Ok(CycloNum::from_exponent_counts(p, &counts))
}

/// The canonical square root of (-1)^((p-1)/2)·p in Q(ζ_p): by definition
/// the Gauss sum G(1). Squaring it gives +p for p ≡ 1 (mod 4) and -p for
/// p ≡ 3 (mod 4), exactly; every sign convention downstream is anchored
/// here, so no complex embedding is ever needed.
pub fn sqrt_star(p: u64) -> Result<CycloNum, Error> {
    gauss_sum(p, 1)
}

/// Closed-form inverse of 1 - ζ^b (b ≢ 0 mod p):
///
/// ```text
/// 1/(1 - ζ^b) = -(1/p) · Σ_{k=1}^{p-1} k·ζ^(k·b)
/// ```
///
/// O(p) integer work instead of a (p-1)×(p-1) linear solve; the generic
/// [`CycloNum::inv`] is cross-checked against this in tests.
pub fn inv_one_minus_zeta(p: u64, b: u64) -> Result<CycloNum, Error> {
    require_odd_prime(p)?;
    let b = b % p;
    if b == 0 {
        return Err(Error::InvalidInput(
            "1 - ζ^0 = 0 is not invertible".into(),
        ));
    }
    let mut counts = vec![0i64; p as usize];
    for k in 1..p {
        counts[((k * b) % p) as usize] += k as i64;
    }
    let minus_inv_p = -crate::rational(1, p as i64);
    Ok(CycloNum::from_exponent_counts(p, &counts).scale(&minus_inv_p))
}

/// Twisted inverse sum with an explicit nonresidue choice; see [`inv_sum`].
pub fn inv_sum_with(p: u64, twist: Twist, nonresidue: u64) -> Result<CycloNum, Error> {
    require_odd_prime(p)?;
    let nr = check_nonresidue(nonresidue, p)?;
    // Accumulate all p-1 closed-form inverses as one exponent-weight pass:
    // term a contributes weight k to exponent k·t(a) for k = 1..p-1.
    let mut counts = vec![0i64; p as usize];
    for a in 1..p {
        let t = match twist {
            Twist::Residue => (a * a) % p,
            Twist::NonResidue => (nr * ((a * a) % p)) % p,
            Twist::All => a,
        };
        for k in 1..p {
            counts[((k * t) % p) as usize] += k as i64;
        }
    }
    let minus_inv_p = -crate::rational(1, p as i64);
    Ok(CycloNum::from_exponent_counts(p, &counts).scale(&minus_inv_p))
}

/// The twisted inverse sums that drive the multiplicity-difference formula:
///
/// ```text
/// inv_sum(p, Residue)    = Σ_{a≠0} 1/(1 - ζ^(a²))
/// inv_sum(p, NonResidue) = Σ_{a≠0} 1/(1 - ζ^(⧄a²))      (⧄ = default nonresidue)
/// inv_sum(p, All)        = Σ_{b≠0} 1/(1 - ζ^b) = (p-1)/2
/// ```
///
/// Note the residue/nonresidue sums run over a ∈ F_p^×, hitting each square
/// twice, so Residue + NonResidue = 2·All = p - 1.
pub fn inv_sum(p: u64, twist: Twist) -> Result<CycloNum, Error> {
    require_odd_prime(p)?;
    inv_sum_with(p, twist, fixed_nonresidue(p))
}

/// Writes `z = a + b·sqrt_star(p)` with rational a, b, when z lies in the
/// quadratic subfield Q(sqrt_star(p)); errors with [`Error::NotInSubfield`]
/// otherwise. The pair (a, b) is unique since {1, sqrt_star(p)} is a basis.
pub fn decompose_quadratic(z: &CycloNum) -> Result<(Rational, Rational), Error> {
    let p = z.prime();
    let s = sqrt_star(p)?;
    // sqrt_star always has a nonzero coefficient beyond the constant term
    // (it is irrational), so solve for b there, then a from the constant.
    let k = (1..s.coeffs.len())
        .find(|&k| !s.coeffs[k].is_zero())
        .expect("sqrt_star(p) is never rational");
    let b = &z.coeffs[k] / &s.coeffs[k];
    let a = &z.coeffs[0] - &b * &s.coeffs[0];
    let reconstructed = CycloNum::from_rational(p, a.clone()) + s.scale(&b);
    if &reconstructed == z {
        Ok((a, b))
    } else {
        Err(Error::NotInSubfield)
    }
}

/// Reads off the integer pair (a, b) from a decomposition known to be
/// integral; errors with `Inconsistent` when it is not.
pub fn decompose_quadratic_integral(z: &CycloNum) -> Result<(BigInt, BigInt), Error> {
    let (a, b) = decompose_quadratic(z)?;
    if !a.is_integer() || !b.is_integer() {
        return Err(Error::Inconsistent(format!(
            "expected integral quadratic coordinates, got ({a}, {b})"
        )));
    }
    Ok((a.to_integer(), b.to_integer()))
}

/// Σ over every nonzero x of legendre-weighted checks: convenience used by
/// the Gauss-sum scaling law. Returns (x/p)·sqrt_star(p) as a CycloNum.
pub fn legendre_scaled_root(p: u64, x: u64) -> Result<CycloNum, Error> {
    let s = sqrt_star(p)?;
    Ok(match legendre(x, p) {
        1 => s,
        -1 => -&s,
        _ => CycloNum::zero(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;
    use proptest::prelude::*;

    fn zeta(p: u64, k: i64) -> CycloNum {
        CycloNum::zeta_pow(p, k).unwrap()
    }

    #[test]
    fn zeta_powers() {
        // ζ₅²: basis vector at index 2.
        let z2 = zeta(5, 2);
        assert_eq!(
            z2.coeffs(),
            &[integer(0), integer(0), integer(1), integer(0)]
        );
        // ζ₇⁰ = 1.
        assert_eq!(zeta(7, 0), CycloNum::one(7));
        // ζ₅⁴ wraps onto the reduction relation: all coefficients -1.
        let z4 = zeta(5, 4);
        assert!(z4.coeffs().iter().all(|c| *c == integer(-1)));
        // Negative exponents reduce mod p: ζ₅^(-1) = ζ₅⁴.
        assert_eq!(zeta(5, -1), z4);
        assert_eq!(zeta(5, -6), z4);
        // ζ_p^p = 1.
        assert_eq!(zeta(11, 11), CycloNum::one(11));
    }

    #[test]
    fn zeta_pow_rejects_bad_prime() {
        assert!(matches!(
            CycloNum::zeta_pow(9, 1),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            CycloNum::zeta_pow(2, 1),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        // (1 + ζ₃)(1 + ζ₃²) = 1: the two nontrivial cube roots multiply out.
        let a = CycloNum::one(3) + zeta(3, 1);
        let b = CycloNum::one(3) + zeta(3, 2);
        assert_eq!(&a * &b, CycloNum::one(3));

        // Φ₅ evaluated at 1 via its root factorization: Π (1 - ζ₅^k) = 5.
        let mut prod = CycloNum::one(5);
        for k in 1..5 {
            prod = &prod * &(CycloNum::one(5) - zeta(5, k));
        }
        assert_eq!(prod, CycloNum::from_integer(5, 5));
    }

    #[test]
    fn arithmetic_prime_mismatch() {
        let a = CycloNum::one(5);
        let b = CycloNum::one(7);
        assert_eq!(
            a.try_add(&b),
            Err(Error::PrimeMismatch { left: 5, right: 7 })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn inverse_examples() {
        // (1 + ζ₃)⁻¹ = 1 + ζ₃² = -ζ₃, by the product identity above.
        let a = CycloNum::one(3) + zeta(3, 1);
        assert_eq!(a.inv().unwrap(), -zeta(3, 1));

        // Generic inverse agrees with the closed form for 1/(1 - ζ^b).
        for p in [3u64, 5, 7, 11] {
            for b in 1..p {
                let elt = CycloNum::one(p) - zeta(p, b as i64);
                assert_eq!(
                    elt.inv().unwrap(),
                    inv_one_minus_zeta(p, b).unwrap(),
                    "p={p} b={b}"
                );
            }
        }

        assert_eq!(CycloNum::zero(7).inv(), Err(Error::DivisionByZero));
        assert!(inv_one_minus_zeta(7, 0).is_err());
        assert!(inv_one_minus_zeta(7, 14).is_err());
    }

    #[test]
    fn galois_action() {
        // σ₂(ζ₅) = ζ₅².
        assert_eq!(zeta(5, 1).galois(2).unwrap(), zeta(5, 2));
        // σ_t fixes rationals.
        let q = CycloNum::from_rational(7, rational(3, 2));
        assert_eq!(q.galois(3).unwrap(), q);
        // Non-invertible exponent is rejected.
        assert!(zeta(5, 1).galois(10).is_err());
        // Conjugation is an involution.
        let s = sqrt_star(11).unwrap();
        assert_eq!(s.conj().conj(), s);
    }

    #[test]
    fn galois_scales_gauss_sums() {
        // σ_t(G(1)) = G(t) = (t/p)·G(1): the Gauss-sum transformation law.
        for p in [3u64, 5, 7, 11, 13] {
            let s = sqrt_star(p).unwrap();
            for t in 1..p {
                let twisted = s.galois(t).unwrap();
                assert_eq!(twisted, gauss_sum(p, t).unwrap(), "p={p} t={t}");
                assert_eq!(twisted, legendre_scaled_root(p, t).unwrap());
            }
        }
    }

    #[test]
    fn gauss_sum_squares() {
        // G(1)² = (-1)^((p-1)/2)·p: +5 and -7 are the classical first cases.
        let g5 = gauss_sum(5, 1).unwrap();
        assert_eq!(&g5 * &g5, CycloNum::from_integer(5, 5));
        let g7 = gauss_sum(7, 1).unwrap();
        assert_eq!(&g7 * &g7, CycloNum::from_integer(7, -7));
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let s = sqrt_star(p).unwrap();
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(&s * &s, CycloNum::from_integer(p, sign * p as i64));
            // |G|² = G·conj(G) = p, independent of p mod 4.
            assert_eq!(&s * &s.conj(), CycloNum::from_integer(p, p as i64));
        }
    }

    #[test]
    fn gauss_sum_small_values() {
        // p = 3: G(1) = ζ - ζ² = 1 + 2ζ on the power basis.
        let g3 = gauss_sum(3, 1).unwrap();
        assert_eq!(g3.coeffs(), &[integer(1), integer(2)]);
        // x ≡ 0 degenerates to p.
        assert_eq!(gauss_sum(7, 0).unwrap(), CycloNum::from_integer(7, 7));
        assert_eq!(gauss_sum(7, 7).unwrap(), CycloNum::from_integer(7, 7));
    }

    #[test]
    fn inv_sum_all_is_half() {
        // Σ_{b≠0} 1/(1-ζ^b) = (p-1)/2: pair b with -b and each pair sums to 1.
        for p in [3u64, 5, 7, 11, 13, 31] {
            let total = inv_sum(p, Twist::All).unwrap();
            assert_eq!(
                total.as_rational().unwrap(),
                rational((p as i64 - 1) / 2, 1),
                "p={p}"
            );
        }
    }

    #[test]
    fn inv_sum_split() {
        // The residue and nonresidue sums each run over all of F_p^×, so
        // together they cover every exponent twice: sum = p - 1 exactly.
        for p in [3u64, 5, 7, 11, 13, 23] {
            let r = inv_sum(p, Twist::Residue).unwrap();
            let n = inv_sum(p, Twist::NonResidue).unwrap();
            let total = &r + &n;
            assert_eq!(total.as_rational().unwrap(), integer(p as i64 - 1), "p={p}");
        }
    }

    #[test]
    fn inv_sum_pinned_values() {
        // p = 5: residues {1,4} pair to 1/(1-ζ)+1/(1-ζ⁻¹) = 1, doubled = 2,
        // a purely rational value (p ≡ 1 mod 4 kills the irrational part).
        let r5 = inv_sum(5, Twist::Residue).unwrap();
        assert_eq!(r5.as_rational().unwrap(), integer(2));

        // p = 7: residue sum = 3 + √-7, nonresidue sum = 3 - √-7.
        let s7 = sqrt_star(7).unwrap();
        let r7 = inv_sum(7, Twist::Residue).unwrap();
        assert_eq!(r7, CycloNum::from_integer(7, 3) + s7.clone());
        let n7 = inv_sum(7, Twist::NonResidue).unwrap();
        assert_eq!(n7, CycloNum::from_integer(7, 3) - s7);

        // Agreement with the term-by-term sum of closed-form inverses.
        for p in [5u64, 7, 11] {
            let mut direct = CycloNum::zero(p);
            for a in 1..p {
                direct += &inv_one_minus_zeta(p, (a * a) % p).unwrap();
            }
            assert_eq!(direct, inv_sum(p, Twist::Residue).unwrap(), "p={p}");
        }
    }

    #[test]
    fn inv_sum_nonresidue_choice_is_irrelevant() {
        // Any nonresidue gives the same NonResidue sum: ⧄a² ranges over the
        // same multiset regardless of which ⧄ is picked.
        for p in [7u64, 11, 23] {
            let choices: Vec<u64> = (2..p).filter(|&n| legendre(n, p) == -1).collect();
            let first = inv_sum_with(p, Twist::NonResidue, choices[0]).unwrap();
            for &nr in &choices[1..] {
                assert_eq!(first, inv_sum_with(p, Twist::NonResidue, nr).unwrap());
            }
        }
        // A residue masquerading as ⧄ is rejected.
        assert!(matches!(
            inv_sum_with(7, Twist::NonResidue, 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        // sqrt_star itself decomposes as (0, 1).
        let (a, b) = decompose_quadratic(&sqrt_star(7).unwrap()).unwrap();
        assert_eq!((a, b), (integer(0), integer(1)));

        // Rationals decompose as (q, 0).
        let q = CycloNum::from_rational(7, rational(3, 2));
        let (a, b) = decompose_quadratic(&q).unwrap();
        assert_eq!((a, b), (rational(3, 2), integer(0)));

        // A primitive root of unity is not in the quadratic subfield.
        assert_eq!(decompose_quadratic(&zeta(7, 1)), Err(Error::NotInSubfield));

        // Round trip with nontrivial coordinates.
        let s = sqrt_star(11).unwrap();
        let z = CycloNum::from_rational(11, rational(-5, 3)) + s.scale(&rational(7, 2));
        let (a, b) = decompose_quadratic(&z).unwrap();
        assert_eq!((a, b), (rational(-5, 3), rational(7, 2)));
    }

    #[test]
    fn display_formatting() {
        assert_eq!(CycloNum::zero(5).to_string(), "0");
        assert_eq!(zeta(5, 1).to_string(), "z");
        assert_eq!(gauss_sum(3, 1).unwrap().to_string(), "1 + 2*z");
        let m = CycloNum::from_rational(5, rational(1, 2)) - zeta(5, 3);
        assert_eq!(m.to_string(), "1/2 - z^3");
    }

    /// Small random elements over a fixed prime for the ring-law tests.
    fn arb_cyclo(p: u64) -> impl Strategy<Value = CycloNum> {
        prop::collection::vec(-4i64..=4, (p - 1) as usize).prop_map(move |v| {
            let mut z = CycloNum::zero(p);
            for (k, n) in v.into_iter().enumerate() {
                z.coeffs[k] = integer(n);
            }
            z
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_distributes(a in arb_cyclo(7), b in arb_cyclo(7), c in arb_cyclo(7)) {
            let lhs = &(&a + &b) * &c;
            let rhs = &(&a * &c) + &(&b * &c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_cyclo(5), b in arb_cyclo(5), c in arb_cyclo(5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn galois_is_ring_hom(a in arb_cyclo(7), b in arb_cyclo(7), t in 1u64..7) {
            let lhs = (&a * &b).galois(t).unwrap();
            let rhs = &a.galois(t).unwrap() * &b.galois(t).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a + &b).galois(t).unwrap();
            let rhs = &a.galois(t).unwrap() + &b.galois(t).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        // Inversion solves a dense linear system per case; keep the count low.
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn inverse_round_trips(a in arb_cyclo(7)) {
            prop_assume!(!a.is_zero());
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, CycloNum::one(7));
        }

        #[test]
        fn quadratic_subfield_round_trips(
            an in -9i64..=9, ad in 1i64..=4, bn in -9i64..=9, bd in 1i64..=4
        ) {
            let a = rational(an, ad);
            let b = rational(bn, bd);
            let s = sqrt_star(11).unwrap();
            let z = CycloNum::from_rational(11, a.clone()) + s.scale(&b);
            let (a2, b2) = decompose_quadratic(&z).unwrap();
            prop_assert_eq!(a, a2);
            prop_assert_eq!(b, b2);
        }
    }
}
