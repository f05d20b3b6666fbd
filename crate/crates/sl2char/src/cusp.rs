//! The cusp-form sum space and its character on sl₂(F_p).
//!
//! For level p^r the space S ⊕ S̄ (weight-2 cusp forms plus conjugates) has
//! dimension
//!
//! ```text
//! 2·dim S = 2 + p^(2r-2)·(p^r - 6)·(p² - 1) / 12,
//! ```
//!
//! and its character restricted to the congruence kernel sl₂(F_p) has the
//! closed form
//!
//! ```text
//! χ_S = (p²-1)·p^(3r-5)/12 · Reg  +  2·1  -  (p-1)·p^(2r-4)/2 · Σ_s B_s
//! ```
//!
//! where B_s = Ind of the trivial character from the s-conjugated unipotent
//! line and s runs over a transversal of SL₂(Z/p^(r-1)) modulo the preimage
//! of the Borel — the p+1 matrices [[1,0],[c,1]] (c mod p) and [[0,-1],[1,0]].
//! The multiplicity ⟨χ_S, ψ_u⟩ = n₊ + n₋ then has its own closed form,
//! computed and cross-checked here.

use crate::arith::is_odd_prime;
use crate::chartab::CharTable;
use crate::cyclo::CycloNum;
use crate::error::Error;
use crate::lie::LieElt;
use crate::sl2::Mat2;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Hard cap on p for anything that materializes a p³-entry character table.
pub const MAX_TABLE_PRIME: u64 = 31;

fn require_params(p: u64, r: u32) -> Result<(), Error> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    if r < 2 {
        return Err(Error::InvalidInput("level must be at least 2".into()));
    }
    Ok(())
}

fn big_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Exact integral quotient, or an internal-consistency error carrying the
/// context string. The dimension and multiplicity formulas are theorems
/// *because* these quotients are integral; a fractional value is a bug.
fn exact_quotient(numer: BigInt, denom: i64, what: &str) -> Result<BigInt, Error> {
    let q = Rational::new(numer, BigInt::from(denom));
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::Inconsistent(format!("{what} is not integral: {q}")))
    }
}

/// dim S for weight-2 cusp forms of level p^r:
/// `1 + p^(2r-2)·(p^r - 6)·(p² - 1)/24`.
pub fn dim_cusp(p: u64, r: u32) -> Result<BigInt, Error> {
    require_params(p, r)?;
    let numer = big_pow(p, 2 * r - 2) * (big_pow(p, r) - 6) * (BigInt::from(p) * p - 1);
    let dim = exact_quotient(numer, 24, "cusp dimension")? + 1;
    if dim < BigInt::zero() {
        return Err(Error::Inconsistent(format!("negative dimension {dim}")));
    }
    Ok(dim)
}

/// The p+1 coset representatives of SL₂(Z/p^(r-1)) modulo the preimage of
/// the upper-triangular Borel: lower unipotents indexed by c mod p, then
/// the Weyl rotation. Built at modulus p^(r-1) (that is, mod p when r = 2).
pub fn borel_transversal(p: u64, r: u32) -> Result<Vec<Mat2>, Error> {
    require_params(p, r)?;
    let m = p
        .checked_pow(r - 1)
        .ok_or_else(|| Error::InvalidInput(format!("p^{} overflows u64", r - 1)))?;
    let mut reps: Vec<Mat2> = (0..p).map(|c| Mat2::new(m, 1, 0, c, 1)).collect();
    reps.push(Mat2::from_signed(m, 0, -1, 1, 0));
    Ok(reps)
}

/// The sum-space character χ_S together with the dimension it must match.
#[derive(Debug, Clone)]
pub struct SumSpaceChar {
    p: u64,
    r: u32,
    /// The character table on sl₂(F_p); all values are rational integers.
    pub table: CharTable,
    /// dim S, so that the table's degree is exactly 2·dim.
    pub dim: BigInt,
}

impl SumSpaceChar {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.r
    }
}

/// Builds χ_S from the closed form and verifies its degree against the
/// dimension formula on the spot. Refuses p beyond [`MAX_TABLE_PRIME`].
pub fn chi_s(p: u64, r: u32) -> Result<SumSpaceChar, Error> {
    require_params(p, r)?;
    if p > MAX_TABLE_PRIME {
        return Err(Error::TooLarge {
            size: (p * p * p) as u128,
            limit: MAX_TABLE_PRIME * MAX_TABLE_PRIME * MAX_TABLE_PRIME,
        });
    }
    let dim = dim_cusp(p, r)?;

    // Coefficients (p²-1)·p^(3r-5)/12 and (p-1)·p^(2r-4)/2, both integral.
    let reg_coeff = Rational::new(
        (BigInt::from(p) * p - 1) * big_pow(p, 3 * r - 5),
        BigInt::from(12),
    );
    let borel_coeff = Rational::new(
        BigInt::from(p - 1) * big_pow(p, 2 * r - 4),
        BigInt::from(2),
    );

    let mut borel_sum = CharTable::from_fn(p, "borel_sum", |_| CycloNum::zero(p));
    for s in borel_transversal(p, r)? {
        borel_sum = borel_sum.add(&CharTable::reg_borel(&s, p), "borel_sum")?;
    }

    let table = CharTable::regular(p)
        .scale(&reg_coeff, "chi_S")
        .add(&CharTable::trivial(p).scale(&Rational::from_integer(2.into()), "2"), "chi_S")?
        .sub(&borel_sum.scale(&borel_coeff, "borel"), "chi_S")?;

    // The degree must equal 2·dim S; anything else means the closed form
    // was transcribed wrong.
    let degree = table
        .degree()
        .as_integer()
        .ok_or_else(|| Error::Inconsistent("chi_S degree is not an integer".into()))?;
    if degree != BigInt::from(2) * &dim {
        return Err(Error::Inconsistent(format!(
            "chi_S degree {degree} != 2·dim = {}",
            BigInt::from(2) * &dim
        )));
    }
    Ok(SumSpaceChar { p, r, table, dim })
}

/// ⟨χ_S, ψ_Y⟩ as an exact integer, streamed: the table's rational values are
/// folded into exponent weights of ζ^(-Tr(Y·X)) without building ψ_Y.
pub fn psi_multiplicity(space: &SumSpaceChar, y: &LieElt) -> Result<BigInt, Error> {
    let p = space.p;
    if y.prime() != p {
        return Err(Error::PrimeMismatch {
            left: p,
            right: y.prime(),
        });
    }
    let mut weights = vec![Rational::zero(); p as usize];
    for (idx, x) in LieElt::all(p).enumerate() {
        let v = space.table.value_at(idx);
        if v.is_zero() {
            continue;
        }
        let value = v
            .as_rational()
            .ok_or_else(|| Error::Inconsistent("chi_S has a non-rational value".into()))?;
        let e = ((p - y.trace_pair(&x)) % p) as usize; // conj(ψ) exponent
        weights[e] += value;
    }
    let total = CycloNum::from_exponent_weights(p, &weights)
        .scale(&Rational::new(BigInt::one(), big_pow(p, 3)));
    total.as_integer().ok_or_else(|| {
        Error::Inconsistent(format!("⟨chi_S, psi⟩ is not a rational integer: {total}"))
    })
}

/// The closed form for n₊ + n₋ = ⟨χ_S, ψ_u⟩:
/// `p^(2r-4)·(p-1)·(p^r + p^(r-1) - 6)/12`.
pub fn mult_sum_closed_form(p: u64, r: u32) -> Result<BigInt, Error> {
    require_params(p, r)?;
    let numer =
        big_pow(p, 2 * r - 4) * BigInt::from(p - 1) * (big_pow(p, r) + big_pow(p, r - 1) - 6);
    let n = exact_quotient(numer, 12, "multiplicity sum")?;
    if n < BigInt::zero() {
        return Err(Error::Inconsistent(format!("negative multiplicity sum {n}")));
    }
    Ok(n)
}
