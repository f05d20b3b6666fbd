//! The Lie algebra sl₂(F_p) and its embedding into SL₂(Z/p^r) as the kernel
//! of reduction mod p^(r-1).
//!
//! A trace-zero matrix X = [[a,b],[c,-a]] over F_p maps to
//!
//! ```text
//! embed(X) = 1 + p^(r-1)·X   in SL₂(Z/p^r),   r ≥ 2,
//! ```
//!
//! which is an isomorphism of (sl₂(F_p), +) onto the kernel: products in the
//! kernel add the X parts because p^(2r-2) ≡ 0 mod p^r, and det(embed(X)) =
//! 1 - p^(2r-2)(a² + bc) ≡ 1 for the same reason. Conjugation by
//! g ∈ SL₂(Z/p^r) factors through g mod p, so the adjoint action of
//! SL₂(F_p) is what acts on everything downstream.

use crate::arith::is_odd_prime;
use crate::error::Error;
use crate::sl2::{Mat2, Subgroup};

/// An element of sl₂(F_p): the matrix [[a, b], [c, -a]] with entries mod p.
///
/// The canonical index a·p² + b·p + c enumerates the algebra; character
/// tables are stored in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieElt {
    p: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl LieElt {
    pub fn new(p: u64, a: u64, b: u64, c: u64) -> Self {
        debug_assert!(is_odd_prime(p));
        LieElt {
            p,
            a: a % p,
            b: b % p,
            c: c % p,
        }
    }

    pub fn from_signed(p: u64, a: i64, b: i64, c: i64) -> Self {
        let m = p as i64;
        LieElt::new(
            p,
            a.rem_euclid(m) as u64,
            b.rem_euclid(m) as u64,
            c.rem_euclid(m) as u64,
        )
    }

    pub fn zero(p: u64) -> Self {
        LieElt::new(p, 0, 0, 0)
    }

    /// The regular nilpotent u = [[0,0],[1,0]] whose orbit carries χ₊.
    pub fn nilpotent_u(p: u64) -> Self {
        LieElt::new(p, 0, 0, 1)
    }

    /// The companion nilpotent v = [[0,0],[⧄,0]] (⧄ a nonresidue) whose
    /// orbit carries χ₋. The two orbits together exhaust the nonzero
    /// nilpotent cone.
    pub fn nilpotent_v(p: u64, nonresidue: u64) -> Self {
        LieElt::new(p, 0, 0, nonresidue)
    }

    /// The upper-triangular line element [[0, m], [0, 0]].
    pub fn upper(p: u64, m: u64) -> Self {
        LieElt::new(p, 0, m, 0)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Canonical position in the index order a·p² + b·p + c.
    pub fn index(&self) -> usize {
        ((self.a * self.p + self.b) * self.p + self.c) as usize
    }

    pub fn from_index(p: u64, index: usize) -> Self {
        let i = index as u64;
        debug_assert!(i < p * p * p);
        LieElt::new(p, i / (p * p), i / p % p, i % p)
    }

    /// Index-ordered listing of all p³ elements.
    pub fn all(p: u64) -> impl Iterator<Item = LieElt> {
        (0..(p * p * p) as usize).map(move |i| LieElt::from_index(p, i))
    }

    pub fn add(&self, rhs: &LieElt) -> LieElt {
        assert_eq!(self.p, rhs.p);
        LieElt::new(self.p, self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }

    pub fn neg(&self) -> LieElt {
        LieElt::from_signed(
            self.p,
            -(self.a as i64),
            -(self.b as i64),
            -(self.c as i64),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    /// X is nilpotent iff det X = -(a² + bc) vanishes.
    pub fn is_nilpotent(&self) -> bool {
        (self.a * self.a + self.b * self.c) % self.p == 0
    }

    /// embed(X) = 1 + p^(r-1)·X as a matrix over Z/p^r.
    pub fn embed(&self, r: u32) -> Result<Mat2, Error> {
        if r < 2 {
            return Err(Error::InvalidInput(
                "kernel embedding needs level r >= 2".into(),
            ));
        }
        let m = self
            .p
            .checked_pow(r)
            .ok_or_else(|| Error::InvalidInput(format!("p^{r} overflows for p={}", self.p)))?;
        let q = m / self.p; // p^(r-1)
        let g = Mat2::new(
            m,
            1 + q * self.a,
            q * self.b,
            q * self.c,
            (1 + m - q * self.a % m) % m, // 1 - p^(r-1)·a
        );
        debug_assert!(g.is_unimodular());
        Ok(g)
    }

    /// Trace pairing Tr(Y·X) mod p for Y = self: the bilinear form behind
    /// the additive characters ψ_Y. For Y=(a',b',c') and X=(a,b,c) it is
    /// 2a·a' + b·c' + c·b'.
    pub fn trace_pair(&self, x: &LieElt) -> u64 {
        assert_eq!(self.p, x.p);
        (2 * self.a * x.a + self.b * x.c + self.c * x.b) % self.p
    }
}

/// Recovers X from a kernel element 1 + p^(r-1)·X of SL₂(Z/p^r); errors with
/// [`Error::NotInKernel`] when the matrix is not ≡ 1 mod p^(r-1).
pub fn project_to_lie(g: &Mat2, p: u64) -> Result<LieElt, Error> {
    let m = g.modulus();
    let q = m / p; // p^(r-1), assuming m = p^r
    if m % p != 0 || q < p {
        return Err(Error::InvalidInput(format!(
            "modulus {m} is not p^r with r >= 2 for p = {p}"
        )));
    }
    let off_diag_ok = g.b % q == 0 && g.c % q == 0;
    let diag_ok = (g.a + m - 1) % q == 0 && (g.d + m - 1) % q == 0;
    if !off_diag_ok || !diag_ok {
        return Err(Error::NotInKernel);
    }
    let a = (g.a + m - 1) % m / q;
    let b = g.b / q % p;
    let c = g.c / q % p;
    let d = (g.d + m - 1) % m / q;
    if (a + d) % p != 0 {
        return Err(Error::NotInKernel);
    }
    Ok(LieElt::new(p, a % p, b, c))
}

/// The kernel of SL₂(Z/p^r) → SL₂(Z/p^(r-1)) as an explicit subgroup: all
/// p³ embedded Lie elements. Construction re-verifies closure.
pub fn kernel_subgroup(p: u64, r: u32) -> Result<Subgroup, Error> {
    let elements: Result<Vec<Mat2>, Error> = LieElt::all(p).map(|x| x.embed(r)).collect();
    Subgroup::from_elements(p.pow(r), elements?)
}

/// Adjoint action: g·X·g⁻¹, which only depends on g mod p. `g` may live at
/// any level p^r; it is reduced first.
pub fn conjugate(g: &Mat2, x: &LieElt) -> LieElt {
    let p = x.prime();
    let gp = if g.modulus() == p { *g } else { g.reduce(p) };
    debug_assert!(gp.is_unimodular());
    // X as a matrix over F_p: [[a, b], [c, p-a]].
    let xm = Mat2::new(p, x.a, x.b, x.c, (p - x.a % p) % p);
    let y = gp.mul(&xm).mul(&gp.inv());
    debug_assert_eq!((y.a + y.d) % p, 0, "conjugation must preserve trace 0");
    LieElt::new(p, y.a, y.b, y.c)
}

/// The SL₂(F_p)-orbit of x under the adjoint action, computed by closure
/// under the four elementary generators; returned sorted by canonical index.
pub fn orbit(x: &LieElt) -> Vec<LieElt> {
    let p = x.prime();
    let gens = [
        Mat2::new(p, 1, 1, 0, 1),
        Mat2::from_signed(p, 1, -1, 0, 1),
        Mat2::new(p, 1, 0, 1, 1),
        Mat2::from_signed(p, 1, 0, -1, 1),
    ];
    let mut seen = vec![false; (p * p * p) as usize];
    seen[x.index()] = true;
    let mut out = vec![*x];
    let mut frontier = 0;
    while frontier < out.len() {
        let y = out[frontier];
        frontier += 1;
        for g in &gens {
            let z = conjugate(g, &y);
            if !seen[z.index()] {
                seen[z.index()] = true;
                out.push(z);
            }
        }
    }
    out.sort_by_key(LieElt::index);
    out
}

/// |{g ∈ group : g·X·g⁻¹ = X}| by a full sweep. Deliberately *not* computed
/// from the orbit-stabilizer theorem, so that |orbit|·|centralizer| = |G|
/// stays an honest test rather than a tautology.
pub fn centralizer_order(x: &LieElt, group: &[Mat2]) -> u64 {
    group.iter().filter(|g| conjugate(g, x) == *x).count() as u64
}
