//! Exact character tables on sl₂(F_p).
//!
//! A table assigns an element of Q(ζ_p) to every X ∈ sl₂(F_p), stored in
//! canonical index order. The characters that matter here:
//!
//! * `ψ_Y(X) = ζ^Tr(Y·X)` — the additive characters, indexed by Y;
//! * `χ₊ = Σ_{Y ∈ orbit(u)} ψ_Y`, `χ₋ = Σ_{Y ∈ orbit(v)} ψ_Y` — the two
//!   conjugation-invariant characters carried by the regular nilpotent
//!   orbits, of degree (p²-1)/2;
//! * `N₊ = ½ Σ_{s ∈ T} ψ_{u^s}`, `N₋ = ½ Σ_{s ∈ T} ψ_{v^s}` — their
//!   torus-normalized companions, of degree (p-1)/2, which satisfy the
//!   Gauss collapse identity `(N₊-N₋)(X) = (b(X)/p)·sqrt_star(p)` where
//!   b(X) is the upper-right coordinate;
//! * induced characters from the inertia subgroups, whose Mackey
//!   double-coset decompositions are verified element by element.
//!
//! Inner products use ⟨α,β⟩ = (1/p³)·Σ_X α(X)·conj(β(X)).

use crate::arith::{check_nonresidue, fixed_nonresidue, legendre, mod_inv};
use crate::cyclo::{sqrt_star, CycloNum};
use crate::error::Error;
use crate::lie::{conjugate, kernel_subgroup, project_to_lie, LieElt};
use crate::sl2::{
    double_coset_reps, enumerate_sl2, inertia_subgroup, Mat2, RamPoint, Subgroup,
};
use crate::{rational, Rational};
use num_traits::Zero;

/// Which regular nilpotent orbit a character is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSign {
    /// The orbit of u = [[0,0],[1,0]].
    Plus,
    /// The orbit of v = [[0,0],[⧄,0]], ⧄ a nonresidue.
    Minus,
}

/// A class-function table on sl₂(F_p): one exact cyclotomic value per
/// element, in canonical index order.
#[derive(Clone, PartialEq, Eq)]
pub struct CharTable {
    prime: u64,
    label: String,
    values: Vec<CycloNum>,
}

impl std::fmt::Debug for CharTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CharTable({}, p={}, degree={})",
            self.label,
            self.prime,
            self.degree()
        )
    }
}

impl CharTable {
    pub fn from_fn(
        p: u64,
        label: impl Into<String>,
        mut f: impl FnMut(&LieElt) -> CycloNum,
    ) -> Self {
        let values = LieElt::all(p).map(|x| f(&x)).collect();
        CharTable {
            prime: p,
            label: label.into(),
            values,
        }
    }

    /// The trivial character: constantly 1.
    pub fn trivial(p: u64) -> Self {
        CharTable::from_fn(p, "trivial", |_| CycloNum::one(p))
    }

    /// The regular character of (sl₂, +): p³ at 0, zero elsewhere.
    pub fn regular(p: u64) -> Self {
        CharTable::from_fn(p, "regular", |x| {
            if x.is_zero() {
                CycloNum::from_integer(p, (p * p * p) as i64)
            } else {
                CycloNum::zero(p)
            }
        })
    }

    /// The additive character ψ_Y(X) = ζ^Tr(Y·X).
    pub fn psi(y: &LieElt) -> Self {
        let p = y.prime();
        CharTable::from_fn(p, format!("psi[{},{},{}]", y.a, y.b, y.c), |x| {
            CycloNum::zeta_pow(p, y.trace_pair(x) as i64).expect("p validated by LieElt")
        })
    }

    /// The invariant character χ± attached to a regular nilpotent orbit:
    /// the sum of ψ_Y over the orbit of u (Plus) or v (Minus).
    pub fn chi_invariant(p: u64, sign: OrbitSign, nonresidue: u64) -> Result<Self, Error> {
        let nr = check_nonresidue(nonresidue, p)?;
        let (seed, label) = match sign {
            OrbitSign::Plus => (LieElt::nilpotent_u(p), "chi_plus"),
            OrbitSign::Minus => (LieElt::nilpotent_v(p, nr), "chi_minus"),
        };
        let orbit = crate::lie::orbit(&seed);
        let mut counts = vec![0i64; p as usize];
        Ok(CharTable::from_fn(p, label, |x| {
            counts.fill(0);
            for y in &orbit {
                counts[y.trace_pair(x) as usize] += 1;
            }
            CycloNum::from_exponent_counts(p, &counts)
        }))
    }

    /// The torus conjugates of the orbit seed: u^s (or v^s) for s = diag(t, t⁻¹),
    /// t ∈ F_p^×. These are the p-1 summands of N±.
    fn torus_conjugates(p: u64, sign: OrbitSign, nr: u64) -> Vec<LieElt> {
        let seed = match sign {
            OrbitSign::Plus => LieElt::nilpotent_u(p),
            OrbitSign::Minus => LieElt::nilpotent_v(p, nr),
        };
        (1..p)
            .map(|t| {
                let s = Mat2::new(p, t, 0, 0, mod_inv(t, p).expect("t is a unit"));
                conjugate(&s, &seed)
            })
            .collect()
    }

    /// The torus-normalized character N± = ½ Σ_{s ∈ T} ψ_{seed^s}, of degree
    /// (p-1)/2.
    pub fn torus_normalized(p: u64, sign: OrbitSign, nonresidue: u64) -> Result<Self, Error> {
        let nr = check_nonresidue(nonresidue, p)?;
        let ys = Self::torus_conjugates(p, sign, nr);
        let half = rational(1, 2);
        let label = match sign {
            OrbitSign::Plus => "N_plus",
            OrbitSign::Minus => "N_minus",
        };
        let mut counts = vec![0i64; p as usize];
        Ok(CharTable::from_fn(p, label, |x| {
            counts.fill(0);
            for y in &ys {
                counts[y.trace_pair(x) as usize] += 1;
            }
            CycloNum::from_exponent_counts(p, &counts).scale(&half)
        }))
    }

    /// Ind from the s-conjugated unipotent line up to (sl₂, +): value p² on
    /// the p elements s·[[0,m],[0,0]]·s⁻¹, zero elsewhere. These are the
    /// cusp contributions to the sum-space character.
    pub fn reg_borel(s: &Mat2, p: u64) -> Self {
        let mut on_line = vec![false; (p * p * p) as usize];
        for m in 0..p {
            on_line[conjugate(s, &LieElt::upper(p, m)).index()] = true;
        }
        let p2 = (p * p) as i64;
        CharTable::from_fn(p, format!("reg_borel[{},{},{},{}]", s.a, s.b, s.c, s.d), |x| {
            if on_line[x.index()] {
                CycloNum::from_integer(p, p2)
            } else {
                CycloNum::zero(p)
            }
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The degree: the value at X = 0, which sits at index 0.
    pub fn degree(&self) -> &CycloNum {
        &self.values[0]
    }

    pub fn value(&self, x: &LieElt) -> &CycloNum {
        &self.values[x.index()]
    }

    pub fn value_at(&self, index: usize) -> &CycloNum {
        &self.values[index]
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
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

    pub fn add(&self, rhs: &Self, label: impl Into<String>) -> Result<Self, Error> {
        self.same_prime(rhs)?;
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CharTable {
            prime: self.prime,
            label: label.into(),
            values,
        })
    }

    pub fn sub(&self, rhs: &Self, label: impl Into<String>) -> Result<Self, Error> {
        self.same_prime(rhs)?;
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CharTable {
            prime: self.prime,
            label: label.into(),
            values,
        })
    }

    pub fn scale(&self, q: &Rational, label: impl Into<String>) -> Self {
        CharTable {
            prime: self.prime,
            label: label.into(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    /// ⟨self, rhs⟩ = (1/p³)·Σ_X self(X)·conj(rhs(X)), exactly.
    pub fn inner_product(&self, rhs: &Self) -> Result<CycloNum, Error> {
        self.same_prime(rhs)?;
        let mut acc = CycloNum::zero(self.prime);
        for (a, b) in self.values.iter().zip(&rhs.values) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += &(a * &b.conj());
        }
        let p3 = (self.prime * self.prime * self.prime) as i64;
        Ok(acc.scale(&rational(1, p3)))
    }

    /// True when the table is constant on the adjoint orbits of `g`:
    /// value(g·X·g⁻¹) = value(X) for every X.
    pub fn is_invariant_under(&self, g: &Mat2) -> bool {
        LieElt::all(self.prime).all(|x| self.value(&conjugate(g, &x)) == self.value(&x))
    }
}

/// Outcome of the streaming Gauss-collapse sweep: checks
/// (N₊-N₋)(X) = (b(X)/p)·sqrt_star(p) for every X without materializing
/// either table.
#[derive(Debug, Clone)]
pub struct CollapseOutcome {
    /// Number of Lie-algebra elements checked (always p³ on success).
    pub checked: u64,
    /// First failing element, with both sides rendered, if any.
    pub counterexample: Option<(usize, String, String)>,
}

impl CollapseOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verifies the collapse identity for all p³ elements, streaming. O(p⁴)
/// small-integer work plus one O(p) exact comparison per element.
pub fn check_gauss_collapse(p: u64, nonresidue: u64) -> Result<CollapseOutcome, Error> {
    let nr = check_nonresidue(nonresidue, p)?;
    let s = sqrt_star(p)?;
    let neg_s = -&s;
    let zero = CycloNum::zero(p);
    let half = rational(1, 2);
    let us = CharTable::torus_conjugates(p, OrbitSign::Plus, nr);
    let vs = CharTable::torus_conjugates(p, OrbitSign::Minus, nr);
    let mut counts = vec![0i64; p as usize];
    let mut checked = 0u64;
    for x in LieElt::all(p) {
        counts.fill(0);
        for y in &us {
            counts[y.trace_pair(&x) as usize] += 1;
        }
        for y in &vs {
            counts[y.trace_pair(&x) as usize] -= 1;
        }
        let lhs = CycloNum::from_exponent_counts(p, &counts).scale(&half);
        let rhs = match legendre(x.b, p) {
            1 => &s,
            -1 => &neg_s,
            _ => &zero,
        };
        if &lhs != rhs {
            return Ok(CollapseOutcome {
                checked,
                counterexample: Some((x.index(), lhs.to_string(), rhs.to_string())),
            });
        }
        checked += 1;
    }
    Ok(CollapseOutcome {
        checked,
        counterexample: None,
    })
}

/// Outcome of a Mackey double-coset verification at one ramification point.
#[derive(Debug, Clone)]
pub struct MackeyOutcome {
    pub point: RamPoint,
    /// Number of (kernel, inertia) double cosets found.
    pub double_cosets: usize,
    /// Route (a) — the induced-character formula summed over the whole
    /// group — agrees with route (b), the double-coset sum, at every X.
    pub routes_agree: bool,
    /// The per-coset intersections have the predicted shape: trivial at the
    /// elliptic points, the conjugated unipotent line at the cusp.
    pub shape_ok: bool,
    /// Human-readable summary for reports.
    pub detail: String,
}

impl MackeyOutcome {
    pub fn passed(&self) -> bool {
        self.routes_agree && self.shape_ok
    }
}

/// The intersection (s·K·s⁻¹) ∩ sl₂, as Lie elements sorted by index: the
/// members of K whose s-conjugate lands in the congruence kernel.
pub fn conjugate_intersection(s: &Mat2, k: &Subgroup, p: u64) -> Vec<LieElt> {
    let s_inv = s.inv();
    let mut out: Vec<LieElt> = k
        .elements()
        .iter()
        .filter_map(|kk| project_to_lie(&s.mul(kk).mul(&s_inv), p).ok())
        .collect();
    out.sort_by_key(LieElt::index);
    out.dedup();
    out
}

/// Verifies the Mackey decomposition of Res_{sl₂} Ind_{K}^{G} 1 at one
/// ramification point, two ways:
///
/// (a) the induced-character formula, summed honestly over every g ∈ G:
///     value(X) = (1/|K|)·#{g : g⁻¹·embed(X)·g ∈ K};
/// (b) the double-coset sum Σ_s Ind_{(s·K·s⁻¹) ∩ sl₂}^{sl₂} 1.
///
/// Both are rational-valued; the outcome records whether they agree
/// everywhere and whether each intersection has the predicted shape.
pub fn mackey_check(p: u64, r: u32, point: RamPoint) -> Result<MackeyOutcome, Error> {
    let group = enumerate_sl2(p, r)?;
    let k = inertia_subgroup(p, r, point);
    let p3 = (p * p * p) as usize;

    // Membership of K ∩ kernel as a Lie-index bitmap.
    let mut in_k = vec![false; p3];
    for kk in k.elements() {
        if let Ok(y) = project_to_lie(kk, p) {
            in_k[y.index()] = true;
        }
    }

    // Route (a). g⁻¹·embed(X)·g = embed((g⁻¹ mod p)·X·(g mod p)), so the
    // sweep works mod p with the matrix form of every X precomputed.
    let xmats: Vec<Mat2> = LieElt::all(p)
        .map(|x| Mat2::new(p, x.a, x.b, x.c, (p - x.a % p) % p))
        .collect();
    let mut counts = vec![0u64; p3];
    for g in &group {
        let h = g.inv().reduce(p);
        let h_inv = h.inv();
        for (idx, xm) in xmats.iter().enumerate() {
            let y = h.mul(xm).mul(&h_inv);
            let y_idx = ((y.a * p + y.b) * p + y.c) as usize;
            if in_k[y_idx] {
                counts[idx] += 1;
            }
        }
    }
    let k_order = k.order() as i64;
    let direct: Vec<Rational> = counts
        .iter()
        .map(|&n| rational(n as i64, k_order))
        .collect();

    // Route (b).
    let kernel = kernel_subgroup(p, r)?;
    let reps = double_coset_reps(&kernel, &k, &group);
    let mut mackey = vec![Rational::zero(); p3];
    let mut shape_ok = true;
    for s in &reps {
        let inter = conjugate_intersection(s, &k, p);
        let weight = rational((p * p * p) as i64, inter.len() as i64);
        for y in &inter {
            mackey[y.index()] += &weight;
        }
        match point {
            RamPoint::EllipticI | RamPoint::EllipticRho => {
                shape_ok &= inter.len() == 1 && inter[0].is_zero();
            }
            RamPoint::Cusp => {
                let mut line: Vec<LieElt> =
                    (0..p).map(|m| conjugate(s, &LieElt::upper(p, m))).collect();
                line.sort_by_key(LieElt::index);
                shape_ok &= inter == line;
            }
        }
    }

    let routes_agree = direct == mackey;
    let detail = format!(
        "{} double cosets at point {}; {}",
        reps.len(),
        point.label(),
        match point {
            RamPoint::Cusp => "each intersection is a conjugated unipotent line",
            _ => "all intersections trivial",
        }
    );
    Ok(MackeyOutcome {
        point,
        double_cosets: reps.len(),
        routes_agree,
        shape_ok,
        detail,
    })
}

/// Convenience: the default-nonresidue variants.
pub fn chi_plus(p: u64) -> Result<CharTable, Error> {
    CharTable::chi_invariant(p, OrbitSign::Plus, fixed_nonresidue(p))
}

pub fn chi_minus(p: u64) -> Result<CharTable, Error> {
    CharTable::chi_invariant(p, OrbitSign::Minus, fixed_nonresidue(p))
}
