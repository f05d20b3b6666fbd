//! 2×2 matrices over Z/m and the groups SL₂(Z/p^r): full enumeration in a
//! canonical order, generated subgroups, double cosets, and the three
//! inertia subgroups attached to the elliptic points i, ρ = e^(2πi/3) and
//! the cusp ∞ of the modular curve.
//!
//! Enumeration is guarded: |SL₂(Z/p^r)| = p^(3r-2)·(p²-1) grows fast, and
//! anything above [`MAX_ENUMERATION`] is refused rather than attempted.

use crate::arith::{is_odd_prime, mod_inv};
use crate::error::Error;
use std::collections::HashSet;

/// Hard ceiling on the number of group elements any enumeration will
/// materialize. Checks that need a full sweep refuse larger groups.
pub const MAX_ENUMERATION: u64 = 10_000_000;

/// A 2×2 matrix over Z/m, entries reduced to 0..m-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    modulus: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Mat2 {
    pub fn new(modulus: u64, a: u64, b: u64, c: u64, d: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        Mat2 {
            modulus,
            a: a % modulus,
            b: b % modulus,
            c: c % modulus,
            d: d % modulus,
        }
    }

    /// Builds from possibly-negative entries, reducing into 0..m-1.
    pub fn from_signed(modulus: u64, a: i64, b: i64, c: i64, d: i64) -> Self {
        let m = modulus as i64;
        Mat2::new(
            modulus,
            a.rem_euclid(m) as u64,
            b.rem_euclid(m) as u64,
            c.rem_euclid(m) as u64,
            d.rem_euclid(m) as u64,
        )
    }

    pub fn identity(modulus: u64) -> Self {
        Mat2::new(modulus, 1, 0, 0, 1)
    }

    pub fn neg_identity(modulus: u64) -> Self {
        Mat2::from_signed(modulus, -1, 0, 0, -1)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn det(&self) -> u64 {
        let m = self.modulus as u128;
        let ad = (self.a as u128 * self.d as u128) % m;
        let bc = (self.b as u128 * self.c as u128) % m;
        ((ad + m - bc) % m) as u64
    }

    pub fn is_unimodular(&self) -> bool {
        self.det() == 1
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let m = self.modulus as u128;
        let e = |x: u128| (x % m) as u64;
        Mat2 {
            modulus: self.modulus,
            a: e(self.a as u128 * rhs.a as u128 + self.b as u128 * rhs.c as u128),
            b: e(self.a as u128 * rhs.b as u128 + self.b as u128 * rhs.d as u128),
            c: e(self.c as u128 * rhs.a as u128 + self.d as u128 * rhs.c as u128),
            d: e(self.c as u128 * rhs.b as u128 + self.d as u128 * rhs.d as u128),
        }
    }

    /// Inverse of a determinant-1 matrix: the adjugate [[d,-b],[-c,a]].
    pub fn inv(&self) -> Mat2 {
        assert!(self.is_unimodular(), "inverse needs det = 1");
        let m = self.modulus;
        Mat2::new(m, self.d, m - self.b % m, m - self.c % m, self.a)
            .reduce_entries()
    }

    fn reduce_entries(mut self) -> Self {
        self.a %= self.modulus;
        self.b %= self.modulus;
        self.c %= self.modulus;
        self.d %= self.modulus;
        self
    }

    /// Entry-wise reduction to a divisor modulus (e.g. from Z/p^r to Z/p).
    pub fn reduce(&self, new_modulus: u64) -> Mat2 {
        assert!(
            new_modulus > 1 && self.modulus % new_modulus == 0,
            "can only reduce to a divisor of the modulus"
        );
        Mat2::new(new_modulus, self.a, self.b, self.c, self.d)
    }

    /// Injective encoding for hash sets; needs m⁴ to fit in u64, which the
    /// enumeration guard ensures by a wide margin.
    pub fn encode(&self) -> u64 {
        let m = self.modulus;
        debug_assert!(m < (1u64 << 16), "encode needs modulus below 2^16");
        ((self.a * m + self.b) * m + self.c) * m + self.d
    }
}

/// |SL₂(Z/p^r)| = p^(3r-2) · (p² - 1), as a u128 so callers can guard
/// before deciding to enumerate.
pub fn sl2_order(p: u64, r: u32) -> u128 {
    assert!(is_odd_prime(p) && r >= 1);
    let p = p as u128;
    p.pow(3 * r - 2) * (p * p - 1)
}

/// Enumerates SL₂(Z/p^r) in lexicographic order of (a, b, c, d).
///
/// For each (a, b, c) the congruence a·d ≡ 1 + b·c (mod p^r) either has no
/// solution or exactly gcd(a, p^r) of them, spaced p^r/gcd apart; walking
/// them ascending keeps the whole listing lexicographic, which is the
/// canonical order every deterministic sweep in this crate relies on.
pub fn enumerate_sl2(p: u64, r: u32) -> Result<Vec<Mat2>, Error> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    if r < 1 {
        return Err(Error::InvalidInput("level must be at least 1".into()));
    }
    let order = sl2_order(p, r);
    if order > MAX_ENUMERATION as u128 {
        return Err(Error::TooLarge {
            size: order,
            limit: MAX_ENUMERATION,
        });
    }
    let m = p.pow(r);
    let mut out = Vec::with_capacity(order as usize);
    for a in 0..m {
        // gcd(a, p^r) is a power of p: find it directly.
        let mut g = 1u64;
        if a == 0 {
            g = m;
        } else {
            let mut x = a;
            while x % p == 0 {
                g *= p;
                x /= p;
            }
        }
        let step = m / g;
        for b in 0..m {
            for c in 0..m {
                let rhs = (1 + b as u128 * c as u128) % m as u128;
                let rhs = rhs as u64;
                if rhs % g != 0 {
                    continue;
                }
                // Solve (a/g)·d ≡ rhs/g (mod m/g), then lift all g solutions.
                let d0 = if step == 1 {
                    0
                } else {
                    let inv = mod_inv(a / g % step, step)
                        .expect("a/g is a unit mod m/g by construction");
                    (rhs / g) % step * inv % step
                };
                let mut d = d0;
                for _ in 0..g {
                    out.push(Mat2 {
                        modulus: m,
                        a,
                        b,
                        c,
                        d,
                    });
                    d += step;
                }
            }
        }
    }
    if out.len() as u128 != order {
        return Err(Error::Inconsistent(format!(
            "enumerated {} elements of SL2(Z/{m}), expected {order}",
            out.len()
        )));
    }
    Ok(out)
}

/// A finite set of matrices over one modulus, closed under product and
/// inverse, with O(1) membership tests.
#[derive(Debug, Clone)]
pub struct Subgroup {
    modulus: u64,
    elements: Vec<Mat2>,
    index: HashSet<u64>,
}

impl Subgroup {
    /// Closure of a generating set under multiplication (breadth-first).
    /// Finiteness makes closure under product imply closure under inverse.
    pub fn generate(modulus: u64, generators: &[Mat2]) -> Subgroup {
        let mut elements = vec![Mat2::identity(modulus)];
        let mut index: HashSet<u64> = elements.iter().map(Mat2::encode).collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let g = elements[frontier];
            frontier += 1;
            for gen in generators {
                assert_eq!(gen.modulus(), modulus, "generator modulus mismatch");
                let h = g.mul(gen);
                if index.insert(h.encode()) {
                    elements.push(h);
                }
            }
        }
        elements.sort_by_key(Mat2::encode);
        Subgroup {
            modulus,
            elements,
            index,
        }
    }

    /// Wraps an explicit element list, verifying it really is a subgroup:
    /// contains the identity and is closed under products. O(n²) products,
    /// so callers keep n modest (the congruence kernel has p³ elements).
    pub fn from_elements(modulus: u64, elements: Vec<Mat2>) -> Result<Subgroup, Error> {
        let index: HashSet<u64> = elements.iter().map(Mat2::encode).collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidInput("duplicate subgroup elements".into()));
        }
        if !index.contains(&Mat2::identity(modulus).encode()) {
            return Err(Error::InvalidInput("subgroup must contain identity".into()));
        }
        for g in &elements {
            for h in &elements {
                if !index.contains(&g.mul(h).encode()) {
                    return Err(Error::InvalidInput(format!(
                        "set is not closed under product at {g:?} * {h:?}"
                    )));
                }
            }
        }
        let mut elements = elements;
        elements.sort_by_key(Mat2::encode);
        Ok(Subgroup {
            modulus,
            elements,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, g: &Mat2) -> bool {
        debug_assert_eq!(g.modulus(), self.modulus);
        self.index.contains(&g.encode())
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }
}

/// The ramification points of the modular curve that matter here: the two
/// elliptic points and the cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamPoint {
    /// The elliptic point i, with stabilizer of order 4 generated by the
    /// rotation [[0,1],[-1,0]].
    EllipticI,
    /// The elliptic point ρ = e^(2πi/3), with stabilizer of order 6
    /// generated by [[0,1],[-1,-1]] and -1.
    EllipticRho,
    /// The cusp ∞, with stabilizer ±(upper unipotents), order 2·p^r.
    Cusp,
}

impl RamPoint {
    pub const ALL: [RamPoint; 3] = [
        RamPoint::EllipticI,
        RamPoint::EllipticRho,
        RamPoint::Cusp,
    ];

    /// Report/CLI identifier for the point.
    pub fn label(&self) -> &'static str {
        match self {
            RamPoint::EllipticI => "i",
            RamPoint::EllipticRho => "rho",
            RamPoint::Cusp => "cusp",
        }
    }
}

/// The inertia subgroup of SL₂(Z/p^r) at a ramification point: the finite
/// stabilizer lifted to level p^r. Orders are 4, 6 and 2·p^r respectively.
pub fn inertia_subgroup(p: u64, r: u32, point: RamPoint) -> Subgroup {
    let m = p.pow(r);
    match point {
        RamPoint::EllipticI => {
            Subgroup::generate(m, &[Mat2::from_signed(m, 0, 1, -1, 0)])
        }
        RamPoint::EllipticRho => Subgroup::generate(
            m,
            &[Mat2::from_signed(m, 0, 1, -1, -1), Mat2::neg_identity(m)],
        ),
        RamPoint::Cusp => Subgroup::generate(
            m,
            &[Mat2::new(m, 1, 1, 0, 1), Mat2::neg_identity(m)],
        ),
    }
}

/// Representatives of the double cosets H\G/K, chosen as the first element
/// of each coset in the given (lexicographic) order of `group`. The cosets
/// partition G, and the sweep verifies that as it goes.
pub fn double_coset_reps(h: &Subgroup, k: &Subgroup, group: &[Mat2]) -> Vec<Mat2> {
    let mut covered: HashSet<u64> = HashSet::with_capacity(group.len());
    let mut reps = Vec::new();
    for g in group {
        if covered.contains(&g.encode()) {
            continue;
        }
        reps.push(*g);
        for x in h.elements() {
            let xg = x.mul(g);
            for y in k.elements() {
                covered.insert(xg.mul(y).encode());
            }
        }
    }
    assert_eq!(covered.len(), group.len(), "double cosets must partition G");
    reps
}
