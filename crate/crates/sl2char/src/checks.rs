//! Named verification checks behind a common trait.
//!
//! Every verdict this crate can produce is packaged as a [`Check`]: a named
//! strategy that takes the run parameters and returns a pass/fail/skipped
//! outcome with both sides of the comparison rendered as strings. Checks are
//! registered by name in a [`CheckRegistry`]; the CLI selects and runs them
//! at runtime and the report serializer works from the outcomes alone, so
//! adding a check means adding one struct and one registration line.
//!
//! Checks that need a full group enumeration or a p³-entry character table
//! guard themselves: below the default work budget they run, above it they
//! return `skipped` with the reason, and `deep` raises the budgets to the
//! hard safety guards.

use crate::arith::{check_nonresidue, fixed_nonresidue, is_odd_prime};
use crate::chartab::{check_gauss_collapse, conjugate_intersection, mackey_check};
use crate::classnum::{class_number_dirichlet, class_number_forms};
use crate::cusp::{chi_s, mult_sum_closed_form, psi_multiplicity, MAX_TABLE_PRIME};
use crate::error::Error;
use crate::lie::{centralizer_order, orbit, LieElt};
use crate::sl2::{enumerate_sl2, inertia_subgroup, sl2_order, RamPoint, MAX_ENUMERATION};
use crate::verify::{
    expected_n_diff, gross_decomposition, group_level_difference, n_diff_formula,
    solve_multiplicities, theorem_case, TheoremCase,
};
use num_bigint::BigInt;
use num_traits::Zero;

/// Default ceiling on the route-(a) Mackey work p³·|G|.
pub const MACKEY_DEFAULT_BUDGET: u128 = 2_000_000;
/// Default ceiling on |G| for orbit/centralizer/inertia sweeps.
pub const ENUM_DEFAULT_BUDGET: u128 = 1_000_000;
/// Default ceiling on p for table-level checks; `deep` raises it to the
/// hard cap [`MAX_TABLE_PRIME`].
pub const TABLE_DEFAULT_PRIME: u64 = 13;

/// Parameters of one verification run.
#[derive(Debug, Clone)]
pub struct VerifyParams {
    pub p: u64,
    pub r: u32,
    /// Explicit quadratic nonresidue, or None for the smallest one. Every
    /// verdict must be invariant under this choice.
    pub nonresidue: Option<u64>,
    /// Raise the work budgets to the hard guards.
    pub deep: bool,
}

impl VerifyParams {
    pub fn new(p: u64, r: u32) -> Self {
        VerifyParams {
            p,
            r,
            nonresidue: None,
            deep: false,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !is_odd_prime(self.p) {
            return Err(Error::InvalidInput(format!(
                "{} is not an odd prime",
                self.p
            )));
        }
        if self.p >= 10_000 {
            return Err(Error::InvalidInput(format!(
                "p = {} is outside the supported range (p < 10000)",
                self.p
            )));
        }
        if self.r < 2 || self.r > 32 {
            return Err(Error::InvalidInput(format!(
                "level r = {} must be between 2 and 32",
                self.r
            )));
        }
        if let Some(nr) = self.nonresidue {
            check_nonresidue(nr, self.p)?;
        }
        Ok(())
    }

    /// The nonresidue in force: the explicit one, or the smallest.
    pub fn nonresidue(&self) -> u64 {
        self.nonresidue.unwrap_or_else(|| fixed_nonresidue(self.p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One check's verdict: the two sides of the comparison as rendered strings
/// (or the skip reason and "-").
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
}

impl CheckOutcome {
    pub fn pass(name: &'static str, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Pass,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn fail(name: &'static str, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Fail,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Skipped,
            lhs: reason.into(),
            rhs: "-".into(),
        }
    }

    /// Pass/fail from an already-rendered comparison.
    fn compare(name: &'static str, lhs: String, rhs: String, equal: bool) -> Self {
        if equal {
            CheckOutcome::pass(name, lhs, rhs)
        } else {
            CheckOutcome::fail(name, lhs, rhs)
        }
    }
}

/// A named verification strategy. Implementations must be deterministic:
/// the same parameters always produce byte-identical outcomes.
pub trait Check {
    fn name(&self) -> &'static str;
    fn run(&self, params: &VerifyParams) -> CheckOutcome;
}

/// The registry: checks keyed by name, run in registration order.
pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    /// The standard battery, in report order.
    pub fn standard() -> Self {
        let mut reg = CheckRegistry::empty();
        reg.register(Box::new(ClassNumberMethods));
        reg.register(Box::new(MultiplicityDifference));
        reg.register(Box::new(GrossIdentity));
        reg.register(Box::new(MultiplicitySolve));
        reg.register(Box::new(MultiplicityParity));
        reg.register(Box::new(GroupLevelDifference));
        reg.register(Box::new(ClassNumberParity));
        reg.register(Box::new(GaussCollapse));
        reg.register(Box::new(SumSpaceMultiplicity));
        reg.register(Box::new(MackeyPoint(RamPoint::EllipticI)));
        reg.register(Box::new(MackeyPoint(RamPoint::EllipticRho)));
        reg.register(Box::new(MackeyPoint(RamPoint::Cusp)));
        reg.register(Box::new(NilpotentOrbits));
        reg.register(Box::new(InertiaIntersections));
        reg
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        debug_assert!(
            self.get(check.name()).is_none(),
            "duplicate check name {}",
            check.name()
        );
        self.checks.push(check);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn run_all(&self, params: &VerifyParams) -> Vec<CheckOutcome> {
        self.checks.iter().map(|c| c.run(params)).collect()
    }
}

/// Folds an error into a failed outcome: a check that cannot produce its
/// number has failed, with the error text on the left-hand side.
fn run_or_fail(
    name: &'static str,
    body: impl FnOnce() -> Result<CheckOutcome, Error>,
) -> CheckOutcome {
    body().unwrap_or_else(|e| CheckOutcome::fail(name, format!("error: {e}"), "-"))
}

fn needs_three_mod_four(name: &'static str, p: u64) -> Option<CheckOutcome> {
    match theorem_case(p) {
        Ok(TheoremCase::ThreeMod4) => None,
        _ => Some(CheckOutcome::skipped(
            name,
            format!("stated for p ≡ 3 (mod 4), p > 3; p = {p}"),
        )),
    }
}

/// Budget gate for checks that enumerate SL₂(Z/p^r). Returns the skip
/// outcome when the group is too large for the mode.
fn enumeration_gate(
    name: &'static str,
    p: u64,
    r: u32,
    deep: bool,
    work_per_element: u128,
    default_budget: u128,
) -> Option<CheckOutcome> {
    let order = sl2_order(p, r);
    let work = order.saturating_mul(work_per_element);
    if order > MAX_ENUMERATION as u128 {
        return Some(CheckOutcome::skipped(
            name,
            format!("|SL2(Z/{p}^{r})| = {order} exceeds the hard guard {MAX_ENUMERATION}"),
        ));
    }
    if !deep && work > default_budget {
        return Some(CheckOutcome::skipped(
            name,
            format!("work estimate {work} exceeds the default budget {default_budget}; rerun with --deep"),
        ));
    }
    None
}

/// Budget gate for checks that materialize p³-entry tables.
fn table_gate(name: &'static str, p: u64, deep: bool) -> Option<CheckOutcome> {
    if p > MAX_TABLE_PRIME {
        return Some(CheckOutcome::skipped(
            name,
            format!("table checks are capped at p ≤ {MAX_TABLE_PRIME}; p = {p}"),
        ));
    }
    if !deep && p > TABLE_DEFAULT_PRIME {
        return Some(CheckOutcome::skipped(
            name,
            format!("table checks default to p ≤ {TABLE_DEFAULT_PRIME}; rerun with --deep"),
        ));
    }
    None
}

/// h(-p) by reduced forms vs. the Dirichlet formula.
struct ClassNumberMethods;

impl Check for ClassNumberMethods {
    fn name(&self) -> &'static str {
        "class_number_methods"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = needs_three_mod_four(name, params.p) {
            return skip;
        }
        run_or_fail(name, || {
            let forms = class_number_forms(params.p)?;
            let dirichlet = class_number_dirichlet(params.p)?;
            Ok(CheckOutcome::compare(
                name,
                format!("forms: h = {forms}"),
                format!("dirichlet: h = {dirichlet}"),
                forms == dirichlet,
            ))
        })
    }
}

/// The central identity: the Gauss-sum evaluation of n₊ - n₋ against the
/// class-number closed form.
struct MultiplicityDifference;

impl Check for MultiplicityDifference {
    fn name(&self) -> &'static str {
        "multiplicity_difference"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        run_or_fail(name, || {
            let computed = n_diff_formula(params.p, params.r, params.nonresidue())?;
            let expected = expected_n_diff(params.p, params.r)?;
            Ok(CheckOutcome::compare(
                name,
                format!("gauss-sum formula: {computed}"),
                format!("closed form: {expected}"),
                computed == expected,
            ))
        })
    }
}

/// Σ_{a≠0} 1/(1-ζ^(a²)) = (p-1)/2 + h(-p)·sqrt_star(p).
struct GrossIdentity;

impl Check for GrossIdentity {
    fn name(&self) -> &'static str {
        "gross_identity"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = needs_three_mod_four(name, params.p) {
            return skip;
        }
        run_or_fail(name, || {
            let (a, b) = gross_decomposition(params.p, params.nonresidue())?;
            let h = class_number_forms(params.p)?;
            let expected_a = crate::rational((params.p as i64 - 1) / 2, 1);
            let expected_b = crate::integer(h as i64);
            Ok(CheckOutcome::compare(
                name,
                format!("decomposition: ({a}, {b})"),
                format!("((p-1)/2, h) = ({expected_a}, {expected_b})"),
                a == expected_a && b == expected_b,
            ))
        })
    }
}

/// n₊ and n₋ individually: nonnegative integers recovering sum and
/// difference.
struct MultiplicitySolve;

impl Check for MultiplicitySolve {
    fn name(&self) -> &'static str {
        "multiplicity_solve"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        run_or_fail(name, || {
            let (np, nm) = solve_multiplicities(params.p, params.r, params.nonresidue())?;
            let sum = mult_sum_closed_form(params.p, params.r)?;
            let diff = n_diff_formula(params.p, params.r, params.nonresidue())?;
            let ok = (&np + &nm == sum) && (&np - &nm == diff) && np >= BigInt::zero() && nm >= BigInt::zero();
            Ok(CheckOutcome::compare(
                name,
                format!("n+ = {np}, n- = {nm}"),
                format!("sum {sum}, difference {diff}, both nonnegative"),
                ok,
            ))
        })
    }
}

/// n₊ + n₋ is odd exactly when p ≡ 3 (mod 4).
struct MultiplicityParity;

impl Check for MultiplicityParity {
    fn name(&self) -> &'static str {
        "multiplicity_parity"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        run_or_fail(name, || {
            let sum = mult_sum_closed_form(params.p, params.r)?;
            let is_odd = &sum % BigInt::from(2) != BigInt::zero();
            let should_be_odd = params.p % 4 == 3;
            Ok(CheckOutcome::compare(
                name,
                format!(
                    "n+ + n- = {sum} ({})",
                    if is_odd { "odd" } else { "even" }
                ),
                format!(
                    "p ≡ {} (mod 4) → {}",
                    params.p % 4,
                    if should_be_odd { "odd" } else { "even" }
                ),
                is_odd == should_be_odd,
            ))
        })
    }
}

/// (n₊ - n₋)/p^(r-2) = p^(r-1)·h(-p).
struct GroupLevelDifference;

impl Check for GroupLevelDifference {
    fn name(&self) -> &'static str {
        "group_level_difference"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = needs_three_mod_four(name, params.p) {
            return skip;
        }
        run_or_fail(name, || {
            let (computed, expected) =
                group_level_difference(params.p, params.r, params.nonresidue())?;
            Ok(CheckOutcome::compare(
                name,
                format!("(n+ - n-)/p^(r-2) = {computed}"),
                format!("p^(r-1)·h = {expected}"),
                computed == expected,
            ))
        })
    }
}

/// h(-p) is odd for prime discriminant (so n₊ ≠ n₋ is an honest obstruction).
struct ClassNumberParity;

impl Check for ClassNumberParity {
    fn name(&self) -> &'static str {
        "class_number_parity"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if params.p % 4 != 3 {
            return CheckOutcome::skipped(
                name,
                format!("stated for p ≡ 3 (mod 4); p = {}", params.p),
            );
        }
        run_or_fail(name, || {
            let h = class_number_forms(params.p)?;
            Ok(CheckOutcome::compare(
                name,
                format!("h = {h}"),
                "odd".into(),
                h % 2 == 1,
            ))
        })
    }
}

/// (N₊ - N₋)(X) = (b(X)/p)·sqrt_star(p), streamed over all p³ elements.
struct GaussCollapse;

impl Check for GaussCollapse {
    fn name(&self) -> &'static str {
        "gauss_collapse"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = table_gate(name, params.p, params.deep) {
            return skip;
        }
        run_or_fail(name, || {
            let out = check_gauss_collapse(params.p, params.nonresidue())?;
            Ok(match out.counterexample {
                None => CheckOutcome::pass(
                    name,
                    format!("{} elements, 0 counterexamples", out.checked),
                    "0 counterexamples",
                ),
                Some((idx, lhs, rhs)) => CheckOutcome::fail(
                    name,
                    format!("index {idx}: (N+ - N-) = {lhs}, expected {rhs}"),
                    "0 counterexamples",
                ),
            })
        })
    }
}

/// ⟨χ_S, ψ_u⟩ = ⟨χ_S, ψ_v⟩ = the closed form for n₊ + n₋, with the degree
/// of χ_S checked against the dimension formula inside the construction.
struct SumSpaceMultiplicity;

impl Check for SumSpaceMultiplicity {
    fn name(&self) -> &'static str {
        "sum_space_multiplicity"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = table_gate(name, params.p, params.deep) {
            return skip;
        }
        run_or_fail(name, || {
            let space = chi_s(params.p, params.r)?;
            let mu = psi_multiplicity(&space, &LieElt::nilpotent_u(params.p))?;
            let mv = psi_multiplicity(
                &space,
                &LieElt::nilpotent_v(params.p, params.nonresidue()),
            )?;
            let closed = mult_sum_closed_form(params.p, params.r)?;
            Ok(CheckOutcome::compare(
                name,
                format!("⟨chi_S, psi_u⟩ = {mu}, ⟨chi_S, psi_v⟩ = {mv}"),
                format!("closed form: {closed}"),
                mu == closed && mv == closed,
            ))
        })
    }
}

/// Mackey double-coset decomposition at one ramification point: the honest
/// whole-group induced-character sweep against the double-coset sum.
struct MackeyPoint(RamPoint);

impl Check for MackeyPoint {
    fn name(&self) -> &'static str {
        match self.0 {
            RamPoint::EllipticI => "mackey_elliptic_i",
            RamPoint::EllipticRho => "mackey_elliptic_rho",
            RamPoint::Cusp => "mackey_cusp",
        }
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        let p3 = (params.p as u128).pow(3);
        if let Some(skip) = enumeration_gate(
            name,
            params.p,
            params.r,
            params.deep,
            p3,
            MACKEY_DEFAULT_BUDGET,
        ) {
            return skip;
        }
        run_or_fail(name, || {
            let out = mackey_check(params.p, params.r, self.0)?;
            Ok(CheckOutcome::compare(
                name,
                format!(
                    "cosets={} routes_agree={} shape_ok={}",
                    out.double_cosets, out.routes_agree, out.shape_ok
                ),
                "routes_agree=true shape_ok=true".into(),
                out.passed(),
            ))
        })
    }
}

/// Orbit sizes, centralizer orders (by honest sweep) and exhaustion of the
/// nonzero nilpotent cone by the two regular orbits.
struct NilpotentOrbits;

impl Check for NilpotentOrbits {
    fn name(&self) -> &'static str {
        "nilpotent_orbits"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = enumeration_gate(
            name,
            params.p,
            params.r,
            params.deep,
            1,
            ENUM_DEFAULT_BUDGET,
        ) {
            return skip;
        }
        run_or_fail(name, || {
            let (p, r) = (params.p, params.r);
            let group = enumerate_sl2(p, r)?;
            let u = LieElt::nilpotent_u(p);
            let v = LieElt::nilpotent_v(p, params.nonresidue());
            let ou = orbit(&u);
            let ov = orbit(&v);
            let zu = centralizer_order(&u, &group);
            let zv = centralizer_order(&v, &group);
            let mut joint: Vec<usize> = ou.iter().chain(&ov).map(LieElt::index).collect();
            joint.sort_unstable();
            joint.dedup();
            let nilpotents = LieElt::all(p)
                .filter(|x| x.is_nilpotent() && !x.is_zero())
                .count();
            let cover = joint.len() == nilpotents && joint.len() as u64 == p * p - 1;
            let expected_orbit = (p * p - 1) / 2;
            let expected_z = 2 * p * p.pow(3 * (r - 1));
            let ok = ou.len() as u64 == expected_orbit
                && ov.len() as u64 == expected_orbit
                && zu == expected_z
                && zv == expected_z
                && cover;
            Ok(CheckOutcome::compare(
                name,
                format!(
                    "|O+|={} |O-|={} |Z+|={zu} |Z-|={zv} cover={cover}",
                    ou.len(),
                    ov.len()
                ),
                format!("|O±|={expected_orbit} |Z±|={expected_z} cover=true"),
                ok,
            ))
        })
    }
}

/// For sampled s ∈ G: s·K·s⁻¹ meets sl₂ trivially at both elliptic points
/// and in the conjugated unipotent line (p elements) at the cusp.
struct InertiaIntersections;

impl Check for InertiaIntersections {
    fn name(&self) -> &'static str {
        "inertia_intersections"
    }

    fn run(&self, params: &VerifyParams) -> CheckOutcome {
        let name = self.name();
        if let Some(skip) = enumeration_gate(
            name,
            params.p,
            params.r,
            params.deep,
            1,
            ENUM_DEFAULT_BUDGET,
        ) {
            return skip;
        }
        run_or_fail(name, || {
            let (p, r) = (params.p, params.r);
            let group = enumerate_sl2(p, r)?;
            let ki = inertia_subgroup(p, r, RamPoint::EllipticI);
            let krho = inertia_subgroup(p, r, RamPoint::EllipticRho);
            let kcusp = inertia_subgroup(p, r, RamPoint::Cusp);
            // Full sweep for small groups, a deterministic 1000-sample
            // stride otherwise.
            let stride = (group.len() / 1000).max(1);
            let mut checked = 0u64;
            let mut ok = true;
            for s in group.iter().step_by(stride) {
                let ii = conjugate_intersection(s, &ki, p);
                let ir = conjugate_intersection(s, &krho, p);
                let ic = conjugate_intersection(s, &kcusp, p);
                let line_ok = ic.len() as u64 == p
                    && ic.iter().all(|y| y.is_nilpotent())
                    && ic.iter().any(|y| y.is_zero());
                ok &= ii.len() == 1 && ii[0].is_zero();
                ok &= ir.len() == 1 && ir[0].is_zero();
                ok &= line_ok;
                checked += 1;
                if !ok {
                    break;
                }
            }
            Ok(CheckOutcome::compare(
                name,
                format!("{checked} conjugates checked: elliptic ∩ = 0, cusp ∩ = p-line"),
                "elliptic trivial, cusp a p-element line".into(),
                ok,
            ))
        })
    }
}

/// The headline numbers plus every check outcome for one (p, r).
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub p: u64,
    pub r: u32,
    /// h(-p) for p ≡ 3 (mod 4) (including p = 3), None otherwise.
    pub h: Option<u64>,
    pub n_diff: Option<BigInt>,
    pub n_sum: Option<BigInt>,
    pub n_plus: Option<BigInt>,
    pub n_minus: Option<BigInt>,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    /// True when no check failed (skips do not count against).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Runs the registry against validated parameters and assembles the report.
/// Parameter errors surface as `Err` (CLI exit 2); failed identities are
/// data inside the report (CLI exit 1).
pub fn run_verification(
    params: &VerifyParams,
    registry: &CheckRegistry,
) -> Result<VerificationReport, Error> {
    params.validate()?;
    let h = if params.p % 4 == 3 {
        Some(class_number_forms(params.p)?)
    } else {
        None
    };
    let n_diff = n_diff_formula(params.p, params.r, params.nonresidue()).ok();
    let n_sum = mult_sum_closed_form(params.p, params.r).ok();
    let (n_plus, n_minus) =
        match solve_multiplicities(params.p, params.r, params.nonresidue()) {
            Ok((a, b)) => (Some(a), Some(b)),
            Err(_) => (None, None),
        };
    Ok(VerificationReport {
        p: params.p,
        r: params.r,
        h,
        n_diff,
        n_sum,
        n_plus,
        n_minus,
        checks: registry.run_all(params),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(VerifyParams::new(7, 2).validate().is_ok());
        assert!(VerifyParams::new(9, 2).validate().is_err());
        assert!(VerifyParams::new(2, 2).validate().is_err());
        assert!(VerifyParams::new(7, 1).validate().is_err());
        let mut p = VerifyParams::new(7, 2);
        p.nonresidue = Some(2); // residue: rejected
        assert!(p.validate().is_err());
        p.nonresidue = Some(5);
        assert!(p.validate().is_ok());
        assert_eq!(p.nonresidue(), 5);
        assert_eq!(VerifyParams::new(7, 2).nonresidue(), 3);
    }

    #[test]
    fn registry_names_are_stable() {
        let reg = CheckRegistry::standard();
        assert_eq!(
            reg.names(),
            vec![
                "class_number_methods",
                "multiplicity_difference",
                "gross_identity",
                "multiplicity_solve",
                "multiplicity_parity",
                "group_level_difference",
                "class_number_parity",
                "gauss_collapse",
                "sum_space_multiplicity",
                "mackey_elliptic_i",
                "mackey_elliptic_rho",
                "mackey_cusp",
                "nilpotent_orbits",
                "inertia_intersections",
            ]
        );
        assert!(reg.get("gross_identity").is_some());
        assert!(reg.get("no_such_check").is_none());
    }

    #[test]
    fn single_check_lookup_runs() {
        let reg = CheckRegistry::standard();
        let check = reg.get("multiplicity_difference").unwrap();
        let out = check.run(&VerifyParams::new(7, 2));
        assert_eq!(out.status, CheckStatus::Pass);
        assert!(out.lhs.contains('7'), "lhs: {}", out.lhs);
    }

    #[test]
    fn full_run_at_3_2_all_pass() {
        // Small enough that nothing is skipped.
        let report =
            run_verification(&VerifyParams::new(3, 2), &CheckRegistry::standard()).unwrap();
        assert!(report.passed());
        for c in &report.checks {
            match c.name {
                // The 3-mod-4-only checks skip at p = 3 (h-normalization).
                "class_number_methods" | "gross_identity" | "group_level_difference" => {
                    assert_eq!(c.status, CheckStatus::Skipped, "{}", c.name)
                }
                _ => assert_eq!(c.status, CheckStatus::Pass, "{}: {} / {}", c.name, c.lhs, c.rhs),
            }
        }
        assert_eq!(report.h, Some(1));
        assert_eq!(report.n_diff, Some(BigInt::from(1)));
        assert_eq!(report.n_sum, Some(BigInt::from(1)));
        assert_eq!(report.n_plus, Some(BigInt::from(1)));
        assert_eq!(report.n_minus, Some(BigInt::from(0)));
    }

    #[test]
    fn full_run_at_7_2_skips_mackey_by_default() {
        let report =
            run_verification(&VerifyParams::new(7, 2), &CheckRegistry::standard()).unwrap();
        assert!(report.passed());
        let status = |name: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == name)
                .unwrap()
                .status
        };
        // Mackey work 343·115248 is over the default budget.
        assert_eq!(status("mackey_elliptic_i"), CheckStatus::Skipped);
        assert_eq!(status("mackey_cusp"), CheckStatus::Skipped);
        // But enumeration-based orbit checks fit.
        assert_eq!(status("nilpotent_orbits"), CheckStatus::Pass);
        assert_eq!(status("inertia_intersections"), CheckStatus::Pass);
        assert_eq!(status("multiplicity_difference"), CheckStatus::Pass);
        assert_eq!(status("gross_identity"), CheckStatus::Pass);
        assert_eq!(report.h, Some(1));
        assert_eq!(report.n_diff, Some(BigInt::from(7)));
        assert_eq!(report.n_sum, Some(BigInt::from(25)));
        assert_eq!(report.n_plus, Some(BigInt::from(16)));
        assert_eq!(report.n_minus, Some(BigInt::from(9)));
    }

    #[test]
    fn five_two_runs_mackey_within_budget() {
        let report =
            run_verification(&VerifyParams::new(5, 2), &CheckRegistry::standard()).unwrap();
        assert!(report.passed());
        for name in ["mackey_elliptic_i", "mackey_elliptic_rho", "mackey_cusp"] {
            let c = report.checks.iter().find(|c| c.name == name).unwrap();
            assert_eq!(c.status, CheckStatus::Pass, "{name}");
        }
        // p ≡ 1 (mod 4): the class-number checks are out of scope.
        let c = report
            .checks
            .iter()
            .find(|c| c.name == "gross_identity")
            .unwrap();
        assert_eq!(c.status, CheckStatus::Skipped);
        assert_eq!(report.h, None);
    }

    #[test]
    fn invalid_params_are_an_error_not_a_report() {
        let err = run_verification(&VerifyParams::new(9, 2), &CheckRegistry::standard());
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn verdicts_invariant_under_nonresidue_choice() {
        // Same statuses and same headline numbers for two nonresidues mod 7.
        let reg = CheckRegistry::standard();
        let mut a = VerifyParams::new(7, 2);
        a.nonresidue = Some(3);
        let mut b = VerifyParams::new(7, 2);
        b.nonresidue = Some(5);
        let ra = run_verification(&a, &reg).unwrap();
        let rb = run_verification(&b, &reg).unwrap();
        assert_eq!(ra.n_diff, rb.n_diff);
        assert_eq!(ra.n_plus, rb.n_plus);
        assert_eq!(ra.n_minus, rb.n_minus);
        for (ca, cb) in ra.checks.iter().zip(&rb.checks) {
            assert_eq!(ca.name, cb.name);
            assert_eq!(ca.status, cb.status, "{}", ca.name);
        }
    }
}
