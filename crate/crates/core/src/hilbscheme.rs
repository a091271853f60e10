//! Components of the Hilbert scheme of degree-`d` hypersurfaces in linear
//! spaces `P^m ⊂ G(k,n)`, their Néron-Severi bookkeeping, the dual-curve
//! pairing tables and the resulting Nef cone.
//!
//! Each component is a projective bundle `P(Sym^d S*)` over a two-step flag
//! variety `F(a,b;n)` parametrising the spans `{V : V_a ⊂ V ⊂ V_b}`. The
//! pairing tables are fixed data; everything computable by Schubert calculus
//! (incidence numbers, ranks, fiber dimensions) is rechecked by
//! [`verify_component`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::cones::{dual_cone, nef_from_pairing, product_cone, Pairing};
use crate::error::{Error, Result};
use crate::hilbpoly::{fiber_dimension, through_point_dimension};
use crate::schubring::{
    family_partition_m1, family_partition_m2, intersection_number, pieri_column, pieri_row,
    RingContext, SchubertExpansion,
};
use crate::{PairingMatrix, RationalCone};

/// `(d, m, k, n)`: degree, dimension of the span, and the Grassmannian.
///
/// `k` is not normalised to `k <= n/2`; [`HilbParams::dual`] gives the
/// parameters for `G(n-k,n) ≅ G(k,n)` when that is wanted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr")]
pub struct HilbParams {
    pub d: usize,
    pub m: usize,
    pub k: usize,
    pub n: usize,
}

impl HilbParams {
    pub fn new(d: usize, m: usize, k: usize, n: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::OutOfRange {
                what: "d",
                value: d as i64,
                range: "d >= 3 (the span of a hypersurface is unique only for d >= 3)".into(),
            });
        }
        if m < 2 {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                range: "m >= 2".into(),
            });
        }
        if k < 2 || k + 2 > n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                range: format!("1 < k < n-1 = {}", n as i64 - 1),
            });
        }
        Ok(HilbParams { d, m, k, n })
    }

    pub fn ring(&self) -> RingContext {
        RingContext::new(self.k, self.n).expect("validated on construction")
    }

    /// Same Hilbert scheme seen in `G(n-k, n)`.
    pub fn dual(&self) -> Self {
        HilbParams {
            k: self.n - self.k,
            ..*self
        }
    }
}

#[derive(Deserialize)]
struct ParamsRepr {
    d: usize,
    m: usize,
    k: usize,
    n: usize,
}

impl TryFrom<ParamsRepr> for HilbParams {
    type Error = Error;

    fn try_from(r: ParamsRepr) -> Result<Self> {
        HilbParams::new(r.d, r.m, r.k, r.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentName {
    M1,
    M2,
}

impl fmt::Display for ComponentName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentName::M1 => "M1",
            ComponentName::M2 => "M2",
        })
    }
}

impl std::str::FromStr for ComponentName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M1" | "m1" => Ok(ComponentName::M1),
            "M2" | "m2" => Ok(ComponentName::M2),
            _ => Err(Error::Parse(format!(
                "unknown component {s:?}, expected M1 or M2"
            ))),
        }
    }
}

/// The two-step flag variety `F(a,b;n)`. It is a Grassmannian when `a = 0`
/// or `b = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 3]", into = "[usize; 3]")]
pub struct FlagType {
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

impl FlagType {
    /// Steps strictly between `0` and `n`; each contributes one Schubert
    /// divisor pulled back from `G(step, n)`.
    pub fn proper_steps(&self) -> usize {
        [self.a, self.b]
            .iter()
            .filter(|&&s| s > 0 && s < self.n)
            .count()
    }

    pub fn is_degenerate(&self) -> bool {
        self.proper_steps() < 2
    }

    /// `dim F(a,b;n) = a(n-a) + (b-a)(n-b)`.
    pub fn dimension(&self) -> usize {
        self.a * (self.n - self.a) + (self.b - self.a) * (self.n - self.b)
    }
}

impl From<[usize; 3]> for FlagType {
    fn from([a, b, n]: [usize; 3]) -> Self {
        FlagType { a, b, n }
    }
}

impl From<FlagType> for [usize; 3] {
    fn from(f: FlagType) -> Self {
        [f.a, f.b, f.n]
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{};{})", self.a, self.b, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveLabel {
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "gamma_prime")]
    GammaPrime,
    #[serde(rename = "gamma_double_prime")]
    GammaDoublePrime,
}

impl CurveLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveLabel::Gamma => "gamma",
            CurveLabel::GammaPrime => "gamma_prime",
            CurveLabel::GammaDoublePrime => "gamma_double_prime",
        }
    }
}

/// How a dual curve moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    /// A pencil of hypersurfaces inside one fixed span, one member through
    /// the point where the span meets the special Schubert variety.
    #[serde(rename = "fiber-pencil")]
    FiberPencil,
    /// `W_2` fixed, `W_1` moving in a pencil; members are `d`-th powers of a
    /// fixed hyperplane of the span.
    #[serde(rename = "W1-pencil-fixed-W2")]
    W1PencilFixedW2,
    /// `W_1` fixed, `W_2` moving in a pencil.
    #[serde(rename = "W2-pencil-fixed-W1")]
    W2PencilFixedW1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveDescriptor {
    pub label: CurveLabel,
    pub kind: CurveKind,
}

/// One component `P(Sym^d S*) → F(a,b;n)` of the Hilbert scheme.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDescription {
    pub name: ComponentName,
    pub flag: FlagType,
    pub family_class: Partition,
    pub ns_rank: usize,
    pub generators: Vec<String>,
    pub curves: Vec<CurveDescriptor>,
    pub bundle: String,
    pub degree: usize,
    pub m: usize,
}

/// Generator labels: pullbacks `H1`, `H2` of the Schubert divisors of the
/// flag base and the incidence divisor `DX`; primed versions on `M2`.
pub mod labels {
    pub const H1: &str = "H1";
    pub const H2: &str = "H2";
    pub const DX: &str = "DX";
    pub const H1P: &str = "H1p";
    pub const H2P: &str = "H2p";
    pub const DY: &str = "DY";
}

impl ComponentDescription {
    fn build(name: ComponentName, params: &HilbParams) -> Self {
        let HilbParams { d, m, k, n, .. } = *params;
        let ctx = params.ring();
        let (flag, family_class, h1, h2, dv) = match name {
            ComponentName::M1 => (
                FlagType {
                    a: k - 1,
                    b: k + m,
                    n,
                },
                family_partition_m1(&ctx, m),
                labels::H1,
                labels::H2,
                labels::DX,
            ),
            ComponentName::M2 => (
                FlagType {
                    a: k - m,
                    b: k + 1,
                    n,
                },
                family_partition_m2(&ctx, m),
                labels::H1P,
                labels::H2P,
                labels::DY,
            ),
        };
        let has_first = flag.a > 0;
        let has_second = flag.b < n;

        let mut generators = Vec::new();
        let mut curves = vec![CurveDescriptor {
            label: CurveLabel::Gamma,
            kind: CurveKind::FiberPencil,
        }];
        if has_first {
            generators.push(h1.to_string());
            curves.push(CurveDescriptor {
                label: CurveLabel::GammaPrime,
                kind: CurveKind::W1PencilFixedW2,
            });
        }
        if has_second {
            generators.push(h2.to_string());
            curves.push(CurveDescriptor {
                label: CurveLabel::GammaDoublePrime,
                kind: CurveKind::W2PencilFixedW1,
            });
        }
        generators.push(dv.to_string());

        ComponentDescription {
            name,
            flag,
            family_class,
            ns_rank: flag.proper_steps() + 1,
            generators,
            curves,
            bundle: format!("P(Sym^{d} S*)"),
            degree: d,
            m,
        }
    }

    /// The incidence divisor label (`DX` or `DY`).
    pub fn incidence_divisor(&self) -> &'static str {
        match self.name {
            ComponentName::M1 => labels::DX,
            ComponentName::M2 => labels::DY,
        }
    }

    /// Codimension-`m` special class cut out by the incidence divisor:
    /// `σ_(m)` on `M1`, `σ_(1^m)` on `M2`.
    pub fn special_class(&self) -> Partition {
        match self.name {
            ComponentName::M1 => Partition::row(self.m as u32),
            ComponentName::M2 => Partition::column(self.m),
        }
    }
}

/// Components of `Hilb_{P_{d,m}}(G(k,n))`.
///
/// The spans `{V : V_{k-1} ⊂ V ⊂ V_{k+m}}` need `m <= n-k` and give `M1`;
/// the spans `{V : V_{k-m} ⊂ V ⊂ V_{k+1}}` need `m <= k` and give `M2`.
/// For `k <= n/2` this is: both when `m <= k`, only `M1` when
/// `k < m <= n-k`, none beyond.
pub fn classify(params: &HilbParams) -> Vec<ComponentDescription> {
    let HilbParams { m, k, n, .. } = *params;
    let mut out = Vec::new();
    if m <= n - k {
        out.push(ComponentDescription::build(ComponentName::M1, params));
    }
    if m <= k {
        out.push(ComponentDescription::build(ComponentName::M2, params));
    }
    out
}

/// Picard number of the bundle: rank of `NS` of the flag base plus one.
pub fn picard_rank(c: &ComponentDescription) -> usize {
    c.flag.proper_steps() + 1
}

/// The table `D_i . γ_j` certifying the Nef cone of one component.
///
/// Rows are the incidence divisor followed by the surviving pullbacks;
/// columns are `γ` followed by the matching Schubert curves. The entries
/// are the identity.
pub fn pairing_matrix(c: &ComponentDescription) -> PairingMatrix {
    let (h1, h2) = match c.name {
        ComponentName::M1 => (labels::H1, labels::H2),
        ComponentName::M2 => (labels::H1P, labels::H2P),
    };
    let mut divisors = vec![c.incidence_divisor().to_string()];
    for g in &c.generators {
        if g == h1 || g == h2 {
            divisors.push(g.clone());
        }
    }
    let curves = c
        .curves
        .iter()
        .map(|cd| cd.label.as_str().to_string())
        .collect();
    Pairing::identity(divisors, curves).expect("labels are distinct and sized to the rank")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "iv")]
    IV,
}

impl CaseLabel {
    /// `k+m = n` drops `H2`; `k = m` drops `H1p`.
    pub fn of(params: &HilbParams) -> Self {
        match (params.k + params.m == params.n, params.k == params.m) {
            (false, false) => CaseLabel::I,
            (true, false) => CaseLabel::II,
            (false, true) => CaseLabel::III,
            (true, true) => CaseLabel::IV,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            CaseLabel::I => 6,
            CaseLabel::II | CaseLabel::III => 5,
            CaseLabel::IV => 4,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::I => "i",
            CaseLabel::II => "ii",
            CaseLabel::III => "iii",
            CaseLabel::IV => "iv",
        }
    }
}

/// The Nef cone of the whole Hilbert scheme.
///
/// `cone` lives in the lattice with axes `generator_labels`, which is the
/// concatenation of the pairing divisor orders of the components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefConeReport {
    pub params: HilbParams,
    pub case: CaseLabel,
    pub components: Vec<ComponentDescription>,
    pub generator_labels: Vec<String>,
    pub cone: RationalCone,
    pub pairings: Vec<PairingMatrix>,
}

/// Requires `2 < m <= k`, and `m <= n-k` so that both components exist
/// (automatic when `k <= n/2`).
pub fn nef_report(params: &HilbParams) -> Result<NefConeReport> {
    let HilbParams { m, k, n, .. } = *params;
    if m <= 2 || m > k.min(n - k) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: format!("2 < m <= min(k, n-k) = {}", k.min(n - k)),
        });
    }
    let components = classify(params);
    let pairings: Vec<PairingMatrix> = components.iter().map(pairing_matrix).collect();
    let mut cone = RationalCone::orthant(0);
    for p in &pairings {
        cone = product_cone(&cone, &nef_from_pairing(p)?);
    }
    let generator_labels = pairings
        .iter()
        .flat_map(|p| p.divisor_labels().iter().cloned())
        .collect();
    Ok(NefConeReport {
        params: *params,
        case: CaseLabel::of(params),
        components,
        generator_labels,
        cone,
        pairings,
    })
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub component: ComponentName,
    pub checks: Vec<Check>,
}

impl VerificationRecord {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn point_coefficient(ctx: &RingContext, e: &SchubertExpansion) -> BigInt {
    e.coeff(&ctx.point_class())
}

/// Rechecks the Schubert-calculus ingredients of a component. Failures are
/// recorded, never raised.
pub fn verify_component(
    ctx: &RingContext,
    c: &ComponentDescription,
    m: usize,
) -> VerificationRecord {
    let mut checks = Vec::new();
    let record = |checks| VerificationRecord {
        component: c.name,
        checks,
    };

    let k = ctx.k();
    let consistent = c.flag.n == ctx.n()
        && c.m == m
        && match c.name {
            ComponentName::M1 => c.flag.a + 1 == k && c.flag.b == k + m,
            ComponentName::M2 => c.flag.a + m == k && c.flag.b == k + 1,
        }
        && ctx.bx().admits(&c.special_class())
        && ctx.bx().admits(&c.family_class);
    checks.push(Check::new(
        "context",
        consistent,
        format!("{} over {} in G({k},{})", c.name, c.flag, ctx.n()),
    ));
    if !consistent {
        return record(checks);
    }

    // (a) the special Schubert variety meets a general span in one point
    let special = c.special_class();
    let lr = intersection_number(
        ctx,
        &SchubertExpansion::basis(special.clone()),
        &SchubertExpansion::basis(c.family_class.clone()),
    );
    match &lr {
        Ok(v) => checks.push(Check::new(
            "incidence-lr",
            v.is_one(),
            format!("σ{special} · σ{} = {v}", c.family_class),
        )),
        Err(e) => checks.push(Check::new("incidence-lr", false, e.to_string())),
    }
    let pieri = match c.name {
        ComponentName::M1 => pieri_row(ctx, &c.family_class, m),
        ComponentName::M2 => pieri_column(ctx, &c.family_class, m),
    }
    .map(|e| point_coefficient(ctx, &e));
    match (&pieri, &lr) {
        (Ok(p), Ok(l)) => checks.push(Check::new(
            "incidence-pieri",
            p.is_one() && p == l,
            format!("Pieri gives {p}, LR gives {l}"),
        )),
        (Err(e), _) | (_, Err(e)) => {
            checks.push(Check::new("incidence-pieri", false, e.to_string()))
        }
    }

    // (b) codimension bookkeeping
    let codim_ok = Partition::row(m as u32).size() == m
        && Partition::column(m).size() == m
        && special.size() == m
        && c.family_class.size() + m == ctx.dim();
    checks.push(Check::new(
        "codimension",
        codim_ok,
        format!(
            "|σ_special| = {}, |family| = {}, dim G = {}",
            special.size(),
            c.family_class.size(),
            ctx.dim()
        ),
    ));

    // (c) Picard rank against flag degeneracy and the pairing table
    let rank = picard_rank(c);
    let expected = if c.flag.is_degenerate() { 2 } else { 3 };
    let pairing = pairing_matrix(c);
    checks.push(Check::new(
        "picard-rank",
        rank == c.ns_rank
            && rank == expected
            && pairing.size() == rank
            && c.generators.len() == rank
            && c.curves.len() == rank,
        format!("rank {rank} over {}", c.flag),
    ));

    // (d) hypersurfaces through a point form a hyperplane in the fiber
    let d = c.degree as u32;
    let full = fiber_dimension(d, m as u32);
    let through = through_point_dimension(d, m as u32);
    checks.push(Check::new(
        "fiber-codimension",
        &full - &through == BigUint::one(),
        format!("P^{full} ⊃ P^{through}"),
    ));

    record(checks)
}

/// All checks for one parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub params: HilbParams,
    pub components: Vec<VerificationRecord>,
    pub nef: Vec<Check>,
}

impl PointReport {
    pub fn passed(&self) -> bool {
        self.components.iter().all(VerificationRecord::passed) && self.nef.iter().all(|c| c.passed)
    }
}

/// Generator count as a closed formula: each of `k+m = n` and `k = m`
/// removes one pullback.
pub fn generator_count_formula(params: &HilbParams) -> usize {
    6 - usize::from(params.k + params.m == params.n) - usize::from(params.k == params.m)
}

fn nef_checks(params: &HilbParams) -> Vec<Check> {
    let report = match nef_report(params) {
        Ok(r) => r,
        Err(e) => return vec![Check::new("nef-report", false, e.to_string())],
    };
    let total_rank: usize = report.components.iter().map(picard_rank).sum();
    let count = report.generator_labels.len();
    let mut checks = vec![Check::new(
        "generator-count",
        count == total_rank
            && count == generator_count_formula(params)
            && count == report.case.generator_count()
            && report.cone.generators().len() == count,
        format!("case {} with {count} generators", report.case.as_str()),
    )];
    let cone = &report.cone;
    let dual_ok = dual_cone(cone).is_ok_and(|d| d == RationalCone::orthant(count));
    checks.push(Check::new(
        "cone-shape",
        cone.is_pointed() && cone.is_simplicial() && dual_ok,
        cone.to_string(),
    ));
    checks
}

/// Verifies every component of one parameter tuple, plus the Nef cone when
/// `2 < m <= min(k, n-k)`.
pub fn verify_point(params: &HilbParams) -> PointReport {
    let ctx = params.ring();
    let components = classify(params)
        .iter()
        .map(|c| verify_component(&ctx, c, params.m))
        .collect();
    let nef = if params.m > 2 && params.m <= params.k.min(params.n - params.k) {
        nef_checks(params)
    } else {
        Vec::new()
    };
    PointReport {
        params: *params,
        components,
        nef,
    }
}

/// Every `(d, m, k, n)` with `3 <= d <= dmax`, `4 <= n <= nmax`,
/// `2 <= k <= min(kmax, n-2)` and `3 <= m <= max(k, n-k)`, sorted.
pub fn parameter_grid(kmax: usize, nmax: usize, dmax: usize) -> Vec<HilbParams> {
    let mut out = Vec::new();
    for d in 3..=dmax {
        for n in 4..=nmax {
            for k in 2..=kmax.min(n - 2) {
                for m in 3..=k.max(n - k) {
                    out.push(HilbParams::new(d, m, k, n).expect("grid respects preconditions"));
                }
            }
        }
    }
    out.sort();
    out
}

/// Runs [`verify_point`] over the grid in parallel; results keep grid order.
pub fn verify_grid(kmax: usize, nmax: usize, dmax: usize) -> Vec<PointReport> {
    parameter_grid(kmax, nmax, dmax)
        .par_iter()
        .map(verify_point)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(d: usize, m: usize, k: usize, n: usize) -> HilbParams {
        HilbParams::new(d, m, k, n).unwrap()
    }

    fn flags(cs: &[ComponentDescription]) -> Vec<[usize; 3]> {
        cs.iter().map(|c| c.flag.into()).collect()
    }

    #[test]
    fn parameter_validation() {
        assert!(HilbParams::new(2, 3, 4, 10).is_err());
        assert!(HilbParams::new(3, 1, 4, 10).is_err());
        assert!(HilbParams::new(3, 3, 1, 10).is_err());
        assert!(HilbParams::new(3, 3, 9, 10).is_err());
        assert_eq!(params(3, 3, 7, 10).dual(), params(3, 3, 3, 10));
    }

    #[test]
    fn classification_cases() {
        assert_eq!(
            flags(&classify(&params(3, 3, 4, 10))),
            vec![[3, 7, 10], [1, 5, 10]]
        );
        assert_eq!(flags(&classify(&params(4, 5, 3, 9))), vec![[2, 8, 9]]);
        assert!(classify(&params(3, 5, 3, 7)).is_empty());
        // planes: classification only
        assert_eq!(
            flags(&classify(&params(3, 2, 3, 7))),
            vec![[2, 5, 7], [1, 4, 7]]
        );
        // k > n/2: only the second family fits
        assert_eq!(flags(&classify(&params(3, 4, 5, 8))), vec![[1, 6, 8]]);
    }

    #[test]
    fn picard_ranks() {
        let cs = classify(&params(3, 3, 4, 10));
        assert_eq!(picard_rank(&cs[0]), 3);
        assert_eq!(picard_rank(&cs[1]), 3);
        let cs = classify(&params(3, 3, 4, 7));
        assert_eq!(cs[0].flag, FlagType { a: 3, b: 7, n: 7 });
        assert_eq!(picard_rank(&cs[0]), 2);
        let cs = classify(&params(3, 3, 3, 10));
        assert_eq!(cs[1].flag, FlagType { a: 0, b: 4, n: 10 });
        assert_eq!(picard_rank(&cs[1]), 2);
    }

    #[test]
    fn pairing_tables() {
        let cs = classify(&params(3, 3, 4, 10));
        let p = pairing_matrix(&cs[0]);
        assert!(p.is_identity());
        assert_eq!(p.divisor_labels(), ["DX", "H1", "H2"]);
        assert_eq!(
            p.curve_labels(),
            ["gamma", "gamma_prime", "gamma_double_prime"]
        );
        assert_eq!(
            pairing_matrix(&cs[1]).divisor_labels(),
            ["DY", "H1p", "H2p"]
        );

        let cs = classify(&params(3, 3, 4, 7));
        let p = pairing_matrix(&cs[0]);
        assert_eq!(p.divisor_labels(), ["DX", "H1"]);
        assert_eq!(p.curve_labels(), ["gamma", "gamma_prime"]);

        let cs = classify(&params(3, 3, 3, 10));
        let p = pairing_matrix(&cs[1]);
        assert_eq!(p.divisor_labels(), ["DY", "H2p"]);
        assert_eq!(p.curve_labels(), ["gamma", "gamma_double_prime"]);
    }

    #[test]
    fn nef_cases() {
        let r = nef_report(&params(3, 3, 4, 10)).unwrap();
        assert_eq!(r.case, CaseLabel::I);
        assert_eq!(r.generator_labels, ["DX", "H1", "H2", "DY", "H1p", "H2p"]);
        assert_eq!(r.cone, RationalCone::orthant(6));

        let r = nef_report(&params(3, 3, 4, 7)).unwrap();
        assert_eq!((r.case, r.generator_labels.len()), (CaseLabel::II, 5));
        assert!(r.generator_labels.contains(&"DX".to_string()));

        let r = nef_report(&params(3, 3, 3, 10)).unwrap();
        assert_eq!((r.case, r.generator_labels.len()), (CaseLabel::III, 5));

        let r = nef_report(&params(3, 3, 3, 6)).unwrap();
        assert_eq!(r.case, CaseLabel::IV);
        let mut got = r.generator_labels.clone();
        got.sort();
        assert_eq!(got, ["DX", "DY", "H1", "H2p"]);
    }

    #[test]
    fn nef_rejects_outside_hypotheses() {
        assert!(nef_report(&params(3, 2, 4, 10)).is_err());
        assert!(nef_report(&params(3, 5, 4, 10)).is_err());
        assert!(nef_report(&params(3, 4, 5, 8)).is_err());
    }

    #[test]
    fn verification_examples() {
        let p = params(3, 3, 4, 10);
        let ctx = p.ring();
        for c in classify(&p) {
            let rec = verify_component(&ctx, &c, 3);
            assert!(rec.passed(), "{rec:?}");
        }
        let p = params(3, 3, 3, 6);
        let cs = classify(&p);
        assert_eq!(cs[0].family_class, Partition::new(vec![3, 3]).unwrap());
        assert!(verify_component(&p.ring(), &cs[0], 3).passed());
    }

    #[test]
    fn inconsistent_context_is_reported() {
        let p = params(3, 3, 4, 10);
        let c = &classify(&p)[0];
        let rec = verify_component(&RingContext::new(3, 10).unwrap(), c, 3);
        assert!(!rec.passed());
        assert_eq!(rec.checks[0].name, "context");
    }

    #[test]
    fn count_formula_matches_ranks() {
        for p in parameter_grid(6, 13, 3)
            .into_iter()
            .filter(|p| p.m <= p.k.min(p.n - p.k))
        {
            let ranks: usize = classify(&p).iter().map(picard_rank).sum();
            assert_eq!(ranks, generator_count_formula(&p), "{p:?}");
        }
    }
}
