//! Certificates that a pretzel knot `P(p, q, q)` (`p, q >= 2`, `q` odd)
//! has no Seifert fibered surgery.
//!
//! Each candidate slope `r` yields a quotient link `L_r` (the closure of a
//! four-strand braid). A slope is excluded once `L_r` is shown to be
//! neither a Montesinos link nor a Seifert link; the report records which
//! rule covers each of the two branches and the invariant values used.
//! Geometric inputs (the quotient construction, the slope restrictions,
//! the classification results) are cited in the report header, not
//! verified.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::{
    braids_equal, contains_full_twist, permutation_of, quotient_braid_even,
    quotient_braid_even_rewritten, quotient_braid_odd, quotient_braid_odd_rewritten,
    quotient_conjugator, sharp_partner_even, sharp_partner_odd, BraidWord,
};
use crate::diagram::{self, braid_closure, LinkDiagram};
use crate::error::{invalid, Error, Result};
use crate::homfly;
use crate::invariants::{
    genus_Ke, genus_Ko, positive_genus, rasmussen_positive, sharp_move_s_delta,
    sharp_move_sigma_jump, torus_genus, IntInterval,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Which of the two families: `P(p,q,q)` with `p` odd, or `P(2n,q,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn of(r: i64) -> Parity {
        if r % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The slope restriction that admitted a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlopeSource {
    /// Integral with `|r| <= 8`.
    SlopeBound,
    /// `r = 4q ± 1`, from the cyclic period 2 with factor knot `T(2,q)`.
    PeriodicFactor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeCandidate {
    pub r: i64,
    pub parity: Parity,
    pub source_rule: SlopeSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    MontesinosKnot,
    MontesinosLinkBridge,
    SeifertLinkTaxonomy,
    TorusKnotDetGenus,
    ToroidalSlope,
}

/// The two alternatives a Seifert fibered `K(r)` would force on `L_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Montesinos,
    Seifert,
}

impl Rule {
    pub fn branches(self) -> &'static [Branch] {
        match self {
            Rule::MontesinosKnot | Rule::MontesinosLinkBridge => &[Branch::Montesinos],
            Rule::SeifertLinkTaxonomy | Rule::TorusKnotDetGenus => &[Branch::Seifert],
            Rule::ToroidalSlope => &[Branch::Montesinos, Branch::Seifert],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("rule serialises");
        write!(f, "{}", s.as_str().unwrap_or("?"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Excluded,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExclusionVerdict {
    pub rule: Rule,
    pub conclusion: Conclusion,
    pub reason: String,
    pub evidence: BTreeMap<String, Value>,
}

impl ExclusionVerdict {
    fn new(rule: Rule, excluded: bool, reason: impl Into<String>) -> Self {
        ExclusionVerdict {
            rule,
            conclusion: if excluded { Conclusion::Excluded } else { Conclusion::Inconclusive },
            reason: reason.into(),
            evidence: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.evidence.insert(key.to_string(), value);
        self
    }

    pub fn is_excluded(&self) -> bool {
        self.conclusion == Conclusion::Excluded
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeReport {
    pub r: i64,
    pub parity: Parity,
    pub source_rule: SlopeSource,
    /// `|H_1(K(r))|`, zero for `r = 0` (infinite).
    pub homology_order: u64,
    pub verdicts: Vec<ExclusionVerdict>,
}

impl SlopeReport {
    /// Branches covered by at least one excluded verdict.
    pub fn covered_branches(&self) -> Vec<Branch> {
        let mut out: Vec<Branch> = self
            .verdicts
            .iter()
            .filter(|v| v.is_excluded())
            .flat_map(|v| v.rule.branches().iter().copied())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_excluded(&self) -> bool {
        self.covered_branches() == [Branch::Montesinos, Branch::Seifert]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    /// First pretzel parameter (`p`, or `2n` in the even family).
    pub p: i64,
    pub q: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportConclusion {
    Certified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema_version: u32,
    pub knot: String,
    pub family: Family,
    pub parameters: Parameters,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
    pub slopes: Vec<SlopeReport>,
    pub conclusion: ReportConclusion,
}

impl CertificateReport {
    pub fn is_certified(&self) -> bool {
        self.conclusion == ReportConclusion::Certified
    }

    /// Recomputes the report from its parameters and compares.
    pub fn replay(&self) -> Result<bool> {
        Ok(certify_no_sfs(self.parameters.p, self.parameters.q)? == *self)
    }
}

fn check_odd_at_least_3(name: &str, v: i64) -> Result<()> {
    if v < 3 || v % 2 == 0 {
        return invalid(format!("{name} must be an odd integer >= 3, got {v}"));
    }
    Ok(())
}

/// Integers `-8..=8`; the bound does not depend on `p, q`.
pub fn slope_candidates_odd(p: i64, q: i64) -> Result<Vec<SlopeCandidate>> {
    check_odd_at_least_3("p", p)?;
    check_odd_at_least_3("q", q)?;
    Ok((-8..=8)
        .map(|r| SlopeCandidate { r, parity: Parity::of(r), source_rule: SlopeSource::SlopeBound })
        .collect())
}

/// `{4q - 1, 4q + 1}`.
pub fn slope_candidates_even(n: i64, q: i64) -> Result<Vec<SlopeCandidate>> {
    if n < 1 {
        return invalid(format!("n must be >= 1, got {n}"));
    }
    check_odd_at_least_3("q", q)?;
    Ok([4 * q - 1, 4 * q + 1]
        .into_iter()
        .map(|r| SlopeCandidate { r, parity: Parity::Odd, source_rule: SlopeSource::PeriodicFactor })
        .collect())
}

/// `|H_1(K(r))| = |r|` for integral `r`; zero stands for infinite.
pub fn homology_order(r: i64) -> u64 {
    r.unsigned_abs()
}

/// `|s + σ| >= 4` rules out Montesinos knots (alternation number <= 1).
/// Excluded when every value in `s + σ` has absolute value at least 4.
pub fn exclude_montesinos_knot(s: IntInterval, sigma: IntInterval) -> ExclusionVerdict {
    let sum = s.add(&sigma);
    let excluded = sum.lo() >= 4 || sum.hi() <= -4;
    let reason = if excluded {
        format!("s + σ ∈ {sum}, so |s + σ| >= 4")
    } else {
        format!("s + σ ∈ {sum} does not force |s + σ| >= 4")
    };
    ExclusionVerdict::new(Rule::MontesinosKnot, excluded, reason)
        .with("method", json!("direct"))
        .with("s", json!([s.lo(), s.hi()]))
        .with("sigma", json!([sigma.lo(), sigma.hi()]))
        .with("s_plus_sigma", json!([sum.lo(), sum.hi()]))
}

/// The #-move chain for a positive knot `K` and positive partner `K'`:
///
/// `s(K) + σ(K) >= s(K') + σ(K') + Δs - max(σ(K') - σ(K))`.
///
/// `partner_lower` is a lower bound on `s(K') + σ(K')` (zero for any
/// positive knot), `s_delta = s(K) - s(K')` and `sigma_jump` bounds
/// `σ(K') - σ(K)`.
pub fn exclude_montesinos_knot_chain(
    partner_lower: i64,
    s_delta: i64,
    sigma_jump: IntInterval,
) -> Result<ExclusionVerdict> {
    for (name, v) in [("s(K') + σ(K')", partner_lower), ("s(K) - s(K')", s_delta)] {
        if v % 2 != 0 {
            return invalid(format!("{name} = {v} is odd"));
        }
    }
    let bound = partner_lower + s_delta - sigma_jump.hi();
    let excluded = bound >= 4;
    let reason = format!(
        "s + σ >= {partner_lower} + {s_delta} - {} = {bound}{}",
        sigma_jump.hi(),
        if excluded { " >= 4" } else { ", below 4" }
    );
    Ok(ExclusionVerdict::new(Rule::MontesinosKnot, excluded, reason)
        .with("method", json!("sharp-move-chain"))
        .with("partner_s_plus_sigma_lower", json!(partner_lower))
        .with("s_delta", json!(s_delta))
        .with("sigma_jump", json!([sigma_jump.lo(), sigma_jump.hi()]))
        .with("s_plus_sigma_lower", json!(bound)))
}

/// Components `T(2,q)` and `T(2,2p+q)`; a length-3 Montesinos link has
/// bridge index at most 3, while two non-trivial components give at
/// least 4.
pub fn exclude_montesinos_link_two_components(p: i64, q: i64) -> ExclusionVerdict {
    let comps = [q, 2 * p + q];
    let trivial: Vec<i64> = comps.iter().copied().filter(|c| c.abs() <= 1).collect();
    let v = if trivial.is_empty() {
        ExclusionVerdict::new(
            Rule::MontesinosLinkBridge,
            true,
            format!("components T(2,{}) and T(2,{}) are non-trivial, so bridge index >= 4 > 3", comps[0], comps[1]),
        )
    } else {
        ExclusionVerdict::new(
            Rule::MontesinosLinkBridge,
            false,
            format!("component T(2,{}) is trivial; bridge bound fails", trivial[0]),
        )
    };
    v.with("components", json!([format!("T(2,{})", comps[0]), format!("T(2,{})", comps[1])]))
        .with("bridge_lower", json!(if trivial.is_empty() { 4 } else { 3 }))
        .with("montesinos_bridge_upper", json!(3))
}

/// A two-component Seifert link is a torus link (parallel components) or
/// a torus knot plus a core (one trivial component). `T(2,q)` and
/// `T(2,2p+q)` are neither.
pub fn exclude_seifert_link_two_components(p: i64, q: i64) -> ExclusionVerdict {
    let (a, b) = (q, 2 * p + q);
    let parallel = a == b;
    let trivial = a.abs() <= 1 || b.abs() <= 1;
    let excluded = !parallel && !trivial;
    let reason = if excluded {
        format!("T(2,{a}) and T(2,{b}) are distinct and non-trivial: not a torus link, not a torus knot plus core")
    } else if parallel {
        format!("both components are T(2,{a}); a torus link is not ruled out")
    } else {
        "a component is trivial; a torus knot plus core is not ruled out".to_string()
    };
    ExclusionVerdict::new(Rule::SeifertLinkTaxonomy, excluded, reason)
        .with("components", json!([format!("T(2,{a})"), format!("T(2,{b})")]))
        .with("parallel", json!(parallel))
        .with("trivial_component", json!(trivial))
        .with("component_count", json!(2))
}

/// `c · β · c⁻¹ = w` with `w` a positive word containing `Δ²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullTwistWitness {
    pub conjugator: BraidWord,
    pub positive_form: BraidWord,
}

/// The torus-knot rule on a positive braid `β` whose closure is a knot:
///
/// 1. `β` (or a conjugate) is positive with a full twist, so the braid
///    index is the strand count `m` and only `T(m, x)` remains;
/// 2. `det = |H_1(K(r))|` fixes `x`;
/// 3. the genus of the closure differs from that of `T(m, x)`.
///
/// Only four strands are supported since only `det T(4,x) = x` is used.
pub fn torus_knot_rule(
    braid: &BraidWord,
    witness: Option<&FullTwistWitness>,
    homology_order: u64,
) -> Result<ExclusionVerdict> {
    let inconclusive = |reason: String| ExclusionVerdict::new(Rule::TorusKnotDetGenus, false, reason);
    if braid.strands() != 4 {
        return Err(Error::Unsupported(format!(
            "torus-knot rule needs a 4-strand braid, got {}",
            braid.strands()
        )));
    }
    if !braid.is_positive() {
        return Ok(inconclusive("braid-index step: braid is not positive".into()));
    }
    if permutation_of(braid).cycle_count() != 1 {
        return Ok(inconclusive("closure is not a knot".into()));
    }

    // step 1: full twist
    let (twist, mut evidence) = match witness {
        None => (contains_full_twist(braid)?, BTreeMap::new()),
        Some(w) => {
            let conj = w.conjugator.concat(braid)?.concat(&w.conjugator.inverse())?;
            let equal = braids_equal(&conj, &w.positive_form)?;
            let twist = equal && w.positive_form.is_positive() && contains_full_twist(&w.positive_form)?;
            let mut ev = BTreeMap::new();
            ev.insert("conjugator".to_string(), json!(w.conjugator.to_string()));
            ev.insert("conjugate_equals_full_twist_form".to_string(), json!(equal));
            (twist, ev)
        }
    };
    evidence.insert("contains_full_twist".to_string(), json!(twist));
    let poly = homfly::homfly(braid)?;
    let mfw = homfly::mfw_bound(&poly)?;
    evidence.insert("mfw_bound".to_string(), json!(mfw));
    if !twist {
        let mut v = inconclusive("braid-index step: no full twist found".into());
        v.evidence = evidence;
        return Ok(v);
    }
    evidence.insert("braid_index".to_string(), json!(4));

    // step 2: determinant
    let d = braid_closure(braid);
    let det = diagram::determinant(&d);
    evidence.insert("det".to_string(), json!(det));
    evidence.insert("homology_order".to_string(), json!(homology_order));
    if det != homology_order || det % 2 == 0 {
        let mut v = inconclusive(format!(
            "determinant step: det = {det} but |H_1| = {homology_order}"
        ));
        v.evidence = evidence;
        return Ok(v);
    }
    let x = det as i64;
    evidence.insert("x".to_string(), json!(x));

    // step 3: genus
    let g = positive_genus(&d)?;
    let gt = torus_genus(4, x)?;
    evidence.insert("genus".to_string(), json!(g));
    evidence.insert("torus_genus".to_string(), json!(gt));
    let excluded = g != gt;
    let reason = if excluded {
        format!("braid index 4 and det {x} force T(4,{x}), but g = {g} ≠ {gt} = g(T(4,{x}))")
    } else {
        format!("genus step: g = {g} equals g(T(4,{x})); the closure may be T(4,{x})")
    };
    let mut v = ExclusionVerdict::new(Rule::TorusKnotDetGenus, excluded, reason);
    v.evidence = evidence;
    Ok(v)
}

fn quotient_braid(family: Family, first: i64, q: i64, r: i64) -> Result<BraidWord> {
    match family {
        Family::Odd => quotient_braid_odd(first, q, r),
        Family::Even => quotient_braid_even(first / 2, q, r),
    }
}

fn partner_braid(family: Family, first: i64, q: i64, r: i64) -> Result<BraidWord> {
    match family {
        Family::Odd => sharp_partner_odd(first, q, r),
        Family::Even => sharp_partner_even(first / 2, q, r),
    }
}

fn full_twist_form(family: Family, first: i64, q: i64, r: i64) -> Result<BraidWord> {
    match family {
        Family::Odd => quotient_braid_odd_rewritten(first, q, r),
        Family::Even => quotient_braid_even_rewritten(first / 2, q, r),
    }
}

/// The torus-knot rule on a quotient knot. `first` is `p` (odd family) or
/// `2n` (even family).
pub fn exclude_torus_knot(family: Family, first: i64, q: i64, r: i64) -> Result<ExclusionVerdict> {
    if r % 2 == 0 {
        return invalid(format!("r = {r} is even; the quotient is a link"));
    }
    let braid = quotient_braid(family, first, q, r)?;
    let witness = FullTwistWitness {
        conjugator: quotient_conjugator(),
        positive_form: full_twist_form(family, first, q, r)?,
    };
    let mut v = torus_knot_rule(&braid, Some(&witness), homology_order(r))?;
    let closed_form = match family {
        Family::Odd => genus_Ko(first, q, r)?,
        Family::Even => genus_Ke(first / 2, q, r)?,
    };
    v = v.with("genus_closed_form", json!(closed_form));
    if family == Family::Even {
        // g(K_e) - g(T(4,r)) = 6n - 3q ∓ 1, never zero since 3 | 6n - 3q
        let n = first / 2;
        let target = if r == 4 * q + 1 { 1 } else { -1 };
        v = v
            .with("six_n_minus_three_q", json!(6 * n - 3 * q))
            .with("genus_equality_requires", json!(target))
            .with("parity_contradiction", json!((6 * n - 3 * q) != target));
    }
    Ok(v)
}

fn closure_of(family: Family, first: i64, q: i64, r: i64) -> Result<LinkDiagram> {
    Ok(braid_closure(&quotient_braid(family, first, q, r)?))
}

/// Both Montesinos-knot verdicts for a quotient knot: the #-move chain and
/// the direct `(s, σ)` computation.
fn montesinos_knot_verdicts(family: Family, first: i64, q: i64, r: i64) -> Result<Vec<ExclusionVerdict>> {
    let d = closure_of(family, first, q, r)?;
    let partner = braid_closure(&partner_braid(family, first, q, r)?);
    let s = rasmussen_positive(&d)?;
    let sigma = diagram::signature(&d)?;
    let s_partner = rasmussen_positive(&partner)?;
    let sigma_partner = diagram::signature(&partner)?;
    let delta = s - s_partner;
    if delta != sharp_move_s_delta() {
        return Err(Error::Internal(format!("#-move changed s by {delta}, not 8")));
    }
    // the resolved diagram D0 of the #-move has two components (cited)
    let chain = exclude_montesinos_knot_chain(0, sharp_move_s_delta(), sharp_move_sigma_jump(2)?)?
        .with("d0_components", json!(2))
        .with("partner_braid", json!(partner_braid(family, first, q, r)?.to_string()));
    let jump = sigma_partner - sigma;
    let any_d0 = sharp_move_sigma_jump(1)?;
    let direct = exclude_montesinos_knot(IntInterval::point(s)?, IntInterval::point(sigma)?)
        .with("genus", json!(s / 2))
        .with("partner_s", json!(s_partner))
        .with("partner_sigma", json!(sigma_partner))
        .with("partner_s_plus_sigma", json!(s_partner + sigma_partner))
        .with("measured_sigma_jump", json!(jump))
        .with("measured_jump_within_bound", json!(any_d0.contains(jump)));
    Ok(vec![chain, direct])
}

/// Component determinants of the two-component quotient link, compared
/// with `det T(2,m) = m`.
fn link_component_check(p: i64, q: i64, r: i64) -> Result<(Vec<u64>, bool)> {
    let d = closure_of(Family::Odd, p, q, r)?;
    if d.component_count() != 2 {
        return Err(Error::Internal(format!("L_{r} has {} components", d.component_count())));
    }
    let mut dets: Vec<u64> = (0..2)
        .map(|i| d.component_sublink(i).map(|c| diagram::determinant(&c)))
        .collect::<Result<_>>()?;
    dets.sort();
    let mut expected = vec![q as u64, (2 * p + q) as u64];
    expected.sort();
    let ok = dets == expected;
    Ok((dets, ok))
}

fn link_verdicts(p: i64, q: i64, r: i64) -> Result<Vec<ExclusionVerdict>> {
    let (dets, ok) = link_component_check(p, q, r)?;
    let mut out = Vec::new();
    for mut v in [exclude_montesinos_link_two_components(p, q), exclude_seifert_link_two_components(p, q)] {
        v = v.with("component_determinants", json!(dets)).with("components_confirmed", json!(ok));
        if !ok {
            v.conclusion = Conclusion::Inconclusive;
            v.reason = format!("component determinants {dets:?} do not match T(2,{q}), T(2,{})", 2 * p + q);
        }
        out.push(v);
    }
    Ok(out)
}

fn toroidal_verdict() -> ExclusionVerdict {
    ExclusionVerdict::new(
        Rule::ToroidalSlope,
        true,
        "K has genus one, so K(0) contains an essential torus and is not an atoroidal Seifert fibered space",
    )
    .with("genus", json!(1))
}

fn slope_report(family: Family, first: i64, q: i64, c: &SlopeCandidate) -> Result<SlopeReport> {
    let r = c.r;
    let mut verdicts = Vec::new();
    if r == 0 {
        verdicts.push(toroidal_verdict());
    }
    match c.parity {
        Parity::Even => verdicts.extend(link_verdicts(first, q, r)?),
        Parity::Odd => {
            verdicts.extend(montesinos_knot_verdicts(family, first, q, r)?);
            verdicts.push(exclude_torus_knot(family, first, q, r)?);
        }
    }
    Ok(SlopeReport {
        r,
        parity: c.parity,
        source_rule: c.source_rule,
        homology_order: homology_order(r),
        verdicts,
    })
}

fn assumptions(family: Family, q: i64) -> Vec<String> {
    let mut out = vec![
        "K is a strongly invertible hyperbolic knot; a Seifert fibered K(r) has base orbifold S^2 with exactly three exceptional fibers (cited)".to_string(),
        "Montesinos trick: K(r) is the double branched cover of the quotient link L_r, the closure of the four-strand braid built for each slope (cited)".to_string(),
        "if L_r is neither a Seifert link nor a Montesinos link then K(r) is not Seifert fibered over S^2 (cited)".to_string(),
        "|s + σ| >= 4 implies not a Montesinos knot, via |s + σ|/2 <= alt(K) and alt <= 1 for Montesinos links (cited)".to_string(),
        "a Seifert link with at most two components is a torus knot, a two-component torus link, or a torus knot plus a core curve (cited)".to_string(),
        "for positive knots s = 2g = c - O + 1 (cited); #-move: s drops by 8 and 2 <= σ(K') - σ(K) <= 4 when D0 has two components (cited)".to_string(),
        "det(L_r) = |H_1(K(r))| = |r|; a positive 4-braid with a full twist has braid index 4 (cited)".to_string(),
    ];
    match family {
        Family::Odd => out.push(
            "slope restriction: a Seifert fibered slope is an integer r with |r| <= 8; non-integral slopes are excluded wholesale because K is alternating (cited)".to_string(),
        ),
        Family::Even => out.push(format!(
            "slope restriction: K has cyclic period 2 with factor knot T(2,{q}), so a Seifert fibered slope is r = 4q ± 1 (cited); non-integral slopes are excluded wholesale"
        )),
    }
    out
}

/// Certificate for `P(first, q, q)`. Odd `first` uses the slope bound and
/// the link rules for even `r`; even `first = 2n` only has the two odd
/// slopes `4q ± 1`.
pub fn certify_no_sfs(first: i64, q: i64) -> Result<CertificateReport> {
    if first < 2 {
        return invalid(format!("first parameter must be >= 2, got {first}"));
    }
    if q < 3 || q % 2 == 0 {
        return invalid(format!("q must be an odd integer >= 3, got {q}"));
    }
    let (family, candidates, n) = if first % 2 == 1 {
        (Family::Odd, slope_candidates_odd(first, q)?, None)
    } else {
        (Family::Even, slope_candidates_even(first / 2, q)?, Some(first / 2))
    };
    let slopes = candidates
        .iter()
        .map(|c| slope_report(family, first, q, c))
        .collect::<Result<Vec<_>>>()?;
    let mut notes = vec![
        "full-twist step: the quotient braid is conjugate (by σ1^4 σ3^2) to a positive braid starting with Δ4²; conjugation preserves the closure".to_string(),
        "#-move partner: the quotient braid with two fewer (σ2σ3σ1σ2) blocks".to_string(),
    ];
    if family == Family::Even {
        notes.push("both admissible slopes 4q ± 1 are odd, so every quotient is a knot and the link rules never apply".to_string());
    }
    let conclusion = if slopes.iter().all(SlopeReport::is_excluded) {
        ReportConclusion::Certified
    } else {
        ReportConclusion::Inconclusive
    };
    Ok(CertificateReport {
        schema_version: SCHEMA_VERSION,
        knot: format!("P({first},{q},{q})"),
        family,
        parameters: Parameters { p: first, q, n },
        assumptions: assumptions(family, q),
        notes,
        slopes,
        conclusion,
    })
}
