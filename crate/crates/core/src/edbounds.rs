//! Bounds on essential dimension from representation dimension, Sylow
//! subgroups and Jordan constants, plus the semidirect family machinery.
//!
//! All bounds assume the base field contains a primitive `e`-th root of
//! unity, `e = exp(G)`. Reports carry this as a flag instead of checking it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abelian::abelian_invariants;
use crate::arith;
use crate::construct::{construct_with, unit_subgroup, GroupSpec};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits, Subgroup};
use crate::repdim::rdim;

/// Default cap on `k` in the progression `1 + k·p^n`.
pub const DEFAULT_PRIME_CAP: u64 = 1_000_000;

/// The smallest prime `q ≡ 1 (mod p^n)`.
pub fn dirichlet_prime(p: u64, n: u32) -> Result<u64> {
    dirichlet_prime_with_cap(p, n, DEFAULT_PRIME_CAP)
}

/// As [`dirichlet_prime`], scanning `k = 1..=cap`. Primality is decided by
/// deterministic Miller–Rabin, exact on all of `u64`.
pub fn dirichlet_prime_with_cap(p: u64, n: u32, cap: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidInput("exponent n must be at least 1".into()));
    }
    let modulus = p
        .checked_pow(n)
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{n} overflows u64")))?;
    for k in 1..=cap {
        let q = k
            .checked_mul(modulus)
            .and_then(|x| x.checked_add(1))
            .ok_or_else(|| Error::InvalidInput(format!("1 + {k}*{modulus} overflows u64")))?;
        if arith::is_prime(q) {
            return Ok(q);
        }
    }
    Err(Error::SearchBoundExceeded { modulus, cap })
}

pub fn ed_upper(g: &FiniteGroup) -> Result<u64> {
    Ok(rdim(g)?.total_degree)
}

/// `max_p rdim(G[p])` with the smallest prime attaining it; `(0, None)` for
/// the trivial group.
pub fn ed_lower_sylow(g: &FiniteGroup) -> Result<(u64, Option<u64>)> {
    let mut best = (0, None);
    for p in arith::prime_divisors(g.order() as u64) {
        let sylow = g.sylow(p)?;
        let d = rdim(&g.subgroup_as_group(&sylow)?)?.total_degree;
        if d > best.0 {
            best = (d, Some(p));
        }
    }
    Ok(best)
}

/// `rdim(G)` when `G` is abelian or of prime-power order, where it equals
/// the essential dimension.
pub fn ed_exact_if_known(g: &FiniteGroup) -> Result<Option<u64>> {
    let n = g.order() as u64;
    if g.is_abelian() || n == 1 || arith::prime_power(n).is_some() {
        Ok(Some(rdim(g)?.total_degree))
    } else {
        Ok(None)
    }
}

/// The lower bound `rdim(Z/q ⋊_φ H) ≥ |φ(H)|`.
pub fn lemma_lower_bound(q: u64, phi_image_size: u64) -> Result<u64> {
    if q < 2 || arith::prime_power(q).is_none() {
        return Err(Error::InvalidInput(format!("{q} is not a prime power")));
    }
    if phi_image_size == 0 || !arith::euler_phi(q).is_multiple_of(phi_image_size) {
        return Err(Error::InvalidInput(format!(
            "{phi_image_size} does not divide |(Z/{q})^*| = {}",
            arith::euler_phi(q)
        )));
    }
    Ok(phi_image_size)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JordanKind {
    Strong,
    Weak,
}

/// User-supplied Jordan constants `n ↦ j(n)`.
///
/// JSON form: `{"kind": "strong", "1": 1, "2": 7200}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, TableField>", into = "BTreeMap<String, TableField>")]
pub struct JordanTable {
    pub kind: JordanKind,
    pub entries: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableField {
    Constant(u64),
    Kind(JordanKind),
}

impl JordanTable {
    pub fn new(kind: JordanKind, entries: BTreeMap<u64, u64>) -> Result<Self> {
        if let Some((n, j)) = entries.iter().find(|(&n, &j)| n == 0 || j == 0) {
            return Err(Error::InvalidInput(format!(
                "jordan table entry {n} -> {j}: dimensions and constants must be at least 1"
            )));
        }
        Ok(JordanTable { kind, entries })
    }

    /// `r(n) = n·j(n)`.
    pub fn r(&self, n: u64) -> Option<u64> {
        self.entries.get(&n).map(|&j| n.saturating_mul(j))
    }
}

impl TryFrom<BTreeMap<String, TableField>> for JordanTable {
    type Error = Error;

    fn try_from(map: BTreeMap<String, TableField>) -> Result<Self> {
        let mut kind = None;
        let mut entries = BTreeMap::new();
        for (key, value) in map {
            match (key.as_str(), value) {
                ("kind", TableField::Kind(k)) => kind = Some(k),
                ("kind", TableField::Constant(_)) => {
                    return Err(Error::InvalidInput("kind must be \"strong\" or \"weak\"".into()))
                }
                (_, TableField::Constant(j)) => {
                    let n = key
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad dimension key {key:?}")))?;
                    entries.insert(n, j);
                }
                (_, TableField::Kind(_)) => {
                    return Err(Error::InvalidInput(format!("entry {key:?} is not an integer")))
                }
            }
        }
        let kind = kind.ok_or_else(|| Error::InvalidInput("jordan table lacks \"kind\"".into()))?;
        JordanTable::new(kind, entries)
    }
}

impl From<JordanTable> for BTreeMap<String, TableField> {
    fn from(t: JordanTable) -> Self {
        let mut map: BTreeMap<String, TableField> = t
            .entries
            .into_iter()
            .map(|(n, j)| (n.to_string(), TableField::Constant(j)))
            .collect();
        map.insert("kind".into(), TableField::Kind(t.kind));
        map
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryUsed {
    pub n: u64,
    pub j: u64,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContrapositiveBound {
    pub bound: u64,
    pub kind: JordanKind,
    /// Entries with `rdim > r(n)`, each ruling out `ed ≤ n`.
    pub entries_used: Vec<EntryUsed>,
}

/// `ed(G) > n` whenever `rdim(G) > n·j(n)`: the bound is one more than the
/// largest such `n`, or 1 when no entry applies (0 for `rdim = 0`).
pub fn theorem1_contrapositive(rdim: u64, jt: &JordanTable) -> Result<ContrapositiveBound> {
    if jt.entries.is_empty() {
        return Err(Error::EmptyTable);
    }
    let entries_used: Vec<EntryUsed> = jt
        .entries
        .iter()
        .map(|(&n, &j)| EntryUsed {
            n,
            j,
            r: n.saturating_mul(j),
        })
        .filter(|e| rdim > e.r)
        .collect();
    let bound = match entries_used.iter().map(|e| e.n).max() {
        _ if rdim == 0 => 0,
        Some(n) => n + 1,
        None => 1,
    };
    Ok(ContrapositiveBound {
        bound,
        kind: jt.kind,
        entries_used,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    /// `(q_i, a_i)`: `H ≅ Π (Z/q_i)^{a_i}` with distinct prime powers `q_i`.
    pub decomposition: Vec<(u64, u32)>,
    pub r: u64,
    /// every `a_i ≤ R`
    pub multiplicities_bounded: bool,
    /// every `q_i ≤ R`
    pub prime_powers_bounded: bool,
}

impl ClaimCheck {
    pub fn holds(&self) -> bool {
        self.multiplicities_bounded && self.prime_powers_bounded
    }
}

pub fn hn_claim_check(h: &FiniteGroup, r: u64) -> Result<ClaimCheck> {
    hn_claim_check_subgroup(h, &h.whole(), r)
}

pub fn hn_claim_check_subgroup(g: &FiniteGroup, h: &Subgroup, r: u64) -> Result<ClaimCheck> {
    let inv = abelian_invariants(g, h)?;
    let decomposition: Vec<(u64, u32)> = inv.primary.into_iter().collect();
    Ok(ClaimCheck {
        multiplicities_bounded: decomposition.iter().all(|&(_, a)| u64::from(a) <= r),
        prime_powers_bounded: decomposition.iter().all(|&(q, _)| q <= r),
        decomposition,
        r,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdBoundsReport {
    pub group_name: String,
    pub order: usize,
    pub ed_lower: u64,
    pub ed_upper: u64,
    pub ed_exact: Option<u64>,
    /// `sylow`, `exact` or `theorem1`.
    pub lower_source: String,
    pub sylow_bound: u64,
    pub sylow_prime: Option<u64>,
    pub contrapositive: Option<ContrapositiveBound>,
    pub roots_of_unity_assumed: bool,
    pub notes: String,
}

impl EdBoundsReport {
    pub fn consistent(&self) -> bool {
        self.ed_lower <= self.ed_upper
            && self.sylow_bound <= self.ed_upper
            && self
                .ed_exact
                .is_none_or(|e| self.ed_lower <= e && e == self.ed_upper)
    }
}

pub fn edbounds_report(name: &str, g: &FiniteGroup, jt: Option<&JordanTable>) -> Result<EdBoundsReport> {
    let upper = ed_upper(g)?;
    let (sylow_bound, sylow_prime) = ed_lower_sylow(g)?;
    let exact = ed_exact_if_known(g)?;
    let contrapositive = jt.map(|jt| theorem1_contrapositive(upper, jt)).transpose()?;
    let trivial = g.order() == 1;
    let mut lower = if trivial { 0 } else { sylow_bound.max(1) };
    let mut source = "sylow";
    let mut notes = format!("k assumed to contain a primitive {}-th root of unity", g.exponent());
    if let Some(c) = &contrapositive {
        if c.bound > lower {
            lower = c.bound;
            source = "theorem1";
        }
        notes.push_str("; theorem1 bound conditional on the supplied jordan constants");
    }
    if let Some(e) = exact {
        lower = e;
        source = "exact";
    }
    Ok(EdBoundsReport {
        group_name: name.to_string(),
        order: g.order(),
        ed_lower: lower,
        ed_upper: upper,
        ed_exact: exact,
        lower_source: source.to_string(),
        sylow_bound,
        sylow_prime,
        contrapositive,
        roots_of_unity_assumed: true,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// `Z/n ⋊ (Z/n)^*`
    SemidirectFullUnits,
    /// `Z/n ⋊ ⟨units mod n⟩`; units not coprime to `n` are dropped.
    SemidirectCustom { units: Vec<u64> },
    /// `Z/q_n ⋊ Z/p^n`
    Gamma { p: u64 },
    /// `D_{2n}` for odd `n` in the range.
    DihedralOdd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub kind: FamilyKind,
    /// Inclusive index range.
    pub start: u64,
    pub end: u64,
}

impl FamilySpec {
    pub fn indices(&self) -> Vec<u64> {
        (self.start..=self.end)
            .filter(|n| !matches!(self.kind, FamilyKind::DihedralOdd) || n % 2 == 1)
            .collect()
    }

    pub fn member(&self, n: u64) -> GroupSpec {
        match &self.kind {
            FamilyKind::SemidirectFullUnits => GroupSpec::full_units(n),
            FamilyKind::SemidirectCustom { units } => GroupSpec::SemidirectCyclic {
                n,
                units: units.iter().copied().filter(|&u| arith::gcd(u, n) == 1).collect(),
            },
            FamilyKind::Gamma { p } => GroupSpec::Gamma {
                p: *p,
                n: u32::try_from(n).unwrap_or(u32::MAX),
            },
            FamilyKind::DihedralOdd => GroupSpec::Dihedral { n },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub index: u64,
    pub name: String,
    pub order: usize,
    pub rdim: u64,
    pub ed_lower_sylow: u64,
    pub ed_exact: Option<u64>,
    /// `[G : Z(G)]`
    pub center_index: usize,
    /// `|H|` for the semidirect families.
    pub h_order: Option<usize>,
    /// `|φ(H)|` when the modulus is a prime power.
    pub lemma_bound: Option<u64>,
    /// Claim check on `H` with `R = rdim`.
    pub claim: Option<ClaimCheck>,
    pub contrapositive: Option<ContrapositiveBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySkip {
    pub index: u64,
    pub name: String,
    pub skipped: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyEntry {
    Row(FamilyRow),
    Skip(FamilySkip),
}

/// One entry per index, in index order; rows are computed in parallel.
pub fn family_report(spec: &FamilySpec, jt: Option<&JordanTable>, limits: &Limits) -> Vec<FamilyEntry> {
    use rayon::prelude::*;

    spec.indices()
        .into_par_iter()
        .map(|n| {
            let member = spec.member(n);
            let name = member.label();
            family_row(n, &member, jt, limits).map_or_else(
                |e| {
                    FamilyEntry::Skip(FamilySkip {
                        index: n,
                        name: name.clone(),
                        skipped: format!("{}: {e}", e.tag()),
                    })
                },
                FamilyEntry::Row,
            )
        })
        .collect()
}

fn family_row(index: u64, spec: &GroupSpec, jt: Option<&JordanTable>, limits: &Limits) -> Result<FamilyRow> {
    let g = construct_with(spec, limits)?;
    let d = ed_upper(&g)?;
    let (sylow, _) = ed_lower_sylow(&g)?;
    // the semidirect realisations act on Z/n, and H is the stabiliser of 0
    let semidirect_modulus = match spec {
        GroupSpec::SemidirectCyclic { n, units } => Some((*n, unit_subgroup(*n, units).len())),
        GroupSpec::Gamma { .. } => Some((g.degree() as u64, g.order() / g.degree())),
        _ => None,
    };
    let (h_order, lemma_bound, claim) = match semidirect_modulus {
        Some((n, h_len)) => {
            let h = Subgroup::from_members(
                (0..g.order()).filter(|&x| g.element(x).apply(0) == 0).collect(),
            );
            debug_assert_eq!(h.order(), h_len);
            let lemma = lemma_lower_bound(n, h_len as u64).ok();
            (Some(h_len), lemma, Some(hn_claim_check_subgroup(&g, &h, d)?))
        }
        None => (None, None, None),
    };
    Ok(FamilyRow {
        index,
        name: spec.label(),
        order: g.order(),
        rdim: d,
        ed_lower_sylow: sylow,
        ed_exact: ed_exact_if_known(&g)?,
        center_index: g.order() / g.center().order(),
        h_order,
        lemma_bound,
        claim,
        contrapositive: jt.map(|jt| theorem1_contrapositive(d, jt)).transpose()?,
    })
}
