//! Per-group Jordan certificates: the smallest index of an abelian subgroup
//! (weak) and of a normal abelian subgroup (strong).

use serde::Serialize;

use crate::construct::{construct_with, GroupSpec};
use crate::error::Result;
use crate::group::{FiniteGroup, Limits, Subgroup};
use crate::subgroups::abelian_subgroups_min_index;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanCertificate {
    pub group_name: String,
    pub order: usize,
    pub weak_index: usize,
    pub strong_index: usize,
    pub weak_witness: Subgroup,
    pub strong_witness: Subgroup,
}

impl JordanCertificate {
    /// `weak ≤ strong ≤ weak²`
    pub fn square_relation_holds(&self) -> bool {
        self.weak_index <= self.strong_index && self.strong_index <= self.weak_index * self.weak_index
    }

    /// Rechecks the witnesses against `g`.
    pub fn witnesses_valid(&self, g: &FiniteGroup) -> bool {
        self.weak_witness.is_abelian(g)
            && self.strong_witness.is_abelian(g)
            && self.strong_witness.is_normal(g)
            && self.weak_index * self.weak_witness.order() == g.order()
            && self.strong_index * self.strong_witness.order() == g.order()
    }

    pub fn row(&self, g: &FiniteGroup) -> JordanRow {
        let orders = |s: &Subgroup| {
            let mut v: Vec<u64> = s.members().iter().map(|&x| g.element_order(x)).collect();
            v.sort_unstable();
            v
        };
        JordanRow {
            name: self.group_name.clone(),
            order: self.order,
            weak_index: self.weak_index,
            strong_index: self.strong_index,
            weak_witness_orders: orders(&self.weak_witness),
            strong_witness_orders: orders(&self.strong_witness),
        }
    }
}

/// Serialised certificate; witness subgroups are described by the sorted
/// element orders of their members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanRow {
    pub name: String,
    pub order: usize,
    pub weak_index: usize,
    pub strong_index: usize,
    pub weak_witness_orders: Vec<u64>,
    pub strong_witness_orders: Vec<u64>,
}

pub fn jordan_certificate(name: &str, g: &FiniteGroup, limit: usize) -> Result<JordanCertificate> {
    let weak = abelian_subgroups_min_index(g, false, limit)?;
    let strong = abelian_subgroups_min_index(g, true, limit)?;
    Ok(JordanCertificate {
        group_name: name.to_string(),
        order: g.order(),
        weak_index: weak.index,
        strong_index: strong.index,
        weak_witness: weak.witness,
        strong_witness: strong.witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkipRecord {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CorpusRow {
    Certificate(JordanRow),
    Skipped(SkipRecord),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub scanned: usize,
    pub skipped: usize,
    pub max_weak_index: usize,
    pub max_strong_index: usize,
    pub square_relation_held: bool,
    pub violations: Vec<String>,
}

/// Certificates for every entry, handed to `sink` in input order.
pub fn corpus_scan(
    entries: &[(String, GroupSpec)],
    limits: &Limits,
    mut sink: impl FnMut(&CorpusRow),
) -> CorpusSummary {
    use rayon::prelude::*;

    let rows: Vec<(CorpusRow, Option<bool>)> = entries
        .par_iter()
        .map(|(name, spec)| {
            let result = construct_with(spec, limits)
                .and_then(|g| jordan_certificate(name, &g, limits.max_jordan_order).map(|c| (c, g)));
            match result {
                Ok((cert, g)) => {
                    let ok = cert.square_relation_holds() && cert.witnesses_valid(&g);
                    (CorpusRow::Certificate(cert.row(&g)), Some(ok))
                }
                Err(e) => (
                    CorpusRow::Skipped(SkipRecord {
                        name: name.clone(),
                        reason: e.to_string(),
                    }),
                    None,
                ),
            }
        })
        .collect();
    let mut summary = CorpusSummary {
        square_relation_held: true,
        ..Default::default()
    };
    for (row, ok) in &rows {
        sink(row);
        match (row, ok) {
            (CorpusRow::Certificate(c), Some(ok)) => {
                summary.scanned += 1;
                summary.max_weak_index = summary.max_weak_index.max(c.weak_index);
                summary.max_strong_index = summary.max_strong_index.max(c.strong_index);
                if !ok {
                    summary.square_relation_held = false;
                    summary.violations.push(c.name.clone());
                }
            }
            _ => summary.skipped += 1,
        }
    }
    summary
}
