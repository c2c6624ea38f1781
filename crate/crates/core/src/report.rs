//! Versioned JSON and TSV reports. Output depends only on its inputs: labels
//! keep their canonical order and blocks are ordered by least member.

use std::fmt::{Display, Write as _};

use serde::Serialize;

use crate::arith::{LaurentPoly, Rat};
use crate::blocks::{BlockPartition, Comparison};
use crate::params::{HeckeParams, ParamsH, ShiftData};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// The parameter point a partition was computed at.
#[derive(Clone, Debug, Serialize)]
pub struct ParamSummary {
    pub generic: bool,
    pub h: Rat,
    #[serde(rename = "H")]
    pub big_h: Vec<Rat>,
    pub e: u64,
    pub s: Vec<i64>,
    pub hecke: HeckeParams,
}

impl ParamSummary {
    pub fn new(ph: &ParamsH, sd: &ShiftData, generic: bool) -> Self {
        ParamSummary {
            generic,
            h: ph.h.clone(),
            big_h: ph.big_h.clone(),
            e: sd.e,
            s: sd.s.clone(),
            hecke: sd.hecke(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub schema: u32,
    pub computation: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<ParamSummary>,
    pub num_labels: usize,
    pub num_blocks: usize,
    pub labels: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplanes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residues: Option<Vec<LaurentPoly>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonReport>,
}

impl PartitionReport {
    pub fn new<L: Display>(computation: &str, group: String, part: &BlockPartition<L>) -> Self {
        PartitionReport {
            schema: SCHEMA,
            computation: computation.to_string(),
            group,
            parameters: None,
            num_labels: part.labels().len(),
            num_blocks: part.num_blocks(),
            labels: part.labels().iter().map(ToString::to_string).collect(),
            blocks: part.blocks().to_vec(),
            hyperplanes: None,
            residues: None,
            comparison: None,
        }
    }

    pub fn with_parameters(mut self, summary: ParamSummary) -> Self {
        self.parameters = Some(summary);
        self
    }

    pub fn with_hyperplanes(mut self, hyperplanes: Vec<String>) -> Self {
        self.hyperplanes = Some(hyperplanes);
        self
    }

    pub fn with_residues(mut self, residues: Vec<LaurentPoly>) -> Self {
        self.residues = Some(residues);
        self
    }

    pub fn with_comparison(mut self, cmp: ComparisonReport) -> Self {
        self.comparison = Some(cmp);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Tsv => {
                let mut block_of = vec![0; self.labels.len()];
                for (b, members) in self.blocks.iter().enumerate() {
                    for &i in members {
                        block_of[i] = b;
                    }
                }
                let mut out = String::from("block_id\tlabel\n");
                for (label, b) in self.labels.iter().zip(block_of) {
                    writeln!(out, "{b}\t{label}").unwrap();
                }
                out
            }
        }
    }
}

/// Refinement check of `left` against `right`, with the offending blocks
/// spelled out when it fails.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub left: String,
    pub right: String,
    pub refines: bool,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleBlocks>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleBlocks {
    pub left_block: Vec<String>,
    pub right_block: Vec<String>,
}

impl ComparisonReport {
    pub fn new<L: Display + PartialEq>(
        left_name: &str,
        left: &BlockPartition<L>,
        right_name: &str,
        right: &BlockPartition<L>,
    ) -> Self {
        let Comparison {
            refines,
            equal,
            counterexample,
        } = left.compare(right);
        let names =
            |p: &BlockPartition<L>, b: usize| p.block_members(b).map(ToString::to_string).collect();
        ComparisonReport {
            left: left_name.to_string(),
            right: right_name.to_string(),
            refines,
            equal,
            counterexample: counterexample.map(|c| CounterexampleBlocks {
                left_block: names(left, c.left_block),
                right_block: names(right, c.right_block),
            }),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_multipartitions;

    #[test]
    fn tsv_rows() {
        let labels = enumerate_multipartitions(2, 1);
        let part = BlockPartition::from_blocks(labels, vec![vec![0, 1]]);
        let r = PartitionReport::new("cm", "G(2,1,1)".into(), &part);
        assert_eq!(r.render(Format::Tsv), "block_id\tlabel\n0\t(|1)\n0\t(1|)\n");
        let json = r.render(Format::Json);
        assert!(json.contains("\"schema\": 1"));
        assert!(!json.contains("residues"));
    }

    #[test]
    fn residues_as_exponent_maps() {
        let labels = enumerate_multipartitions(1, 2);
        let part = BlockPartition::singletons(labels);
        let res = part.labels().iter().map(|l| l.residue()).collect();
        let r = PartitionReport::new("cm", "G(1,1,2)".into(), &part).with_residues(res);
        let v: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["residues"][0], serde_json::json!({"-1": 1, "0": 1}));
    }
}
