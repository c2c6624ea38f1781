use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gmdn::arith::LaurentPoly;
use gmdn::cm::{block_residues, cm_partition_k, cm_partition_w, IrrLabel};
use gmdn::groups::{
    conjugacy_classes_of_reflections, count_conjugacy_classes, reflections, DEFAULT_GROUP_LIMIT,
};
use gmdn::params::{h_to_c, integerize, ParamFile, ParamsH, ShiftData};
use gmdn::partitions::{count_multipartitions, enumerate_multipartitions};
use gmdn::report::{to_json, ComparisonReport, Format, ParamSummary, PartitionReport};
use gmdn::rouquier::{hyperplanes_containing, rouquier_families_k, rouquier_families_w_bounded};
use gmdn::verify::{run_suite, DEFAULT_SEED, SUITES};
use gmdn::{BlockPartition, Error, GroupParams, MultiPartition};

const LABEL_LIMIT: u128 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "gmdn",
    version,
    about = "Calogero-Moser partitions and Rouquier families for G(m,d,n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the multipartitions of n with m components.
    Enumerate {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        force: bool,
    },
    /// Residue (or shifted residue) of one multipartition, e.g. "(2,1|1)".
    Residue {
        label: String,
        /// Comma-separated shifts s_0,...,s_{m-1}.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        shift: Option<Vec<i64>>,
    },
    /// Translate a parameter between c, (h, H), (e, s) and Hecke form.
    Params(Job),
    /// Calogero-Moser partition.
    Cm(Job),
    /// Rouquier families.
    Rouquier {
        #[command(flatten)]
        job: Job,
        /// Compare the families against another partition.
        #[arg(long, value_enum)]
        compare: Option<CompareWith>,
        /// Hyperplanes k nR0 + nSi - nSj = 0 are searched for |k| < BOUND (default m).
        #[arg(long)]
        k_bound: Option<i64>,
    },
    /// Compare Rouquier families with the CM partition.
    Compare(Job),
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(short)]
        m: Option<u32>,
        #[arg(short, default_value_t = 1)]
        d: u32,
        #[arg(short)]
        n: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force group data: order, reflections, classes.
    Oracle {
        #[arg(short)]
        m: u32,
        #[arg(short, default_value_t = 1)]
        d: u32,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CompareWith {
    Cm,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Tsv,
}

#[derive(Args)]
struct Job {
    #[arg(short)]
    m: u32,
    #[arg(short, default_value_t = 1)]
    d: u32,
    #[arg(short)]
    n: u32,
    /// Parameter file, or inline JSON such as '{"k":"-1","c":{"1":"1"}}'.
    #[arg(long, conflicts_with = "generic")]
    params: Option<String>,
    /// Use a generic parameter (widely spaced p-cyclic shifts).
    #[arg(long)]
    generic: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Report residues as Res^s(x^e) rather than Res^s(x).
    #[arg(long)]
    scaled: bool,
    #[arg(long)]
    force: bool,
}

struct Resolved {
    gp: GroupParams,
    ph: ParamsH,
    sd: ShiftData,
    generic: bool,
}

impl Job {
    fn resolve(&self) -> anyhow::Result<Resolved> {
        let gp = GroupParams::new(self.m, self.d, self.n)?;
        guard_labels(gp.m, gp.n, self.force)?;
        let ph = match (&self.params, self.generic) {
            (Some(src), _) => {
                let text = if src.trim_start().starts_with('{') {
                    src.clone()
                } else {
                    fs::read_to_string(src)
                        .with_context(|| format!("reading parameter file {src}"))?
                };
                ParamFile::parse(&text)?.resolve(&gp)?
            }
            (None, true) => ParamsH::gap_witness(&gp),
            (None, false) => bail!("give a parameter with --params or use --generic"),
        };
        let sd = integerize(&ph)?;
        Ok(Resolved {
            gp,
            ph,
            sd,
            generic: self.generic,
        })
    }

    fn format(&self) -> Format {
        match self.format {
            OutFormat::Json => Format::Json,
            OutFormat::Tsv => Format::Tsv,
        }
    }
}

impl Resolved {
    fn summary(&self) -> ParamSummary {
        ParamSummary::new(&self.ph, &self.sd, self.generic)
    }
}

fn guard_labels(m: u32, n: u32, force: bool) -> anyhow::Result<()> {
    let size = count_multipartitions(m, n);
    if size > LABEL_LIMIT && !force {
        return Err(Error::SizeBound {
            what: "P(m,n)",
            size,
            limit: LABEL_LIMIT,
        }
        .into());
    }
    Ok(())
}

/// CM partition in the shape the reports use: multipartitions when `d = 1`,
/// `({lambda}, epsilon)` labels otherwise.
enum Partition {
    W(BlockPartition<MultiPartition>),
    K(BlockPartition<IrrLabel>),
}

impl Partition {
    fn report(&self, computation: &str, gp: &GroupParams) -> PartitionReport {
        match self {
            Partition::W(p) => PartitionReport::new(computation, gp.to_string(), p),
            Partition::K(p) => PartitionReport::new(computation, gp.to_string(), p),
        }
    }

    fn compare(&self, left_name: &str, right_name: &str, right: &Partition) -> ComparisonReport {
        match (self, right) {
            (Partition::W(a), Partition::W(b)) => {
                ComparisonReport::new(left_name, a, right_name, b)
            }
            (Partition::K(a), Partition::K(b)) => {
                ComparisonReport::new(left_name, a, right_name, b)
            }
            _ => unreachable!("both sides are built for the same group"),
        }
    }
}

fn cm(r: &Resolved) -> anyhow::Result<Partition> {
    Ok(if r.gp.d == 1 {
        Partition::W(cm_partition_w(r.gp.m, r.gp.n, &r.sd)?)
    } else {
        Partition::K(cm_partition_k(&r.gp, &r.sd)?)
    })
}

fn cm_residues(r: &Resolved, part: &Partition, scaled: bool) -> anyhow::Result<Vec<LaurentPoly>> {
    Ok(match part {
        Partition::W(p) => block_residues(p, &r.sd, scaled)?,
        Partition::K(p) => (0..p.num_blocks())
            .map(|b| {
                let label = p.block_members(b).next().expect("blocks are nonempty");
                let res = label.orbit.shifted_residue(&r.sd.s)?;
                Ok(if scaled {
                    res.substitute_power(r.sd.e)
                } else {
                    res
                })
            })
            .collect::<gmdn::Result<_>>()?,
    })
}

fn rouquier(r: &Resolved, k_bound: i64) -> anyhow::Result<Partition> {
    let hp = r.sd.hecke();
    Ok(if r.gp.d == 1 {
        Partition::W(rouquier_families_w_bounded(&hp, r.gp.m, r.gp.n, k_bound)?)
    } else {
        if k_bound != r.gp.m as i64 {
            bail!("--k-bound is only supported for d = 1");
        }
        Partition::K(rouquier_families_k(&r.gp, &hp)?)
    })
}

#[derive(Serialize)]
struct ParamsReport {
    schema: u32,
    group: String,
    c: Option<gmdn::params::ParamsC>,
    #[serde(flatten)]
    summary: ParamSummary,
}

#[derive(Serialize)]
struct ResidueReport {
    schema: u32,
    label: String,
    shift: Vec<i64>,
    residue: LaurentPoly,
    display: String,
}

#[derive(Serialize)]
struct OracleReport {
    schema: u32,
    group: String,
    order: u128,
    reflections: usize,
    conjugacy_classes: usize,
    reflection_classes: Vec<OracleClass>,
}

#[derive(Serialize)]
struct OracleClass {
    label: String,
    size: usize,
    representative: String,
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Enumerate { m, n, force } => {
            guard_labels(m, n, force)?;
            for l in enumerate_multipartitions(m, n) {
                println!("{l}");
            }
        }
        Command::Residue { label, shift } => {
            let lambda: MultiPartition = label.parse()?;
            let shift = shift.unwrap_or_else(|| vec![0; lambda.m()]);
            let residue = lambda.shifted_residue(&shift)?;
            print!(
                "{}",
                to_json(&ResidueReport {
                    schema: gmdn::report::SCHEMA,
                    label: lambda.to_string(),
                    shift,
                    display: residue.to_string(),
                    residue,
                })
            );
        }
        Command::Params(job) => {
            let r = job.resolve()?;
            print!(
                "{}",
                to_json(&ParamsReport {
                    schema: gmdn::report::SCHEMA,
                    group: r.gp.to_string(),
                    c: h_to_c(&r.ph).ok(),
                    summary: r.summary(),
                })
            );
        }
        Command::Cm(job) => {
            let r = job.resolve()?;
            let part = cm(&r)?;
            let residues = cm_residues(&r, &part, job.scaled)?;
            let report = part
                .report("cm", &r.gp)
                .with_parameters(r.summary())
                .with_residues(residues);
            print!("{}", report.render(job.format()));
        }
        Command::Rouquier {
            job,
            compare,
            k_bound,
        } => {
            let r = job.resolve()?;
            let k_bound = k_bound.unwrap_or(r.gp.m as i64);
            let part = rouquier(&r, k_bound)?;
            let hyperplanes = hyperplanes_containing(&r.sd.hecke(), k_bound)
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut report = part
                .report("rouquier", &r.gp)
                .with_parameters(r.summary())
                .with_hyperplanes(hyperplanes);
            if let Some(CompareWith::Cm) = compare {
                report = report.with_comparison(part.compare("rouquier", "cm", &cm(&r)?));
            }
            print!("{}", report.render(job.format()));
        }
        Command::Compare(job) => {
            let r = job.resolve()?;
            let cmp = rouquier(&r, r.gp.m as i64)?.compare("rouquier", "cm", &cm(&r)?);
            print!("{}", to_json(&cmp));
        }
        Command::Verify {
            suite,
            m,
            d,
            n,
            seed,
            json,
        } => {
            let scope = match (m, n) {
                (Some(m), n) => Some(GroupParams::new(m, d, n.unwrap_or(2))?),
                (None, None) => None,
                (None, Some(_)) => bail!("-n needs -m"),
            };
            let report = run_suite(&suite, scope.as_ref(), seed)?;
            if json {
                print!("{}", to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            return Ok(report.passed);
        }
        Command::Oracle { m, d, n, force } => {
            let gp = GroupParams::new(m, d, n)?;
            let limit = if force {
                u128::MAX
            } else {
                DEFAULT_GROUP_LIMIT
            };
            let classes = conjugacy_classes_of_reflections(&gp, &gp, limit)?;
            let report = OracleReport {
                schema: gmdn::report::SCHEMA,
                group: gp.to_string(),
                order: gp.order(),
                reflections: reflections(&gp, limit)?.len(),
                conjugacy_classes: count_conjugacy_classes(&gp, limit)?,
                reflection_classes: classes
                    .iter()
                    .map(|c| OracleClass {
                        label: c.label.to_string(),
                        size: c.elements.len(),
                        representative: c
                            .elements
                            .first()
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                    })
                    .collect(),
            };
            print!("{}", to_json(&report));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
