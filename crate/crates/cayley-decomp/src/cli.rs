//! Command-line front end: build objects from compact tokens or JSON spec
//! files, run the analyses, and emit deterministic JSON reports.
//!
//! Exit codes: 0 = prime, 1 = not prime, 2 = degenerate or refused,
//! 3 = sweep found a disagreement, 4 = error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::analysis::{
    cayley_graph, find_nontrivial_homogeneous, subgroup_criterion, wreath_decompose,
    DecompositionCase, GroupAction, HomogeneityReport, Verdict, WitnessKind, WreathOutcome,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{FiniteGroup, GroupSpec};
use crate::oracle::{brute_force_homogeneous_sets, sweep_generator_sets, SweepMode};
use crate::ring::{
    pair_primitivity, CharacterSpec, FiniteCommRing, MultiplicativeFunction, RingSpec,
};
use crate::ring_graphs::{
    complete_tensor_connectivity, complete_tensor_graph, paley_graph, paley_prime_test,
    ring_cayley, ring_prime_test, unitary_graph, unitary_prime_classification, CertVerdict,
    RingPrimalityCertificate,
};
use crate::spectral::{adjacency_spectrum, Spectrum};

pub const EXIT_PRIME: u8 = 0;
pub const EXIT_NOT_PRIME: u8 = 1;
pub const EXIT_DEGENERATE: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;
pub const EXIT_ERROR: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "cayley", about = "Cayley-graph primality and decomposition toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Primality and decomposition of a graph or a group Cayley graph.
    Analyze(AnalyzeArgs),
    /// Ring-level analyses: Cay(R,S), Paley graphs, unitary graphs.
    Ring(RingArgs),
    /// Fast-path versus brute-force agreement sweeps.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Graph JSON file ({"n":..,"edges":[[u,v],..]}).
    #[arg(long, conflicts_with = "group")]
    pub graph: Option<PathBuf>,
    /// Group token: cyclic:N, dihedral:N, or a GroupSpec JSON file path.
    #[arg(long, requires = "s")]
    pub group: Option<String>,
    /// Connection set, comma-separated element indices (e.g. 1,3).
    #[arg(long)]
    pub s: Option<String>,
    /// Cross-check the verdict against the brute-force oracle.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Ring token Z/n.
    #[arg(long, conflicts_with_all = ["gf", "product", "ring"])]
    pub zmod: Option<usize>,
    /// Galois field: two values P K for GF(P^K).
    #[arg(long, num_args = 2, value_names = ["P", "K"])]
    pub gf: Option<Vec<usize>>,
    /// Product of small rings, comma-separated tokens fQ or zN (e.g. f2,f3).
    #[arg(long, conflicts_with_all = ["ring"])]
    pub product: Option<String>,
    /// RingSpec JSON file path.
    #[arg(long)]
    pub ring: Option<PathBuf>,
    /// Connection set, comma-separated element indices.
    #[arg(long)]
    pub s: Option<String>,
    /// Use the full unit group as the connection set.
    #[arg(long)]
    pub units: bool,
    /// Multiplicative function: principal, power_residue:D, or a
    /// CharacterSpec JSON file path (runs the Paley analysis).
    #[arg(long)]
    pub character: Option<String>,
    /// Run the unitary-graph classification instead of a primality test.
    #[arg(long)]
    pub unitary: bool,
    /// Append the adjacency spectrum and the |R|/2 zero-eigenvalue check.
    #[arg(long)]
    pub spectrum: bool,
    /// Cross-check the verdict against the brute-force oracle.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Family: groups | unitary | paley | tensor.
    #[arg(long)]
    pub family: String,
    /// Cap on group order / ring size for the sweep.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Sample this many cases per group instead of exhausting them.
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (0 = rayon default).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for sampled sweeps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Object-size cap for CLI inputs; `CAYLEY_MAX_ORDER` overrides it.
fn max_order() -> usize {
    std::env::var("CAYLEY_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(crate::group::MAX_ENUMERATION_ORDER)
}

fn check_order(what: &'static str, size: usize) -> Result<()> {
    let cap = max_order();
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// Entry point used by the thin binary; returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    let common = match &cli.command {
        Command::Analyze(a) => &a.common,
        Command::Ring(a) => &a.common,
        Command::Sweep(a) => &a.common,
    };
    if common.jobs > 0 {
        // ignore failure when a global pool already exists (tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(common.jobs)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Ring(args) => cmd_ring(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit<T: Serialize>(out: &Option<PathBuf>, report: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    match out {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => println!("{json}"),
    }
    Ok(())
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidSpec(format!("--s: '{t}' is not an index")))
        })
        .collect()
}

fn parse_group(token: &str) -> Result<FiniteGroup> {
    if let Some(n) = token.strip_prefix("cyclic:") {
        let n = n
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("--group: bad order in '{token}'")))?;
        return FiniteGroup::cyclic(n);
    }
    if let Some(n) = token.strip_prefix("dihedral:") {
        let n = n
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("--group: bad order in '{token}'")))?;
        return FiniteGroup::dihedral(n);
    }
    let text = std::fs::read_to_string(token)?;
    let spec: GroupSpec = serde_json::from_str(&text)?;
    spec.build()
}

fn parse_ring(args: &RingArgs) -> Result<FiniteCommRing> {
    if let Some(n) = args.zmod {
        return FiniteCommRing::zmod(n);
    }
    if let Some(pk) = &args.gf {
        return FiniteCommRing::galois_field(pk[0], pk[1]);
    }
    if let Some(tokens) = &args.product {
        let factors: Vec<FiniteCommRing> = tokens
            .split(',')
            .map(|t| parse_ring_token(t.trim()))
            .collect::<Result<_>>()?;
        return FiniteCommRing::product(factors);
    }
    if let Some(path) = &args.ring {
        let text = std::fs::read_to_string(path)?;
        let spec: RingSpec = serde_json::from_str(&text)?;
        return spec.build();
    }
    Err(Error::InvalidSpec(
        "ring: one of --zmod, --gf, --product, --ring is required".into(),
    ))
}

/// fQ = field with Q elements, zN = Z/N.
fn parse_ring_token(token: &str) -> Result<FiniteCommRing> {
    if let Some(q) = token.strip_prefix('f') {
        let q: usize = q
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("--product: bad token '{token}'")))?;
        let (p, k) = factor_prime_power(q).ok_or_else(|| {
            Error::InvalidSpec(format!("--product: {q} is not a prime power"))
        })?;
        return FiniteCommRing::galois_field(p, k);
    }
    if let Some(n) = token.strip_prefix('z') {
        let n = n
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("--product: bad token '{token}'")))?;
        return FiniteCommRing::zmod(n);
    }
    Err(Error::InvalidSpec(format!(
        "--product: unknown token '{token}' (use fQ or zN)"
    )))
}

fn factor_prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

#[derive(Serialize)]
struct AnalyzeReport {
    input: serde_json::Value,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_kind: Option<WitnessKind>,
    degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleAgreement>,
}

#[derive(Serialize)]
struct DecompositionReport {
    outer: Graph,
    inner: Graph,
    case: DecompositionCase,
    iso: Vec<usize>,
}

#[derive(Serialize)]
struct OracleAgreement {
    agrees: bool,
    sets: Vec<Vec<usize>>,
}

fn report_fields(report: &HomogeneityReport) -> (Verdict, Option<Vec<usize>>, Option<WitnessKind>) {
    (
        report.verdict,
        report.witness.as_ref().map(|w| w.members().to_vec()),
        report.witness_kind,
    )
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8> {
    let (graph, action, input, criterion_witness): (
        Graph,
        Option<GroupAction>,
        serde_json::Value,
        Option<Vec<usize>>,
    ) = if let Some(path) = &args.graph {
        let text = std::fs::read_to_string(path)?;
        let graph: Graph = serde_json::from_str(&text)?;
        check_order("graph vertex count", graph.n())?;
        let input = serde_json::json!({ "graph": graph });
        (graph, None, input, None)
    } else if let Some(token) = &args.group {
        let group = parse_group(token)?;
        check_order("group order", group.order())?;
        let s = parse_indices(args.s.as_deref().unwrap_or(""))?;
        let genset = group.validate_generator_set(&s)?;
        let graph = cayley_graph(&group, &genset);
        let witness = subgroup_criterion(&group, &genset)
            .ok()
            .flatten()
            .map(|h| h.members().to_vec());
        let input = serde_json::json!({ "group": token, "s": genset.members() });
        let action = GroupAction::left_translations(&group);
        (graph, Some(action), input, witness)
    } else {
        return Err(Error::InvalidSpec(
            "analyze: either --graph or --group is required".into(),
        ));
    };

    let homog = find_nontrivial_homogeneous(&graph)?;
    let (verdict, mut witness, mut witness_kind) = report_fields(&homog);
    if let Some(w) = criterion_witness {
        // prefer the subgroup-level witness when the criterion produced one
        witness = Some(w);
        witness_kind = Some(WitnessKind::Subgroup);
    }

    let degenerate = graph.is_complete() || graph.is_cocomplete();
    let decomposition = match wreath_decompose(&graph, action.as_ref())? {
        WreathOutcome::Decomposition(d) => Some(DecompositionReport {
            outer: d.outer,
            inner: d.inner,
            case: d.case,
            iso: d.iso.as_slice().to_vec(),
        }),
        WreathOutcome::Prime | WreathOutcome::Degenerate => None,
    };

    let oracle = if args.oracle {
        let report = brute_force_homogeneous_sets(&graph)?;
        Some(OracleAgreement {
            agrees: report.is_prime == (verdict == Verdict::Prime),
            sets: report
                .all_homogeneous_sets
                .iter()
                .map(|s| s.members().to_vec())
                .collect(),
        })
    } else {
        None
    };

    let report = AnalyzeReport {
        input,
        verdict,
        witness,
        witness_kind,
        degenerate,
        decomposition,
        oracle,
    };
    emit(&args.common.out, &report)?;
    if let Some(o) = &report.oracle {
        if !o.agrees {
            return Ok(EXIT_DISAGREEMENT);
        }
    }
    if degenerate {
        return Ok(EXIT_DEGENERATE);
    }
    Ok(match verdict {
        Verdict::Prime => EXIT_PRIME,
        Verdict::NotPrime => EXIT_NOT_PRIME,
    })
}

#[derive(Serialize)]
struct RingReport {
    ring: RingSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    character: Option<String>,
    verdict: serde_json::Value,
    reason: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_ideal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wreath: Option<WreathReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generic_fallback: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Spectrum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum_check: Option<SpectrumCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleAgreement>,
}

#[derive(Serialize)]
struct WreathReport {
    quotient: Graph,
    cocomplete: usize,
}

#[derive(Serialize)]
struct SpectrumCheck {
    zero_multiplicity: usize,
    bound: f64,
    holds: bool,
}

fn cert_exit(cert: &RingPrimalityCertificate) -> u8 {
    match cert.verdict {
        CertVerdict::Prime => EXIT_PRIME,
        CertVerdict::NotPrime => EXIT_NOT_PRIME,
        CertVerdict::HypothesesNotMet => EXIT_DEGENERATE,
    }
}

fn parse_character(
    token: &str,
    ring: &FiniteCommRing,
) -> Result<MultiplicativeFunction> {
    if token == "principal" {
        return Ok(MultiplicativeFunction::principal(ring));
    }
    if let Some(d) = token.strip_prefix("power_residue:") {
        let d = d
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("--character: bad order in '{token}'")))?;
        return MultiplicativeFunction::power_residue(ring, d);
    }
    let text = std::fs::read_to_string(token)?;
    let spec: CharacterSpec = serde_json::from_str(&text)?;
    spec.build(ring)
}

fn cmd_ring(args: RingArgs) -> Result<u8> {
    let ring = parse_ring(&args)?;
    check_order("ring size", ring.size())?;
    let spec = RingSpec::of(&ring);

    // unitary classification mode
    if args.unitary {
        let class = unitary_prime_classification(&ring);
        let graph = unitary_graph(&ring);
        let mut report = RingReport {
            ring: spec,
            s: Some(ring.units()),
            character: None,
            verdict: serde_json::json!(if class.prime { "prime" } else { "not-prime" }),
            reason: serde_json::json!("classification-rule"),
            witness_ideal: None,
            wreath: None,
            classification: Some(serde_json::to_value(&class)?),
            generic_fallback: None,
            spectrum: None,
            spectrum_check: None,
            oracle: None,
        };
        if args.spectrum {
            report.spectrum = Some(adjacency_spectrum(&graph)?);
        }
        if args.oracle {
            let oracle = brute_force_homogeneous_sets(&graph)?;
            report.oracle = Some(OracleAgreement {
                agrees: oracle.is_prime == class.prime,
                sets: oracle
                    .all_homogeneous_sets
                    .iter()
                    .map(|s| s.members().to_vec())
                    .collect(),
            });
        }
        emit(&args.common.out, &report)?;
        if let Some(o) = &report.oracle {
            if !o.agrees {
                return Ok(EXIT_DISAGREEMENT);
            }
        }
        return Ok(if class.prime { EXIT_PRIME } else { EXIT_NOT_PRIME });
    }

    // Paley mode
    if let Some(token) = &args.character {
        let psi = parse_character(token, &ring)?;
        let cert = paley_prime_test(&psi)?;
        let graph = paley_graph(&psi)?;
        let mut report = build_cert_report(spec, Some(psi.kernel()), Some(token.clone()), &cert);
        if args.spectrum {
            report.spectrum = Some(adjacency_spectrum(&graph)?);
        }
        attach_oracle(&mut report, &graph, &cert, args.oracle)?;
        emit(&args.common.out, &report)?;
        if let Some(o) = &report.oracle {
            if !o.agrees {
                return Ok(EXIT_DISAGREEMENT);
            }
        }
        return Ok(cert_exit(&cert));
    }

    // Cay(R,S) mode
    let s = if args.units {
        ring.units()
    } else if let Some(s) = &args.s {
        parse_indices(s)?
    } else {
        return Err(Error::InvalidSpec(
            "ring: one of --s, --units, --character, --unitary is required".into(),
        ));
    };
    let s = ring.validate_unit_subgroup(&s)?;
    let cert = ring_prime_test(&ring, &s)?;
    let graph = ring_cayley(&ring, &s)?;
    let mut report = build_cert_report(spec, Some(s.clone()), None, &cert);

    if cert.verdict == CertVerdict::HypothesesNotMet {
        // structural refusal: offer the generic graph-level verdict
        let homog = find_nontrivial_homogeneous(&graph)?;
        report.generic_fallback = Some(serde_json::json!({
            "verdict": homog.verdict,
            "witness": homog.witness.as_ref().map(|w| w.members().to_vec()),
        }));
    }
    if args.spectrum {
        report.spectrum = Some(adjacency_spectrum(&graph)?);
        if cert.verdict == CertVerdict::NotPrime {
            let spectrum = report.spectrum.as_ref().unwrap();
            let zero = spectrum.multiplicity_of(0.0);
            let bound = ring.size() as f64 / 2.0;
            report.spectrum_check = Some(SpectrumCheck {
                zero_multiplicity: zero,
                bound,
                holds: zero as f64 >= bound,
            });
        }
    }
    attach_oracle(&mut report, &graph, &cert, args.oracle)?;
    emit(&args.common.out, &report)?;
    if let Some(o) = &report.oracle {
        if !o.agrees {
            return Ok(EXIT_DISAGREEMENT);
        }
    }
    Ok(cert_exit(&cert))
}

fn build_cert_report(
    ring: RingSpec,
    s: Option<Vec<usize>>,
    character: Option<String>,
    cert: &RingPrimalityCertificate,
) -> RingReport {
    RingReport {
        ring,
        s,
        character,
        verdict: serde_json::to_value(cert.verdict).unwrap(),
        reason: serde_json::to_value(cert.reason).unwrap(),
        witness_ideal: cert.witness_ideal.as_ref().map(|i| i.members().to_vec()),
        wreath: cert.wreath_form.as_ref().map(|w| WreathReport {
            quotient: w.quotient.clone(),
            cocomplete: w.cocomplete,
        }),
        classification: None,
        generic_fallback: None,
        spectrum: None,
        spectrum_check: None,
        oracle: None,
    }
}

fn attach_oracle(
    report: &mut RingReport,
    graph: &Graph,
    cert: &RingPrimalityCertificate,
    enabled: bool,
) -> Result<()> {
    if !enabled {
        return Ok(());
    }
    let oracle = brute_force_homogeneous_sets(graph)?;
    let agrees = match cert.verdict {
        CertVerdict::Prime => oracle.is_prime,
        CertVerdict::NotPrime => !oracle.is_prime,
        CertVerdict::HypothesesNotMet => true, // no fast-path claim to check
    };
    report.oracle = Some(OracleAgreement {
        agrees,
        sets: oracle
            .all_homogeneous_sets
            .iter()
            .map(|s| s.members().to_vec())
            .collect(),
    });
    Ok(())
}

#[derive(Serialize)]
struct SweepOutcome {
    family: String,
    cases: usize,
    disagreements: Vec<serde_json::Value>,
}

fn cmd_sweep(args: SweepArgs) -> Result<u8> {
    let outcome = match args.family.as_str() {
        "groups" => sweep_groups(&args)?,
        "unitary" => sweep_unitary(&args)?,
        "paley" => sweep_paley(&args)?,
        "tensor" => sweep_tensor(&args)?,
        other => {
            return Err(Error::InvalidSpec(format!(
                "sweep: unknown family '{other}' (groups|unitary|paley|tensor)"
            )))
        }
    };
    emit(&args.common.out, &outcome)?;
    Ok(if outcome.disagreements.is_empty() {
        EXIT_PRIME
    } else {
        EXIT_DISAGREEMENT
    })
}

/// Subgroup criterion versus oracle over all symmetric connection sets of
/// small cyclic and dihedral groups.
fn sweep_groups(args: &SweepArgs) -> Result<SweepOutcome> {
    let cap = args.max_order.unwrap_or(12).min(crate::oracle::MAX_SWEEP_ORDER);
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 2..=cap {
        groups.push((format!("cyclic:{n}"), FiniteGroup::cyclic(n)?));
    }
    for n in 3..=(cap / 2) {
        groups.push((format!("dihedral:{n}"), FiniteGroup::dihedral(n)?));
    }
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for (name, g) in groups {
        let mode = match args.samples {
            Some(count) => SweepMode::Sample {
                count,
                seed: args.common.seed,
            },
            None => SweepMode::Exhaustive,
        };
        let report = sweep_generator_sets(&g, mode)?;
        cases += report.cases;
        for c in report.disagreements {
            disagreements.push(serde_json::json!({
                "group": name,
                "s": c.s,
                "criterion_witness": c.criterion_witness,
                "oracle_sets": c.oracle_sets,
            }));
        }
    }
    Ok(SweepOutcome {
        family: "groups".into(),
        cases,
        disagreements,
    })
}

/// Unitary classification versus oracle for Z/n.
fn sweep_unitary(args: &SweepArgs) -> Result<SweepOutcome> {
    let cap = args.max_order.unwrap_or(20).min(crate::oracle::MAX_ORACLE_UNDIRECTED);
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for n in 2..=cap {
        let ring = FiniteCommRing::zmod(n)?;
        let class = unitary_prime_classification(&ring);
        let oracle = brute_force_homogeneous_sets(&unitary_graph(&ring))?;
        cases += 1;
        if class.prime != oracle.is_prime {
            disagreements.push(serde_json::json!({
                "ring": format!("z{n}"),
                "rule": class.prime,
                "oracle": oracle.is_prime,
            }));
        }
    }
    Ok(SweepOutcome {
        family: "unitary".into(),
        cases,
        disagreements,
    })
}

/// Paley fast path versus oracle over even power-residue characters.
fn sweep_paley(args: &SweepArgs) -> Result<SweepOutcome> {
    let cap = args.max_order.unwrap_or(13).min(crate::oracle::MAX_ORACLE_UNDIRECTED);
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for q in 2..=cap {
        let Some((p, k)) = factor_prime_power(q) else {
            continue;
        };
        let field = FiniteCommRing::galois_field(p, k)?;
        for d in 1..=(q - 1) {
            if (q - 1) % d != 0 {
                continue;
            }
            let psi = MultiplicativeFunction::power_residue(&field, d)?;
            if !psi.is_even() {
                continue;
            }
            let cert = paley_prime_test(&psi)?;
            if cert.verdict == CertVerdict::HypothesesNotMet {
                continue;
            }
            let oracle = brute_force_homogeneous_sets(&paley_graph(&psi)?)?;
            cases += 1;
            let fast_prime = cert.verdict == CertVerdict::Prime;
            if fast_prime != oracle.is_prime {
                disagreements.push(serde_json::json!({
                    "q": q,
                    "d": d,
                    "fast": fast_prime,
                    "oracle": oracle.is_prime,
                }));
            }
        }
    }
    Ok(SweepOutcome {
        family: "paley".into(),
        cases,
        disagreements,
    })
}

/// Connectivity rule for tensors of complete graphs versus BFS.
fn sweep_tensor(args: &SweepArgs) -> Result<SweepOutcome> {
    let cap = args.max_order.unwrap_or(64).min(64);
    let mut cases = 0;
    let mut disagreements = Vec::new();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    fn extend(prefix: Vec<usize>, cap: usize, out: &mut Vec<Vec<usize>>) {
        let product: usize = prefix.iter().product();
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let start = *prefix.last().unwrap_or(&2);
        for next in start..=cap {
            if product * next > cap {
                break;
            }
            let mut p = prefix.clone();
            p.push(next);
            extend(p, cap, out);
        }
    }
    extend(Vec::new(), cap, &mut tuples);
    for sizes in tuples {
        cases += 1;
        let rule = complete_tensor_connectivity(&sizes)?;
        let bfs = complete_tensor_graph(&sizes)?.is_connected();
        if rule != bfs {
            disagreements.push(serde_json::json!({ "sizes": sizes, "rule": rule, "bfs": bfs }));
        }
    }
    Ok(SweepOutcome {
        family: "tensor".into(),
        cases,
        disagreements,
    })
}

// keep the pair-primitivity symbol exercised from the CLI surface for
// diagnostics in reports produced by ring_prime_test
#[allow(dead_code)]
fn _pair_witness(ring: &FiniteCommRing, s: &[usize]) -> Result<Option<Vec<usize>>> {
    Ok(pair_primitivity(ring, s)?.map(|i| i.members().to_vec()))
}
