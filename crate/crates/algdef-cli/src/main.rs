//! `algdef` — command-line front end for the exact deformation engine.
//!
//! Every subcommand prints a single JSON report on standard output and
//! exits with 0 (all checks passed), 1 (a check failed; the report is
//! still emitted with diagnostics) or 2 (malformed input). Reports are
//! byte-identical across runs; timing is only included behind `--timing`.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use algdef::algstruct::FDAlgebra;
use algdef::contraction::{
    build_contraction, d_certificate, dinfty_coincidence, discrepancy_notes, expected_invariants,
    generator_element, matrix_block_bound, obstruction_solver, reproduce, semisimple_target,
    spanning_words, standard_alphabet, a_certificate, BlockBound, ContractionSpec, DIndex, Report,
};
use algdef::exactnum::Rat;
use algdef::families::{
    fiber_blocks, verify_family, BlockClaim, CertEdge, Certificate, PolyFamily,
};
use algdef::hochschild::{hochschild_dims_with_budget, DEFAULT_ENTRY_BUDGET};
use algdef::ncgb::{quotient_structure_constants, RewritingSystem};
use algdef::wedderburn::{geometric_type, radical, semisimple_quotient, GeometricType};

use input::{
    algebra_preset, family_preset, file_family, file_system, parse_m, parse_presentation_file,
    parse_rat, preset_algebra, AlgebraPreset, PresentationFile,
};

#[derive(Parser)]
#[command(name = "algdef", version, about = "Exact deformation analysis of presented algebras")]
struct Cli {
    /// Include elapsed wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Seed for the sampled basis-change checks (accepted for
    /// reproducibility; all other computations are deterministic).
    #[arg(long, global = true, default_value = "0")]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewriting-system checks on a presentation.
    Gb {
        #[command(subcommand)]
        action: GbAction,
    },
    /// Invariants of the presented quotient algebra.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// One-parameter deformation families and certificates.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Enumerate the semisimple algebras compatible with the dimension,
    /// centre and nilpotency constraints.
    Obstruct(ObstructArgs),
    /// Full pipeline for one contraction algebra (or a range): invariants,
    /// obstruction uniqueness and a verified deformation certificate.
    Reproduce(ReproduceArgs),
    /// Check that the infinite-index algebra coincides with the finite one
    /// for m >= 2n.
    DinftyCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum GbAction {
    /// Verify confluence of the full relation set and the quotient size.
    Verify(SourceArgs),
    /// Complete the generating relations and report the discovered rules.
    Complete(SourceArgs),
}

#[derive(Subcommand)]
enum AlgebraAction {
    /// Dimension, centre, radical and structure verification.
    Info(SourceArgs),
    /// Radical, simple blocks and geometric type.
    Wedderburn(SourceArgs),
    /// Hochschild cohomology dimensions via the bar complex.
    Hochschild {
        #[command(flatten)]
        source: SourceArgs,
        /// Highest cohomological degree to compute.
        #[arg(long, default_value = "2")]
        kmax: usize,
        /// Coboundary-matrix entry budget; required beyond kmax = 3.
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Check flatness evidence: polynomial structure constants and the
    /// associativity/unit identities in the parameter.
    Verify(FamilySourceArgs),
    /// Specialize the family at a parameter value and analyse the fiber.
    Fiber {
        #[command(flatten)]
        source: FamilySourceArgs,
        /// Parameter value, a rational p/q.
        #[arg(long)]
        at: String,
    },
    /// Build and verify the deformation certificate of a contraction
    /// algebra.
    Certify(SpecArgs),
}

/// An algebra source: a builtin preset (`--preset d 2 2`, `--preset a 4`,
/// `--preset a2`) or a presentation file.
#[derive(Args)]
struct SourceArgs {
    #[arg(long, num_args = 1..=3)]
    preset: Vec<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

/// A family source: a builtin preset (`--preset a2`, `--preset dn1 2`,
/// `--preset induction 2 2`) or a family file with a `parameter:` line.
#[derive(Args)]
struct FamilySourceArgs {
    #[arg(long, num_args = 1..=3)]
    preset: Vec<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

/// A contraction algebra named by type and indices.
#[derive(Args)]
struct SpecArgs {
    /// `a` or `d`.
    #[arg(long = "type")]
    typ: String,
    #[arg(long)]
    n: usize,
    /// Index m (number or `inf`); type d only.
    #[arg(long)]
    m: Option<String>,
}

#[derive(Args)]
struct ObstructArgs {
    /// `a` or `d`: take the constraints from the tabulated invariants.
    #[arg(long = "type")]
    typ: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<String>,
    /// Explicit constraints instead of a preset.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    centre: Option<usize>,
    #[arg(long)]
    nilpotency: Option<usize>,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(long = "type")]
    typ: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<String>,
    /// Inclusive index range `LO..HI`: run every D cell with LO <= n, m <= HI.
    #[arg(long)]
    range: Option<String>,
}

/// Input problems exit with code 2 and a message on standard error.
struct InputError(String);

type CmdResult = Result<(Value, bool), InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = run(&cli);
    match outcome {
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok((body, passed)) => {
            let mut report = Map::new();
            report.insert("schema_version".into(), json!(1));
            report.insert("command".into(), json!(echo.join(" ")));
            if let Value::Object(fields) = body {
                for (k, v) in fields {
                    report.insert(k, v);
                }
            }
            report.insert("passed".into(), json!(passed));
            if cli.timing {
                report.insert("timing_ms".into(), json!(start.elapsed().as_millis() as u64));
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(report)).unwrap());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Gb { action } => match action {
            GbAction::Verify(src) => gb_verify(src),
            GbAction::Complete(src) => gb_complete(src),
        },
        Command::Algebra { action } => match action {
            AlgebraAction::Info(src) => algebra_info(src),
            AlgebraAction::Wedderburn(src) => algebra_wedderburn(src),
            AlgebraAction::Hochschild { source, kmax, budget } => {
                algebra_hochschild(source, *kmax, *budget)
            }
        },
        Command::Family { action } => match action {
            FamilyAction::Verify(src) => family_verify_cmd(src),
            FamilyAction::Fiber { source, at } => family_fiber(source, at),
            FamilyAction::Certify(spec) => family_certify(spec),
        },
        Command::Obstruct(args) => obstruct(args),
        Command::Reproduce(args) => reproduce_cmd(args),
        Command::DinftyCheck { n, m } => dinfty_check(*n, *m),
    }
}

// ---------------------------------------------------------------- sources

fn load_file(path: &PathBuf) -> Result<PresentationFile, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_presentation_file(&text)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

enum AlgebraSource {
    Preset(AlgebraPreset),
    File(String, PresentationFile),
}

fn resolve_algebra_source(src: &SourceArgs) -> Result<AlgebraSource, InputError> {
    match (&src.preset[..], &src.file) {
        ([], Some(path)) => {
            let file = load_file(path)?;
            Ok(AlgebraSource::File(path.display().to_string(), file))
        }
        (words, None) if !words.is_empty() => algebra_preset(words)
            .map(AlgebraSource::Preset)
            .map_err(InputError),
        _ => Err(InputError("give exactly one of --preset and --file".into())),
    }
}

impl AlgebraSource {
    fn name(&self) -> String {
        match self {
            AlgebraSource::Preset(p) => p.name.clone(),
            AlgebraSource::File(name, _) => name.clone(),
        }
    }

    fn spec(&self) -> Option<&ContractionSpec> {
        match self {
            AlgebraSource::Preset(p) => p.spec.as_ref(),
            AlgebraSource::File(..) => None,
        }
    }

    /// Generating relations (un-completed) as a rewriting system.
    fn generating_system(&self) -> Result<RewritingSystem<Rat>, InputError> {
        match self {
            AlgebraSource::Preset(p) => {
                let relations =
                    algdef::contraction::parse_relations(&p.relations).map_err(|e| InputError(e.to_string()))?;
                let order = algdef::ncgb::WeightedDeglexOrder::heavy_last(
                    p.alphabet.len(),
                    p.degree_bound,
                );
                RewritingSystem::new(relations, order, p.degree_bound, p.alphabet.len())
                    .map_err(|e| InputError(e.to_string()))
            }
            AlgebraSource::File(name, f) => file_system(f)
                .map_err(|e| InputError(format!("{name}: {e}"))),
        }
    }

    fn alphabet(&self) -> Vec<String> {
        match self {
            AlgebraSource::Preset(p) => p.alphabet.clone(),
            AlgebraSource::File(_, f) => f.generators.clone(),
        }
    }

    /// The completed quotient algebra.
    fn algebra(&self) -> Result<(FDAlgebra<Rat>, RewritingSystem<Rat>), InputError> {
        match self {
            AlgebraSource::Preset(p) => preset_algebra(p).map_err(InputError),
            AlgebraSource::File(name, _) => {
                let sys = self
                    .generating_system()?
                    .complete()
                    .map_err(|e| InputError(format!("{name}: {e}")))?;
                let algebra = quotient_structure_constants(&sys, &self.alphabet())
                    .map_err(|e| InputError(format!("{name}: {e}")))?;
                Ok((algebra, sys))
            }
        }
    }
}

fn resolve_family(src: &FamilySourceArgs) -> Result<PolyFamily, InputError> {
    match (&src.preset[..], &src.file) {
        ([], Some(path)) => {
            let file = load_file(path)?;
            file_family(&file, &path.display().to_string())
                .map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        (words, None) if !words.is_empty() => family_preset(words).map_err(InputError),
        _ => Err(InputError("give exactly one of --preset and --file".into())),
    }
}

fn spec_from_args(typ: &str, n: usize, m: Option<&str>) -> Result<ContractionSpec, InputError> {
    match typ {
        "a" => Ok(ContractionSpec::a(n)),
        "d" => {
            let m = m.ok_or_else(|| InputError("type d needs --m".into()))?;
            match parse_m(m).map_err(InputError)? {
                DIndex::Finite(m) => Ok(ContractionSpec::d(n, m)),
                DIndex::Infinite => Ok(ContractionSpec::d_infinite(n)),
            }
        }
        other => Err(InputError(format!("unknown type `{other}` (a or d)"))),
    }
}

// ---------------------------------------------------------------- rendering

fn gt_json(g: &GeometricType) -> Value {
    let mut map = Map::new();
    for (size, count) in g.counts() {
        map.insert(size.to_string(), json!(count));
    }
    Value::Object(map)
}

fn rules_json(sys: &RewritingSystem<Rat>, alphabet: &[String]) -> Value {
    json!(sys
        .rules()
        .iter()
        .map(|r| r.lead.display(alphabet).to_string())
        .collect::<Vec<_>>())
}

fn notes_json(spec: Option<&ContractionSpec>) -> Value {
    match spec {
        Some(s) => json!(discrepancy_notes(s)),
        None => json!([]),
    }
}

fn claim_label(c: &BlockClaim) -> String {
    match c {
        BlockClaim::Semisimple { expected } => format!("semisimple {expected}"),
        BlockClaim::Presented { name, .. } => name.clone(),
    }
}

fn edge_json(e: &CertEdge) -> Value {
    json!({
        "source": e.source_name,
        "family": e.family.name(),
        "sample_points": e.sample_points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "claims": e.claims.iter().map(claim_label).collect::<Vec<_>>(),
        "identity_images": e.source_images.is_none(),
        "evidence": e.evidence.iter().map(|ev| json!({
            "lambda": ev.lambda.to_string(),
            "block_dims": ev.block_dims,
        })).collect::<Vec<_>>(),
    })
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "source": c.source_name,
        "target": gt_json(&c.target),
        "target_display": c.target.to_string(),
        "edges": c.edges.iter().map(edge_json).collect::<Vec<_>>(),
        "notes": c.notes,
    })
}

fn report_json(r: &Report) -> Value {
    json!({
        "spec": r.spec.to_string(),
        "stages": r.stages.iter().map(|s| json!({
            "stage": s.stage,
            "passed": s.passed,
            "detail": s.detail,
        })).collect::<Vec<_>>(),
        "expected": {
            "dim": r.expected.dim,
            "centre_dim": r.expected.centre_dim,
            "gb_added": r.expected.gb_added,
            "nilpotency": {"witness": r.expected.nilpotency_witness.0,
                           "index": r.expected.nilpotency_witness.1},
        },
        "computed": r.computed.as_ref().map(|c| json!({
            "dim": c.dim,
            "centre_dim": c.centre_dim,
            "nilpotency": c.nilpotency,
            "gb_added_present": c.gb_added_present,
        })),
        "obstruction_pairs": r.obstruction_pairs,
        "unique": r.unique,
        "target": gt_json(&r.target),
        "target_display": r.target.to_string(),
        "certificate": r.certificate.as_ref().map(certificate_json),
        "certificate_matches": r.certificate_matches,
        "discrepancy_notes": r.discrepancy_notes,
        "report_passed": r.passed(),
    })
}

// ---------------------------------------------------------------- commands

fn gb_verify(src: &SourceArgs) -> CmdResult {
    let source = resolve_algebra_source(src)?;
    let alphabet = source.alphabet();
    // the full standard basis: generating relations plus the tabulated
    // completion output for the contraction presets
    let sys = match &source {
        AlgebraSource::Preset(p) => {
            let mut texts = p.relations.clone();
            if let Some(spec) = &p.spec {
                texts.extend(expected_invariants(spec).gb_added);
            }
            let relations = algdef::contraction::parse_relations(&texts)
                .map_err(|e| InputError(e.to_string()))?;
            let order =
                algdef::ncgb::WeightedDeglexOrder::heavy_last(alphabet.len(), p.degree_bound);
            RewritingSystem::new(relations, order, p.degree_bound, alphabet.len())
                .map_err(|e| InputError(e.to_string()))?
        }
        AlgebraSource::File(..) => source.generating_system()?,
    };
    let confluent = match sys.verify_confluent() {
        Ok(c) => c,
        Err(e) => {
            return Ok((
                json!({"source": source.name(), "error": e.to_string()}),
                false,
            ))
        }
    };
    let mut body = Map::new();
    body.insert("source".into(), json!(source.name()));
    body.insert("confluent".into(), json!(confluent));
    body.insert("rules".into(), rules_json(&sys, &alphabet));
    let mut passed = confluent;
    match quotient_structure_constants(&sys, &alphabet) {
        Ok(a) => {
            body.insert("dim".into(), json!(a.dim()));
            body.insert("centre_dim".into(), json!(a.centre().dim()));
            if let Some(spec) = source.spec() {
                let expected = expected_invariants(spec);
                passed = passed
                    && a.dim() == expected.dim
                    && a.centre().dim() == expected.centre_dim;
                body.insert(
                    "expected".into(),
                    json!({"dim": expected.dim, "centre_dim": expected.centre_dim}),
                );
            }
        }
        Err(e) => {
            body.insert("dim".into(), Value::Null);
            body.insert("dim_error".into(), json!(e.to_string()));
        }
    }
    body.insert("discrepancy_notes".into(), notes_json(source.spec()));
    Ok((Value::Object(body), passed))
}

fn gb_complete(src: &SourceArgs) -> CmdResult {
    let source = resolve_algebra_source(src)?;
    let alphabet = source.alphabet();
    let initial = source.generating_system()?;
    let initial_leads: Vec<String> = initial
        .rules()
        .iter()
        .map(|r| r.lead.display(&alphabet).to_string())
        .collect();
    let completed = match initial.complete() {
        Ok(c) => c,
        Err(e) => {
            return Ok((
                json!({"source": source.name(), "error": e.to_string()}),
                false,
            ))
        }
    };
    let added: Vec<String> = completed
        .rules()
        .iter()
        .map(|r| r.lead.display(&alphabet).to_string())
        .filter(|lead| !initial_leads.contains(lead))
        .collect();
    let mut body = Map::new();
    body.insert("source".into(), json!(source.name()));
    body.insert("initial_rules".into(), json!(initial_leads));
    body.insert("added_rules".into(), json!(added));
    body.insert("rules".into(), rules_json(&completed, &alphabet));
    let mut passed = true;
    if let Some(spec) = source.spec() {
        let expected = expected_invariants(spec);
        let discovered = expected.gb_added.iter().all(|w| added.contains(w));
        body.insert("expected_added".into(), json!(expected.gb_added));
        body.insert("discovered".into(), json!(discovered));
        passed = discovered;
    }
    match quotient_structure_constants(&completed, &alphabet) {
        Ok(a) => {
            body.insert("dim".into(), json!(a.dim()));
        }
        Err(e) => {
            body.insert("dim".into(), Value::Null);
            body.insert("dim_error".into(), json!(e.to_string()));
        }
    }
    body.insert("discrepancy_notes".into(), notes_json(source.spec()));
    Ok((Value::Object(body), passed))
}

fn algebra_info(src: &SourceArgs) -> CmdResult {
    let source = resolve_algebra_source(src)?;
    let (algebra, _sys) = source.algebra()?;
    let structure_ok = algebra.verify_structure();
    let centre_dim = algebra.centre().dim();
    let radical_dim = radical(&algebra).dim();
    let mut body = Map::new();
    body.insert("source".into(), json!(source.name()));
    body.insert("dim".into(), json!(algebra.dim()));
    body.insert("centre_dim".into(), json!(centre_dim));
    body.insert("radical_dim".into(), json!(radical_dim));
    body.insert("structure_verified".into(), json!(structure_ok));
    body.insert("basis".into(), json!(algebra.basis_labels()));
    let mut passed = structure_ok;
    if let Some(spec) = source.spec() {
        let expected = expected_invariants(spec);
        let witness = generator_element(&algebra, &expected.nilpotency_witness.0);
        let nilpotency = algebra.nilpotency_index(&witness).ok();
        let matches = algebra.dim() == expected.dim
            && centre_dim == expected.centre_dim
            && nilpotency == Some(expected.nilpotency_witness.1);
        body.insert(
            "nilpotency".into(),
            json!({"witness": expected.nilpotency_witness.0, "index": nilpotency}),
        );
        body.insert(
            "expected".into(),
            json!({"dim": expected.dim, "centre_dim": expected.centre_dim,
                   "nilpotency": expected.nilpotency_witness.1}),
        );
        body.insert("matches_expected".into(), json!(matches));
        passed = passed && matches;
    }
    body.insert("discrepancy_notes".into(), notes_json(source.spec()));
    Ok((Value::Object(body), passed))
}

fn algebra_wedderburn(src: &SourceArgs) -> CmdResult {
    let source = resolve_algebra_source(src)?;
    let (algebra, _) = source.algebra()?;
    let radical_dim = radical(&algebra).dim();
    let ss = semisimple_quotient(&algebra);
    let gt = geometric_type(&ss).map_err(|e| InputError(e.to_string()))?;
    let blocks = fiber_blocks(&ss).map_err(|e| InputError(e.to_string()))?;
    let body = json!({
        "source": source.name(),
        "dim": algebra.dim(),
        "radical_dim": radical_dim,
        "semisimple": radical_dim == 0,
        "block_dims": blocks.iter().map(|b| b.algebra.dim()).collect::<Vec<_>>(),
        "geometric_type": gt_json(&gt),
        "geometric_type_display": gt.to_string(),
        "discrepancy_notes": notes_json(source.spec()),
    });
    Ok((body, true))
}

fn algebra_hochschild(src: &SourceArgs, kmax: usize, budget: Option<usize>) -> CmdResult {
    if kmax > 3 && budget.is_none() {
        return Err(InputError(
            "kmax > 3 needs an explicit --budget (cost guard)".into(),
        ));
    }
    let source = resolve_algebra_source(src)?;
    let (algebra, _) = source.algebra()?;
    let report = hochschild_dims_with_budget(&algebra, kmax, budget.unwrap_or(DEFAULT_ENTRY_BUDGET))
        .map_err(|e| InputError(e.to_string()))?;
    let centre_dim = algebra.centre().dim();
    let hh0_matches = report.dims[0] == centre_dim;
    let mut body = Map::new();
    body.insert("source".into(), json!(source.name()));
    body.insert("dim".into(), json!(algebra.dim()));
    body.insert("k_max".into(), json!(report.k_max));
    body.insert("dims".into(), json!(report.dims));
    body.insert("cochain_dims".into(), json!(report.cochain_dims));
    body.insert("centre_dim".into(), json!(centre_dim));
    body.insert("hh0_matches_centre".into(), json!(hh0_matches));
    if kmax >= 2 {
        let equal = report.dims[1] == report.dims[2];
        body.insert("tangent_obstruction_equal".into(), json!(equal));
        if !equal {
            // a finding, not a failure: no reference values exist
            body.insert(
                "finding".into(),
                json!(format!(
                    "dim HH1 = {} differs from dim HH2 = {}",
                    report.dims[1], report.dims[2]
                )),
            );
        }
    }
    body.insert("discrepancy_notes".into(), notes_json(source.spec()));
    Ok((Value::Object(body), hh0_matches))
}

fn family_verify_cmd(src: &FamilySourceArgs) -> CmdResult {
    let family = resolve_family(src)?;
    let associative = verify_family(&family);
    let body = json!({
        "family": family.name(),
        "rank": family.dim(),
        "parameter": family.parameter(),
        "excluded_points": family.excluded_points().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "polynomial_structure_constants": true,
        "associative_identity": associative,
    });
    Ok((body, associative))
}

fn family_fiber(src: &FamilySourceArgs, at: &str) -> CmdResult {
    let family = resolve_family(src)?;
    let lambda = parse_rat(at).map_err(InputError)?;
    if family.excluded_points().contains(&lambda) {
        let body = json!({
            "family": family.name(),
            "at": lambda.to_string(),
            "error": format!(
                "parameter value {lambda} is excluded for family {}: the fiber evidence fails there",
                family.name()
            ),
            "excluded_points": family.excluded_points().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        });
        return Ok((body, false));
    }
    let fiber = match family.fiber_from_rules(&lambda) {
        Ok(f) => f,
        Err(e) => {
            let body = json!({
                "family": family.name(),
                "at": lambda.to_string(),
                "error": format!("specialization failed: {e}"),
            });
            return Ok((body, false));
        }
    };
    let radical_dim = radical(&fiber).dim();
    let ss = semisimple_quotient(&fiber);
    let gt = geometric_type(&ss).map_err(|e| InputError(e.to_string()))?;
    let body = json!({
        "family": family.name(),
        "at": lambda.to_string(),
        "dim": fiber.dim(),
        "radical_dim": radical_dim,
        "semisimple": radical_dim == 0,
        "geometric_type": gt_json(&gt),
        "geometric_type_display": gt.to_string(),
    });
    Ok((body, true))
}

fn family_certify(spec: &SpecArgs) -> CmdResult {
    let spec = spec_from_args(&spec.typ, spec.n, spec.m.as_deref())?;
    let result = match spec {
        ContractionSpec::A { n } => a_certificate(n),
        ContractionSpec::D { n, m } => d_certificate(n, m, false),
    };
    let certificate = match result {
        Ok(c) => c,
        Err(e) => {
            return Ok((
                json!({"spec": spec.to_string(), "error": e.to_string()}),
                false,
            ))
        }
    };
    let target = semisimple_target(&spec);
    let matches = certificate.target == target;
    let body = json!({
        "spec": spec.to_string(),
        "certificate": certificate_json(&certificate),
        "expected_target": gt_json(&target),
        "matches_expected_target": matches,
        "discrepancy_notes": discrepancy_notes(&spec),
    });
    Ok((body, matches))
}

fn obstruct(args: &ObstructArgs) -> CmdResult {
    let mut body = Map::new();
    let (d, z, p) = match &args.typ {
        Some(typ) => {
            let n = args.n.ok_or_else(|| InputError("--type needs --n".into()))?;
            let spec = spec_from_args(typ, n, args.m.as_deref())?;
            let expected = expected_invariants(&spec);
            body.insert("spec".into(), json!(spec.to_string()));
            // the spanning argument bounding matrix blocks by 2, checked on
            // the actual algebra
            let (algebra, _) =
                build_contraction(&spec).map_err(|e| InputError(e.to_string()))?;
            let alphabet = standard_alphabet();
            let x = generator_element(&algebra, "x");
            let y = generator_element(&algebra, "y");
            let bound = matrix_block_bound(&algebra, &x, &y);
            body.insert(
                "block_bound_two".into(),
                json!(bound == BlockBound::BoundTwo),
            );
            body.insert(
                "spanning_words".into(),
                json!(spanning_words(algebra.dim())
                    .iter()
                    .map(|w| w.display(&alphabet).to_string())
                    .collect::<Vec<_>>()),
            );
            body.insert(
                "expected_target".into(),
                gt_json(&semisimple_target(&spec)),
            );
            (expected.dim, expected.centre_dim, expected.nilpotency_witness.1)
        }
        None => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| InputError(format!("missing --{name} (or use --type)")))
            };
            (
                need(args.dim, "dim")?,
                need(args.centre, "centre")?,
                need(args.nilpotency, "nilpotency")?,
            )
        }
    };
    let pairs = obstruction_solver(d, z, p);
    let unique = pairs.len() == 1;
    body.insert(
        "constraints".into(),
        json!({"dim": d, "centre_dim": z, "nilpotency": p}),
    );
    body.insert("pairs".into(), json!(pairs));
    body.insert("unique".into(), json!(unique));
    if let Some((k, l)) = pairs.first().filter(|_| unique) {
        let mut target = GeometricType::from_pairs(&[]);
        if *k > 0 {
            target.add_block(2, *k);
        }
        if *l > 0 {
            target.add_block(1, *l);
        }
        body.insert("target".into(), gt_json(&target));
        body.insert("target_display".into(), json!(target.to_string()));
    }
    Ok((Value::Object(body), unique))
}

fn reproduce_cmd(args: &ReproduceArgs) -> CmdResult {
    if let Some(range) = &args.range {
        let (lo, hi) = range
            .split_once("..")
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .ok_or_else(|| InputError(format!("malformed range `{range}` (LO..HI)")))?;
        if lo < 1 || hi < lo {
            return Err(InputError(format!("empty or invalid range `{range}`")));
        }
        let cells: Vec<(usize, usize)> = (lo..=hi)
            .flat_map(|n| (lo..=hi).map(move |m| (n, m)))
            .collect();
        // independent cells in parallel, merged back in (n, m) order
        let reports: Vec<Report> = cells
            .par_iter()
            .map(|&(n, m)| reproduce(&ContractionSpec::d(n, m)))
            .collect();
        let all_passed = reports.iter().all(Report::passed);
        let body = json!({
            "range": {"lo": lo, "hi": hi},
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
        });
        return Ok((body, all_passed));
    }
    let typ = args
        .typ
        .as_deref()
        .ok_or_else(|| InputError("give --type or --range".into()))?;
    let n = args.n.ok_or_else(|| InputError("missing --n".into()))?;
    let spec = spec_from_args(typ, n, args.m.as_deref())?;
    let report = reproduce(&spec);
    let passed = report.passed();
    Ok((report_json(&report), passed))
}

fn dinfty_check(n: usize, m: usize) -> CmdResult {
    if n < 2 {
        return Err(InputError("needs n >= 2".into()));
    }
    if m < 2 * n {
        return Err(InputError(format!(
            "coincidence is only claimed for m >= 2n (got n = {n}, m = {m})"
        )));
    }
    let coincide = dinfty_coincidence(n, m).map_err(|e| InputError(e.to_string()))?;
    let body = json!({
        "n": n,
        "m": m,
        "coincide": coincide,
    });
    Ok((body, coincide))
}
