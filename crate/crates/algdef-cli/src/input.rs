//! Input resolution: presentation/family files and builtin presets.
//!
//! The file grammar is line-based. Blank lines and lines starting with `#`
//! are ignored. Every other line is `key: value` with the keys
//!
//! ```text
//! generators: x, y            # required, distinct names
//! parameter: t                # optional; required for family commands
//! degree_bound: 12            # optional, default 12
//! order: deglex-heavy-last    # optional; the only supported order
//! excluded_points: 0, 1       # optional, rationals written p/q
//! relation: x*y + y*x         # repeatable, at least one
//! ```
//!
//! Rationals are written `p/q` or as plain integers. Errors carry the
//! offending line number.

use algdef::contraction::{ContractionSpec, DIndex};
use algdef::exactnum::{rat, Rat, RatFunc};
use algdef::families::{builtin_family, family_from_relations, FamiliesError, PolyFamily};
use algdef::ncgb::{parse_ncpoly, quotient_structure_constants, NCPoly, RewritingSystem, WeightedDeglexOrder};
use algdef::algstruct::FDAlgebra;

/// A parsed presentation/family file.
#[derive(Debug, Clone)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub parameter: Option<String>,
    pub relations: Vec<String>,
    pub degree_bound: usize,
    pub excluded_points: Vec<Rat>,
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("malformed rational `{}`: {e}", s.trim()))
}

pub fn parse_presentation_file(text: &str) -> Result<PresentationFile, String> {
    let mut generators: Option<Vec<String>> = None;
    let mut parameter = None;
    let mut relations = Vec::new();
    let mut degree_bound = 12usize;
    let mut excluded_points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| format!("line {lineno}: expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "generators" => {
                let names: Vec<String> =
                    value.split(',').map(|s| s.trim().to_string()).collect();
                if names.iter().any(|n| n.is_empty()) {
                    return Err(format!("line {lineno}: empty generator name"));
                }
                for (i, n) in names.iter().enumerate() {
                    if names[..i].contains(n) {
                        return Err(format!("line {lineno}: duplicate generator `{n}`"));
                    }
                }
                generators = Some(names);
            }
            "parameter" => parameter = Some(value.to_string()),
            "degree_bound" => {
                degree_bound = value
                    .parse()
                    .map_err(|_| format!("line {lineno}: malformed degree bound `{value}`"))?;
            }
            "order" => {
                if value != "deglex-heavy-last" {
                    return Err(format!(
                        "line {lineno}: unsupported order `{value}` (only deglex-heavy-last)"
                    ));
                }
            }
            "excluded_points" => {
                for part in value.split(',') {
                    excluded_points
                        .push(parse_rat(part).map_err(|e| format!("line {lineno}: {e}"))?);
                }
            }
            "relation" => relations.push(value.to_string()),
            other => return Err(format!("line {lineno}: unknown key `{other}`")),
        }
    }
    let generators = generators.ok_or("missing `generators:` line")?;
    if relations.is_empty() {
        return Err("missing `relation:` lines".to_string());
    }
    Ok(PresentationFile {
        generators,
        parameter,
        relations,
        degree_bound,
        excluded_points,
    })
}

/// Parse the relations over the file's alphabet (and parameter, if any).
pub fn parse_file_relations(f: &PresentationFile) -> Result<Vec<NCPoly<RatFunc>>, String> {
    f.relations
        .iter()
        .enumerate()
        .map(|(i, text)| {
            parse_ncpoly(text, &f.generators, f.parameter.as_deref())
                .map_err(|e| format!("relation {}: {e}", i + 1))
        })
        .collect()
}

/// Build the (non-completed) rewriting system of a parameter-free file.
pub fn file_system(f: &PresentationFile) -> Result<RewritingSystem<Rat>, String> {
    if f.parameter.is_some() {
        return Err("a `parameter:` line is only supported by the family commands".to_string());
    }
    let relations: Result<Vec<NCPoly<Rat>>, String> = parse_file_relations(f)?
        .iter()
        .map(|p| {
            p.specialize(&rat(0))
                .map_err(|bad| format!("non-constant coefficient {bad} in a parameter-free file"))
        })
        .collect();
    let order = WeightedDeglexOrder::heavy_last(f.generators.len(), f.degree_bound);
    RewritingSystem::new(relations?, order, f.degree_bound, f.generators.len())
        .map_err(|e| e.to_string())
}

/// Build a deformation family from a file with a `parameter:` line.
pub fn file_family(f: &PresentationFile, name: &str) -> Result<PolyFamily, String> {
    let parameter = f
        .parameter
        .clone()
        .ok_or("family input needs a `parameter:` line")?;
    let relations = parse_file_relations(f)?;
    family_from_relations(
        name,
        relations,
        &f.generators,
        &parameter,
        f.degree_bound,
        f.excluded_points.clone(),
    )
    .map_err(|e| e.to_string())
}

/// Index `m` of a type-D preset: a positive integer or `inf`.
pub fn parse_m(s: &str) -> Result<DIndex, String> {
    match s {
        "inf" | "infinity" | "∞" => Ok(DIndex::Infinite),
        other => other
            .parse::<usize>()
            .map(DIndex::Finite)
            .map_err(|_| format!("malformed index m `{other}` (number or `inf`)")),
    }
}

/// A resolved algebra preset: the contraction spec when there is one, the
/// generating relations, and a degree bound.
pub struct AlgebraPreset {
    pub name: String,
    pub spec: Option<ContractionSpec>,
    pub relations: Vec<String>,
    pub degree_bound: usize,
    pub alphabet: Vec<String>,
}

/// Resolve `--preset NAME [N [M]]` to an algebra preset. Recognized names:
/// `a N`, `d N M`, `d N inf` (the contraction algebras) and `a2` (the
/// six-dimensional auxiliary algebra).
pub fn algebra_preset(words: &[String]) -> Result<AlgebraPreset, String> {
    let need = |i: usize| -> Result<&str, String> {
        words
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| format!("preset `{}` needs more indices", words[0]))
    };
    let alphabet = algdef::contraction::standard_alphabet();
    match words.first().map(String::as_str) {
        Some("a") => {
            let n: usize = need(1)?
                .parse()
                .map_err(|_| "malformed index n".to_string())?;
            if n < 2 {
                return Err("type a needs n >= 2".to_string());
            }
            let spec = ContractionSpec::a(n);
            Ok(AlgebraPreset {
                name: spec.to_string(),
                relations: spec.relation_texts(),
                degree_bound: spec.default_degree_bound(),
                alphabet,
                spec: Some(spec),
            })
        }
        Some("d") => {
            let n: usize = need(1)?
                .parse()
                .map_err(|_| "malformed index n".to_string())?;
            let spec = match parse_m(need(2)?)? {
                DIndex::Finite(m) => {
                    if n < 1 || m < 1 {
                        return Err("type d needs n, m >= 1".to_string());
                    }
                    ContractionSpec::d(n, m)
                }
                DIndex::Infinite => ContractionSpec::d_infinite(n),
            };
            Ok(AlgebraPreset {
                name: spec.to_string(),
                relations: spec.relation_texts(),
                degree_bound: spec.default_degree_bound(),
                alphabet,
                spec: Some(spec),
            })
        }
        Some("a2") => Ok(AlgebraPreset {
            name: "A2".to_string(),
            spec: None,
            relations: algdef::families::a2_source_relations(),
            degree_bound: 12,
            alphabet,
        }),
        Some(other) => Err(format!("unknown algebra preset `{other}`")),
        None => Err("empty preset".to_string()),
    }
}

/// Build the completed quotient algebra of a resolved preset.
pub fn preset_algebra(p: &AlgebraPreset) -> Result<(FDAlgebra<Rat>, RewritingSystem<Rat>), String> {
    let relations = algdef::contraction::parse_relations(&p.relations).map_err(|e| e.to_string())?;
    let order = WeightedDeglexOrder::heavy_last(p.alphabet.len(), p.degree_bound);
    let sys = RewritingSystem::new(relations, order, p.degree_bound, p.alphabet.len())
        .and_then(|s| s.complete())
        .map_err(|e| e.to_string())?;
    let algebra = quotient_structure_constants(&sys, &p.alphabet).map_err(|e| e.to_string())?;
    Ok((algebra, sys))
}

/// Resolve `--preset NAME [N [M]]` to a builtin family.
pub fn family_preset(words: &[String]) -> Result<PolyFamily, String> {
    let name = words.first().ok_or("empty preset")?;
    let n = words.get(1).map(|s| {
        s.parse::<usize>()
            .map_err(|_| "malformed index n".to_string())
    });
    let n = match n {
        Some(r) => Some(r?),
        None => None,
    };
    let m = match words.get(2) {
        Some(s) => Some(parse_m(s)?),
        None => None,
    };
    builtin_family(name, n, m).map_err(|e: FamiliesError| e.to_string())
}
