//! Preconfigured desk-scale instantiations of the framework: DNA
//! information, the entropy reduction, entangled coefficient matrices, the
//! digit-diagonal construction, the undecidable-instance labeling, and the
//! sample-bound simulation. Each returns a machine-checkable report.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::complexity::{
    shannon_entropy, shannon_entropy_as_complexity, string_information, Environment,
};
use crate::godel::{separability_test, CoefficientMatrix, SeparabilityKind};
use crate::pac::{run_pac_simulation, sample_bound, PacConfig, PacInstance};
use crate::spectra::{CardinalScale, Spectrum};
use crate::TAU_RANK;

#[derive(Debug, Error, PartialEq)]
pub enum DemoError {
    #[error("unknown demo {0:?}; expected one of dna, shannon, epr, cantor, turing, pac")]
    UnknownDemo(String),
    #[error("cantor lines must be nonempty equal-length digit strings, at least as long as the list")]
    BadCantorLines,
}

/// Deterministic, serializable demo outcome. `values` holds named numbers,
/// `assertions` named pass/fail flags, `narrative` the label-to-construct
/// mapping.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoReport {
    pub name: String,
    pub values: BTreeMap<String, f64>,
    pub assertions: BTreeMap<String, bool>,
    pub narrative: Vec<String>,
}

impl DemoReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            values: BTreeMap::new(),
            assertions: BTreeMap::new(),
            narrative: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.assertions.values().all(|&v| v)
    }
}

pub const DEMO_NAMES: [&str; 6] = ["dna", "shannon", "epr", "cantor", "turing", "pac"];

/// Default input for the cantor demo.
pub const DEFAULT_CANTOR_LINES: [&str; 3] = ["123", "456", "789"];

pub fn run_demo(name: &str) -> Result<DemoReport, DemoError> {
    match name {
        "dna" => Ok(dna_demo()),
        "shannon" => Ok(shannon_demo()),
        "epr" => Ok(epr_demo()),
        "cantor" => {
            cantor_demo(&DEFAULT_CANTOR_LINES.map(String::from))
        }
        "turing" => Ok(turing_demo()),
        "pac" => Ok(pac_demo()),
        other => Err(DemoError::UnknownDemo(other.to_string())),
    }
}

fn dna_demo() -> DemoReport {
    let mut r = DemoReport::new("dna");
    let (base_bits, _) = string_information("GCAGCG", &Environment::dna_base());
    let (codon_bits, _) = string_information("GCAGCG", &Environment::dna_codon());
    r.values.insert("base".into(), base_bits);
    r.values.insert("codon".into(), codon_bits);
    r.assertions.insert("base_is_12".into(), base_bits == 12.0);
    r.assertions.insert("codon_near_11_861476".into(), (codon_bits - 11.861476).abs() <= 1e-5);
    r.narrative.push("GCAGCG per base: 6 tokens over 4 letters, 6*log2(4) bits".into());
    r.narrative.push("GCAGCG per codon: 2 tokens over 61 coding codons, 2*log2(61) bits".into());
    r
}

fn shannon_demo() -> DemoReport {
    let mut r = DemoReport::new("shannon");
    let sp = Spectrum::new(
        CardinalScale::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap(),
        vec![0.5, 0.25, 0.125, 0.125],
    )
    .unwrap();
    let direct = shannon_entropy(&sp).unwrap();
    let via_moment = shannon_entropy_as_complexity(&sp).unwrap();
    r.values.insert("entropy".into(), direct);
    r.values.insert("entropy_via_moment".into(), via_moment);
    r.assertions.insert("entropy_is_1_75".into(), (direct - 1.75).abs() <= 1e-12);
    r.assertions.insert("paths_agree".into(), (direct - via_moment).abs() <= 1e-12);
    r.narrative.push("p = (1/2, 1/4, 1/8, 1/8): direct -sum p log2 p".into());
    r.narrative
        .push("same value as the first moment with -log2 p moved onto the scale axis".into());
    r
}

fn epr_demo() -> DemoReport {
    let mut r = DemoReport::new("epr");
    let s = 0.5_f64.sqrt();

    let singlet = CoefficientMatrix::new(
        vec![vec![0.0, s], vec![-s, 0.0]],
        vec!["up".into(), "down".into()],
        vec!["up".into(), "down".into()],
    )
    .unwrap();
    let v = separability_test(&singlet, TAU_RANK);
    r.values.insert("singlet_determinant".into(), v.determinant.unwrap());
    r.assertions.insert("singlet_entangled".into(), v.kind == SeparabilityKind::Entangled);
    r.assertions
        .insert("singlet_det_half".into(), (v.determinant.unwrap() - 0.5).abs() <= 1e-12);

    // product state u x v
    let (u, w) = ([0.6, 0.8], [s, s]);
    let product = CoefficientMatrix::from_rows(
        u.iter().map(|a| w.iter().map(|b| a * b).collect()).collect(),
    )
    .unwrap();
    let v = separability_test(&product, TAU_RANK);
    r.values.insert("product_rank".into(), v.numeric_rank as f64);
    r.assertions.insert("product_separable".into(), v.kind == SeparabilityKind::Separable);

    let godel_state = CoefficientMatrix::new(
        vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        vec!["up".into(), "down".into()],
        vec!["up".into(), "down".into()],
    )
    .unwrap();
    let v = separability_test(&godel_state, TAU_RANK);
    r.values.insert("godel_determinant".into(), v.determinant.unwrap());
    r.assertions.insert("godel_entangled".into(), v.kind == SeparabilityKind::Entangled);

    let godel_prime = CoefficientMatrix::new(
        vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        vec!["up".into(), "down".into()],
        vec!["up".into(), "down".into()],
    )
    .unwrap();
    let v = separability_test(&godel_prime, TAU_RANK);
    r.values.insert("godel_prime_determinant".into(), v.determinant.unwrap());
    r.assertions.insert("godel_prime_entangled".into(), v.kind == SeparabilityKind::Entangled);
    r.assertions
        .insert("godel_prime_det_minus_one".into(), (v.determinant.unwrap() + 1.0).abs() <= 1e-12);

    r.narrative.push("singlet: (up down - down up)/sqrt(2), no product form".into());
    r.narrative.push("product u x v: rank 1, a product form exists".into());
    r.narrative.push("up x up + down x down: the canonical entangled state".into());
    r.narrative.push("up x down + down x up: its swapped companion".into());
    r
}

/// Diagonal digit rule: output digit i is '0' unless digit i of string i is
/// already '0', in which case it is '1'. The output differs from line i at
/// position i.
pub fn diagonal_string(lines: &[String]) -> Result<String, DemoError> {
    if lines.is_empty() {
        return Err(DemoError::BadCantorLines);
    }
    let len = lines[0].len();
    if len < lines.len() {
        return Err(DemoError::BadCantorLines);
    }
    for l in lines {
        if l.len() != len || !l.bytes().all(|b| b.is_ascii_digit()) {
            return Err(DemoError::BadCantorLines);
        }
    }
    Ok(lines
        .iter()
        .enumerate()
        .map(|(i, l)| if l.as_bytes()[i] != b'0' { '0' } else { '1' })
        .collect())
}

pub fn cantor_demo(lines: &[String]) -> Result<DemoReport, DemoError> {
    let mut r = DemoReport::new("cantor");
    let diagonal = diagonal_string(lines)?;
    let differs = lines.iter().all(|l| *l != diagonal);
    r.values.insert("inputs".into(), lines.len() as f64);
    r.assertions.insert("differs_from_all_inputs".into(), differs);
    for (i, l) in lines.iter().enumerate() {
        r.narrative.push(format!("input {}: {}", i + 1, l));
    }
    r.narrative.push(format!("diagonal: {diagonal}"));
    r.narrative.push("the diagonal string cannot appear in any finite listing".into());
    Ok(r)
}

fn turing_demo() -> DemoReport {
    let mut r = DemoReport::new("turing");
    let m = CoefficientMatrix::new(
        vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        vec!["halt->never-halt".into(), "never-halt->halt".into()],
        vec!["halts".into(), "never halts".into()],
    )
    .unwrap();
    let v = separability_test(&m, TAU_RANK);
    r.values.insert("determinant".into(), v.determinant.unwrap());
    r.values.insert("rank".into(), v.numeric_rank as f64);
    r.assertions.insert("entangled".into(), v.kind == SeparabilityKind::Entangled);
    r.narrative.push("undecidable instance".into());
    r.narrative
        .push("let the halt ones never halt, and the never-halt ones halt: no product form".into());
    r
}

fn pac_demo() -> DemoReport {
    let mut r = DemoReport::new("pac");
    let cfg = PacConfig::new(0.1, 0.05, 10).unwrap();
    let (exact, required) = sample_bound(&cfg);
    r.values.insert("bound_exact".into(), exact);
    r.values.insert("bound_required".into(), required as f64);
    r.assertions.insert("required_is_300".into(), required == 300);

    let sim_cfg = PacConfig::new(0.2, 0.1, 4).unwrap();
    let report =
        run_pac_simulation(&PacInstance::bernoulli_half(), &sim_cfg, 55, 2000, 42).unwrap();
    r.values.insert("success_rate".into(), report.success_rate);
    r.assertions.insert("simulation_passed".into(), report.passed);
    r.narrative.push("bound: ln(2|H|/delta) / (2 eps^2) at (0.1, 0.05, 10)".into());
    r.narrative.push(
        "fair-coin instance, 4 hypotheses, m = 55, 2000 seeded trials of the uniform event".into(),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_demos_pass_their_assertions() {
        for name in DEMO_NAMES {
            let report = run_demo(name).unwrap();
            assert!(report.all_passed(), "{name}: {:?}", report.assertions);
        }
    }

    #[test]
    fn unknown_demo_rejected() {
        assert_eq!(run_demo("nope").unwrap_err(), DemoError::UnknownDemo("nope".into()));
    }

    #[test]
    fn cantor_default_triple() {
        let lines: Vec<String> = DEFAULT_CANTOR_LINES.map(String::from).to_vec();
        assert_eq!(diagonal_string(&lines).unwrap(), "000");
    }

    #[test]
    fn cantor_diagonal_differs_at_position_i() {
        let lines: Vec<String> =
            ["0004", "0192", "2305", "5550"].map(String::from).to_vec();
        let d = diagonal_string(&lines).unwrap();
        for (i, l) in lines.iter().enumerate() {
            assert_ne!(d.as_bytes()[i], l.as_bytes()[i]);
        }
    }

    #[test]
    fn cantor_rejects_bad_input() {
        assert!(diagonal_string(&[]).is_err());
        assert!(diagonal_string(&["12".into(), "345".into()]).is_err());
        assert!(diagonal_string(&["ab".into(), "cd".into()]).is_err());
        // list longer than string length: no diagonal exists
        assert!(diagonal_string(&["12".into(), "34".into(), "56".into()]).is_err());
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = serde_json::to_string(&run_demo("epr").unwrap()).unwrap();
        let b = serde_json::to_string(&run_demo("epr").unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
