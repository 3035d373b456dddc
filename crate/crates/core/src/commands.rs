//! The commands behind the `ortholat` binary, as functions from input text
//! and flags to an exit code and output.
//!
//! Exit codes: 0 when nothing failed, 1 when the input violates a law it is
//! required to satisfy, 2 for bad input (returned here as `Err`).

use std::collections::BTreeMap;

use crate::builders::{decompose_central, generator, GenParams};
use crate::diagnostics::Status;
use crate::dimension::{classify_type, is_irreducible, minimal_elements, TypeTag};
use crate::equivalence::{
    enumerate_regular_relations, perspectivity_with_info, verify_regular, DEFAULT_ENUMERATION_CAP,
    DEFAULT_FAMILY_CAP,
};
use crate::error::{Error, Result};
use crate::format::{parse_text, serialize_lattice, LatticeFile};
use crate::lattice::Lattice;
use crate::modularity::{check_distributive, check_modular};
use crate::ortho::OrthoLattice;
use crate::report::{
    fmt_rational, signature_text, to_json, DecomposeReport, Flags, PerspectivityReport, RegularReport,
    RelationCount, Report, Signature, Violation,
};
use crate::subspace::{run_property_suite, Suite, SuiteReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATIONS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
}

impl Outcome {
    fn new(ok: bool, output: String) -> Self {
        Self {
            code: if ok { EXIT_OK } else { EXIT_VIOLATIONS },
            output,
        }
    }
}

fn render<T: serde::Serialize + std::fmt::Display>(value: &T, json: bool) -> String {
    if json {
        to_json(value)
    } else {
        value.to_string()
    }
}

/// The ortho axiom an orthocomplement error refers to, with its witness.
fn ortho_violation(e: &Error) -> Option<Violation> {
    let (law, witness) = match e {
        Error::NotInvolution(a) => ("ortho-involution", vec![a.clone()]),
        Error::ComplementLawFails(a) => ("ortho-complement", vec![a.clone()]),
        Error::NotAntitone(a, b) => ("ortho-antitone", vec![a.clone(), b.clone()]),
        Error::IncompleteInvolution(a) => ("ortho-involution", vec![a.clone()]),
        _ => return None,
    };
    Some(Violation::new(law, witness))
}

/// Runs the whole analysis on a parsed file.
pub fn build_report(file: &LatticeFile) -> Result<Report> {
    let poset = file.poset()?;
    let order = poset.validate();
    let mut waivers: Vec<String> = order
        .checks
        .iter()
        .filter_map(|c| match &c.status {
            Status::Waived { reason } => Some(reason.clone()),
            _ => None,
        })
        .collect();
    if !order.all_pass() {
        return Ok(Report {
            name: file.name.clone(),
            element_count: file.elements.len(),
            flags: Flags::default(),
            center: Vec::new(),
            minimal: Vec::new(),
            type_tag: TypeTag::Unclassified {
                stage: "lattice".into(),
                reason: "not a lattice".into(),
            }
            .to_string(),
            dimensions: None,
            regular_relations_found: RelationCount::NotEnumerated,
            violations: Violation::from_failures(&order),
            waivers,
        });
    }
    let l: Lattice = poset.into_lattice()?;
    let mut violations = Vec::new();
    let mut flags = Flags {
        lattice: true,
        irreducible: is_irreducible(&l),
        ..Flags::default()
    };

    let modular = check_modular(&l);
    flags.modular = modular.holds;
    if let Some(w) = modular.witness {
        violations.push(Violation::new("modular", l.names_of(&w)));
    }
    flags.distributive = check_distributive(&l).holds;

    let ortho = match file.perp_map(&l)? {
        None => None,
        Some(perp) => match OrthoLattice::new(l.clone(), perp) {
            Ok(ol) => Some(ol),
            Err(e) => {
                violations.push(ortho_violation(&e).ok_or(e)?);
                None
            }
        },
    };
    let mut center = Vec::new();
    if let Some(ol) = &ortho {
        flags.ortho = true;
        flags.abelian = ol.is_abelian();
        flags.factorial = ol.is_factorial();
        flags.r_property = ol.is_r_lattice();
        center = ol.names_of(&ol.center());
        violations.extend(Violation::from_failures(&ol.theorem_checks(modular.holds)));
    }

    let class = classify_type(&l, ortho.as_ref());
    if let TypeTag::Unclassified { stage, .. } = &class.type_tag {
        if stage == "dimension" {
            violations.extend(Violation::from_failures(&class.stages));
        }
    }
    let dimensions = class.dimension.as_ref().map(|t| {
        l.elements()
            .map(|e| (l.name_of(e).to_string(), fmt_rational(t.dim(e))))
            .collect::<BTreeMap<_, _>>()
    });
    waivers.extend(class.waivers.iter().cloned());

    Ok(Report {
        name: l.name().to_string(),
        element_count: l.len(),
        flags,
        center,
        minimal: l.names_of(&minimal_elements(&l)),
        type_tag: class.type_tag.to_string(),
        dimensions,
        regular_relations_found: RelationCount::NotEnumerated,
        violations,
        waivers,
    })
}

pub fn cmd_check(text: &str, json: bool) -> Result<Outcome> {
    let report = build_report(&parse_text(text)?)?;
    Ok(Outcome::new(report.violations.is_empty(), render(&report, json)))
}

/// The lattice file text for a generator.
pub fn cmd_gen(kind: &str, params: &GenParams) -> Result<String> {
    let g = generator(kind).ok_or_else(|| Error::UnknownGenerator(kind.to_string()))?;
    let generated = g.generate(params)?;
    let perp = generated.ortho().map(|o| o.perp_map());
    Ok(serialize_lattice(generated.lattice(), perp))
}

fn load_ortho(text: &str) -> Result<OrthoLattice> {
    let file = parse_text(text)?;
    let l = file.poset()?.into_lattice()?;
    let perp = file.perp_map(&l)?.ok_or(Error::MissingOrtho)?;
    OrthoLattice::new(l, perp)
}

pub fn decompose_report(ol: &OrthoLattice) -> Result<DecomposeReport> {
    let sig = decompose_central(ol)?;
    let norm = sig.normalized();
    Ok(DecomposeReport {
        name: ol.name().to_string(),
        element_count: ol.len(),
        signature: signature_text(sig.boolean_exponent, &sig.sum_sizes),
        boolean_exponent: sig.boolean_exponent,
        sum_sizes: sig.sum_sizes,
        normalized: Signature {
            boolean_exponent: norm.boolean_exponent,
            sum_sizes: norm.sum_sizes,
        },
    })
}

pub fn cmd_decompose(text: &str, json: bool) -> Result<Outcome> {
    let report = decompose_report(&load_ortho(text)?)?;
    Ok(Outcome::new(true, render(&report, json)))
}

pub fn regular_report(ol: &OrthoLattice, enumerate: bool) -> Result<RegularReport> {
    let (rel, raw_is_equivalence) = perspectivity_with_info(ol);
    let checks = verify_regular(ol, &rel, Some(DEFAULT_FAMILY_CAP));
    let (found, scanned, relations) = if enumerate {
        let e = enumerate_regular_relations(ol, DEFAULT_ENUMERATION_CAP)?;
        let relations = e.regular.iter().map(|r| r.class_names(ol)).collect();
        (
            RelationCount::Found(e.regular.len()),
            Some(e.partitions_scanned),
            relations,
        )
    } else {
        (RelationCount::NotEnumerated, None, Vec::new())
    };
    Ok(RegularReport {
        name: ol.name().to_string(),
        element_count: ol.len(),
        perspectivity: PerspectivityReport {
            classes: rel.class_names(ol),
            raw_is_equivalence,
            regular: checks.all_pass(),
            checks,
        },
        regular_relations_found: found,
        partitions_scanned: scanned,
        relations,
    })
}

/// Lattices above the enumeration cap are refused when `enumerate` is set.
pub fn cmd_regular(text: &str, enumerate: bool, json: bool) -> Result<Outcome> {
    let report = regular_report(&load_ortho(text)?, enumerate)?;
    Ok(Outcome::new(true, render(&report, json)))
}

fn suite_text(r: &SuiteReport) -> String {
    let mut out = format!(
        "Sub(Q^{}) suite {} seed {} trials {}\n",
        r.ambient_dim,
        r.suite.name(),
        r.seed,
        r.trials
    );
    for law in &r.laws {
        let verdict = if law.passed == law.trials { "ok" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict:4} {:12} {:32} {}/{}\n",
            law.suite.name(),
            law.law,
            law.passed,
            law.trials
        ));
        if let Some(w) = &law.counterexample {
            out.push_str(&format!("     counterexample: {}\n", w.join("; ")));
        }
    }
    for w in &r.waivers {
        out.push_str(&format!("waiver: {w}\n"));
    }
    out.push_str(if r.all_pass {
        "all laws pass\n"
    } else {
        "some laws fail\n"
    });
    out
}

pub fn cmd_subspace(dim: usize, trials: usize, seed: u64, suite: Suite, json: bool) -> Result<Outcome> {
    let report = run_property_suite(dim, trials, seed, suite)?;
    let output = if json {
        to_json(&report)
    } else {
        suite_text(&report)
    };
    Ok(Outcome::new(report.all_pass, output))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{gen_horizontal_sum, gen_pentagon};
    use crate::format::{serialize_lattice, serialize_ortho};

    #[test]
    fn l2_checks_clean() {
        let text = serialize_ortho(&gen_horizontal_sum(2).unwrap());
        let out = cmd_check(&text, false).unwrap();
        assert_eq!(out.code, EXIT_OK, "{}", out.output);
        assert!(out.output.contains("type: I_2"));
        let report = build_report(&parse_text(&text).unwrap()).unwrap();
        let dims = report.dimensions.unwrap();
        assert_eq!(dims["x"], "1/2");
        assert_eq!(dims["1"], "1/1");
        assert!(report.flags.factorial && report.flags.irreducible && !report.flags.abelian);
    }

    #[test]
    fn pentagon_violates_modularity() {
        let text = serialize_lattice(&gen_pentagon(), None);
        let report = build_report(&parse_text(&text).unwrap()).unwrap();
        assert_eq!(
            report.violations,
            [Violation::new(
                "modular",
                vec!["x".into(), "z".into(), "y".into()]
            )]
        );
        assert_eq!(report.type_tag, "unclassified at modular");
        assert_eq!(cmd_check(&text, true).unwrap().code, EXIT_VIOLATIONS);
    }

    #[test]
    fn non_lattice_is_a_violation() {
        let text = "lattice v\nelem 0 a b\ncover 0 a\ncover 0 b\nend\n";
        let out = cmd_check(text, false).unwrap();
        assert_eq!(out.code, EXIT_VIOLATIONS);
        assert!(out.output.contains("violation: bounds"));
    }

    #[test]
    fn broken_orthocomplement_is_a_violation() {
        let text = "lattice c\nelem 0 a 1\ncover 0 a\ncover a 1\northo 0 1\northo a a\nend\n";
        let report = build_report(&parse_text(text).unwrap()).unwrap();
        assert_eq!(
            report.violations,
            [Violation::new("ortho-complement", vec!["a".into()])]
        );
        assert!(!report.flags.ortho);
    }

    #[test]
    fn boolean_is_clean_but_not_factorial() {
        let text = cmd_gen(
            "boolean",
            &GenParams {
                atoms: Some(3),
                m: None,
            },
        )
        .unwrap();
        let out = cmd_check(&text, true).unwrap();
        assert_eq!(out.code, EXIT_OK);
        assert!(out.output.contains("\"type_tag\": \"unclassified at factorial\""));
        assert!(!out.output.contains("\"dimensions\""));
    }

    #[test]
    fn regular_enumerates_l2() {
        let text = cmd_gen(
            "lm",
            &GenParams {
                m: Some(2),
                atoms: None,
            },
        )
        .unwrap();
        let report = regular_report(&load_ortho(&text).unwrap(), true).unwrap();
        assert_eq!(report.regular_relations_found, RelationCount::Found(1));
        assert_eq!(report.partitions_scanned, Some(203));
        assert!(report.perspectivity.regular);
        let big = cmd_gen(
            "lm",
            &GenParams {
                m: Some(6),
                atoms: None,
            },
        )
        .unwrap();
        assert!(matches!(
            cmd_regular(&big, true, false),
            Err(Error::TooLarge { .. })
        ));
        assert!(cmd_regular(&big, false, false).is_ok());
    }

    #[test]
    fn decompose_needs_ortho() {
        let text = serialize_lattice(&gen_pentagon(), None);
        assert_eq!(cmd_decompose(&text, false), Err(Error::MissingOrtho));
        let text = cmd_gen("section3", &GenParams::default()).unwrap();
        let out = cmd_decompose(&text, false).unwrap();
        assert!(out.output.contains("signature: 2^4"), "{}", out.output);
    }

    #[test]
    fn unknown_generator() {
        assert_eq!(
            cmd_gen("torus", &GenParams::default()),
            Err(Error::UnknownGenerator("torus".into()))
        );
    }
}
