//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! runtime and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ortholattice::builders::{
    corpus, decompose_central, gen_boolean, gen_horizontal_sum, gen_pentagon, gen_product, is_isomorphic,
    CentralSignature,
};
use ortholattice::commands::{build_report, cmd_check, cmd_subspace, EXIT_OK, EXIT_VIOLATIONS};
use ortholattice::dimension::{
    classify_type, decompose_minimal_orthogonal, delta, dimension_function, TypeTag,
};
use ortholattice::equivalence::{enumerate_regular_relations, perspectivity, OrthogonalFamilies};
use ortholattice::format::{parse_text, serialize_lattice};
use ortholattice::modularity::{check_modular, find_pentagon};
use ortholattice::report::{to_json, Violation};
use ortholattice::subspace::sample::law_rng;
use ortholattice::subspace::{class_divide_subspaces, Sampler, Subspace, SubspaceLattice, Suite};
use ortholattice::{Error, LatticeOps, OrthoLattice, OrthoOps, TieBreak};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pentagon_non_modular() -> Outcome {
    let p = gen_pentagon();
    let text = serialize_lattice(&p, None);
    let out = cmd_check(&text, true).map_err(|e| e.to_string())?;
    ensure!(out.code == EXIT_VIOLATIONS, "exit code {}", out.code);
    let report = build_report(&parse_text(&text).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let expected = Violation::new("modular", vec!["x".into(), "z".into(), "y".into()]);
    ensure!(
        report.violations == [expected],
        "violations {:?}",
        report.violations
    );
    let e = |n: &str| p.elem(n).unwrap();
    let (x, y, z) = (e("x"), e("y"), e("z"));
    let lhs = p.meet(p.join(x, z), y);
    let rhs = p.join(x, p.meet(z, y));
    ensure!(
        lhs == y && rhs == x,
        "(x v z) ^ y = {}, x v (z ^ y) = {}",
        p.name_of(lhs),
        p.name_of(rhs)
    );
    Ok("(x v z) ^ y = y, x v (z ^ y) = x".into())
}

fn l2_is_i2() -> Outcome {
    let l2 = gen_horizontal_sum(2).map_err(|e| e.to_string())?;
    let class = classify_type(&l2, Some(&l2));
    ensure!(class.type_tag == TypeTag::I(2), "type {}", class.type_tag);
    ensure!(l2.is_factorial(), "not factorial");
    let table = class.dimension.ok_or("no dimension table")?;
    let image = table.image();
    let want: BTreeSet<_> = [0, 1, 2].into_iter().map(|k| Rational64::new(k, 2)).collect();
    ensure!(image == want, "image {image:?}");
    for name in ["x", "x'", "y", "y'"] {
        let d = table.dim(l2.elem(name).unwrap());
        ensure!(d == Rational64::new(1, 2), "D({name}) = {d}");
    }
    Ok("image {0, 1/2, 1}, x x' y y' at 1/2".into())
}

fn l2_unique_regular() -> Outcome {
    let l2 = gen_horizontal_sum(2).map_err(|e| e.to_string())?;
    let scan = enumerate_regular_relations(&l2, 12).map_err(|e| e.to_string())?;
    ensure!(
        scan.partitions_scanned == 203,
        "{} partitions",
        scan.partitions_scanned
    );
    ensure!(
        scan.regular.len() == 1,
        "{} regular relations",
        scan.regular.len()
    );
    ensure!(
        scan.regular[0] == perspectivity(&l2),
        "the regular relation is not perspectivity"
    );
    Ok("203 partitions, 1 regular relation = perspectivity".into())
}

fn dimension_axioms() -> Outcome {
    for m in 2..=5 {
        let ol = gen_horizontal_sum(m).map_err(|e| e.to_string())?;
        let table = dimension_function(&ol, &perspectivity(&ol)).map_err(|e| format!("L{m}: {e}"))?;
        ensure!(table.checks.all_pass(), "L{m}: {:?}", table.checks);
        for law in [
            "D1-normalization",
            "D2-valuation",
            "D3-equivalence",
            "D4-domination",
            "D5-additivity",
        ] {
            ensure!(table.checks.passed(law), "L{m}: {law} not verified");
        }
        ensure!(table.image() == delta(2), "L{m}: image {:?}", table.image());
        // Additivity again, over every orthogonal family with no size cap.
        for (family, join) in OrthogonalFamilies::enumerate(&ol, None).iter() {
            let sum: Rational64 = family.iter().map(|&e| table.dim(e)).sum();
            ensure!(
                sum == table.dim(*join),
                "L{m}: additivity fails on {:?}",
                ol.names_of(family)
            );
        }
    }
    for k in 2..=5 {
        let b = gen_boolean(k).map_err(|e| e.to_string())?;
        match dimension_function(&b, &perspectivity(&b)) {
            Err(Error::NotFactorial) => {}
            other => return Err(format!("P{k}: expected NotFactorial, got {other:?}")),
        }
    }
    Ok("L2..L5 verify D1-D5 with image {0, 1/2, 1}; P2..P5 rejected as non-factorial".into())
}

/// Laws that must pass every trial in `Sub(Q^3)`.
const REQUIRED_LAWS: [&str; 25] = [
    "modular-law",
    "lattice-bounds",
    "lattice-identities",
    "ortho-involution",
    "ortho-complement",
    "ortho-antitone",
    "de-morgan",
    "orthogonal-commutes",
    "orthogonal-cancellation",
    "commuting-inverse-is-perp",
    "parallelogram",
    "lemma-min-join",
    "lemma-min-order",
    "lemma-perp-join",
    "lemma-min-outside",
    "lemma-lines-perspective",
    "lemma-min-difference",
    "D1-normalization",
    "D2-valuation",
    "D3-equivalence",
    "D4-domination",
    "D5-additivity",
    "perspectivity-iff-equal-dim",
    "image",
    "well-defined",
];

fn subspace_suite() -> Result<(String, String), String> {
    let out = cmd_subspace(3, 200, 42, Suite::All, true).map_err(|e| e.to_string())?;
    ensure!(out.code == EXIT_OK, "exit code {}", out.code);
    let report: serde_json::Value = serde_json::from_str(&out.output).map_err(|e| e.to_string())?;
    let laws = report["laws"].as_array().ok_or("no laws")?;
    for name in REQUIRED_LAWS {
        let law = laws
            .iter()
            .find(|l| l["law"] == name)
            .ok_or_else(|| format!("law {name} missing"))?;
        ensure!(
            law["passed"] == 200 && law["trials"] == 200,
            "{name}: {}/200",
            law["passed"]
        );
    }
    ensure!(report["all_pass"] == true, "some law failed");
    Ok((format!("{} laws x 200 trials, all pass", laws.len()), out.output))
}

#[derive(Serialize)]
struct Decomposition {
    lattice: String,
    element: String,
    first: usize,
    last: usize,
    complete: bool,
}

fn well_definedness() -> Result<(String, String), String> {
    let mut rows = Vec::new();
    let mut complete = 0;
    for entry in corpus() {
        // Orthogonality needs an orthocomplement; the pentagon has none.
        let Some(ol) = entry.lattice.ortho() else {
            continue;
        };
        for e in ol.elements() {
            let first = ol.greedy_orthogonal_atoms(&e, TieBreak::First);
            let last = ol.greedy_orthogonal_atoms(&e, TieBreak::Last);
            ensure!(
                first.len() == last.len(),
                "{} at {}: {} vs {}",
                ol.name(),
                ol.name_of(e),
                first.len(),
                last.len()
            );
            let full = decompose_minimal_orthogonal(ol, e, TieBreak::First).is_ok()
                && decompose_minimal_orthogonal(ol, e, TieBreak::Last).is_ok();
            complete += full as usize;
            rows.push(Decomposition {
                lattice: ol.name().to_string(),
                element: ol.name_of(e).to_string(),
                first: first.len(),
                last: last.len(),
                complete: full,
            });
        }
    }
    let lat = SubspaceLattice::new(4).map_err(|e| e.to_string())?;
    let mut sampler = Sampler::new(4, law_rng(42, "acceptance-well-defined"));
    for _ in 0..100 {
        let s = sampler.subspace();
        let first = lat.greedy_orthogonal_atoms(&s, TieBreak::First);
        let last = lat.greedy_orthogonal_atoms(&s, TieBreak::Last);
        ensure!(
            first.len() == last.len(),
            "{s}: {} vs {}",
            first.len(),
            last.len()
        );
        ensure!(
            first.len() == s.dim(),
            "{s}: {} lines for dimension {}",
            first.len(),
            s.dim()
        );
        for fam in [&first, &last] {
            let join = fam.iter().fold(lat.bottom(), |acc, m| lat.join(&acc, m));
            ensure!(join == s, "{s}: family does not join to it");
        }
        rows.push(Decomposition {
            lattice: "Sub(Q^4)".into(),
            element: s.to_string(),
            first: first.len(),
            last: last.len(),
            complete: true,
        });
    }
    let mut rng = law_rng(42, "acceptance-division");
    let reps: Vec<Subspace> = (0..20)
        .map(|_| ortholattice::subspace::sample::sample_of_dim(&mut rng, 4, 3))
        .collect();
    let div = class_divide_subspaces(&lat, &reps, 1).map_err(|e| e.to_string())?;
    ensure!(div == (3, 0), "class_divide(3-dim, line) = {div:?}");
    let summary = format!(
        "{} explicit elements ({complete} fully decomposed), 100 subspaces of Q^4; division (3, bottom)",
        rows.len() - 100
    );
    Ok((summary, to_json(&(rows, div))))
}

#[derive(Serialize)]
struct RoundTrip {
    input: CentralSignature,
    order: Vec<String>,
    size: usize,
    recovered: CentralSignature,
}

/// A random product of 2-chains and `L_m` factors with at most 64 elements
/// and at least one factor.
fn random_signature(rng: &mut ChaCha8Rng) -> Vec<Option<usize>> {
    loop {
        let mut factors = Vec::new();
        let mut size = 1;
        loop {
            let f = if rng.gen_bool(0.4) {
                None
            } else {
                Some(rng.gen_range(1..=6))
            };
            let s = f.map_or(2, |m| 2 * m + 2);
            if size * s > 64 {
                break;
            }
            size *= s;
            factors.push(f);
            if rng.gen_bool(0.3) {
                break;
            }
        }
        if !factors.is_empty() {
            return factors;
        }
    }
}

fn central_round_trip() -> Result<(String, String), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut rows = Vec::new();
    for _ in 0..20 {
        let mut factors = random_signature(&mut rng);
        factors.shuffle(&mut rng);
        let built: Vec<OrthoLattice> = factors
            .iter()
            .map(|f| match f {
                None => gen_boolean(1),
                Some(m) => gen_horizontal_sum(*m),
            })
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let product = gen_product(&built).map_err(|e| e.to_string())?;
        let mut sums: Vec<usize> = factors.iter().flatten().copied().collect();
        sums.sort_unstable();
        let input = CentralSignature {
            boolean_exponent: factors.iter().filter(|f| f.is_none()).count(),
            sum_sizes: sums,
        };
        let got = decompose_central(&product).map_err(|e| format!("{}: {e}", product.name()))?;
        ensure!(
            got.normalized() == input.normalized(),
            "{}: recovered {got:?} from {input:?}",
            product.name()
        );
        let rebuilt = got.build().map_err(|e| e.to_string())?;
        let iso = is_isomorphic(&product, &rebuilt).map_err(|e| e.to_string())?;
        ensure!(
            iso.is_some(),
            "{}: rebuilt product is not isomorphic",
            product.name()
        );
        rows.push(RoundTrip {
            input,
            order: built.iter().map(|b| b.name().to_string()).collect(),
            size: product.len(),
            recovered: got,
        });
    }
    let largest = rows.iter().map(|r| r.size).max().unwrap_or(0);
    Ok((
        format!("20 signatures recovered, largest {largest} elements"),
        to_json(&rows),
    ))
}

fn dedekind_cross_check() -> Outcome {
    let c = corpus();
    let mut non_modular = Vec::new();
    for entry in &c {
        let l = entry.lattice.lattice();
        let fails = !check_modular(l).holds;
        let pentagon = find_pentagon(l);
        ensure!(
            fails == pentagon.is_some(),
            "{}: modular fails {fails}, pentagon {pentagon:?}",
            entry.name
        );
        if fails {
            non_modular.push(entry.name.clone());
        }
    }
    Ok(format!(
        "{} lattices; non-modular: {}",
        c.len(),
        non_modular.join(", ")
    ))
}

type Json = fn() -> Result<(String, String), String>;
type Criterion = (u32, &'static str, Duration, Box<dyn Fn() -> Outcome>);

fn determinism() -> Outcome {
    let runs: [(&str, Json); 3] = [
        ("5", subspace_suite),
        ("6", well_definedness),
        ("7", central_round_trip),
    ];
    let mut bytes = 0;
    for (n, f) in runs {
        let (_, a) = f()?;
        let (_, b) = f()?;
        ensure!(a == b, "criterion {n}: reports differ");
        bytes += a.len();
    }
    Ok(format!("criteria 5-7 repeated, {bytes} bytes identical"))
}

fn main() {
    let json_only = |f: Json| move || f().map(|(s, _)| s);
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "pentagon non-modularity",
            Duration::from_secs(1),
            Box::new(pentagon_non_modular),
        ),
        (
            2,
            "L2 is factorial of type I_2",
            Duration::from_secs(1),
            Box::new(l2_is_i2),
        ),
        (
            3,
            "unique regular relation on L2",
            Duration::from_secs(1),
            Box::new(l2_unique_regular),
        ),
        (
            4,
            "dimension axioms",
            Duration::from_secs(5),
            Box::new(dimension_axioms),
        ),
        (
            5,
            "subspace suite in Q^3",
            Duration::from_secs(30),
            Box::new(json_only(subspace_suite)),
        ),
        (
            6,
            "well-defined decompositions",
            Duration::from_secs(10),
            Box::new(json_only(well_definedness)),
        ),
        (
            7,
            "central decomposition round trip",
            Duration::from_secs(30),
            Box::new(json_only(central_round_trip)),
        ),
        (
            8,
            "modular iff no pentagon",
            Duration::from_secs(10),
            Box::new(dedekind_cross_check),
        ),
        (
            9,
            "byte-identical reports",
            Duration::from_secs(120),
            Box::new(determinism),
        ),
    ];
    let mut failed = 0;
    for (n, title, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:.0} s limit", limit.as_secs_f64())),
            Err(e) => (false, e),
        };
        failed += !ok as usize;
        println!(
            "{} {n} {title} ({:.3} s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
