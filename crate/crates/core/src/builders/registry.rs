//! Named generators, selectable at run time, and the test corpus.

use super::{gen_boolean, gen_hexagon, gen_horizontal_sum, gen_pentagon, gen_product, gen_section3_ortho};
use crate::error::Result;
use crate::lattice::Lattice;
use crate::ortho::OrthoLattice;

/// A generated lattice, with an orthocomplement when the kind has one.
#[derive(Debug, Clone)]
pub enum Generated {
    Plain(Lattice),
    Ortho(OrthoLattice),
}

impl Generated {
    pub fn lattice(&self) -> &Lattice {
        match self {
            Generated::Plain(l) => l,
            Generated::Ortho(o) => o,
        }
    }

    pub fn ortho(&self) -> Option<&OrthoLattice> {
        match self {
            Generated::Plain(_) => None,
            Generated::Ortho(o) => Some(o),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct GenParams {
    pub m: Option<usize>,
    pub atoms: Option<usize>,
}

pub trait Generator: Sync {
    fn kind(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn generate(&self, params: &GenParams) -> Result<Generated>;
}

struct Boolean;
struct HorizontalSum;
struct Pentagon;
struct Hexagon;
struct Section3;

impl Generator for Boolean {
    fn kind(&self) -> &'static str {
        "boolean"
    }
    fn describe(&self) -> &'static str {
        "subsets of an n-set (--atoms, default 3)"
    }
    fn generate(&self, p: &GenParams) -> Result<Generated> {
        gen_boolean(p.atoms.unwrap_or(3)).map(Generated::Ortho)
    }
}

impl Generator for HorizontalSum {
    fn kind(&self) -> &'static str {
        "lm"
    }
    fn describe(&self) -> &'static str {
        "L_m: m orthogonal pairs of height-one elements (--m, default 2)"
    }
    fn generate(&self, p: &GenParams) -> Result<Generated> {
        gen_horizontal_sum(p.m.unwrap_or(2)).map(Generated::Ortho)
    }
}

impl Generator for Pentagon {
    fn kind(&self) -> &'static str {
        "pentagon"
    }
    fn describe(&self) -> &'static str {
        "N5, no orthocomplement"
    }
    fn generate(&self, _: &GenParams) -> Result<Generated> {
        Ok(Generated::Plain(gen_pentagon()))
    }
}

impl Generator for Hexagon {
    fn kind(&self) -> &'static str {
        "hexagon"
    }
    fn describe(&self) -> &'static str {
        "two 2-chains between 0 and 1, non-modular"
    }
    fn generate(&self, _: &GenParams) -> Result<Generated> {
        Ok(Generated::Ortho(gen_hexagon()))
    }
}

impl Generator for Section3 {
    fn kind(&self) -> &'static str {
        "section3"
    }
    fn describe(&self) -> &'static str {
        "16-element completion of the two-variable ortho diagram"
    }
    fn generate(&self, _: &GenParams) -> Result<Generated> {
        Ok(Generated::Ortho(gen_section3_ortho()))
    }
}

static GENERATORS: [&dyn Generator; 5] = [&Boolean, &HorizontalSum, &Pentagon, &Hexagon, &Section3];

pub fn generators() -> &'static [&'static dyn Generator] {
    &GENERATORS
}

pub fn generator(kind: &str) -> Option<&'static dyn Generator> {
    GENERATORS.iter().copied().find(|g| g.kind() == kind)
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: Generated,
}

/// Every builder at small sizes, plus a few products; all at most 64
/// elements.
pub fn corpus() -> Vec<CorpusEntry> {
    let ortho = |o: OrthoLattice| CorpusEntry {
        name: o.name().to_string(),
        lattice: Generated::Ortho(o),
    };
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push(ortho(gen_boolean(k).expect("small")));
    }
    for m in 1..=6 {
        out.push(ortho(gen_horizontal_sum(m).expect("small")));
    }
    out.push(CorpusEntry {
        name: "pentagon".into(),
        lattice: Generated::Plain(gen_pentagon()),
    });
    out.push(ortho(gen_hexagon()));
    out.push(ortho(gen_section3_ortho()));
    let chain = || gen_boolean(1).expect("small");
    let sum = |m| gen_horizontal_sum(m).expect("small");
    for factors in [
        vec![sum(2), chain()],
        vec![sum(2), sum(2)],
        vec![sum(3), chain(), chain()],
        vec![sum(2), sum(3)],
        vec![gen_hexagon(), chain()],
    ] {
        out.push(ortho(gen_product(&factors).expect("small")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_kind() {
        let kinds: Vec<_> = generators().iter().map(|g| g.kind()).collect();
        assert_eq!(kinds, ["boolean", "lm", "pentagon", "hexagon", "section3"]);
        let l = generator("lm")
            .unwrap()
            .generate(&GenParams {
                m: Some(3),
                atoms: None,
            })
            .unwrap();
        assert_eq!(l.lattice().len(), 8);
        assert!(generator("pentagon")
            .unwrap()
            .generate(&GenParams::default())
            .unwrap()
            .ortho()
            .is_none());
        assert!(generator("nope").is_none());
    }

    #[test]
    fn corpus_is_small() {
        let c = corpus();
        assert!(c.len() >= 15);
        assert!(c.iter().all(|e| e.lattice.lattice().len() <= 64));
    }
}
