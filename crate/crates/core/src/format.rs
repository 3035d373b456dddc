//! The line-oriented lattice file format.
//!
//! ```text
//! # the diamond
//! lattice diamond
//! elem 0 a b 1
//! cover 0 a
//! cover 0 b
//! cover a 1
//! cover b 1
//! ortho 0 1
//! ortho a b
//! end
//! ```
//!
//! `elem` may repeat. `ortho` pairs are stated once each; the reverse pair
//! is implied. Bottom and top are inferred from the covers.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Poset};
use crate::ortho::OrthoLattice;

/// A syntactically valid file, before any order-theoretic checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    /// `None` when the file has no `ortho` line.
    pub ortho: Option<Vec<(String, String)>>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads the grammar; duplicate elements, unknown names, repeated pairs and
/// conflicting `ortho` partners are rejected here.
pub fn parse_text(text: &str) -> Result<LatticeFile> {
    let mut name = None;
    let mut elements = Vec::new();
    let mut known = HashSet::new();
    let mut covers = Vec::new();
    let mut seen_covers = HashSet::new();
    let mut ortho: Option<Vec<(String, String)>> = None;
    let mut partner: HashMap<String, String> = HashMap::new();
    let mut ended = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended {
            return Err(parse_error(line, "content after `end`"));
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().expect("nonempty line");
        let args: Vec<&str> = words.collect();
        if name.is_none() && keyword != "lattice" {
            return Err(parse_error(line, "file must start with `lattice <name>`"));
        }
        let known_name = |s: &str| {
            if known.contains(s) {
                Ok(s.to_string())
            } else {
                Err(Error::UnknownElement(s.to_string()))
            }
        };
        match keyword {
            "lattice" => {
                if name.is_some() {
                    return Err(parse_error(line, "second `lattice` line"));
                }
                let [n] = args[..] else {
                    return Err(parse_error(line, "expected `lattice <name>`"));
                };
                name = Some(n.to_string());
            }
            "elem" => {
                if args.is_empty() {
                    return Err(parse_error(line, "expected `elem <id>...`"));
                }
                for a in args {
                    if !known.insert(a.to_string()) {
                        return Err(Error::DuplicateElement(a.to_string()));
                    }
                    elements.push(a.to_string());
                }
            }
            "cover" => {
                let [a, b] = args[..] else {
                    return Err(parse_error(line, "expected `cover <a> <b>`"));
                };
                let pair = (known_name(a)?, known_name(b)?);
                if !seen_covers.insert(pair.clone()) {
                    return Err(Error::DuplicatePair(pair.0, pair.1));
                }
                covers.push(pair);
            }
            "ortho" => {
                let [a, b] = args[..] else {
                    return Err(parse_error(line, "expected `ortho <a> <b>`"));
                };
                let (a, b) = (known_name(a)?, known_name(b)?);
                for (x, y) in [(&a, &b), (&b, &a)] {
                    match partner.get(x) {
                        Some(p) if p == y => return Err(Error::DuplicatePair(a.clone(), b.clone())),
                        Some(_) => return Err(Error::IncompleteInvolution(x.clone())),
                        None => {}
                    }
                }
                partner.insert(a.clone(), b.clone());
                partner.insert(b.clone(), a.clone());
                ortho.get_or_insert_with(Vec::new).push((a, b));
            }
            "end" => {
                if !args.is_empty() {
                    return Err(parse_error(line, "`end` takes no arguments"));
                }
                ended = true;
            }
            other => return Err(parse_error(line, format!("unknown keyword `{other}`"))),
        }
    }
    let Some(name) = name else {
        return Err(parse_error(1, "empty file"));
    };
    if !ended {
        return Err(parse_error(text.lines().count(), "missing `end`"));
    }
    if elements.is_empty() {
        return Err(parse_error(1, "no elements"));
    }
    if ortho.is_some() {
        if let Some(e) = elements.iter().find(|e| !partner.contains_key(*e)) {
            return Err(Error::IncompleteInvolution(e.clone()));
        }
    }
    Ok(LatticeFile {
        name,
        elements,
        covers,
        ortho,
    })
}

impl LatticeFile {
    pub fn poset(&self) -> Result<Poset> {
        Poset::from_covers(self.name.clone(), &self.elements, &self.covers)
    }

    /// The orthocomplement as an index map over `l`, if the file has one.
    pub fn perp_map(&self, l: &Lattice) -> Result<Option<Vec<Elem>>> {
        let Some(pairs) = &self.ortho else {
            return Ok(None);
        };
        let mut perp = vec![usize::MAX; l.len()];
        for (a, b) in pairs {
            let (a, b) = (l.elem(a)?, l.elem(b)?);
            perp[a] = b;
            perp[b] = a;
        }
        Ok(Some(perp))
    }
}

/// Parses a file into a lattice and its orthocomplement map. The map is not
/// validated against the ortho axioms; see [`OrthoLattice::new`].
pub fn parse_lattice_file(text: &str) -> Result<(Lattice, Option<Vec<Elem>>)> {
    let file = parse_text(text)?;
    let lattice = file.poset()?.into_lattice()?;
    let perp = file.perp_map(&lattice)?;
    Ok((lattice, perp))
}

pub fn serialize_lattice(l: &Lattice, perp: Option<&[Elem]>) -> String {
    let mut out = String::new();
    writeln!(out, "lattice {}", l.name()).unwrap();
    writeln!(out, "elem {}", l.names().join(" ")).unwrap();
    for &(a, b) in l.covers() {
        writeln!(out, "cover {} {}", l.name_of(a), l.name_of(b)).unwrap();
    }
    if let Some(perp) = perp {
        for a in l.elements().filter(|&a| a <= perp[a]) {
            writeln!(out, "ortho {} {}", l.name_of(a), l.name_of(perp[a])).unwrap();
        }
    }
    out.push_str("end\n");
    out
}

pub fn serialize_ortho(ol: &OrthoLattice) -> String {
    serialize_lattice(ol, Some(ol.perp_map()))
}
