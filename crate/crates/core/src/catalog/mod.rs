//! The seeded operator catalog: every operator printed in the source
//! material, the recursion-classifier table, and the recorded relations,
//! loaded from a versioned plain-text data file embedded in the crate.

use crate::diffops::{DifferenceOperator, QuadraticSignature};
use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::families::{hadamard_2x2, hadamard_product_operator};
use crate::opalg::ThetaOperator;
use crate::textio::{parse_diffop, parse_operator};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

const CATALOG_DATA: &str = include_str!("../../data/catalog.cyd");

/// How an entry's operator is produced when it is not stored literally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construct {
    /// Closed-formula Hadamard product of a second-degree row with a
    /// hypergeometric row.
    Hadamard { deg2: String, hyper: String },
    /// Fit-based product of two stored operators' solution sequences.
    HadamardFit { left: String, right: String },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub aliases: Vec<String>,
    pub source: String,
    pub tags: Vec<String>,
    pub corrected: bool,
    pub excluded: bool,
    pub garbled: bool,
    pub notes: Vec<String>,
    pub params: BTreeMap<String, Rat>,
    pub op_text: Option<String>,
    pub recop_text: Option<String>,
    pub q0: Option<Poly>,
    /// The printed discriminant value (parsed from the table's D column).
    pub printed_d: Option<BigInt>,
    pub printed_abs_d: Option<BigInt>,
    /// The table's degree column, possibly "?".
    pub degree_col: Option<String>,
    /// Big-table ids this row refers to.
    pub row_ids: Vec<String>,
    /// Opaque cross references (grid cells and similar).
    pub xrefs: Vec<String>,
    pub construct: Option<Construct>,
}

impl CatalogEntry {
    fn new(id: String) -> Self {
        CatalogEntry {
            id,
            aliases: Vec::new(),
            source: String::new(),
            tags: Vec::new(),
            corrected: false,
            excluded: false,
            garbled: false,
            notes: Vec::new(),
            params: BTreeMap::new(),
            op_text: None,
            recop_text: None,
            q0: None,
            printed_d: None,
            printed_abs_d: None,
            degree_col: None,
            row_ids: Vec::new(),
            xrefs: Vec::new(),
            construct: None,
        }
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    pub fn param(&self, name: &str) -> Result<Rat> {
        self.params.get(name).cloned().ok_or_else(|| {
            Error::Internal(format!("entry {} lacks parameter {}", self.id, name))
        })
    }
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
    pub relations: Vec<(String, String, String)>,
    pub notices: Vec<String>,
    built: Mutex<HashMap<String, ThetaOperator>>,
}

fn parse_data(data: &str) -> Result<Catalog> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut relations = Vec::new();
    let mut notices = Vec::new();
    let mut lines = data.lines().peekable();
    let header = lines.next().unwrap_or_default();
    if header.trim() != "CYCAT 1" {
        return Err(Error::Internal("catalog data must start with 'CYCAT 1'".into()));
    }
    for raw in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(' ') {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        if key == "entry" {
            entries.push(CatalogEntry::new(rest.to_string()));
            continue;
        }
        if key == "relation" {
            let mut it = rest.split_whitespace();
            let kind = it.next().unwrap_or_default().to_string();
            let a = it.next().unwrap_or_default().to_string();
            let b = it.next().unwrap_or_default().to_string();
            relations.push((kind, a, b));
            continue;
        }
        if key == "notice" {
            notices.push(rest.to_string());
            continue;
        }
        let entry = entries
            .last_mut()
            .ok_or_else(|| Error::Internal(format!("catalog line outside an entry: {}", line)))?;
        match key {
            "alias" => entry.aliases.extend(rest.split_whitespace().map(String::from)),
            "source" => entry.source = rest.to_string(),
            "tags" => entry.tags.extend(rest.split_whitespace().map(String::from)),
            "flag" => match rest {
                "corrected" => entry.corrected = true,
                "excluded" => entry.excluded = true,
                "garbled" => entry.garbled = true,
                other => {
                    return Err(Error::Internal(format!("unknown catalog flag {:?}", other)))
                }
            },
            "note" => entry.notes.push(rest.to_string()),
            "param" => {
                let (name, value) = rest.split_once(' ').ok_or_else(|| {
                    Error::Internal(format!("malformed param line: {}", line))
                })?;
                entry.params.insert(name.to_string(), Rat::from_str(value.trim())?);
            }
            "op" => entry.op_text = Some(rest.to_string()),
            "recop" => entry.recop_text = Some(rest.to_string()),
            "q0" => {
                let coeffs: Result<Vec<Rat>> =
                    rest.split_whitespace().map(Rat::from_str).collect();
                entry.q0 = Some(Poly::from_coeffs(Var::N, coeffs?));
            }
            "dcol" => {
                entry.printed_d = Some(BigInt::from_str(rest).map_err(|_| {
                    Error::Internal(format!("bad dcol value {:?}", rest))
                })?)
            }
            "absd" => {
                entry.printed_abs_d = Some(BigInt::from_str(rest).map_err(|_| {
                    Error::Internal(format!("bad absd value {:?}", rest))
                })?)
            }
            "degcol" => entry.degree_col = Some(rest.to_string()),
            "ids" => entry.row_ids.extend(rest.split_whitespace().map(String::from)),
            "xref" => entry.xrefs.push(rest.to_string()),
            "construct" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                entry.construct = Some(match parts.as_slice() {
                    ["hadamard", d, h] => {
                        Construct::Hadamard { deg2: d.to_string(), hyper: h.to_string() }
                    }
                    ["hadamard-fit", l, r] => {
                        Construct::HadamardFit { left: l.to_string(), right: r.to_string() }
                    }
                    _ => {
                        return Err(Error::Internal(format!(
                            "unknown construct directive: {}",
                            rest
                        )))
                    }
                });
            }
            other => {
                return Err(Error::Internal(format!("unknown catalog key {:?}", other)))
            }
        }
    }
    let mut index = HashMap::new();
    for (i, e) in entries.iter().enumerate() {
        if index.insert(e.id.clone(), i).is_some() {
            return Err(Error::Internal(format!("duplicate catalog id {}", e.id)));
        }
        for a in &e.aliases {
            index.insert(a.clone(), i);
        }
    }
    Ok(Catalog { entries, index, relations, notices, built: Mutex::new(HashMap::new()) })
}

/// The process-wide catalog, parsed once.
pub fn catalog() -> &'static Catalog {
    static INSTANCE: OnceLock<Catalog> = OnceLock::new();
    INSTANCE.get_or_init(|| parse_data(CATALOG_DATA).expect("embedded catalog data is valid"))
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        match self.index.get(id) {
            Some(&i) => Ok(&self.entries[i]),
            None => {
                let mut near: Vec<String> = self
                    .entries
                    .iter()
                    .map(|e| e.id.clone())
                    .filter(|known| {
                        known.contains(id)
                            || id.contains(known.as_str())
                            || known
                                .strip_prefix("sporadic-")
                                .or_else(|| known.strip_prefix("deg3-"))
                                .map(|suffix| suffix == id)
                                .unwrap_or(false)
                    })
                    .collect();
                near.truncate(6);
                Err(Error::NotFound { id: id.to_string(), near })
            }
        }
    }

    /// The entry's operator, building constructed entries on demand.
    pub fn operator(&self, id: &str) -> Result<ThetaOperator> {
        let entry = self.get(id)?;
        if let Some(hit) = self.built.lock().unwrap().get(&entry.id) {
            return Ok(hit.clone());
        }
        let op = match (&entry.op_text, &entry.construct) {
            (Some(text), _) => parse_operator(text)?,
            (None, Some(Construct::Hadamard { deg2, hyper })) => {
                let d = self.get(deg2)?;
                let h = self.get(hyper)?;
                let p = Poly::from_coeffs(
                    Var::Theta,
                    vec![d.param("b")?, d.param("a")?, d.param("a")?],
                );
                let q = Poly::from_coeffs(
                    Var::Theta,
                    vec![h.param("q0")?, h.param("q1")?, h.param("q2")?],
                );
                hadamard_2x2(&p, &d.param("c")?, &q)?
            }
            (None, Some(Construct::HadamardFit { left, right })) => {
                let l = self.operator(left)?;
                let r = self.operator(right)?;
                hadamard_product_operator(&l, &r, 8)?
            }
            (None, None) => {
                return Err(Error::Domain(format!("catalog entry {} has no operator", entry.id)))
            }
        };
        self.built.lock().unwrap().insert(entry.id.clone(), op.clone());
        Ok(op)
    }

    /// The entry's difference operator, when stored.
    pub fn recursion(&self, id: &str) -> Result<DifferenceOperator> {
        let entry = self.get(id)?;
        match &entry.recop_text {
            Some(text) => parse_diffop(text),
            None => Err(Error::Domain(format!(
                "catalog entry {} has no difference operator",
                entry.id
            ))),
        }
    }

    /// All classifier rows matching a signature, by their big-table ids.
    pub fn superseeker_lookup(&self, sig: &QuadraticSignature) -> Vec<String> {
        let mut out = Vec::new();
        for e in &self.entries {
            if !e.has_tag("superseeker") {
                continue;
            }
            let Some(q0) = &e.q0 else { continue };
            if let Ok(row_sig) = QuadraticSignature::from_quadratic(q0) {
                if sig.matches(&row_sig) {
                    out.extend(e.row_ids.iter().cloned());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::render_theta;

    #[test]
    fn catalog_loads_and_indexes() {
        let c = catalog();
        assert!(c.entries().len() > 100);
        assert_eq!(c.get("tilde-3").unwrap().id, "tilde-3");
        assert_eq!(c.get("~3").unwrap().id, "tilde-3");
        assert_eq!(c.get("18").unwrap().id, "sporadic-18");
        assert!(c.get("tilde-99").is_err());
    }

    #[test]
    fn near_matches_reported() {
        match catalog().get("tilde") {
            Err(Error::NotFound { near, .. }) => assert!(!near.is_empty()),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn stored_operators_parse_and_round_trip() {
        let c = catalog();
        for e in c.entries() {
            if let Some(text) = &e.op_text {
                let op = parse_operator(text).unwrap_or_else(|err| {
                    panic!("entry {} failed to parse: {}", e.id, err)
                });
                let back = parse_operator(&render_theta(&op)).unwrap();
                assert_eq!(back, op, "round trip for {}", e.id);
            }
        }
    }

    #[test]
    fn grid_product_matches_printed_example() {
        let c = catalog();
        let dj = c.operator("hadamard-D-j").unwrap();
        let printed = parse_operator(
            "T^4 - 144*x*(6*T+1)*(6*T+5)*(72*T^2+72*T+31) + 26873856*x^2*(6*T+1)*(6*T+5)*(6*T+7)*(6*T+11)",
        )
        .unwrap();
        assert_eq!(dj, printed);
    }

    #[test]
    fn superseeker_row_lookup() {
        let c = catalog();
        let sig = QuadraticSignature::from_quadratic(&Poly::from_ints(Var::N, &[142, -209, 77]))
            .unwrap();
        assert_eq!(c.superseeker_lookup(&sig), vec!["232".to_string()]);
        let sig2 = QuadraticSignature::from_quadratic(&Poly::from_ints(Var::N, &[22, -35, 14]))
            .unwrap();
        assert_eq!(c.superseeker_lookup(&sig2), vec!["241".to_string(), "33".to_string()]);
        let none = QuadraticSignature::from_quadratic(&Poly::from_ints(Var::N, &[1, 0, 1]))
            .unwrap();
        assert!(c.superseeker_lookup(&none).is_empty());
    }
}
