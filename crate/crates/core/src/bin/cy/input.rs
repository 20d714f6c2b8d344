//! Operator inputs: inline text, @file, or catalog id. The default series
//! order honors the CYKIT_ORDER environment variable.

use cykit::catalog::catalog;
use cykit::diffops::DifferenceOperator;
use cykit::error::{Error, Result};
use cykit::exact::series::DEFAULT_ORDER;
use cykit::opalg::ThetaOperator;
use cykit::textio::{parse_diffop, parse_machine, parse_operator};

pub fn resolve_order(cli: Option<usize>) -> usize {
    if let Some(n) = cli {
        return n;
    }
    std::env::var("CYKIT_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORDER)
}

fn read_source(spec: &str) -> Result<Option<String>> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read {}: {}", path, e)))?;
        return Ok(Some(text));
    }
    Ok(None)
}

/// Inline text, @file (theta text or machine record), or catalog id.
pub fn operator(spec: &str) -> Result<ThetaOperator> {
    if let Some(text) = read_source(spec)? {
        let trimmed = text.trim_start();
        if trimmed.starts_with("CYOP") {
            return parse_machine(&text);
        }
        return parse_operator(&text);
    }
    // Catalog ids and aliases take priority; they never collide with
    // well-formed operator text.
    let miss = match catalog().get(spec) {
        Ok(_) => return catalog().operator(spec),
        Err(e) => e,
    };
    match parse_operator(spec) {
        Ok(op) => Ok(op),
        // For id-shaped inputs the catalog miss is the useful error.
        Err(parse_err) => {
            if spec.contains(['T', 'x', '^', '*', '+']) {
                Err(parse_err)
            } else {
                Err(miss)
            }
        }
    }
}

/// Difference operator from inline text, @file, or catalog id.
pub fn recursion(spec: &str) -> Result<DifferenceOperator> {
    if let Some(text) = read_source(spec)? {
        return parse_diffop(&text);
    }
    if catalog().get(spec).is_ok() {
        return catalog().recursion(spec);
    }
    parse_diffop(spec)
}
