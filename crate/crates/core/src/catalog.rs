//! A fixed list of small groups and a parser for group descriptions.
//!
//! Descriptions are preset names (`Z4`, `cyclic:4`, `D5`, `S3`, `A4`, `Q8`,
//! `V4`, `trivial`), powers (`Z2^3`), and direct products of those joined by
//! `x` (`S3xZ4`, `Z2 x D4`).

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_group::{direct_product, FiniteGroup, Preset};

/// Groups of order at most 24, at most one per isomorphism type.
pub const CATALOG: &[&str] = &[
    "trivial", "Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2^3", "D4", "Q8", "Z9",
    "Z3^2", "Z10", "D5", "Z11", "Z12", "Z2xZ6", "D6", "A4", "Z13", "Z14", "D7", "Z15", "Z16", "Z4^2",
    "Z2xZ8", "Z2^2xZ4", "Z2^4", "D8", "Z2xD4", "Z2xQ8", "Z17", "Z18", "Z3xZ6", "D9", "S3xZ3", "Z19",
    "Z20", "Z2xZ10", "D10", "Z21", "Z22", "D11", "Z23", "Z24", "Z2xZ12", "Z2^2xZ6", "S4", "D12",
    "A4xZ2", "S3xZ4", "S3xV4", "D4xZ3", "Q8xZ3",
];

/// Parses a description and labels the result with it. A path to an existing
/// file is read as a Cayley table in JSON.
pub fn parse_group(desc: &str, cap: usize) -> Result<Arc<FiniteGroup>> {
    let desc = desc.trim();
    let path = Path::new(desc);
    if desc.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let g = FiniteGroup::from_json_str(&text)?;
        if g.order() > cap {
            return Err(Error::OrderCapExceeded { order: g.order(), cap });
        }
        return Ok(Arc::new(g));
    }
    let factors = parse_factors(desc, cap)?;
    let g = if factors.len() == 1 {
        factors.into_iter().next().expect("one factor")
    } else {
        direct_product(&factors, cap)?.group().clone()
    };
    Ok(Arc::new((*g).clone().with_label(desc)))
}

/// Splits a description into its direct factors, expanding powers.
pub fn parse_factors(desc: &str, cap: usize) -> Result<Vec<Arc<FiniteGroup>>> {
    let mut out = Vec::new();
    for part in desc.split(['x', '×']) {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::UnknownPreset(desc.to_string()));
        }
        let (base, power) = match part.split_once('^') {
            Some((b, p)) => (b.trim(), p.trim().parse::<usize>().map_err(|_| Error::UnknownPreset(part.into()))?),
            None => (part, 1),
        };
        if power == 0 {
            return Err(Error::UnknownPreset(part.to_string()));
        }
        let g = Arc::new(base.parse::<Preset>()?.build(cap)?);
        out.extend(std::iter::repeat_n(g, power));
    }
    Ok(out)
}

/// Catalog groups of order at most `max_order`, in catalog order.
pub fn catalog_groups(max_order: usize) -> Vec<Arc<FiniteGroup>> {
    CATALOG
        .iter()
        .map(|d| parse_group(d, usize::MAX).expect("catalog entries parse"))
        .filter(|g| g.order() <= max_order)
        .collect()
}
