//! An automorphism of the countable direct sum of copies of `Z` that has a
//! single twisted class yet fixes nonzero elements.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finitely supported integer sequence `(a_1, a_2, ..)`, stored sparsely.
///
/// Indices start at 1 and zero entries are never stored. JSON form is an
/// object `{"index": value}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u64, i64>", into = "BTreeMap<u64, i64>")]
pub struct FinSuppIntSeq(BTreeMap<u64, i64>);

impl TryFrom<BTreeMap<u64, i64>> for FinSuppIntSeq {
    type Error = Error;

    fn try_from(map: BTreeMap<u64, i64>) -> Result<Self> {
        if map.contains_key(&0) {
            return Err(Error::InvalidSequence("indices start at 1".into()));
        }
        Ok(FinSuppIntSeq(map.into_iter().filter(|&(_, v)| v != 0).collect()))
    }
}

impl From<FinSuppIntSeq> for BTreeMap<u64, i64> {
    fn from(s: FinSuppIntSeq) -> Self {
        s.0
    }
}

impl FinSuppIntSeq {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The standard basis vector `e_k`.
    pub fn basis(k: u64) -> Self {
        let mut s = Self::zero();
        s.set(k, 1);
        s
    }

    /// Builds `(a_1, .., a_n)` from a dense prefix.
    pub fn from_dense(values: &[i64]) -> Self {
        let mut s = Self::zero();
        for (i, &v) in values.iter().enumerate() {
            s.set(i as u64 + 1, v);
        }
        s
    }

    pub fn get(&self, k: u64) -> i64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    /// Panics on index 0.
    pub fn set(&mut self, k: u64, v: i64) {
        assert!(k >= 1, "indices start at 1");
        if v == 0 {
            self.0.remove(&k);
        } else {
            self.0.insert(k, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index with a nonzero entry, 0 for the zero sequence.
    pub fn max_index(&self) -> u64 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.set(k, out.get(k) - v);
        }
        out
    }

    /// Builds the sequence `k ↦ rule(k)`. Each rule here only reads indices
    /// at or above `k`, so the output support stays within the input's.
    fn map_indices(&self, rule: impl Fn(u64) -> i64) -> Self {
        let mut out = Self::zero();
        for k in 1..=self.max_index() {
            out.set(k, rule(k));
        }
        out
    }
}

impl fmt::Display for FinSuppIntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense: Vec<String> = (1..=self.max_index()).map(|k| self.get(k).to_string()).collect();
        write!(f, "({})", dense.join(", "))
    }
}

/// Odd position `2k-1` becomes `a_{2k-1} + a_{2k} + a_{2k+1}`, even position
/// `2k` becomes `a_{2k} + a_{2k+1}`.
pub fn phi_example(a: &FinSuppIntSeq) -> FinSuppIntSeq {
    a.map_indices(|k| {
        if k % 2 == 1 {
            a.get(k) + a.get(k + 1) + a.get(k + 2)
        } else {
            a.get(k) + a.get(k + 1)
        }
    })
}

/// The inverse of [`phi_example`]: odd position `2k-1` becomes
/// `a_{2k-1} - a_{2k}`, even position `2k` becomes `a_{2k} - a_{2k+1} + a_{2k+2}`.
pub fn psi_example(a: &FinSuppIntSeq) -> FinSuppIntSeq {
    a.map_indices(|k| {
        if k % 2 == 1 {
            a.get(k) - a.get(k + 1)
        } else {
            a.get(k) - a.get(k + 1) + a.get(k + 2)
        }
    })
}

/// `φ - Id`: odd position `2k-1` becomes `a_{2k} + a_{2k+1}`, even position
/// `2k` becomes `a_{2k+1}`.
pub fn phi_minus_id(a: &FinSuppIntSeq) -> FinSuppIntSeq {
    a.map_indices(|k| {
        if k % 2 == 1 {
            a.get(k + 1) + a.get(k + 2)
        } else {
            a.get(k + 1)
        }
    })
}

/// A preimage of `t` under `φ - Id`, taking `a_1 = 0`:
/// `a_{2k+1} = t_{2k}` and `a_{2k} = t_{2k-1} - t_{2k}`.
pub fn solve_phi_minus_id(t: &FinSuppIntSeq) -> FinSuppIntSeq {
    let mut a = FinSuppIntSeq::zero();
    let top = t.max_index() + 1;
    let mut k = 1;
    while 2 * k - 1 <= top {
        a.set(2 * k, t.get(2 * k - 1) - t.get(2 * k));
        a.set(2 * k + 1, t.get(2 * k));
        k += 1;
    }
    a
}
