//! Finite groups given by Cayley tables, their subgroups, and direct products.
//!
//! Elements are plain indices `0..order`; the identity is always index 0.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom_engine::GroupHom;
use crate::union_find::UnionFind;

/// Default upper bound on group orders built by presets and products.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// A finite group stored as a full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    element_orders: Vec<usize>,
    names: Option<Vec<String>>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
    label: String,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Wire format for user supplied groups.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyTableJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a user table and builds a group from it.
    ///
    /// Checks run in the order closure, identity, inverses, associativity;
    /// the first failing check reports its lexicographically first witness.
    /// The identity is relabelled to index 0 by swapping it with the element
    /// that previously held that index.
    pub fn from_cayley_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::TableShape("empty table".into()));
        }
        if let Some((row, r)) = table.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::TableShape(format!(
                "row {row} has length {}, expected {n}",
                r.len()
            )));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::TableShape(format!(
                    "{} names for {n} elements",
                    names.len()
                )));
            }
        }
        for (row, r) in table.iter().enumerate() {
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::NotClosed { row, col, value });
            }
        }
        let m = |a: usize, b: usize| table[a][b];
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e && m(y, x) == e) {
                return Err(Error::NoInverse { element: x });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }

        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(m(a, b));
            }
        }
        let names = names.map(|mut v| {
            v.swap(0, e);
            v
        });
        Ok(Self::from_trusted_table(n, mul, names, None, format!("G{n}")))
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: CayleyTableJson = serde_json::from_str(s)?;
        if raw.order != raw.table.len() {
            return Err(Error::TableShape(format!(
                "declared order {} but table has {} rows",
                raw.order,
                raw.table.len()
            )));
        }
        Self::from_cayley_table(&raw.table, raw.names)
    }

    pub fn to_cayley_json(&self) -> CayleyTableJson {
        CayleyTableJson {
            order: self.order,
            table: self.table(),
            names: self.names.clone(),
        }
    }

    /// Builds a group from a table already known to be a group with identity 0.
    ///
    /// Generators are taken from `generators` when given, otherwise chosen
    /// greedily by smallest index extending the current closure.
    pub(crate) fn from_trusted_table(
        order: usize,
        mul: Vec<usize>,
        names: Option<Vec<String>>,
        generators: Option<Vec<usize>>,
        label: String,
    ) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("trusted table has inverses");
        }
        let mut element_orders = vec![1; order];
        for (x, slot) in element_orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut p = x;
            while p != 0 {
                p = mul[p * order + x];
                k += 1;
            }
            *slot = k;
        }
        let mut group = FiniteGroup {
            order,
            mul,
            inv,
            element_orders,
            names,
            generators: Vec::new(),
            words: Vec::new(),
            label,
        };
        let generators = match generators {
            Some(g) if !g.is_empty() => g,
            _ => group.greedy_generators(),
        };
        group.words = group
            .bfs_words(&generators)
            .expect("generators must generate the group");
        group.generators = generators;
        group
    }

    fn greedy_generators(&self) -> Vec<usize> {
        if self.order == 1 {
            return vec![0];
        }
        let mut gens = Vec::new();
        let mut closed = vec![false; self.order];
        closed[0] = true;
        for x in 1..self.order {
            if !closed[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    closed[y] = true;
                }
            }
        }
        gens
    }

    fn bfs_words(&self, gens: &[usize]) -> Option<Vec<Vec<usize>>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(i);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words.into_iter().collect()
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    /// Evaluates a word over the generator list.
    pub fn eval_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &i| self.mul(acc, self.generators[i]))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| self.commute(a, b))
    }

    pub fn center_elements(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| self.generators.iter().all(|&g| self.commute(z, g)))
            .collect()
    }

    pub fn centralizer_elements(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&b| self.commute(a, b)).collect()
    }

    /// Histogram of element orders, indexed by order.
    pub fn order_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.order + 1];
        for &o in &self.element_orders {
            h[o] += 1;
        }
        h
    }
}

/// Subgroup of a finite group, stored as a sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && *self.parent == *other.parent
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({} of {})", self.elements.iter().join(","), self.parent.label())
    }
}

impl Subgroup {
    /// Validates that `elements` form a subgroup of `parent`.
    pub fn new(parent: &Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let n = parent.order();
        let mut member = vec![false; n];
        for &x in &elements {
            if x >= n {
                return Err(Error::NotASubgroup(format!("element {x} out of range")));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in &elements {
            if !member[parent.inv(a)] {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if !member[parent.mul(a, b)] {
                    return Err(Error::NotASubgroup(format!("{a} * {b} missing")));
                }
            }
        }
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
        })
    }

    pub(crate) fn from_sorted_unchecked(parent: &Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent: parent.clone(),
            elements,
        }
    }

    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        Self::from_sorted_unchecked(parent, parent.closure(gens))
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted_unchecked(parent, vec![0])
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted_unchecked(parent, (0..parent.order()).collect())
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators()
            .iter()
            .all(|&t| self.elements.iter().all(|&x| self.contains(g.conj(t, x))))
    }

    pub fn normal_closure(&self) -> Subgroup {
        let g = &self.parent;
        let mut gens = self.elements.clone();
        loop {
            let current = g.closure(&gens);
            let extra: Vec<usize> = current
                .iter()
                .flat_map(|&x| g.generators().iter().map(move |&t| g.conj(t, x)))
                .filter(|y| current.binary_search(y).is_err())
                .collect();
            if extra.is_empty() {
                return Self::from_sorted_unchecked(g, current);
            }
            gens = current;
            gens.extend(extra);
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Self::from_sorted_unchecked(&self.parent, elements)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = self.elements.iter().chain(&other.elements).copied().collect();
        Self::generated_by(&self.parent, &gens)
    }

    pub fn commutes_with(&self, other: &Subgroup) -> bool {
        self.elements
            .iter()
            .all(|&a| other.elements.iter().all(|&b| self.parent.commute(a, b)))
    }
}

/// Center `{z : zx = xz for all x}`.
pub fn center(g: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup::from_sorted_unchecked(g, g.center_elements())
}

/// Ordinary conjugacy classes, each sorted and listed by minimal element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(g.order());
    for x in 0..g.order() {
        for &t in g.generators() {
            uf.union(x, g.conj(t, x));
        }
    }
    uf.into_blocks()
}

/// True iff the parts are normal, pairwise commuting, multiply to the whole
/// group, and each meets the product of the others trivially.
pub fn internal_direct_product_check(g: &Arc<FiniteGroup>, parts: &[Subgroup]) -> bool {
    if parts.is_empty() {
        return g.order() == 1;
    }
    if parts.iter().any(|p| !Arc::ptr_eq(p.parent(), g) && **p.parent() != **g) {
        return false;
    }
    if !parts.iter().all(Subgroup::is_normal) {
        return false;
    }
    for (a, b) in parts.iter().tuple_combinations() {
        if !a.commutes_with(b) {
            return false;
        }
    }
    let all = parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.join(p));
    if all.order() != g.order() {
        return false;
    }
    (0..parts.len()).all(|i| {
        let others = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subgroup::trivial(g), |acc, (_, p)| acc.join(p));
        others.intersection(&parts[i]).is_trivial()
    })
}

/// Named small groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Klein4,
}

impl FromStr for Preset {
    type Err = Error;

    /// Parses `cyclic:4`, `dihedral:5`, `symmetric:3`, `alternating:4`,
    /// `quaternion8`, `klein4`, `trivial`, or the short forms `Z4`, `D4`,
    /// `S3`, `A4`, `Q8`, `V4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownPreset(s.to_string());
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "quaternion8" | "q8" => return Ok(Preset::Quaternion8),
            "klein4" | "v4" => return Ok(Preset::Klein4),
            "trivial" => return Ok(Preset::Cyclic(1)),
            _ => {}
        }
        let (name, param) = match lower.split_once(':') {
            Some((a, b)) => (a.to_string(), b.to_string()),
            None => {
                let split = lower
                    .find(|c: char| c.is_ascii_digit())
                    .ok_or_else(bad)?;
                (lower[..split].to_string(), lower[split..].to_string())
            }
        };
        let n: usize = param.parse().map_err(|_| bad())?;
        let params = [n];
        match name.as_str() {
            "cyclic" | "z" | "c" => Preset::from_parts("cyclic", &params),
            "dihedral" | "d" => Preset::from_parts("dihedral", &params),
            "symmetric" | "s" => Preset::from_parts("symmetric", &params),
            "alternating" | "a" => Preset::from_parts("alternating", &params),
            _ => Err(bad()),
        }
    }
}

impl Preset {
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self> {
        let bad = || Error::UnknownPreset(format!("{name}{params:?}"));
        let one = || match params {
            [n] if *n >= 1 => Ok(*n),
            _ => Err(bad()),
        };
        match name {
            "cyclic" => Ok(Preset::Cyclic(one()?)),
            "dihedral" => Ok(Preset::Dihedral(one()?)),
            "symmetric" => match one()? {
                n if n <= 5 => Ok(Preset::Symmetric(n)),
                _ => Err(bad()),
            },
            "alternating" => match one()? {
                n if n <= 5 => Ok(Preset::Alternating(n)),
                _ => Err(bad()),
            },
            "quaternion8" if params.is_empty() => Ok(Preset::Quaternion8),
            "klein4" if params.is_empty() => Ok(Preset::Klein4),
            _ => Err(bad()),
        }
    }

    fn expected_order(self) -> usize {
        let fact = |n: usize| (1..=n).product::<usize>();
        match self {
            Preset::Cyclic(n) => n,
            Preset::Dihedral(n) => n.saturating_mul(2),
            Preset::Symmetric(n) => fact(n),
            Preset::Alternating(n) => (fact(n) / 2).max(1),
            Preset::Quaternion8 => 8,
            Preset::Klein4 => 4,
        }
    }

    pub fn build(self, cap: usize) -> Result<FiniteGroup> {
        let order = self.expected_order();
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        Ok(match self {
            Preset::Cyclic(n) => cyclic(n),
            Preset::Dihedral(n) => dihedral(n),
            Preset::Symmetric(n) => permutation_group(n, false),
            Preset::Alternating(n) => permutation_group(n, true),
            Preset::Quaternion8 => quaternion8(),
            Preset::Klein4 => klein4(),
        })
    }
}

/// Builds a named group under the default order cap.
pub fn preset(name: &str, params: &[usize]) -> Result<FiniteGroup> {
    Preset::from_parts(name, params)?.build(DEFAULT_ORDER_CAP)
}

fn cyclic(n: usize) -> FiniteGroup {
    let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let gens = if n == 1 { vec![0] } else { vec![1] };
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_trusted_table(n, mul, Some(names), Some(gens), format!("Z{n}"))
}

fn klein4() -> FiniteGroup {
    let mul = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
    let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
    FiniteGroup::from_trusted_table(4, mul, Some(names), Some(vec![1, 2]), "V4".into())
}

/// `r^i s^e` is stored at index `i + n e`.
fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let decode = |x: usize| (x % n, x / n);
    let mut mul = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let (a, e) = decode(x);
            let (b, f) = decode(y);
            let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
            mul[x * order + y] = rot + n * ((e + f) % 2);
        }
    }
    let names = (0..order)
        .map(|x| {
            let (a, e) = decode(x);
            match (a, e) {
                (0, 0) => "e".to_string(),
                (0, _) => "s".to_string(),
                (1, 0) => "r".to_string(),
                (1, _) => "r s".to_string(),
                (a, 0) => format!("r^{a}"),
                (a, _) => format!("r^{a} s"),
            }
        })
        .collect();
    let gens = if n == 1 { vec![1] } else { vec![1, n] };
    FiniteGroup::from_trusted_table(order, mul, Some(names), Some(gens), format!("D{n}"))
}

fn permutation_group(n: usize, even_only: bool) -> FiniteGroup {
    let parity = |p: &[usize]| {
        let inversions = (0..p.len())
            .tuple_combinations()
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2
    };
    let perms: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .filter(|p| !even_only || parity(p) == 0)
        .collect();
    let order = perms.len();
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let mut mul = vec![0; order * order];
    for (x, p) in perms.iter().enumerate() {
        for (y, q) in perms.iter().enumerate() {
            // (p q)(i) = p(q(i))
            let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
            mul[x * order + y] = index(&pq);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    let mut gens: Vec<usize> = Vec::new();
    let mut push = |p: Vec<usize>| {
        let i = index(&p);
        if i != 0 && !gens.contains(&i) {
            gens.push(i);
        }
    };
    if even_only {
        for k in 2..n {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            push(p);
        }
    } else if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        push(t);
        push((0..n).map(|i| (i + 1) % n).collect());
    }
    if gens.is_empty() {
        gens.push(0);
    }
    let label = if even_only { format!("A{n}") } else { format!("S{n}") };
    FiniteGroup::from_trusted_table(order, mul, Some(names), Some(gens), label)
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.iter().join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// `±u` for `u` in `1, i, j, k` stored at index `2u + sign`.
fn quaternion8() -> FiniteGroup {
    // unit products as (negated, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut mul = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (neg, u) = UNIT[x / 2][y / 2];
            mul[x * 8 + y] = 2 * u + ((x % 2) ^ (y % 2) ^ neg);
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    FiniteGroup::from_trusted_table(8, mul, Some(names), Some(vec![2, 4]), "Q8".into())
}

/// External direct product with lexicographic element encoding.
#[derive(Clone)]
pub struct ProductGroup {
    factors: Vec<Arc<FiniteGroup>>,
    group: Arc<FiniteGroup>,
    strides: Vec<usize>,
    embed: Vec<GroupHom>,
    project: Vec<GroupHom>,
}

impl fmt::Debug for ProductGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductGroup({})", self.group.label())
    }
}

/// Direct product `G_1 x ... x G_n`; coordinate 0 is the most significant digit.
pub fn direct_product(factors: &[Arc<FiniteGroup>], cap: usize) -> Result<ProductGroup> {
    if factors.is_empty() {
        return Err(Error::TableShape("direct product of no factors".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .filter(|&o| o <= cap)
        .ok_or_else(|| Error::OrderCapExceeded {
            order: factors.iter().fold(1usize, |a, f| a.saturating_mul(f.order())),
            cap,
        })?;
    let k = factors.len();
    let mut strides = vec![1; k];
    for i in (0..k - 1).rev() {
        strides[i] = strides[i + 1] * factors[i + 1].order();
    }
    let decode = |x: usize| -> Vec<usize> {
        (0..k).map(|i| (x / strides[i]) % factors[i].order()).collect()
    };
    let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut mul = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            mul[x * order + y] = (0..k)
                .map(|i| factors[i].mul(coords[x][i], coords[y][i]) * strides[i])
                .sum();
        }
    }
    let names = coords
        .iter()
        .map(|c| format!("({})", (0..k).map(|i| factors[i].name(c[i])).join(", ")))
        .collect();
    let label = factors.iter().map(|f| f.label()).join(" x ");
    let group = Arc::new(FiniteGroup::from_trusted_table(order, mul, Some(names), None, label));

    let embed = (0..k)
        .map(|i| {
            let map = (0..factors[i].order()).map(|g| g * strides[i]).collect();
            GroupHom::from_map_unchecked(factors[i].clone(), group.clone(), map)
        })
        .collect();
    let project = (0..k)
        .map(|i| {
            let map = coords.iter().map(|c| c[i]).collect();
            GroupHom::from_map_unchecked(group.clone(), factors[i].clone(), map)
        })
        .collect();
    Ok(ProductGroup {
        factors: factors.to_vec(),
        group,
        strides,
        embed,
        project,
    })
}

impl ProductGroup {
    pub fn factors(&self) -> &[Arc<FiniteGroup>] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Arc<FiniteGroup> {
        &self.factors[i]
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Canonical inclusion `e_i`.
    pub fn embedding(&self, i: usize) -> &GroupHom {
        &self.embed[i]
    }

    /// Canonical projection `pi_i`.
    pub fn projection(&self, i: usize) -> &GroupHom {
        &self.project[i]
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    #[inline]
    pub fn coord(&self, x: usize, i: usize) -> usize {
        (x / self.strides[i]) % self.factors[i].order()
    }

    pub fn coords(&self, x: usize) -> Vec<usize> {
        (0..self.factors.len()).map(|i| self.coord(x, i)).collect()
    }

    /// Image of factor `i` inside the product.
    pub fn factor_subgroup(&self, i: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.embed[i].map().to_vec();
        elements.sort_unstable();
        Subgroup::from_sorted_unchecked(&self.group, elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(p: Preset) -> Arc<FiniteGroup> {
        Arc::new(p.build(DEFAULT_ORDER_CAP).unwrap())
    }

    fn z6_table() -> Vec<Vec<usize>> {
        (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect()
    }

    fn first_non_associative(t: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = t.len();
        (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| t[t[a][b]][c] != t[a][t[b][c]])
    }

    #[test]
    fn trivial_and_z2_tables() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.generators(), &[0]);
        let z2 = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.mul(1, 1), 0);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z3 written with identity at index 2
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let names = Some(vec!["a".into(), "b".into(), "e".into()]);
        let g = FiniteGroup::from_cayley_table(&t, names).unwrap();
        assert_eq!(g.name(0), "e");
        for x in 0..3 {
            assert_eq!(g.mul(0, x), x);
        }
    }

    #[test]
    fn mutated_z6_reports_first_associativity_witness() {
        let mut t = z6_table();
        // 1 * 2 = 4 instead of 3; identity and inverses survive
        t[1][2] = 4;
        let expected = first_non_associative(&t).unwrap();
        match FiniteGroup::from_cayley_table(&t, None) {
            Err(Error::NotAssociative { a, b, c }) => assert_eq!((a, b, c), expected),
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn table_errors() {
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]], None),
            Err(Error::TableShape(_))
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]], None),
            Err(Error::NotClosed { row: 0, col: 1, value: 2 })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![1, 1], vec![1, 1]], None),
            Err(Error::NoIdentity)
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]], None),
            Err(Error::NoInverse { element: 1 })
        ));
    }

    #[test]
    fn words_evaluate_to_their_element() {
        for p in [Preset::Symmetric(4), Preset::Dihedral(5), Preset::Quaternion8] {
            let g = p.build(DEFAULT_ORDER_CAP).unwrap();
            for x in 0..g.order() {
                assert_eq!(g.eval_word(&g.words()[x]), x);
            }
            assert_eq!(g.closure(g.generators()).len(), g.order());
        }
    }

    #[test]
    fn presets_have_expected_shape() {
        assert_eq!(preset("cyclic", &[1]).unwrap().order(), 1);
        let s3 = arc(Preset::Symmetric(3));
        assert_eq!(s3.order(), 6);
        assert_eq!(conjugacy_classes(&s3).len(), 3);
        let d4 = arc(Preset::Dihedral(4));
        assert_eq!(d4.order(), 8);
        assert_eq!(center(&d4).order(), 2);
        assert_eq!(arc(Preset::Alternating(4)).order(), 12);
        assert_eq!(arc(Preset::Alternating(5)).order(), 60);
        let q8 = arc(Preset::Quaternion8);
        assert_eq!(center(&q8).order(), 2);
        assert_eq!(q8.order_histogram()[4], 6);
        assert!(matches!(preset("symmetric", &[6]), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("bogus", &[2]), Err(Error::UnknownPreset(_))));
        assert!(matches!(
            Preset::Cyclic(10).build(5),
            Err(Error::OrderCapExceeded { order: 10, cap: 5 })
        ));
    }

    #[test]
    fn preset_parsing() {
        assert_eq!("cyclic:3".parse::<Preset>().unwrap(), Preset::Cyclic(3));
        assert_eq!("S4".parse::<Preset>().unwrap(), Preset::Symmetric(4));
        assert_eq!("d5".parse::<Preset>().unwrap(), Preset::Dihedral(5));
        assert_eq!("klein4".parse::<Preset>().unwrap(), Preset::Klein4);
        assert!("cyclic:x".parse::<Preset>().is_err());
    }

    #[test]
    fn centers_by_brute_scan() {
        let brute = |g: &FiniteGroup| {
            (0..g.order())
                .filter(|&z| (0..g.order()).all(|x| g.commute(z, x)))
                .count()
        };
        for p in [Preset::Cyclic(4), Preset::Symmetric(3), Preset::Dihedral(4), Preset::Symmetric(4)] {
            let g = arc(p);
            assert_eq!(center(&g).order(), brute(&g), "{p:?}");
        }
        assert_eq!(center(&arc(Preset::Cyclic(4))).order(), 4);
        assert!(center(&arc(Preset::Symmetric(3))).is_trivial());
    }

    #[test]
    fn conjugacy_classes_by_brute_orbits() {
        let s3 = arc(Preset::Symmetric(3));
        let mut sizes: Vec<usize> = conjugacy_classes(&s3).iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // brute orbits over every conjugator
        for p in [Preset::Symmetric(4), Preset::Quaternion8, Preset::Dihedral(6)] {
            let g = arc(p);
            let classes = conjugacy_classes(&g);
            for class in &classes {
                let x = class[0];
                let mut orbit: Vec<usize> = (0..g.order()).map(|t| g.conj(t, x)).collect();
                orbit.sort();
                orbit.dedup();
                assert_eq!(&orbit, class);
            }
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        }
        assert_eq!(conjugacy_classes(&arc(Preset::Cyclic(7))).len(), 7);
        assert_eq!(conjugacy_classes(&arc(Preset::Cyclic(1))).len(), 1);
    }

    #[test]
    fn internal_direct_products() {
        let z6 = arc(Preset::Cyclic(6));
        let two = Subgroup::generated_by(&z6, &[3]);
        let three = Subgroup::generated_by(&z6, &[2]);
        assert!(internal_direct_product_check(&z6, &[two, three]));

        let z4 = arc(Preset::Cyclic(4));
        let h = Subgroup::generated_by(&z4, &[2]);
        assert!(!internal_direct_product_check(&z4, &[h.clone(), h]));

        let s3 = arc(Preset::Symmetric(3));
        let a3 = Subgroup::generated_by(&s3, &[s3.generators()[1]]);
        let t = Subgroup::generated_by(&s3, &[s3.generators()[0]]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        assert!(!t.is_normal());
        assert!(!internal_direct_product_check(&s3, &[a3, t]));
    }

    #[test]
    fn products() {
        let triv = arc(Preset::Cyclic(1));
        let p = direct_product(&[triv], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group().order(), 1);

        let p = direct_product(&[arc(Preset::Cyclic(2)), arc(Preset::Cyclic(3))], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group().order(), 6);
        assert!(p.group().is_abelian());

        let s3 = arc(Preset::Symmetric(3));
        let p = direct_product(&[s3.clone(), s3], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group().order(), 36);
        assert!(center(p.group()).is_trivial());
        let parts: Vec<Subgroup> = (0..2).map(|i| p.factor_subgroup(i)).collect();
        assert!(internal_direct_product_check(p.group(), &parts));
        for i in 0..2 {
            let round = crate::hom_engine::compose(p.projection(i), p.embedding(i)).unwrap();
            assert!(round.is_identity());
        }

        let big = arc(Preset::Symmetric(5));
        assert!(matches!(
            direct_product(&[big.clone(), big], DEFAULT_ORDER_CAP),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = arc(Preset::Dihedral(3));
        let s = serde_json::to_string(&g.to_cayley_json()).unwrap();
        let h = FiniteGroup::from_json_str(&s).unwrap();
        assert_eq!(*g, h);
        let bad = r#"{"order": 3, "table": [[0,1],[1,0]]}"#;
        assert!(matches!(FiniteGroup::from_json_str(bad), Err(Error::TableShape(_))));
    }
}
