//! Homomorphisms between finite groups and their enumeration.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, Subgroup};

/// Default cap on candidate nodes visited by one enumeration.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

const UNSET: usize = usize::MAX;

/// A homomorphism stored as its total element map.
#[derive(Clone)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    map: Vec<usize>,
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && same_group(&self.domain, &other.domain)
            && same_group(&self.codomain, &other.codomain)
    }
}

impl Eq for GroupHom {}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}: {:?})",
            self.domain.label(),
            self.codomain.label(),
            self.map
        )
    }
}

/// Wire format of a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomJson {
    pub domain_order: usize,
    pub codomain_order: usize,
    pub map: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism law exhaustively before accepting `map`.
    pub fn new(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::DomainMismatch(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= codomain.order()) {
            return Err(Error::DomainMismatch(format!("image {v} outside the codomain")));
        }
        let hom = GroupHom { domain, codomain, map };
        match hom.law_violation() {
            Some((x, y)) => Err(Error::NotAHomomorphism { x, y }),
            None => Ok(hom),
        }
    }

    pub(crate) fn from_map_unchecked(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(map.len(), domain.order());
        GroupHom { domain, codomain, map }
    }

    pub fn from_json(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, json: &HomJson) -> Result<Self> {
        if json.domain_order != domain.order() || json.codomain_order != codomain.order() {
            return Err(Error::DomainMismatch(format!(
                "json declares {} -> {}, groups have orders {} -> {}",
                json.domain_order,
                json.codomain_order,
                domain.order(),
                codomain.order()
            )));
        }
        Self::new(domain, codomain, json.map.clone())
    }

    pub fn to_json(&self) -> HomJson {
        HomJson {
            domain_order: self.domain.order(),
            codomain_order: self.codomain.order(),
            map: self.map.clone(),
        }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    /// The trivial homomorphism sending everything to the identity.
    pub fn trivial(domain: &Arc<FiniteGroup>, codomain: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: vec![0; domain.order()],
        }
    }

    /// First pair `(x, y)` with `f(xy) != f(x) f(y)`, if any.
    pub fn law_violation(&self) -> Option<(usize, usize)> {
        let (g, h) = (&self.domain, &self.codomain);
        (0..g.order())
            .flat_map(|x| (0..g.order()).map(move |y| (x, y)))
            .find(|&(x, y)| self.map[g.mul(x, y)] != h.mul(self.map[x], self.map[y]))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn is_endomorphism(&self) -> bool {
        same_group(&self.domain, &self.codomain)
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().skip(1).all(|&v| v != 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_endomorphism() && self.is_injective()
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::NotAutomorphism);
        }
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y] = x;
        }
        Ok(GroupHom {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            map,
        })
    }

    /// Number of elements in the image.
    pub fn image_order(&self) -> usize {
        let mut seen = vec![false; self.codomain.order()];
        self.map.iter().filter(|&&v| !std::mem::replace(&mut seen[v], true)).count()
    }
}

/// Extends generator images along the domain's words, then checks the law
/// exhaustively.
pub fn hom_from_generator_images(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    images: &[usize],
) -> Result<GroupHom> {
    if images.len() != g.generators().len() {
        return Err(Error::WrongImageCount {
            expected: g.generators().len(),
            got: images.len(),
        });
    }
    if let Some(&v) = images.iter().find(|&&v| v >= h.order()) {
        return Err(Error::DomainMismatch(format!("image {v} outside the codomain")));
    }
    let map = g
        .words()
        .iter()
        .map(|w| w.iter().fold(0, |acc, &i| h.mul(acc, images[i])))
        .collect();
    GroupHom::new(g.clone(), h.clone(), map)
}

/// `f ∘ g`
pub fn compose(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    if !same_group(g.codomain(), f.domain()) {
        return Err(Error::DomainMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            f.domain.label(),
            f.codomain.label(),
            g.domain.label(),
            g.codomain.label()
        )));
    }
    Ok(GroupHom {
        domain: g.domain.clone(),
        codomain: f.codomain.clone(),
        map: g.map.iter().map(|&x| f.map[x]).collect(),
    })
}

/// Pointwise product `x ↦ f(x) g(x)`; needs `[im f, im g] = 1`.
pub fn pointwise_product(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    if !same_group(f.domain(), g.domain()) || !same_group(f.codomain(), g.codomain()) {
        return Err(Error::DomainMismatch("pointwise product of unrelated homomorphisms".into()));
    }
    let h = &f.codomain;
    let im_f = hom_image(f);
    let im_g = hom_image(g);
    for &a in im_f.elements() {
        for &b in im_g.elements() {
            if !h.commute(a, b) {
                return Err(Error::ImagesDoNotCommute { a, b });
            }
        }
    }
    let map = f.map.iter().zip(&g.map).map(|(&a, &b)| h.mul(a, b)).collect();
    GroupHom::new(f.domain.clone(), h.clone(), map)
}

/// Conjugation `x ↦ g x g^-1`.
pub fn inner_automorphism(group: &Arc<FiniteGroup>, g: usize) -> GroupHom {
    GroupHom {
        domain: group.clone(),
        codomain: group.clone(),
        map: (0..group.order()).map(|x| group.conj(g, x)).collect(),
    }
}

pub fn hom_image(f: &GroupHom) -> Subgroup {
    let mut elements = f.map.clone();
    elements.sort_unstable();
    elements.dedup();
    Subgroup::from_sorted_unchecked(f.codomain(), elements)
}

pub fn hom_kernel(f: &GroupHom) -> Subgroup {
    let elements = (0..f.map.len()).filter(|&x| f.map[x] == 0).collect();
    Subgroup::from_sorted_unchecked(f.domain(), elements)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidate generator images tried.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    All,
    /// Injective with order-preserving generator images.
    Embeddings,
}

/// Backtracking stream over `Hom(G, H)` in lexicographic order of generator
/// images.
///
/// Each partial assignment is closed over the subgroup generated so far and
/// rejected as soon as the law fails there.
pub struct HomIter {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    mode: Mode,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    images: Vec<usize>,
    level_start: Vec<Option<usize>>,
    level: usize,
    map: Vec<usize>,
    mapped: Vec<usize>,
    nodes: u64,
    budget: u64,
    done: bool,
}

impl HomIter {
    fn new(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, mode: Mode, config: SearchConfig) -> Self {
        let gens = g.generators().to_vec();
        let candidates = gens
            .iter()
            .map(|&x| {
                let ox = g.element_order(x);
                (0..h.order())
                    .filter(|&y| {
                        let oy = h.element_order(y);
                        match mode {
                            Mode::All => ox.is_multiple_of(oy),
                            Mode::Embeddings => ox == oy,
                        }
                    })
                    .collect()
            })
            .collect();
        let k = gens.len();
        let mut map = vec![UNSET; g.order()];
        map[0] = 0;
        HomIter {
            domain: g.clone(),
            codomain: h.clone(),
            mode,
            gens,
            candidates,
            cursor: vec![0; k],
            images: vec![0; k],
            level_start: vec![None; k],
            level: 0,
            map,
            mapped: vec![0],
            nodes: 0,
            budget: config.budget,
            done: false,
        }
    }

    /// Candidate nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn undo(&mut self, j: usize) {
        if let Some(start) = self.level_start[j].take() {
            for &y in &self.mapped[start..] {
                self.map[y] = UNSET;
            }
            self.mapped.truncate(start);
        }
    }

    #[inline]
    fn assign(&mut self, y: usize, v: usize) -> bool {
        let cur = self.map[y];
        if cur == UNSET {
            if self.mode == Mode::Embeddings && v == 0 && y != 0 {
                return false;
            }
            self.map[y] = v;
            self.mapped.push(y);
            true
        } else {
            cur == v
        }
    }

    /// Sends generator `j` to `h` and closes the map over `<g_0..g_j>`.
    fn extend(&mut self, j: usize, h: usize) -> bool {
        let g = self.domain.clone();
        let cod = self.codomain.clone();
        self.images[j] = h;
        let before = self.mapped.len();
        self.level_start[j] = Some(before);
        let gj = self.gens[j];
        for idx in 0..before {
            let x = self.mapped[idx];
            if !self.assign(g.mul(x, gj), cod.mul(self.map[x], h)) {
                return false;
            }
        }
        let mut idx = before;
        while idx < self.mapped.len() {
            let x = self.mapped[idx];
            let fx = self.map[x];
            for i in 0..=j {
                if !self.assign(g.mul(x, self.gens[i]), cod.mul(fx, self.images[i])) {
                    return false;
                }
            }
            idx += 1;
        }
        true
    }
}

impl Iterator for HomIter {
    type Item = Result<GroupHom>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let k = self.gens.len();
        loop {
            let j = self.level;
            self.undo(j);
            let mut advanced = false;
            while self.cursor[j] < self.candidates[j].len() {
                let h = self.candidates[j][self.cursor[j]];
                self.cursor[j] += 1;
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.done = true;
                    return Some(Err(Error::SearchBudgetExceeded { budget: self.budget }));
                }
                if self.extend(j, h) {
                    advanced = true;
                    break;
                }
                self.undo(j);
            }
            if !advanced {
                self.cursor[j] = 0;
                if j == 0 {
                    self.done = true;
                    return None;
                }
                self.level -= 1;
                continue;
            }
            if j + 1 == k {
                debug_assert_eq!(self.mapped.len(), self.domain.order());
                return Some(Ok(GroupHom {
                    domain: self.domain.clone(),
                    codomain: self.codomain.clone(),
                    map: self.map.clone(),
                }));
            }
            self.level += 1;
        }
    }
}

/// Lazily enumerates `Hom(G, H)`.
pub fn enumerate_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, config: SearchConfig) -> HomIter {
    HomIter::new(g, h, Mode::All, config)
}

/// Lazily enumerates injective homomorphisms `G -> H`.
pub fn enumerate_embeddings(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, config: SearchConfig) -> HomIter {
    HomIter::new(g, h, Mode::Embeddings, config)
}

pub fn collect_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<GroupHom>> {
    enumerate_homs(g, h, config).collect()
}

pub fn collect_endomorphisms(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<GroupHom>> {
    collect_homs(g, g, config)
}

/// All automorphisms of `G`, identity first.
///
/// The result is checked to be closed under composition before it is
/// returned.
pub fn enumerate_automorphisms(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<GroupHom>> {
    let autos: Vec<GroupHom> = HomIter::new(g, g, Mode::Embeddings, config).collect::<Result<_>>()?;
    assert!(
        is_group_under_composition(&autos),
        "automorphisms of {} not closed under composition",
        g.label()
    );
    Ok(autos)
}

/// `Some(|Aut(G)|)` if it is at most `limit`, `None` otherwise. Streams the
/// search without storing maps, so it is safe on groups with huge
/// automorphism groups.
pub fn count_automorphisms_up_to(g: &Arc<FiniteGroup>, config: SearchConfig, limit: usize) -> Result<Option<usize>> {
    let mut count = 0;
    for a in HomIter::new(g, g, Mode::Embeddings, config) {
        a?;
        count += 1;
        if count > limit {
            return Ok(None);
        }
    }
    Ok(Some(count))
}

/// Whether a list of permutations of one group forms a group under composition.
///
/// Picks generators greedily and checks that the closure they generate stays
/// inside the list and exhausts it.
pub fn is_group_under_composition(autos: &[GroupHom]) -> bool {
    let Some(first) = autos.first() else {
        return false;
    };
    let n = first.map.len();
    let index: HashMap<&[usize], usize> = autos.iter().enumerate().map(|(i, a)| (a.map(), i)).collect();
    if index.len() != autos.len() {
        return false;
    }
    let id: Vec<usize> = (0..n).collect();
    let Some(&id_idx) = index.get(id.as_slice()) else {
        return false;
    };
    let m = autos.len();
    let mut in_closure = vec![false; m];
    in_closure[id_idx] = true;
    let mut closure = vec![id_idx];
    let mut gens: Vec<usize> = Vec::new();
    let mut buf = vec![0; n];
    for a in 0..m {
        if in_closure[a] {
            continue;
        }
        gens.push(a);
        let before = closure.len();
        let mut step = |x: usize, t: usize, closure: &mut Vec<usize>, in_closure: &mut Vec<bool>| -> bool {
            for (slot, &y) in buf.iter_mut().zip(autos[t].map()) {
                *slot = autos[x].map[y];
            }
            match index.get(buf.as_slice()) {
                Some(&z) => {
                    if !in_closure[z] {
                        in_closure[z] = true;
                        closure.push(z);
                    }
                    true
                }
                None => false,
            }
        };
        for idx in 0..before {
            if !step(closure[idx], a, &mut closure, &mut in_closure) {
                return false;
            }
        }
        let mut idx = before;
        while idx < closure.len() {
            let x = closure[idx];
            for &t in &gens {
                if !step(x, t, &mut closure, &mut in_closure) {
                    return false;
                }
            }
            idx += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{conjugacy_classes, direct_product, Preset, DEFAULT_ORDER_CAP};

    fn grp(p: Preset) -> Arc<FiniteGroup> {
        Arc::new(p.build(DEFAULT_ORDER_CAP).unwrap())
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    /// Every total map, filtered by the exhaustive law.
    fn brute_hom_count(g: &FiniteGroup, h: &FiniteGroup) -> usize {
        let n = g.order();
        let m = h.order();
        let total = m.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let map: Vec<usize> = (0..n).map(|i| (code / m.pow(i as u32)) % m).collect();
                (0..n).all(|x| (0..n).all(|y| map[g.mul(x, y)] == h.mul(map[x], map[y])))
            })
            .count()
    }

    #[test]
    fn generator_images() {
        let z4 = grp(Preset::Cyclic(4));
        let s3 = grp(Preset::Symmetric(3));
        let triv = hom_from_generator_images(&s3, &z4, &[0, 0]).unwrap();
        assert!(triv.is_trivial());
        let inv = hom_from_generator_images(&z4, &z4, &[3]).unwrap();
        assert_eq!(inv.map(), &[0, 3, 2, 1]);
        assert!(inv.is_automorphism());
        // generators()[0] is the transposition
        assert_eq!(s3.element_order(s3.generators()[0]), 2);
        assert!(matches!(
            hom_from_generator_images(&s3, &z4, &[1, 0]),
            Err(Error::NotAHomomorphism { .. })
        ));
        assert!(matches!(
            hom_from_generator_images(&s3, &z4, &[1]),
            Err(Error::WrongImageCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn hom_counts_match_brute_force() {
        let z2 = grp(Preset::Cyclic(2));
        let z3 = grp(Preset::Cyclic(3));
        let z4 = grp(Preset::Cyclic(4));
        let s3 = grp(Preset::Symmetric(3));
        assert_eq!(collect_homs(&z2, &z3, cfg()).unwrap().len(), 1);
        assert_eq!(collect_homs(&s3, &z4, cfg()).unwrap().len(), 2);
        assert_eq!(collect_homs(&z2, &z2, cfg()).unwrap().len(), 2);
        for (g, h) in [(&s3, &z4), (&z4, &s3), (&s3, &s3), (&z2, &s3), (&z4, &z4)] {
            assert_eq!(
                collect_homs(g, h, cfg()).unwrap().len(),
                brute_hom_count(g, h),
                "{} -> {}",
                g.label(),
                h.label()
            );
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_lawful() {
        let d4 = grp(Preset::Dihedral(4));
        let homs = collect_endomorphisms(&d4, cfg()).unwrap();
        let keys: Vec<Vec<usize>> = homs
            .iter()
            .map(|f| d4.generators().iter().map(|&x| f.apply(x)).collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(homs.iter().all(|f| f.law_violation().is_none()));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(enumerate_automorphisms(&grp(Preset::Cyclic(2)), cfg()).unwrap().len(), 1);
        let s3 = grp(Preset::Symmetric(3));
        let auts = enumerate_automorphisms(&s3, cfg()).unwrap();
        assert_eq!(auts.len(), 6);
        let inner: Vec<GroupHom> = (0..6).map(|g| inner_automorphism(&s3, g)).collect();
        assert!(auts.iter().all(|a| inner.contains(a)));
        assert_eq!(enumerate_automorphisms(&grp(Preset::Klein4), cfg()).unwrap().len(), 6);
        assert_eq!(enumerate_automorphisms(&grp(Preset::Dihedral(4)), cfg()).unwrap().len(), 8);
        assert_eq!(enumerate_automorphisms(&grp(Preset::Quaternion8), cfg()).unwrap().len(), 24);
        assert_eq!(enumerate_automorphisms(&grp(Preset::Symmetric(4)), cfg()).unwrap().len(), 24);
    }

    #[test]
    fn automorphisms_form_a_group_exhaustively() {
        for p in [Preset::Klein4, Preset::Dihedral(4), Preset::Cyclic(8), Preset::Alternating(4)] {
            let g = grp(p);
            let auts = enumerate_automorphisms(&g, cfg()).unwrap();
            for a in &auts {
                assert!(auts.contains(&a.inverse().unwrap()));
                for b in &auts {
                    assert!(auts.contains(&compose(a, b).unwrap()));
                }
            }
        }
        // a set that is not closed
        let z4 = grp(Preset::Cyclic(4));
        let s3 = grp(Preset::Symmetric(3));
        let partial = vec![GroupHom::identity(&z4)];
        assert!(is_group_under_composition(&partial));
        let bad = vec![GroupHom::identity(&s3), inner_automorphism(&s3, 3)];
        let closed = is_group_under_composition(&bad);
        assert_eq!(closed, compose(&bad[1], &bad[1]).unwrap().is_identity());
    }

    #[test]
    fn budget_is_enforced() {
        let s4 = grp(Preset::Symmetric(4));
        let res = collect_homs(&s4, &s4, SearchConfig { budget: 5 });
        assert!(matches!(res, Err(Error::SearchBudgetExceeded { budget: 5 })));
    }

    #[test]
    fn composition() {
        let z4 = grp(Preset::Cyclic(4));
        let inv = hom_from_generator_images(&z4, &z4, &[3]).unwrap();
        let id = GroupHom::identity(&z4);
        assert_eq!(compose(&inv, &id).unwrap(), inv);
        assert!(compose(&inv, &inv).unwrap().is_identity());
        let s3 = grp(Preset::Symmetric(3));
        for g in 0..6 {
            for h in 0..6 {
                let lhs = compose(&inner_automorphism(&s3, g), &inner_automorphism(&s3, h)).unwrap();
                assert_eq!(lhs, inner_automorphism(&s3, s3.mul(g, h)));
            }
        }
        assert!(matches!(compose(&inv, &GroupHom::identity(&s3)), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn pointwise_products() {
        let z4 = grp(Preset::Cyclic(4));
        let id = GroupHom::identity(&z4);
        let inv = hom_from_generator_images(&z4, &z4, &[3]).unwrap();
        assert_eq!(pointwise_product(&id, &GroupHom::trivial(&z4, &z4)).unwrap(), id);
        assert!(pointwise_product(&id, &inv).unwrap().is_trivial());

        // Z2 -> V4 onto a and onto b give the diagonal onto ab
        let z2 = grp(Preset::Cyclic(2));
        let v4 = grp(Preset::Klein4);
        let fa = hom_from_generator_images(&z2, &v4, &[1]).unwrap();
        let fb = hom_from_generator_images(&z2, &v4, &[2]).unwrap();
        assert_eq!(pointwise_product(&fa, &fb).unwrap().map(), &[0, 3]);

        let s3 = grp(Preset::Symmetric(3));
        let id = GroupHom::identity(&s3);
        assert!(matches!(pointwise_product(&id, &id), Err(Error::ImagesDoNotCommute { .. })));
    }

    #[test]
    fn inner_automorphisms() {
        let s3 = grp(Preset::Symmetric(3));
        assert!(inner_automorphism(&s3, 0).is_identity());
        let z6 = grp(Preset::Cyclic(6));
        assert!((0..6).all(|g| inner_automorphism(&z6, g).is_identity()));
        let t = s3.generators()[0];
        let tau = inner_automorphism(&s3, t);
        assert!(!tau.is_identity());
        assert!(compose(&tau, &tau).unwrap().is_identity());
    }

    #[test]
    fn image_and_kernel() {
        let s3 = grp(Preset::Symmetric(3));
        let z2 = grp(Preset::Cyclic(2));
        let id = GroupHom::identity(&s3);
        assert_eq!(hom_image(&id).order(), 6);
        assert!(hom_kernel(&id).is_trivial());
        let triv = GroupHom::trivial(&s3, &z2);
        assert!(hom_image(&triv).is_trivial());
        assert_eq!(hom_kernel(&triv).order(), 6);
        let sign = hom_from_generator_images(&s3, &z2, &[1, 0]).unwrap();
        assert_eq!(hom_image(&sign).order(), 2);
        let ker = hom_kernel(&sign);
        assert_eq!(ker.order(), 3);
        assert!(ker.is_normal());
        for f in collect_homs(&s3, &s3, cfg()).unwrap() {
            assert_eq!(hom_image(&f).order() * hom_kernel(&f).order(), 6);
        }
    }

    #[test]
    fn json_round_trip() {
        let z4 = grp(Preset::Cyclic(4));
        let inv = hom_from_generator_images(&z4, &z4, &[3]).unwrap();
        let s = serde_json::to_string(&inv.to_json()).unwrap();
        assert_eq!(s, r#"{"domain_order":4,"codomain_order":4,"map":[0,3,2,1]}"#);
        let back: HomJson = serde_json::from_str(&s).unwrap();
        assert_eq!(GroupHom::from_json(z4.clone(), z4, &back).unwrap(), inv);
    }

    #[test]
    fn component_images_of_product_automorphisms_are_normal() {
        let s3 = grp(Preset::Symmetric(3));
        let z2 = grp(Preset::Cyclic(2));
        let p = direct_product(&[s3, z2], DEFAULT_ORDER_CAP).unwrap();
        for a in enumerate_automorphisms(p.group(), cfg()).unwrap() {
            for i in 0..2 {
                for j in 0..2 {
                    let comp = compose(p.projection(i), &compose(&a, p.embedding(j)).unwrap()).unwrap();
                    assert!(hom_image(&comp).is_normal());
                }
            }
        }
        assert_eq!(conjugacy_classes(p.group()).len(), 6);
    }
}
