//! Twisted conjugacy classes computed by brute force.
//!
//! Two elements `x`, `y` are twisted conjugate under an endomorphism `φ` when
//! `x = g y φ(g)^-1` for some `g`. Everything in this module works directly
//! from that relation and serves as ground truth for the product formulas.

use std::collections::BTreeSet;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, Subgroup};
use crate::hom_engine::{compose, enumerate_automorphisms, inner_automorphism, GroupHom, SearchConfig};
use crate::union_find::UnionFind;

/// A natural number or infinity.
///
/// Infinity absorbs both sums and products, including `0 · ∞ = ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub const ONE: ExtNat = ExtNat::Finite(1);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl From<usize> for ExtNat {
    fn from(v: usize) -> Self {
        ExtNat::Finite(v as u64)
    }
}

impl Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => {
                ExtNat::Finite(a.checked_mul(b).expect("ExtNat product overflow"))
            }
            _ => ExtNat::Infinite,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => {
                ExtNat::Finite(a.checked_add(b).expect("ExtNat sum overflow"))
            }
            _ => ExtNat::Infinite,
        }
    }
}

impl Product for ExtNat {
    fn product<I: Iterator<Item = ExtNat>>(iter: I) -> Self {
        iter.fold(ExtNat::ONE, Mul::mul)
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> Self {
        iter.fold(ExtNat::Finite(0), Add::add)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(v) => s.serialize_u64(*v),
            ExtNat::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct ExtNatVisitor;

        impl Visitor<'_> for ExtNatVisitor {
            type Value = ExtNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
                Ok(ExtNat::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
                u64::try_from(v)
                    .map(ExtNat::Finite)
                    .map_err(|_| E::custom("negative Reidemeister number"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
                match v {
                    "inf" => Ok(ExtNat::Infinite),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        d.deserialize_any(ExtNatVisitor)
    }
}

/// A finite set of Reidemeister numbers, sorted with infinity last.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(BTreeSet<ExtNat>);

impl Spectrum {
    pub fn new() -> Self {
        Spectrum(BTreeSet::new())
    }

    pub fn singleton(v: ExtNat) -> Self {
        Spectrum(BTreeSet::from([v]))
    }

    pub fn from_finite(values: &[u64]) -> Self {
        values.iter().map(|&v| ExtNat::Finite(v)).collect()
    }

    pub fn insert(&mut self, v: ExtNat) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: ExtNat) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ExtNat> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &Spectrum) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<ExtNat> for Spectrum {
    fn from_iter<I: IntoIterator<Item = ExtNat>>(iter: I) -> Self {
        Spectrum(iter.into_iter().collect())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(", "))
    }
}

/// Partition of a group into the twisted conjugacy classes of an endomorphism.
#[derive(Debug, Clone)]
pub struct ReidemeisterPartition {
    endo: GroupHom,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ReidemeisterPartition {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.endo.domain()
    }

    pub fn endo(&self) -> &GroupHom {
        &self.endo
    }

    /// Classes sorted internally and listed by representative.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Minimal element of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn number(&self) -> ExtNat {
        ExtNat::from(self.classes.len())
    }
}

/// Orbits of `y ↦ g y φ(g)^-1`, closed one generator at a time.
///
/// Panics if `endo` is not an endomorphism.
pub fn reidemeister_partition(endo: &GroupHom) -> ReidemeisterPartition {
    assert!(endo.is_endomorphism(), "twisted conjugacy needs an endomorphism");
    let g = endo.domain();
    let mut uf = UnionFind::new(g.order());
    for &t in g.generators() {
        let right = g.inv(endo.apply(t));
        for y in 0..g.order() {
            uf.union(y, g.mul(g.mul(t, y), right));
        }
    }
    let classes = uf.into_blocks();
    let mut class_of = vec![0; g.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    ReidemeisterPartition {
        endo: endo.clone(),
        classes,
        class_of,
    }
}

pub fn reidemeister_number(endo: &GroupHom) -> ExtNat {
    reidemeister_partition(endo).number()
}

/// `{b : a = b a φ(b)^-1}`
pub fn twisted_stabilizer(endo: &GroupHom, a: usize) -> Subgroup {
    let g = endo.domain();
    let elements = (0..g.order())
        .filter(|&b| g.mul(g.mul(b, a), g.inv(endo.apply(b))) == a)
        .collect();
    Subgroup::from_sorted_unchecked(g, elements)
}

pub fn fixed_points(endo: &GroupHom) -> Subgroup {
    let elements = (0..endo.domain().order())
        .filter(|&x| endo.apply(x) == x)
        .collect();
    Subgroup::from_sorted_unchecked(endo.domain(), elements)
}

/// Reidemeister numbers of all automorphisms.
pub fn reidemeister_spectrum(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Spectrum> {
    let autos = enumerate_automorphisms(g, config)?;
    Ok(spectrum_of(&autos))
}

/// The set of Reidemeister numbers of the given maps.
pub fn spectrum_of(autos: &[GroupHom]) -> Spectrum {
    autos
        .par_iter()
        .map(reidemeister_number)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// `R(τ_g ∘ φ) = R(φ)`, both sides by brute force.
pub fn check_inner_invariance(endo: &GroupHom, g: usize) -> bool {
    let tau = inner_automorphism(endo.domain(), g);
    let twisted = compose(&tau, endo).expect("same group");
    reidemeister_number(&twisted) == reidemeister_number(endo)
}

/// `R(φ) = R(ψ^-1 ∘ φ ∘ ψ)` for an automorphism `ψ`.
pub fn check_conjugate_invariance(endo: &GroupHom, psi: &GroupHom) -> Result<bool> {
    if !psi.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    let conj = compose(&psi.inverse()?, &compose(endo, psi)?)?;
    Ok(reidemeister_number(&conj) == reidemeister_number(endo))
}

/// A quotient `G/N` with the endomorphism induced on it.
#[derive(Debug, Clone)]
pub struct QuotientEndo {
    pub group: Arc<FiniteGroup>,
    pub endo: GroupHom,
    pub projection: GroupHom,
}

/// Builds `G/N` (cosets listed by minimal element) and the induced endomorphism.
pub fn quotient_endo(n: &Subgroup, endo: &GroupHom) -> Result<QuotientEndo> {
    let g = endo.domain();
    if !endo.is_endomorphism() || **n.parent() != **g {
        return Err(Error::DomainMismatch("subgroup and endomorphism live in different groups".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    if n.elements().iter().any(|&x| !n.contains(endo.apply(x))) {
        return Err(Error::NotInvariant);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] == usize::MAX {
            for &m in n.elements() {
                coset_of[g.mul(x, m)] = reps.len();
            }
            reps.push(x);
        }
    }
    let q = reps.len();
    let mut mul = vec![0; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset_of[g.mul(a, b)];
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let label = format!("{}/N{}", g.label(), n.order());
    let quotient = Arc::new(FiniteGroup::from_trusted_table(q, mul, Some(names), None, label));
    let induced = reps.iter().map(|&r| coset_of[endo.apply(r)]).collect();
    Ok(QuotientEndo {
        endo: GroupHom::new(quotient.clone(), quotient.clone(), induced)?,
        projection: GroupHom::new(g.clone(), quotient.clone(), coset_of)?,
        group: quotient,
    })
}

/// `|Fix(φ)| ≤ 2^(2^r)` with `r = R(φ)`, for an automorphism `φ`.
pub fn jabara_bound_check(endo: &GroupHom) -> Result<bool> {
    if !endo.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    let r = reidemeister_partition(endo).len() as u32;
    let fix = fixed_points(endo).order() as u128;
    // 2^(2^r) exceeds every u128 once 2^r >= 128
    Ok(r >= 7 || fix <= 1u128 << (1u32 << r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{conjugacy_classes, Preset, DEFAULT_ORDER_CAP};
    use crate::hom_engine::{collect_endomorphisms, hom_from_generator_images};

    fn grp(p: Preset) -> Arc<FiniteGroup> {
        Arc::new(p.build(DEFAULT_ORDER_CAP).unwrap())
    }

    fn inversion(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom::new(g.clone(), g.clone(), (0..g.order()).map(|x| g.inv(x)).collect()).unwrap()
    }

    /// Classes straight from the definition: x ~ y iff some g has x = g y φ(g)^-1.
    fn brute_classes(endo: &GroupHom) -> usize {
        let g = endo.domain();
        let n = g.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for y in 0..n {
            if seen[y] {
                continue;
            }
            count += 1;
            for t in 0..n {
                seen[g.mul(g.mul(t, y), g.inv(endo.apply(t)))] = true;
            }
        }
        count
    }

    #[test]
    fn extnat_arithmetic() {
        let f = ExtNat::Finite;
        assert_eq!(f(3) * f(4), f(12));
        assert_eq!(f(0) * ExtNat::Infinite, ExtNat::Infinite);
        assert_eq!(ExtNat::Infinite * f(2), ExtNat::Infinite);
        assert_eq!(f(2) + ExtNat::Infinite, ExtNat::Infinite);
        assert!(f(u64::MAX) < ExtNat::Infinite);
        assert_eq!([f(2), f(3)].into_iter().product::<ExtNat>(), f(6));
        assert_eq!([f(2), f(3)].into_iter().sum::<ExtNat>(), f(5));
    }

    #[test]
    fn spectrum_display_and_json() {
        let mut s = Spectrum::from_finite(&[9, 1, 3]);
        assert_eq!(s.to_string(), "{1, 3, 9}");
        s.insert(ExtNat::Infinite);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[1,3,9,"inf"]"#);
        let back: Spectrum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn identity_gives_conjugacy_classes() {
        for p in [Preset::Symmetric(3), Preset::Symmetric(4), Preset::Quaternion8, Preset::Cyclic(5)] {
            let g = grp(p);
            let part = reidemeister_partition(&GroupHom::identity(&g));
            assert_eq!(part.classes(), conjugacy_classes(&g).as_slice());
        }
        let triv = grp(Preset::Cyclic(1));
        assert_eq!(reidemeister_partition(&GroupHom::identity(&triv)).len(), 1);
    }

    #[test]
    fn small_partitions() {
        let z3 = grp(Preset::Cyclic(3));
        let part = reidemeister_partition(&inversion(&z3));
        assert_eq!(part.classes(), &[vec![0, 1, 2]]);
        assert_eq!(reidemeister_number(&GroupHom::identity(&grp(Preset::Symmetric(3)))), ExtNat::Finite(3));
        let z4 = grp(Preset::Cyclic(4));
        assert_eq!(reidemeister_number(&inversion(&z4)), ExtNat::Finite(2));
        assert_eq!(fixed_points(&inversion(&z4)).elements(), &[0, 2]);
    }

    #[test]
    fn partition_matches_definition_on_all_endomorphisms() {
        for p in [Preset::Symmetric(3), Preset::Dihedral(4), Preset::Quaternion8, Preset::Alternating(4)] {
            let g = grp(p);
            for f in collect_endomorphisms(&g, SearchConfig::default()).unwrap() {
                let part = reidemeister_partition(&f);
                assert_eq!(part.len(), brute_classes(&f));
                assert_eq!(part.classes().iter().map(Vec::len).sum::<usize>(), g.order());
            }
        }
    }

    #[test]
    fn abelian_reidemeister_equals_fixed_points() {
        for p in [Preset::Cyclic(8), Preset::Klein4, Preset::Cyclic(12)] {
            let g = grp(p);
            for f in collect_endomorphisms(&g, SearchConfig::default()).unwrap() {
                assert_eq!(reidemeister_number(&f), ExtNat::from(fixed_points(&f).order()));
            }
        }
    }

    #[test]
    fn stabilizers() {
        let s3 = grp(Preset::Symmetric(3));
        let id = GroupHom::identity(&s3);
        for a in 0..6 {
            assert_eq!(twisted_stabilizer(&id, a).elements(), s3.centralizer_elements(a).as_slice());
        }
        let z4 = grp(Preset::Cyclic(4));
        let inv = inversion(&z4);
        assert_eq!(twisted_stabilizer(&inv, 0), fixed_points(&inv));
        assert_eq!(twisted_stabilizer(&inv, 0).elements(), &[0, 2]);
        // Stab_φ(a) = Fix(τ_a ∘ φ)
        let d4 = grp(Preset::Dihedral(4));
        for f in collect_endomorphisms(&d4, SearchConfig::default()).unwrap() {
            for a in 0..8 {
                let shifted = compose(&inner_automorphism(&d4, a), &f).unwrap();
                let stab = twisted_stabilizer(&f, a);
                assert_eq!(stab, fixed_points(&shifted));
                assert!(Subgroup::new(&d4, stab.elements().to_vec()).is_ok());
            }
        }
        assert_eq!(fixed_points(&GroupHom::identity(&s3)).order(), 6);
        assert!(fixed_points(&inversion(&grp(Preset::Cyclic(3)))).is_trivial());
    }

    #[test]
    fn spectra() {
        let cfg = SearchConfig::default();
        assert_eq!(reidemeister_spectrum(&grp(Preset::Cyclic(2)), cfg).unwrap(), Spectrum::from_finite(&[2]));
        assert_eq!(reidemeister_spectrum(&grp(Preset::Cyclic(3)), cfg).unwrap(), Spectrum::from_finite(&[1, 3]));
        assert_eq!(reidemeister_spectrum(&grp(Preset::Symmetric(3)), cfg).unwrap(), Spectrum::from_finite(&[3]));
    }

    #[test]
    fn invariance_checks() {
        let s3 = grp(Preset::Symmetric(3));
        let id = GroupHom::identity(&s3);
        assert!(check_inner_invariance(&id, 0));
        let three_cycle = s3.generators()[1];
        assert!(check_inner_invariance(&id, three_cycle));
        let d4 = grp(Preset::Dihedral(4));
        let autos = enumerate_automorphisms(&d4, SearchConfig::default()).unwrap();
        for f in &autos {
            for g in 0..8 {
                assert!(check_inner_invariance(f, g));
            }
            for psi in &autos {
                assert!(check_conjugate_invariance(f, psi).unwrap());
            }
        }
        assert!(check_conjugate_invariance(&id, &id).unwrap());
        let triv = GroupHom::trivial(&s3, &s3);
        assert!(matches!(check_conjugate_invariance(&id, &triv), Err(Error::NotAutomorphism)));
    }

    #[test]
    fn quotients() {
        let z4 = grp(Preset::Cyclic(4));
        let id = GroupHom::identity(&z4);
        let q = quotient_endo(&Subgroup::trivial(&z4), &id).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(reidemeister_number(&q.endo), reidemeister_number(&id));

        let half = Subgroup::generated_by(&z4, &[2]);
        let q = quotient_endo(&half, &id).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(reidemeister_number(&id), ExtNat::Finite(4));
        assert_eq!(reidemeister_number(&q.endo), ExtNat::Finite(2));
        assert!(q.projection.law_violation().is_none());

        let s3 = grp(Preset::Symmetric(3));
        let a3 = Subgroup::generated_by(&s3, &[s3.generators()[1]]);
        for f in enumerate_automorphisms(&s3, SearchConfig::default()).unwrap() {
            let q = quotient_endo(&a3, &f).unwrap();
            assert_eq!(q.group.order(), 2);
            assert_eq!(reidemeister_number(&f), ExtNat::Finite(3));
            assert_eq!(reidemeister_number(&q.endo), ExtNat::Finite(2));
        }

        let t = Subgroup::generated_by(&s3, &[s3.generators()[0]]);
        assert!(matches!(quotient_endo(&t, &GroupHom::identity(&s3)), Err(Error::NotNormal)));
        // swap of the two factors of V4 moves <a>
        let v4 = grp(Preset::Klein4);
        let swap = hom_from_generator_images(&v4, &v4, &[2, 1]).unwrap();
        let a = Subgroup::generated_by(&v4, &[1]);
        assert!(matches!(quotient_endo(&a, &swap), Err(Error::NotInvariant)));
    }

    #[test]
    fn jabara_examples() {
        let z2 = grp(Preset::Cyclic(2));
        assert!(jabara_bound_check(&GroupHom::identity(&z2)).unwrap());
        let s3 = grp(Preset::Symmetric(3));
        assert!(jabara_bound_check(&GroupHom::identity(&s3)).unwrap());
        let z3 = grp(Preset::Cyclic(3));
        let inv = inversion(&z3);
        assert_eq!(reidemeister_number(&inv), ExtNat::Finite(1));
        assert_eq!(fixed_points(&inv).order(), 1);
        assert!(jabara_bound_check(&inv).unwrap());
        assert!(jabara_bound_check(&GroupHom::trivial(&z3, &z3)).is_err());
    }
}
