//! Set algebra on Reidemeister spectra and the containments it predicts.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_group::{direct_product, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::hom_engine::{enumerate_automorphisms, SearchConfig};
use crate::perm::Permutation;
use crate::product_matrix::wreath_embed;
use crate::report::HypothesisStatus;
use crate::twisted::{reidemeister_spectrum, spectrum_of, ExtNat, Spectrum};

/// `{a_1 ⋯ a_n : a_i ∈ A_i}`. The empty product is `{1}`.
pub fn spectrum_product(sets: &[Spectrum]) -> Spectrum {
    sets.iter().fold(Spectrum::singleton(ExtNat::ONE), |acc, s| {
        acc.iter().flat_map(|a| s.iter().map(move |b| a * b)).collect()
    })
}

/// `A^(1) ∪ .. ∪ A^(n)`, where `A^(i)` is the `i`-fold product of `A`.
pub fn nfold_union(a: &Spectrum, n: usize) -> Spectrum {
    assert!(n >= 1, "n-fold union needs n >= 1");
    let mut power = a.clone();
    let mut out = a.clone();
    for _ in 1..n {
        power = spectrum_product(&[power, a.clone()]);
        out = out.union(&power);
    }
    out
}

/// `∏_i (⋃_{j ≤ r_i} A_i^(j))`, the spectrum predicted for a product of
/// pairwise non-isomorphic centreless indecomposables with multiplicities `r_i`.
pub fn centreless_product_formula(spectra: &[Spectrum], multiplicities: &[usize]) -> Spectrum {
    assert_eq!(spectra.len(), multiplicities.len(), "one multiplicity per factor");
    let parts: Vec<Spectrum> = spectra
        .iter()
        .zip(multiplicities)
        .map(|(s, &r)| nfold_union(s, r))
        .collect();
    spectrum_product(&parts)
}

/// Expression over spectra, evaluated with set semantics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum SpectrumExpr {
    Literal { values: Spectrum },
    Product { terms: Vec<SpectrumExpr> },
    NfoldUnion { base: Box<SpectrumExpr>, n: usize },
}

impl SpectrumExpr {
    pub fn literal(values: Spectrum) -> Self {
        SpectrumExpr::Literal { values }
    }

    pub fn eval(&self) -> Spectrum {
        match self {
            SpectrumExpr::Literal { values } => values.clone(),
            SpectrumExpr::Product { terms } => {
                spectrum_product(&terms.iter().map(SpectrumExpr::eval).collect::<Vec<_>>())
            }
            SpectrumExpr::NfoldUnion { base, n } => nfold_union(&base.eval(), *n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContainmentReport {
    pub factors: Vec<String>,
    /// Product of the factor spectra.
    pub predicted: Spectrum,
    /// Spectrum of the product group by exhaustive enumeration.
    pub computed: Spectrum,
    pub contained: bool,
    pub equal: bool,
    pub passed: bool,
}

/// `∏ Spec(G_i) ⊆ Spec(G_1 x .. x G_n)`, right side by brute force.
pub fn check_product_containment(factors: &[Arc<FiniteGroup>], config: SearchConfig) -> Result<ContainmentReport> {
    check_product_containment_capped(factors, config, DEFAULT_ORDER_CAP)
}

pub fn check_product_containment_capped(
    factors: &[Arc<FiniteGroup>],
    config: SearchConfig,
    cap: usize,
) -> Result<ContainmentReport> {
    let product = direct_product(factors, cap)?;
    let parts = factors
        .iter()
        .map(|g| reidemeister_spectrum(g, config))
        .collect::<Result<Vec<_>>>()?;
    let predicted = spectrum_product(&parts);
    let computed = reidemeister_spectrum(product.group(), config)?;
    let contained = predicted.is_subset(&computed);
    Ok(ContainmentReport {
        factors: factors.iter().map(|g| g.label().to_string()).collect(),
        equal: predicted == computed,
        contained,
        passed: contained,
        predicted,
        computed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WreathSpectrumReport {
    pub group: String,
    pub n: usize,
    /// Whether `Aut(G^n)` is exactly the image of `Aut(G) ≀ S_n`.
    pub hypothesis_status: HypothesisStatus,
    pub computed_order: u64,
    pub expected_order: u64,
    pub predicted: Spectrum,
    pub computed: Spectrum,
    pub contained: bool,
    pub equal: bool,
    pub passed: bool,
}

/// Compares `Aut(G^n)` against the wreath image and, when they coincide,
/// `Spec(G^n)` against `⋃_{i ≤ n} Spec(G)^(i)`. When they differ only the
/// containment is required.
pub fn check_wreath_spectrum_equality(g: &Arc<FiniteGroup>, n: usize, config: SearchConfig) -> Result<WreathSpectrumReport> {
    check_wreath_spectrum_equality_capped(g, n, config, DEFAULT_ORDER_CAP)
}

pub fn check_wreath_spectrum_equality_capped(
    g: &Arc<FiniteGroup>,
    n: usize,
    config: SearchConfig,
    cap: usize,
) -> Result<WreathSpectrumReport> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let product = Arc::new(direct_product(&vec![g.clone(); n], cap)?);
    let base = enumerate_automorphisms(g, config)?;
    let autos = enumerate_automorphisms(product.group(), config)?;

    // The embedding is injective except for the trivial group, where every
    // permutation acts as the identity.
    let mut image: HashSet<Vec<usize>> = HashSet::new();
    let perms = Permutation::all(n);
    let mut tuple = vec![0usize; n];
    loop {
        let homs: Vec<_> = tuple.iter().map(|&i| base[i].clone()).collect();
        for s in &perms {
            image.insert(wreath_embed(&product, &homs, s)?.map().to_vec());
        }
        if !advance(&mut tuple, base.len()) {
            break;
        }
    }
    let expected_order = image.len() as u64;
    let holds = autos.len() == image.len() && autos.iter().all(|a| image.contains(a.map()));

    let spec_g = spectrum_of(&base);
    let predicted = nfold_union(&spec_g, n);
    let computed = spectrum_of(&autos);
    let contained = predicted.is_subset(&computed);
    let equal = predicted == computed;
    Ok(WreathSpectrumReport {
        group: g.label().to_string(),
        n,
        hypothesis_status: if holds {
            HypothesisStatus::Holds
        } else {
            HypothesisStatus::Fails
        },
        computed_order: autos.len() as u64,
        expected_order,
        passed: contained && (!holds || equal),
        predicted,
        computed,
        contained,
        equal,
    })
}

/// Odometer step over `{0..base}^len`; false once it wraps around.
fn advance(tuple: &mut [usize], base: usize) -> bool {
    for d in tuple.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::Preset;
    use proptest::prelude::*;

    fn g(p: &str) -> Arc<FiniteGroup> {
        Arc::new(p.parse::<Preset>().unwrap().build(DEFAULT_ORDER_CAP).unwrap())
    }

    fn s(v: &[u64]) -> Spectrum {
        Spectrum::from_finite(v)
    }

    fn with_inf(v: &[u64]) -> Spectrum {
        let mut out = s(v);
        out.insert(ExtNat::Infinite);
        out
    }

    #[test]
    fn products() {
        assert_eq!(spectrum_product(&[s(&[1]), s(&[5])]), s(&[5]));
        assert_eq!(spectrum_product(&[s(&[1, 3]), s(&[1, 3])]), s(&[1, 3, 9]));
        assert_eq!(spectrum_product(&[s(&[2, 4]), with_inf(&[])]), with_inf(&[]));
        assert_eq!(spectrum_product(&[]), s(&[1]));
        assert_eq!(spectrum_product(&[s(&[2]), s(&[])]), s(&[]));
    }

    #[test]
    fn nfold_unions() {
        assert_eq!(nfold_union(&s(&[3]), 2), s(&[3, 9]));
        assert_eq!(nfold_union(&s(&[1, 3]), 2), s(&[1, 3, 9]));
        for n in 1..5 {
            assert_eq!(nfold_union(&with_inf(&[]), n), with_inf(&[]));
        }
        assert_eq!(nfold_union(&s(&[2]), 3), s(&[2, 4, 8]));
        assert_eq!(centreless_product_formula(&[s(&[3])], &[2]), s(&[3, 9]));
        assert_eq!(centreless_product_formula(&[with_inf(&[]), s(&[3])], &[2, 1]), with_inf(&[]));
    }

    #[test]
    fn expression_tree() {
        let e = SpectrumExpr::Product {
            terms: vec![
                SpectrumExpr::NfoldUnion {
                    base: Box::new(SpectrumExpr::literal(s(&[3]))),
                    n: 2,
                },
                SpectrumExpr::literal(s(&[1, 2])),
            ],
        };
        assert_eq!(e.eval(), s(&[3, 6, 9, 18]));
        let json = serde_json::to_string(&e).unwrap();
        let back: SpectrumExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.eval(), e.eval());
    }

    /// Spectrum of an abelian group from `R(φ) = |Fix(φ)|` over all bijective
    /// maps that respect the table.
    fn abelian_spectrum_oracle(g: &FiniteGroup) -> Spectrum {
        let n = g.order();
        let mut out = Spectrum::new();
        for p in Permutation::all(n) {
            let f = |x: usize| p.apply(x);
            let hom = (0..n).all(|a| (0..n).all(|b| f(g.mul(a, b)) == g.mul(f(a), f(b))));
            if hom {
                out.insert(ExtNat::from((0..n).filter(|&x| f(x) == x).count()));
            }
        }
        out
    }

    #[test]
    fn containment_examples() {
        assert_eq!(abelian_spectrum_oracle(&g("Z6")), s(&[2, 6]));
        let r = check_product_containment(&[g("Z2"), g("Z3")], SearchConfig::default()).unwrap();
        assert_eq!(r.predicted, s(&[2, 6]));
        assert_eq!(r.computed, s(&[2, 6]));
        assert!(r.contained && r.passed);

        let r = check_product_containment(&[g("S3"), g("S3")], SearchConfig::default()).unwrap();
        assert_eq!(r.predicted, s(&[9]));
        assert_eq!(r.computed, s(&[3, 9]));
        assert!(r.contained && !r.equal);

        let r = check_product_containment(&[g("trivial"), g("D4")], SearchConfig::default()).unwrap();
        assert!(r.equal);
    }

    #[test]
    fn wreath_examples() {
        let r = check_wreath_spectrum_equality(&g("S3"), 2, SearchConfig::default()).unwrap();
        assert_eq!(r.hypothesis_status, HypothesisStatus::Holds);
        assert_eq!((r.computed_order, r.expected_order), (72, 72));
        assert_eq!(r.computed, s(&[3, 9]));
        assert!(r.equal && r.passed);

        let r = check_wreath_spectrum_equality(&g("Z3"), 2, SearchConfig::default()).unwrap();
        assert_eq!(r.hypothesis_status, HypothesisStatus::Fails);
        assert_eq!((r.computed_order, r.expected_order), (48, 8));
        assert!(r.contained && r.passed);

        for n in 1..4 {
            let r = check_wreath_spectrum_equality(&g("trivial"), n, SearchConfig::default()).unwrap();
            assert_eq!(r.hypothesis_status, HypothesisStatus::Holds);
            assert_eq!(r.computed, s(&[1]));
            assert!(r.passed);
        }
    }

    fn arb_spectrum() -> impl Strategy<Value = Spectrum> {
        (prop::collection::btree_set(1u64..30, 0..5), any::<bool>()).prop_map(|(v, inf)| {
            let mut out: Spectrum = v.into_iter().map(ExtNat::Finite).collect();
            if inf {
                out.insert(ExtNat::Infinite);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn product_is_commutative_and_associative(a in arb_spectrum(), b in arb_spectrum(), c in arb_spectrum()) {
            prop_assert_eq!(spectrum_product(&[a.clone(), b.clone()]), spectrum_product(&[b.clone(), a.clone()]));
            let left = spectrum_product(&[spectrum_product(&[a.clone(), b.clone()]), c.clone()]);
            let right = spectrum_product(&[a.clone(), spectrum_product(&[b.clone(), c.clone()])]);
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(spectrum_product(&[a.clone(), s(&[1])]), a.clone());
            if !b.is_empty() && a.contains(ExtNat::Infinite) {
                prop_assert!(spectrum_product(&[a, b]).contains(ExtNat::Infinite));
            }
        }

        #[test]
        fn nfold_union_grows(a in arb_spectrum(), n in 1usize..4) {
            let small = nfold_union(&a, n);
            let big = nfold_union(&a, n + 1);
            prop_assert!(small.is_subset(&big));
            prop_assert!(a.is_subset(&small));
        }
    }
}
