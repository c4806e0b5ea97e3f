//! Structure of automorphism groups of products of centreless,
//! directly indecomposable groups.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::finite_group::{
    center, conjugacy_classes, direct_product, internal_direct_product_check, FiniteGroup, ProductGroup,
    Subgroup, DEFAULT_ORDER_CAP,
};
use crate::hom_engine::{
    collect_homs, compose, enumerate_automorphisms, enumerate_embeddings, GroupHom, SearchConfig,
};
use crate::perm::Permutation;
use crate::product_matrix::{to_matrix, wreath_embed, EndoMatrix};
use crate::report::HypothesisStatus;
use crate::spectra::centreless_product_formula;
use crate::twisted::{reidemeister_spectrum, spectrum_of, Spectrum};

pub fn is_centerless(g: &Arc<FiniteGroup>) -> bool {
    center(g).is_trivial()
}

/// All normal subgroups, sorted by order then elements.
///
/// Every normal subgroup is a join of normal closures of single elements, so
/// the search closes the set of element closures under joins. Each join
/// attempted counts against the budget.
pub fn normal_subgroups(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<Subgroup>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut atoms: Vec<Subgroup> = Vec::new();
    for class in conjugacy_classes(g) {
        let n = Subgroup::generated_by(g, &class[..1]).normal_closure();
        if found.insert(n.elements().to_vec()) {
            atoms.push(n);
        }
    }
    let mut frontier: Vec<Subgroup> = atoms.clone();
    let mut work = 0u64;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for n in &frontier {
            for a in &atoms {
                work += 1;
                if work > config.budget {
                    return Err(Error::SearchBudgetExceeded { budget: config.budget });
                }
                if a.elements().iter().all(|&x| n.contains(x)) {
                    continue;
                }
                let j = n.join(a);
                if found.insert(j.elements().to_vec()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|e| Subgroup::new(g, e).expect("joins of normal subgroups are subgroups"))
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(out)
}

/// Pairs `(N, M)` of normal subgroups with `G = N x M` internally, `N` nontrivial.
/// Includes `(G, 1)`.
pub fn direct_factorizations(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<(Subgroup, Subgroup)>> {
    let normals = normal_subgroups(g, config)?;
    let mut out = Vec::new();
    for n in normals.iter().filter(|n| !n.is_trivial()) {
        for m in &normals {
            if n.order() * m.order() == g.order() && internal_direct_product_check(g, &[n.clone(), m.clone()]) {
                out.push((n.clone(), m.clone()));
            }
        }
    }
    Ok(out)
}

/// No decomposition `G = N x M` with both parts nontrivial.
pub fn is_directly_indecomposable(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<bool> {
    Ok(direct_factorizations(g, config)?
        .iter()
        .all(|(n, m)| m.is_trivial() || n.is_trivial()))
}

/// Sorted conjugacy class sizes and the element order histogram.
fn invariants(g: &FiniteGroup) -> (usize, Vec<usize>, Vec<usize>) {
    let mut sizes: Vec<usize> = conjugacy_classes(g).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    (g.order(), sizes, g.order_histogram())
}

/// Exhaustive isomorphism test, pruned by cheap invariants.
pub fn are_isomorphic(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, config: SearchConfig) -> Result<bool> {
    if invariants(g) != invariants(h) {
        return Ok(false);
    }
    match enumerate_embeddings(g, h, config).next() {
        Some(r) => r.map(|_| true),
        None => Ok(false),
    }
}

/// Subgroup `N` as a group in its own right, elements relabelled in order.
fn subgroup_as_group(n: &Subgroup) -> Arc<FiniteGroup> {
    let g = n.parent();
    let elems = n.elements();
    let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| index[&g.mul(a, b)]).collect())
        .collect();
    Arc::new(FiniteGroup::from_cayley_table(&table, None).expect("subgroup tables are groups"))
}

/// Errors unless every factor is nontrivial, centreless and directly indecomposable.
fn require_centreless_indecomposable(factors: &[Arc<FiniteGroup>], config: SearchConfig) -> Result<()> {
    for (i, g) in factors.iter().enumerate() {
        if g.order() == 1 {
            return Err(Error::HypothesisViolated(format!("factor {i} is trivial")));
        }
        if !is_centerless(g) {
            return Err(Error::HypothesisViolated(format!("factor {i} ({}) has a nontrivial center", g.label())));
        }
        if !is_directly_indecomposable(g, config)? {
            return Err(Error::HypothesisViolated(format!("factor {i} ({}) is a direct product", g.label())));
        }
    }
    Ok(())
}

fn require_pairwise_non_isomorphic(factors: &[Arc<FiniteGroup>], config: SearchConfig) -> Result<()> {
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if are_isomorphic(&factors[i], &factors[j], config)? {
                return Err(Error::HypothesisViolated(format!("factors {i} and {j} are isomorphic")));
            }
        }
    }
    Ok(())
}

/// Reads the permutation-with-isomorphisms shape off a matrix: row `i` has a
/// single nontrivial entry, in column `p(i)`, and it is bijective. Returns
/// `σ = p^-1`, so that the matrix has the shape of `P_{σ^-1}`.
fn pattern_of(m: &EndoMatrix) -> Option<Permutation> {
    let n = m.size();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let nontrivial: Vec<usize> = (0..n).filter(|&j| !m.entry(i, j).is_trivial()).collect();
        match nontrivial[..] {
            [j] if m.entry(i, j).is_bijective() => cols.push(j),
            _ => return None,
        }
    }
    Permutation::new(cols).ok().map(|p| p.inverse())
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternReport {
    pub factors: Vec<String>,
    pub hypothesis_status: HypothesisStatus,
    pub automorphism_count: usize,
    /// `σ` for each automorphism, in enumeration order.
    pub permutations: Vec<Permutation>,
    /// Distinct permutations that occur.
    pub patterns: Vec<Permutation>,
    /// `σ_{φψ} = σ_φ σ_ψ` for all pairs.
    pub homomorphism: bool,
    pub counterexample: Option<serde_json::Value>,
    pub passed: bool,
}

struct PatternScan {
    product: Arc<ProductGroup>,
    autos: Vec<GroupHom>,
    permutations: Vec<Option<Permutation>>,
}

fn scan_patterns(factors: &[Arc<FiniteGroup>], config: SearchConfig, cap: usize) -> Result<PatternScan> {
    let product = Arc::new(direct_product(factors, cap)?);
    let autos = enumerate_automorphisms(product.group(), config)?;
    let permutations = autos
        .par_iter()
        .map(|a| pattern_of(&to_matrix(&product, a)))
        .collect();
    Ok(PatternScan {
        product,
        autos,
        permutations,
    })
}

/// Checks that `φ ↦ σ_φ` respects composition on all pairs of automorphisms.
fn pattern_is_homomorphism(autos: &[GroupHom], perms: &[Permutation]) -> Option<(usize, usize)> {
    let index: HashMap<&[usize], usize> = autos.iter().enumerate().map(|(i, a)| (a.map(), i)).collect();
    (0..autos.len())
        .into_par_iter()
        .flat_map_iter(|i| (0..autos.len()).map(move |j| (i, j)))
        .find_first(|&(i, j)| {
            let c = compose(&autos[i], &autos[j]).expect("same group");
            let k = index[c.map()];
            perms[k] != perms[i].compose(&perms[j])
        })
}

/// Every automorphism of a product of centreless indecomposables has exactly
/// one nontrivial entry per row and column, and that entry is an isomorphism.
pub fn aut_matrix_pattern_check(factors: &[Arc<FiniteGroup>], config: SearchConfig) -> Result<PatternReport> {
    aut_matrix_pattern_check_capped(factors, config, DEFAULT_ORDER_CAP)
}

pub fn aut_matrix_pattern_check_capped(
    factors: &[Arc<FiniteGroup>],
    config: SearchConfig,
    cap: usize,
) -> Result<PatternReport> {
    require_centreless_indecomposable(factors, config)?;
    let scan = scan_patterns(factors, config, cap)?;
    let bad = scan.permutations.iter().position(Option::is_none);
    let labels = factors.iter().map(|g| g.label().to_string()).collect();
    if let Some(i) = bad {
        return Ok(PatternReport {
            factors: labels,
            hypothesis_status: HypothesisStatus::Holds,
            automorphism_count: scan.autos.len(),
            permutations: Vec::new(),
            patterns: Vec::new(),
            homomorphism: false,
            counterexample: Some(json!({ "automorphism": scan.autos[i].map() })),
            passed: false,
        });
    }
    let perms: Vec<Permutation> = scan.permutations.into_iter().flatten().collect();
    let broken = pattern_is_homomorphism(&scan.autos, &perms);
    let patterns: Vec<Permutation> = perms.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    Ok(PatternReport {
        factors: labels,
        hypothesis_status: HypothesisStatus::Holds,
        automorphism_count: scan.autos.len(),
        patterns,
        homomorphism: broken.is_none(),
        counterexample: broken.map(|(i, j)| json!({ "pair": [scan.autos[i].map(), scan.autos[j].map()] })),
        passed: broken.is_none(),
        permutations: perms,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct JohnsonReport {
    pub factors: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub hypothesis_status: HypothesisStatus,
    pub computed_order: u64,
    pub expected_order: u64,
    /// Every automorphism is a block-diagonal wreath element.
    pub block_wreath: bool,
    pub formula_spectrum: Spectrum,
    pub brute_spectrum: Spectrum,
    pub counterexample: Option<serde_json::Value>,
    pub passed: bool,
}

fn expand(distinct: &[Arc<FiniteGroup>], multiplicities: &[usize]) -> Result<(Vec<Arc<FiniteGroup>>, Vec<usize>)> {
    if distinct.is_empty() || distinct.len() != multiplicities.len() || multiplicities.contains(&0) {
        return Err(Error::InvalidSpec("need one positive multiplicity per factor".into()));
    }
    let mut factors = Vec::new();
    let mut block = Vec::new();
    for (b, (g, &r)) in distinct.iter().zip(multiplicities).enumerate() {
        factors.extend(std::iter::repeat_n(g.clone(), r));
        block.extend(std::iter::repeat_n(b, r));
    }
    Ok((factors, block))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `Aut(G_1^{r_1} x .. x G_m^{r_m}) = ∏ Aut(G_i) ≀ S_{r_i}` for pairwise
/// non-isomorphic centreless indecomposables, checked by full enumeration.
pub fn johnson_decomposition_check(
    distinct: &[Arc<FiniteGroup>],
    multiplicities: &[usize],
    config: SearchConfig,
) -> Result<JohnsonReport> {
    johnson_decomposition_check_capped(distinct, multiplicities, config, DEFAULT_ORDER_CAP)
}

pub fn johnson_decomposition_check_capped(
    distinct: &[Arc<FiniteGroup>],
    multiplicities: &[usize],
    config: SearchConfig,
    cap: usize,
) -> Result<JohnsonReport> {
    let (factors, block) = expand(distinct, multiplicities)?;
    require_centreless_indecomposable(distinct, config)?;
    require_pairwise_non_isomorphic(distinct, config)?;

    let base = distinct
        .iter()
        .map(|g| enumerate_automorphisms(g, config))
        .collect::<Result<Vec<_>>>()?;
    let expected_order = base
        .iter()
        .zip(multiplicities)
        .map(|(a, &r)| (a.len() as u64).pow(r as u32) * factorial(r))
        .product();

    let scan = scan_patterns(&factors, config, cap)?;
    let mut counterexample = None;
    for (idx, (a, p)) in scan.autos.iter().zip(&scan.permutations).enumerate() {
        let ok = match p {
            Some(sigma) => {
                let in_blocks = (0..factors.len()).all(|i| block[sigma.apply(i)] == block[i]);
                in_blocks && {
                    // rebuild φ as Diag(entries) P_{σ^-1} and compare
                    let m = to_matrix(&scan.product, a);
                    let inv = sigma.inverse();
                    let homs: Vec<GroupHom> = (0..factors.len()).map(|i| m.entry(i, inv.apply(i)).clone()).collect();
                    wreath_embed(&scan.product, &homs, sigma).map(|w| &w == a).unwrap_or(false)
                }
            }
            None => false,
        };
        if !ok {
            counterexample = Some(json!({ "automorphism": a.map(), "index": idx }));
            break;
        }
    }

    let parts: Vec<Spectrum> = base.iter().map(|a| spectrum_of(a)).collect();
    let formula_spectrum = centreless_product_formula(&parts, multiplicities);
    let brute_spectrum = spectrum_of(&scan.autos);
    let computed_order = scan.autos.len() as u64;
    let block_wreath = counterexample.is_none();
    Ok(JohnsonReport {
        factors: distinct.iter().map(|g| g.label().to_string()).collect(),
        multiplicities: multiplicities.to_vec(),
        hypothesis_status: HypothesisStatus::Holds,
        passed: block_wreath && computed_order == expected_order && formula_spectrum == brute_spectrum,
        computed_order,
        expected_order,
        block_wreath,
        formula_spectrum,
        brute_spectrum,
        counterexample,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicReport {
    pub factors: Vec<String>,
    pub complement: String,
    pub hypothesis_status: HypothesisStatus,
    pub computed_order: u64,
    /// `|Aut(G)| |Aut(H)| |Hom(G, Z(H))|`
    pub expected_order: u64,
    /// Every automorphism maps the embedded `H` onto itself.
    pub preserves_h: bool,
    /// Entries from `H` into the `G_i` vanish and entries into `H` from the
    /// `G_i` land in `Z(H)`.
    pub triangular: bool,
    pub counterexample: Option<serde_json::Value>,
    pub passed: bool,
}

/// `H` is characteristic in `G_1 x .. x G_m x H` when the `G_i` are centreless
/// indecomposables and `H` has no direct factor isomorphic to any of them.
pub fn characteristic_factor_check(
    g_factors: &[Arc<FiniteGroup>],
    h: &Arc<FiniteGroup>,
    config: SearchConfig,
) -> Result<CharacteristicReport> {
    characteristic_factor_check_capped(g_factors, h, config, DEFAULT_ORDER_CAP)
}

pub fn characteristic_factor_check_capped(
    g_factors: &[Arc<FiniteGroup>],
    h: &Arc<FiniteGroup>,
    config: SearchConfig,
    cap: usize,
) -> Result<CharacteristicReport> {
    if g_factors.is_empty() {
        return Err(Error::InvalidSpec("need at least one factor besides H".into()));
    }
    require_centreless_indecomposable(g_factors, config)?;
    for (n, _) in direct_factorizations(h, config)? {
        let piece = subgroup_as_group(&n);
        for (i, g) in g_factors.iter().enumerate() {
            if are_isomorphic(&piece, g, config)? {
                return Err(Error::HypothesisViolated(format!(
                    "H has a direct factor isomorphic to factor {i} ({})",
                    g.label()
                )));
            }
        }
    }

    let m = g_factors.len();
    let mut all = g_factors.to_vec();
    all.push(h.clone());
    let product = Arc::new(direct_product(&all, cap)?);
    let autos = enumerate_automorphisms(product.group(), config)?;
    let h_sub = product.factor_subgroup(m);
    let z_h = h.center_elements();

    let g_part: Arc<FiniteGroup> = if m == 1 {
        g_factors[0].clone()
    } else {
        direct_product(g_factors, cap)?.group().clone()
    };
    let aut_g = enumerate_automorphisms(&g_part, config)?.len() as u64;
    let aut_h = enumerate_automorphisms(h, config)?.len() as u64;
    let central = collect_homs(&g_part, h, config)?
        .iter()
        .filter(|f| f.map().iter().all(|x| z_h.binary_search(x).is_ok()))
        .count() as u64;
    let expected_order = aut_g * aut_h * central;

    let mut preserves_h = true;
    let mut triangular = true;
    let mut counterexample = None;
    for (idx, a) in autos.iter().enumerate() {
        let keeps = h_sub.elements().iter().all(|&x| h_sub.contains(a.apply(x)));
        let mat = to_matrix(&product, a);
        let shape = (0..m).all(|i| mat.entry(i, m).is_trivial())
            && (0..m).all(|j| mat.entry(m, j).map().iter().all(|x| z_h.binary_search(x).is_ok()));
        preserves_h &= keeps;
        triangular &= shape;
        if (!keeps || !shape) && counterexample.is_none() {
            counterexample = Some(json!({ "automorphism": a.map(), "index": idx }));
        }
    }
    let computed_order = autos.len() as u64;
    Ok(CharacteristicReport {
        factors: g_factors.iter().map(|g| g.label().to_string()).collect(),
        complement: h.label().to_string(),
        hypothesis_status: HypothesisStatus::Holds,
        passed: preserves_h && triangular && computed_order == expected_order,
        computed_order,
        expected_order,
        preserves_h,
        triangular,
        counterexample,
    })
}

/// `∏_i ⋃_{j ≤ r_i} Spec(G_i)^(j)` after checking the hypotheses on the `G_i`.
pub fn spectrum_of_centreless_product(
    distinct: &[Arc<FiniteGroup>],
    multiplicities: &[usize],
    config: SearchConfig,
) -> Result<Spectrum> {
    expand(distinct, multiplicities)?;
    require_centreless_indecomposable(distinct, config)?;
    require_pairwise_non_isomorphic(distinct, config)?;
    let parts = distinct
        .iter()
        .map(|g| reidemeister_spectrum(g, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(centreless_product_formula(&parts, multiplicities))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::Preset;

    fn g(p: &str) -> Arc<FiniteGroup> {
        Arc::new(p.parse::<Preset>().unwrap().build(DEFAULT_ORDER_CAP).unwrap())
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    /// Every subset closed under multiplication and conjugation, by brute force.
    fn normal_oracle(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 12);
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let has = |x: usize| mask >> x & 1 == 1;
            let elems: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
            let closed = elems.iter().all(|&a| elems.iter().all(|&b| has(g.mul(a, b))));
            let normal = elems.iter().all(|&a| (0..n).all(|t| has(g.conj(t, a))));
            if closed && normal {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn normal_subgroup_counts() {
        for (name, expected) in [("Z6", 4), ("S3", 3), ("D4", 6), ("Q8", 6), ("V4", 5), ("Z4", 3), ("A4", 3), ("D6", 7)] {
            let grp = g(name);
            let found = normal_subgroups(&grp, cfg()).unwrap();
            assert_eq!(found.len(), expected, "{name}");
            assert_eq!(found.len(), normal_oracle(&grp), "{name}");
            assert!(found.iter().all(Subgroup::is_normal));
        }
    }

    #[test]
    fn centerless_examples() {
        assert!(is_centerless(&g("S3")));
        assert!(!is_centerless(&g("Z2")));
        assert!(!is_centerless(&g("D4")));
        assert!(is_centerless(&g("S4")));
    }

    #[test]
    fn indecomposable_examples() {
        assert!(is_directly_indecomposable(&g("Z4"), cfg()).unwrap());
        assert!(!is_directly_indecomposable(&g("Z6"), cfg()).unwrap());
        assert!(is_directly_indecomposable(&g("S3"), cfg()).unwrap());
        assert!(!is_directly_indecomposable(&g("V4"), cfg()).unwrap());
        assert!(!is_directly_indecomposable(&g("D6"), cfg()).unwrap());
        assert!(is_directly_indecomposable(&g("Q8"), cfg()).unwrap());
        assert!(is_directly_indecomposable(&g("S4"), cfg()).unwrap());
    }

    #[test]
    fn isomorphism() {
        assert!(are_isomorphic(&g("S3"), &g("D3"), cfg()).unwrap());
        assert!(!are_isomorphic(&g("Z6"), &g("S3"), cfg()).unwrap());
        assert!(!are_isomorphic(&g("D4"), &g("Q8"), cfg()).unwrap());
        let v4 = g("V4");
        let p = direct_product(&[g("Z2"), g("Z2")], DEFAULT_ORDER_CAP).unwrap();
        assert!(are_isomorphic(&v4, p.group(), cfg()).unwrap());
    }

    #[test]
    fn pattern_examples() {
        let r = aut_matrix_pattern_check(&[g("S3")], cfg()).unwrap();
        assert_eq!(r.automorphism_count, 6);
        assert_eq!(r.patterns, vec![Permutation::identity(1)]);
        assert!(r.passed);

        let r = aut_matrix_pattern_check(&[g("S3"), g("S3")], cfg()).unwrap();
        assert_eq!(r.automorphism_count, 72);
        assert_eq!(r.patterns, Permutation::all(2));
        assert!(r.homomorphism && r.passed);

        let r = aut_matrix_pattern_check(&[g("S3"), g("S4")], cfg()).unwrap();
        assert_eq!(r.automorphism_count, 144);
        assert_eq!(r.patterns, vec![Permutation::identity(2)]);
        assert!(r.passed);

        assert!(matches!(
            aut_matrix_pattern_check(&[g("S3"), g("Z3")], cfg()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn johnson_examples() {
        let r = johnson_decomposition_check(&[g("S3")], &[2], cfg()).unwrap();
        assert_eq!((r.computed_order, r.expected_order), (72, 72));
        assert_eq!(r.formula_spectrum, Spectrum::from_finite(&[3, 9]));
        assert_eq!(r.brute_spectrum, Spectrum::from_finite(&[3, 9]));
        assert!(r.passed);

        let r = johnson_decomposition_check(&[g("S3")], &[1], cfg()).unwrap();
        assert_eq!(r.computed_order, 6);
        assert!(r.passed);

        assert!(matches!(
            johnson_decomposition_check(&[g("S3"), g("D3")], &[1, 1], cfg()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn characteristic_examples() {
        let r = characteristic_factor_check(&[g("S3")], &g("Z4"), cfg()).unwrap();
        assert_eq!((r.computed_order, r.expected_order), (24, 24));
        assert!(r.preserves_h && r.triangular && r.passed);

        let r = characteristic_factor_check(&[g("S3")], &g("trivial"), cfg()).unwrap();
        assert_eq!(r.computed_order, 6);
        assert!(r.passed);

        assert!(matches!(
            characteristic_factor_check(&[g("S3")], &g("S3"), cfg()),
            Err(Error::HypothesisViolated(_))
        ));
        // S3 appears as a direct factor of D6 = S3 x Z2
        assert!(matches!(
            characteristic_factor_check(&[g("S3")], &g("D6"), cfg()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn centreless_spectrum_formula() {
        assert_eq!(
            spectrum_of_centreless_product(&[g("S3")], &[2], cfg()).unwrap(),
            Spectrum::from_finite(&[3, 9])
        );
        assert_eq!(
            spectrum_of_centreless_product(&[g("S3")], &[1], cfg()).unwrap(),
            reidemeister_spectrum(&g("S3"), cfg()).unwrap()
        );
    }
}
