//! Endomorphisms of a direct product as matrices of homomorphisms.
//!
//! Entry `(i, j)` of the matrix of `φ` is `π_i ∘ φ ∘ e_j`, a map from factor
//! `j` to factor `i`. Row `i` of the matrix assembles coordinate `i` of the
//! image as the product of its entries evaluated on the matching coordinates,
//! which is well defined because images within a row commute.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::finite_group::{direct_product, FiniteGroup, ProductGroup, DEFAULT_ORDER_CAP};
use crate::hom_engine::{
    compose, enumerate_automorphisms, hom_image, pointwise_product, same_group, GroupHom, HomJson,
    SearchConfig,
};
use crate::perm::Permutation;
use crate::report::HypothesisStatus;
use crate::twisted::{reidemeister_number, reidemeister_partition, twisted_stabilizer, ExtNat};

/// An `n x n` grid of homomorphisms between the factors of a product.
#[derive(Debug, Clone)]
pub struct EndoMatrix {
    product: Arc<ProductGroup>,
    entries: Vec<Vec<GroupHom>>,
}

impl PartialEq for EndoMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoMatrixJson {
    pub factor_orders: Vec<usize>,
    pub entries: Vec<Vec<HomJson>>,
}

impl EndoMatrix {
    /// Validates shapes and the row commuting condition.
    pub fn new(product: &Arc<ProductGroup>, entries: Vec<Vec<GroupHom>>) -> Result<Self> {
        let n = product.factor_count();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::FactorMismatch(format!("expected a {n}x{n} grid")));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !same_group(e.domain(), product.factor(j)) || !same_group(e.codomain(), product.factor(i)) {
                    return Err(Error::FactorMismatch(format!(
                        "entry ({i}, {j}) must map factor {j} to factor {i}"
                    )));
                }
            }
        }
        let m = EndoMatrix {
            product: product.clone(),
            entries,
        };
        if let Some((row, k, l)) = m.commuting_violation() {
            return Err(Error::CommutingConditionViolated { row, k, l });
        }
        Ok(m)
    }

    pub fn identity(product: &Arc<ProductGroup>) -> Self {
        let n = product.factor_count();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| identity_or_trivial(product, i, j, i == j))
                    .collect()
            })
            .collect();
        EndoMatrix {
            product: product.clone(),
            entries,
        }
    }

    /// First `(row, k, l)` whose entry images fail to commute.
    pub fn commuting_violation(&self) -> Option<(usize, usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            let g = self.product.factor(i);
            let images: Vec<Vec<usize>> = row.iter().map(|e| hom_image(e).elements().to_vec()).collect();
            for k in 0..row.len() {
                for l in k + 1..row.len() {
                    let ok = images[k]
                        .iter()
                        .all(|&a| images[l].iter().all(|&b| g.commute(a, b)));
                    if !ok {
                        return Some((i, k, l));
                    }
                }
            }
        }
        None
    }

    pub fn product(&self) -> &Arc<ProductGroup> {
        &self.product
    }

    pub fn entries(&self) -> &[Vec<GroupHom>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &GroupHom {
        &self.entries[i][j]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.all_trivial(|i, j| i != j)
    }

    /// Everything strictly below the diagonal is trivial.
    pub fn is_upper_triangular(&self) -> bool {
        self.all_trivial(|i, j| i > j)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.all_trivial(|i, j| i < j)
    }

    fn all_trivial(&self, pick: impl Fn(usize, usize) -> bool) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, e)| !pick(i, j) || e.is_trivial()))
    }

    /// Matrix product: entry `(i, j)` is the pointwise product over `k` of
    /// `self[i][k] ∘ other[k][j]`.
    pub fn compose(&self, other: &EndoMatrix) -> Result<EndoMatrix> {
        if !Arc::ptr_eq(&self.product, &other.product) && self.product.group() != other.product.group() {
            return Err(Error::FactorMismatch("matrices over different products".into()));
        }
        let n = self.size();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut acc = compose(&self.entries[i][0], &other.entries[0][j])?;
                for k in 1..n {
                    let term = compose(&self.entries[i][k], &other.entries[k][j])?;
                    acc = pointwise_product(&acc, &term)?;
                }
                row.push(acc);
            }
            entries.push(row);
        }
        EndoMatrix::new(&self.product, entries)
    }

    /// Evaluates the matrix on the product without re-checking the law.
    fn evaluate(&self) -> Vec<usize> {
        let p = &self.product;
        let n = self.size();
        (0..p.group().order())
            .map(|x| {
                let coords = p.coords(x);
                let out: Vec<usize> = (0..n)
                    .map(|i| {
                        let g = p.factor(i);
                        (0..n).fold(g.identity(), |acc, k| g.mul(acc, self.entries[i][k].apply(coords[k])))
                    })
                    .collect();
                p.encode(&out)
            })
            .collect()
    }

    pub fn to_json(&self) -> EndoMatrixJson {
        EndoMatrixJson {
            factor_orders: self.product.factors().iter().map(|f| f.order()).collect(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(GroupHom::to_json).collect())
                .collect(),
        }
    }

    pub fn from_json(product: &Arc<ProductGroup>, json: &EndoMatrixJson) -> Result<Self> {
        let n = product.factor_count();
        let orders: Vec<usize> = product.factors().iter().map(|f| f.order()).collect();
        if json.factor_orders != orders || json.entries.len() != n {
            return Err(Error::FactorMismatch(format!(
                "matrix declares factor orders {:?}, product has {orders:?}",
                json.factor_orders
            )));
        }
        let mut entries = Vec::with_capacity(n);
        for (i, row) in json.entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::FactorMismatch(format!("row {i} has {} entries", row.len())));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, h)| GroupHom::from_json(product.factor(j).clone(), product.factor(i).clone(), h))
                .collect::<Result<Vec<_>>>()?;
            entries.push(parsed);
        }
        EndoMatrix::new(product, entries)
    }
}

fn identity_or_trivial(product: &ProductGroup, i: usize, j: usize, identity: bool) -> GroupHom {
    let (src, dst) = (product.factor(j), product.factor(i));
    if identity {
        GroupHom::from_map_unchecked(src.clone(), dst.clone(), (0..src.order()).collect())
    } else {
        GroupHom::trivial(src, dst)
    }
}

/// The matrix `(π_i ∘ φ ∘ e_j)`.
///
/// Panics if `endo` is not an endomorphism of the product group.
pub fn to_matrix(product: &Arc<ProductGroup>, endo: &GroupHom) -> EndoMatrix {
    assert!(
        same_group(endo.domain(), product.group()) && same_group(endo.codomain(), product.group()),
        "to_matrix needs an endomorphism of the product"
    );
    let n = product.factor_count();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let src = product.factor(j);
                    let map = (0..src.order())
                        .map(|g| product.coord(endo.apply(product.embedding(j).apply(g)), i))
                        .collect();
                    GroupHom::from_map_unchecked(src.clone(), product.factor(i).clone(), map)
                })
                .collect()
        })
        .collect();
    let m = EndoMatrix {
        product: product.clone(),
        entries,
    };
    assert!(m.commuting_violation().is_none(), "matrix of an endomorphism must satisfy the row condition");
    m
}

/// `(g_1, .., g_n) ↦ (∏_k φ_1k(g_k), .., ∏_k φ_nk(g_k))`, verified as a homomorphism.
pub fn from_matrix(m: &EndoMatrix) -> Result<GroupHom> {
    if let Some((row, k, l)) = m.commuting_violation() {
        return Err(Error::CommutingConditionViolated { row, k, l });
    }
    let g = m.product.group();
    GroupHom::new(g.clone(), g.clone(), m.evaluate())
}

fn check_diag_homs(product: &ProductGroup, homs: &[GroupHom]) -> Result<()> {
    if homs.len() != product.factor_count() {
        return Err(Error::FactorMismatch(format!(
            "{} maps for {} factors",
            homs.len(),
            product.factor_count()
        )));
    }
    for (i, h) in homs.iter().enumerate() {
        if !same_group(h.domain(), product.factor(i)) || !same_group(h.codomain(), product.factor(i)) {
            return Err(Error::FactorMismatch(format!("map {i} is not an endomorphism of factor {i}")));
        }
    }
    Ok(())
}

/// `Diag(φ_1, .., φ_n)`
pub fn diag(product: &Arc<ProductGroup>, homs: &[GroupHom]) -> Result<EndoMatrix> {
    check_diag_homs(product, homs)?;
    let n = homs.len();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        homs[i].clone()
                    } else {
                        GroupHom::trivial(product.factor(j), product.factor(i))
                    }
                })
                .collect()
        })
        .collect();
    EndoMatrix::new(product, entries)
}

/// `R(Diag(φ_1, .., φ_n)) = ∏ R(φ_i)`
pub fn diag_reidemeister(homs: &[GroupHom]) -> ExtNat {
    homs.par_iter().map(reidemeister_number).collect::<Vec<_>>().into_iter().product()
}

/// The coordinate permutation `(g_i) ↦ (g_{σ^-1(i)})` with its matrix.
#[derive(Debug, Clone)]
pub struct PermEndo {
    sigma: Permutation,
    matrix: EndoMatrix,
}

impl PermEndo {
    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn matrix(&self) -> &EndoMatrix {
        &self.matrix
    }

    pub fn endomorphism(&self) -> GroupHom {
        let g = self.matrix.product.group();
        GroupHom::from_map_unchecked(g.clone(), g.clone(), self.matrix.evaluate())
    }
}

/// Row `i` of the matrix is `e_{σ^-1(i)}`.
pub fn perm_endo(product: &Arc<ProductGroup>, sigma: &Permutation) -> Result<PermEndo> {
    let n = product.factor_count();
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} points for {n} factors",
            sigma.len()
        )));
    }
    let inv = sigma.inverse();
    for i in 0..n {
        let j = inv.apply(i);
        if product.factor(i) != product.factor(j) {
            return Err(Error::FactorsNotIdentical(i, j));
        }
    }
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| identity_or_trivial(product, i, j, j == inv.apply(i)))
                .collect()
        })
        .collect();
    Ok(PermEndo {
        sigma: sigma.clone(),
        matrix: EndoMatrix {
            product: product.clone(),
            entries,
        },
    })
}

/// `P_{τ^-1} P_{σ^-1} = P_{(τσ)^-1}`, compared on every element.
pub fn check_perm_composition(product: &Arc<ProductGroup>, sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    let lhs = compose(&perm_endo(product, tau)?.endomorphism(), &perm_endo(product, sigma)?.endomorphism())?;
    let rhs = perm_endo(product, &tau.compose(sigma))?.endomorphism();
    Ok(lhs == rhs)
}

/// Moves a permutation past a diagonal:
/// `P_{σ^-1} Diag(φ_1, .., φ_n) = Diag(φ_{σ^-1(1)}, .., φ_{σ^-1(n)}) P_{σ^-1}`.
pub fn rewrite_perm_diag(sigma: &Permutation, homs: &[GroupHom]) -> (Vec<GroupHom>, Permutation) {
    assert_eq!(sigma.len(), homs.len(), "permutation degree must match the number of maps");
    let inv = sigma.inverse();
    let moved = (0..homs.len()).map(|i| homs[inv.apply(i)].clone()).collect();
    (moved, sigma.clone())
}

/// Evaluates both sides of the rewriting rule on every element.
pub fn check_rewrite(product: &Arc<ProductGroup>, sigma: &Permutation, homs: &[GroupHom]) -> Result<bool> {
    let p = perm_endo(product, sigma)?.endomorphism();
    let lhs = compose(&p, &from_matrix(&diag(product, homs)?)?)?;
    let (moved, _) = rewrite_perm_diag(sigma, homs);
    let rhs = compose(&from_matrix(&diag(product, &moved)?)?, &p)?;
    Ok(lhs == rhs)
}

/// Element `(φ_1, .., φ_n; σ)` of `Aut(G) ≀ S_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct WreathElement {
    pub homs: Vec<GroupHom>,
    pub sigma: Permutation,
}

impl WreathElement {
    pub fn new(homs: Vec<GroupHom>, sigma: Permutation) -> Result<Self> {
        if homs.is_empty() || homs.len() != sigma.len() {
            return Err(Error::InvalidPermutation(format!(
                "{} maps for a permutation of {} points",
                homs.len(),
                sigma.len()
            )));
        }
        let g = homs[0].domain();
        for h in &homs {
            if !same_group(h.domain(), g) || !h.is_endomorphism() {
                return Err(Error::FactorMismatch("wreath entries must share one group".into()));
            }
            if !h.is_automorphism() {
                return Err(Error::NotAutomorphism);
            }
        }
        Ok(WreathElement { homs, sigma })
    }

    /// `(φ, σ)(ψ, τ) = (φ ∘ (σ·ψ), στ)` with `(σ·ψ)_i = ψ_{σ^-1(i)}`.
    pub fn mul(&self, other: &WreathElement) -> Result<WreathElement> {
        let inv = self.sigma.inverse();
        let homs = self
            .homs
            .iter()
            .enumerate()
            .map(|(i, f)| compose(f, &other.homs[inv.apply(i)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(WreathElement {
            homs,
            sigma: self.sigma.compose(&other.sigma),
        })
    }

    pub fn embed(&self, product: &Arc<ProductGroup>) -> Result<GroupHom> {
        wreath_embed(product, &self.homs, &self.sigma)
    }
}

/// `Diag(φ_1, .., φ_n) P_{σ^-1}`
pub fn wreath_embed(product: &Arc<ProductGroup>, homs: &[GroupHom], sigma: &Permutation) -> Result<GroupHom> {
    if let Some(_bad) = homs.iter().find(|h| !h.is_automorphism()) {
        return Err(Error::NotAutomorphism);
    }
    let d = from_matrix(&diag(product, homs)?)?;
    compose(&d, &perm_endo(product, sigma)?.endomorphism())
}

/// `Ψ(a) Ψ(b) = Ψ(ab)` on every element of the product.
pub fn check_wreath_law(product: &Arc<ProductGroup>, a: &WreathElement, b: &WreathElement) -> Result<bool> {
    let lhs = compose(&a.embed(product)?, &b.embed(product)?)?;
    let rhs = a.mul(b)?.embed(product)?;
    Ok(lhs == rhs)
}

/// `Diag(φ_1, .., φ_n) P_σ`, i.e. `(g_i) ↦ (φ_i(g_{σ(i)}))`.
pub fn permuted_diag_endo(product: &Arc<ProductGroup>, homs: &[GroupHom], sigma: &Permutation) -> Result<GroupHom> {
    let d = from_matrix(&diag(product, homs)?)?;
    compose(&d, &perm_endo(product, &sigma.inverse())?.endomorphism())
}

fn common_group(homs: &[GroupHom]) -> Result<&Arc<FiniteGroup>> {
    let first = homs
        .first()
        .ok_or_else(|| Error::FactorMismatch("no maps given".into()))?;
    let g = first.domain();
    for (i, h) in homs.iter().enumerate() {
        if !same_group(h.domain(), g) || !same_group(h.codomain(), g) {
            return Err(Error::FactorMismatch(format!("map {i} is not an endomorphism of the common group")));
        }
    }
    Ok(g)
}

/// Composes the maps along one cycle `(c_1 c_2 .. c_m)`: `φ_{c_1} ∘ .. ∘ φ_{c_m}`.
fn cycle_composite(homs: &[GroupHom], cycle: &[usize]) -> GroupHom {
    let (&last, rest) = cycle.split_last().expect("cycles are nonempty");
    rest.iter()
        .rev()
        .fold(homs[last].clone(), |acc, &c| compose(&homs[c], &acc).expect("common group"))
}

/// `R(Diag(φ_1, .., φ_n) P_σ)` as a product over the cycles of `σ`.
pub fn permuted_diag_reidemeister(homs: &[GroupHom], sigma: &Permutation) -> Result<ExtNat> {
    common_group(homs)?;
    if sigma.len() != homs.len() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} points for {} maps",
            sigma.len(),
            homs.len()
        )));
    }
    let numbers: Vec<ExtNat> = sigma
        .cycles()
        .par_iter()
        .map(|c| reidemeister_number(&cycle_composite(homs, c)))
        .collect();
    Ok(numbers.into_iter().product())
}

/// `R(φ_1 ∘ .. ∘ φ_n) = R(φ_2 ∘ .. ∘ φ_n ∘ φ_1)`, both by brute force.
pub fn cyclic_shift_check(homs: &[GroupHom]) -> Result<bool> {
    common_group(homs)?;
    let n = homs.len();
    let straight: Vec<usize> = (0..n).collect();
    let shifted: Vec<usize> = (1..n).chain([0]).collect();
    Ok(reidemeister_number(&cycle_composite(homs, &straight)) == reidemeister_number(&cycle_composite(homs, &shifted)))
}

/// Validates `(α, β; 0, δ)` on `H x K`: `α ∈ End(H)`, `β: K → H`, `δ ∈ End(K)`,
/// and `[im α, im β] = 1`.
fn check_triangle(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom) -> Result<()> {
    if !alpha.is_endomorphism() || !delta.is_endomorphism() {
        return Err(Error::FactorMismatch("diagonal entries must be endomorphisms".into()));
    }
    if !same_group(beta.domain(), delta.domain()) || !same_group(beta.codomain(), alpha.domain()) {
        return Err(Error::FactorMismatch("the corner map must go from K to H".into()));
    }
    let h = alpha.domain();
    let im_a = hom_image(alpha);
    let im_b = hom_image(beta);
    let ok = im_a
        .elements()
        .iter()
        .all(|&a| im_b.elements().iter().all(|&b| h.commute(a, b)));
    if !ok {
        return Err(Error::CommutingConditionViolated { row: 0, k: 0, l: 1 });
    }
    Ok(())
}

/// Orbits of `Stab_δ(k)` acting on the twisted classes of `α` by `[h] ↦ [h β(y)]`.
pub fn rho_orbits(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom, k_rep: usize) -> Result<usize> {
    check_triangle(alpha, beta, delta)?;
    let h = alpha.domain();
    let part = reidemeister_partition(alpha);
    let stab = twisted_stabilizer(delta, k_rep);
    let mut uf = crate::union_find::UnionFind::new(part.len());
    let reps = part.representatives();
    for &y in stab.elements() {
        let b = beta.apply(y);
        for (c, &rep) in reps.iter().enumerate() {
            uf.union(c, part.class_of(h.mul(rep, b)));
        }
    }
    Ok(uf.into_blocks().len())
}

/// `R(φ)` for `φ = (α, β; 0, δ)` as the sum of orbit counts over the twisted
/// classes of `δ`, using each class's smallest element as representative.
pub fn sum_formula_reidemeister(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom) -> Result<ExtNat> {
    check_triangle(alpha, beta, delta)?;
    let reps = reidemeister_partition(delta).representatives();
    let counts = reps
        .par_iter()
        .map(|&k| rho_orbits(alpha, beta, delta, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(counts.into_iter().map(|c| ExtNat::from(c as u64)).sum())
}

/// The product `H x K` together with the matrix `(α, β; 0, δ)`.
pub fn upper_triangular_matrix(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom) -> Result<EndoMatrix> {
    check_triangle(alpha, beta, delta)?;
    let (h, k) = (alpha.domain().clone(), delta.domain().clone());
    let product = Arc::new(direct_product(&[h.clone(), k.clone()], DEFAULT_ORDER_CAP)?);
    let entries = vec![
        vec![alpha.clone(), beta.clone()],
        vec![GroupHom::trivial(&h, &k), delta.clone()],
    ];
    EndoMatrix::new(&product, entries)
}

/// `R((α, β; 0, δ))` straight from the twisted conjugacy relation on `H x K`.
pub fn triangular_reidemeister_brute(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom) -> Result<ExtNat> {
    let m = upper_triangular_matrix(alpha, beta, delta)?;
    Ok(reidemeister_number(&from_matrix(&m)?))
}

/// `R((α, β; 0, δ)) ≤ R(α) R(δ)`, both sides by brute force.
pub fn upper_bound_check(alpha: &GroupHom, beta: &GroupHom, delta: &GroupHom) -> Result<bool> {
    let lhs = triangular_reidemeister_brute(alpha, beta, delta)?;
    Ok(lhs <= reidemeister_number(alpha) * reidemeister_number(delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangularShape {
    Diagonal,
    Upper,
    Lower,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangularReport {
    pub hypothesis_status: HypothesisStatus,
    pub shape: Option<TriangularShape>,
    pub automorphism_count: usize,
    /// Every diagonal entry is an automorphism of its factor.
    pub diagonal_automorphisms: bool,
    /// Every off-diagonal entry lands in the center of its target factor.
    pub off_diagonal_central: bool,
    pub counterexample: Option<serde_json::Value>,
    pub passed: bool,
}

/// Scans all automorphisms of the product. If their matrices share one
/// triangular shape, checks that diagonal entries are automorphisms and
/// off-diagonal entries are central.
pub fn triangular_aut_check(product: &Arc<ProductGroup>, config: SearchConfig) -> Result<TriangularReport> {
    let autos = enumerate_automorphisms(product.group(), config)?;
    let mats: Vec<EndoMatrix> = autos.iter().map(|a| to_matrix(product, a)).collect();
    let upper = mats.iter().all(EndoMatrix::is_upper_triangular);
    let lower = mats.iter().all(EndoMatrix::is_lower_triangular);
    let shape = match (upper, lower) {
        (true, true) => Some(TriangularShape::Diagonal),
        (true, false) => Some(TriangularShape::Upper),
        (false, true) => Some(TriangularShape::Lower),
        (false, false) => None,
    };
    let Some(shape) = shape else {
        let witness = mats
            .iter()
            .position(|m| !m.is_upper_triangular() && !m.is_lower_triangular())
            .or_else(|| mats.iter().position(|m| !m.is_upper_triangular()))
            .expect("some matrix breaks the shape");
        return Ok(TriangularReport {
            hypothesis_status: HypothesisStatus::Fails,
            shape: None,
            automorphism_count: autos.len(),
            diagonal_automorphisms: false,
            off_diagonal_central: false,
            counterexample: Some(json!({ "automorphism": autos[witness].map() })),
            passed: false,
        });
    };

    let n = product.factor_count();
    let centers: Vec<Vec<usize>> = (0..n).map(|i| product.factor(i).center_elements()).collect();
    let mut counterexample = None;
    let mut diagonal_ok = true;
    let mut central_ok = true;
    for (idx, m) in mats.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let e = m.entry(i, j);
                let bad = if i == j {
                    let fails = !e.is_automorphism();
                    diagonal_ok &= !fails;
                    fails
                } else {
                    let fails = e.map().iter().any(|x| centers[i].binary_search(x).is_err());
                    central_ok &= !fails;
                    fails
                };
                if bad && counterexample.is_none() {
                    counterexample = Some(json!({ "automorphism": autos[idx].map(), "entry": [i, j] }));
                }
            }
        }
    }
    Ok(TriangularReport {
        hypothesis_status: HypothesisStatus::Holds,
        shape: Some(shape),
        automorphism_count: autos.len(),
        diagonal_automorphisms: diagonal_ok,
        off_diagonal_central: central_ok,
        counterexample,
        passed: diagonal_ok && central_ok,
    })
}
