//! Verification suites: each compares a formula against brute force over a
//! fixed family of cases, either exhaustively or on seeded random samples.
//!
//! Cases run in parallel but every random choice is drawn from a generator
//! seeded by `(seed, case index)`, so output does not depend on scheduling.

use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::catalog_groups;
use crate::error::{Error, Result};
use crate::finite_group::{direct_product, FiniteGroup, ProductGroup, DEFAULT_ORDER_CAP};
use crate::hom_engine::{
    collect_endomorphisms, collect_homs, compose, count_automorphisms_up_to, enumerate_automorphisms, GroupHom,
    SearchConfig,
};
use crate::perm::Permutation;
use crate::product_matrix::{
    cyclic_shift_check, diag, diag_reidemeister, from_matrix, permuted_diag_endo, permuted_diag_reidemeister,
    sum_formula_reidemeister, to_matrix, triangular_reidemeister_brute, upper_triangular_matrix,
};
use crate::spectra::{check_product_containment_capped, check_wreath_spectrum_equality_capped};
use crate::structure::{characteristic_factor_check_capped, johnson_decomposition_check_capped};
use crate::twisted::{check_conjugate_invariance, check_inner_invariance, jabara_bound_check, reidemeister_number};
use crate::zdirectsum::{phi_example, phi_minus_id, psi_example, solve_phi_minus_id, FinSuppIntSeq};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_SAMPLES: usize = 200;

/// Products whose automorphism group is larger than this are skipped by the
/// spectrum suites rather than enumerated.
pub const AUTOMORPHISM_LIMIT: usize = 100_000;

pub const SUITES: &[&str] = &[
    "monoid-iso",
    "diag-product",
    "permuted-diag",
    "cyclic-shift",
    "sum-formula",
    "upper-bound",
    "inner-invariance",
    "conj-invariance",
    "jabara",
    "johnson",
    "wreath-spectrum",
    "characteristic-factor",
    "product-containment",
    "zdirectsum",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Sampling {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling::Random {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub sampling: Sampling,
    /// Largest group or product order considered; each suite has its own default.
    pub max_order: Option<usize>,
    pub config: SearchConfig,
    pub order_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sampling: Sampling::default(),
            max_order: None,
            config: SearchConfig::default(),
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub case: usize,
    pub label: String,
    pub checks: u64,
    pub failures: u64,
    pub skipped: Option<String>,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub sampling: Sampling,
    pub max_order: usize,
    pub checks: u64,
    pub failures: u64,
    pub skipped: usize,
    pub passed: bool,
    pub counterexample: Option<Value>,
    pub cases: Vec<CaseResult>,
}

#[derive(Debug, Default)]
struct Tally {
    checks: u64,
    failures: u64,
    skipped: Option<String>,
    counterexample: Option<Value>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Tally {
            skipped: Some(reason.into()),
            ..Tally::default()
        }
    }
}

/// Index tuples to check: the whole grid `sizes[0] x sizes[1] x ..`, or
/// `samples` uniform draws from it.
fn pick<'a>(sizes: &[usize], sampling: Sampling, rng: &'a mut ChaCha8Rng) -> Box<dyn Iterator<Item = Vec<usize>> + 'a> {
    if sizes.contains(&0) {
        return Box::new(std::iter::empty());
    }
    let sizes = sizes.to_vec();
    match sampling {
        Sampling::Exhaustive => Box::new(sizes.into_iter().map(|n| 0..n).multi_cartesian_product()),
        Sampling::Random { samples, .. } => Box::new(
            (0..samples).map(move |_| sizes.iter().map(|&n| rng.gen_range(0..n)).collect()),
        ),
    }
}

fn case_rng(sampling: Sampling, case: usize) -> ChaCha8Rng {
    let seed = match sampling {
        Sampling::Random { seed, .. } => seed,
        Sampling::Exhaustive => DEFAULT_SEED,
    };
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn run_cases<T: Sync>(
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    run: impl Fn(&T, &mut ChaCha8Rng) -> Result<Tally> + Sync,
    sampling: Sampling,
) -> Result<Vec<CaseResult>> {
    items
        .par_iter()
        .enumerate()
        .map(|(i, item)| {
            let mut rng = case_rng(sampling, i);
            let tally = match run(item, &mut rng) {
                Err(Error::SearchBudgetExceeded { budget }) => {
                    Tally::skip(format!("search budget of {budget} nodes exceeded"))
                }
                other => other?,
            };
            Ok(CaseResult {
                case: i,
                label: label(item),
                checks: tally.checks,
                failures: tally.failures,
                skipped: tally.skipped,
                counterexample: tally.counterexample,
            })
        })
        .collect()
}

fn groups(names: &[&str], cap: usize) -> Result<Vec<Arc<FiniteGroup>>> {
    names
        .iter()
        .map(|n| crate::catalog::parse_group(n, cap))
        .collect()
}

fn product(factors: &[Arc<FiniteGroup>], cap: usize) -> Result<Arc<ProductGroup>> {
    Ok(Arc::new(direct_product(factors, cap)?))
}

fn label_of(factors: &[Arc<FiniteGroup>]) -> String {
    factors.iter().map(|g| g.label()).join(" x ")
}

/// Nondecreasing index sequences of every length whose product order fits.
fn multisets(pool: &[Arc<FiniteGroup>], max_order: usize) -> Vec<Vec<Arc<FiniteGroup>>> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = (0..pool.len()).map(|i| (vec![i], pool[i].order())).collect();
    stack.reverse();
    while let Some((idx, order)) = stack.pop() {
        if order > max_order {
            continue;
        }
        out.push(idx.iter().map(|&i| pool[i].clone()).collect());
        let last = *idx.last().expect("nonempty");
        // trivial factors would repeat forever
        if pool[last].order() == 1 {
            continue;
        }
        for j in (last..pool.len()).rev() {
            if pool[j].order() > 1 {
                let mut next = idx.clone();
                next.push(j);
                stack.push((next, order * pool[j].order()));
            }
        }
    }
    out
}

/// Ordered pairs from `pool` whose product order fits.
fn ordered_pairs(pool: &[Arc<FiniteGroup>], max_order: usize) -> Vec<Vec<Arc<FiniteGroup>>> {
    pool.iter()
        .cartesian_product(pool)
        .filter(|(a, b)| a.order() * b.order() <= max_order)
        .map(|(a, b)| vec![a.clone(), b.clone()])
        .collect()
}

/// Unordered pairs (with repetition) from `pool` whose product order fits.
fn unordered_pairs(pool: &[Arc<FiniteGroup>], max_order: usize) -> Vec<Vec<Arc<FiniteGroup>>> {
    (0..pool.len())
        .flat_map(|i| (i..pool.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| pool[i].order() * pool[j].order() <= max_order)
        .map(|(i, j)| vec![pool[i].clone(), pool[j].clone()])
        .collect()
}

/// Runs a suite by id.
pub fn run_suite(id: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let default_max = match id {
        "monoid-iso" => 18,
        "diag-product" => 81,
        "permuted-diag" => 216,
        "cyclic-shift" | "inner-invariance" | "conj-invariance" => 12,
        "sum-formula" | "upper-bound" => 36,
        "jabara" => 24,
        "johnson" => 216,
        "wreath-spectrum" | "product-containment" => 64,
        "characteristic-factor" => 48,
        "zdirectsum" => 0,
        _ => return Err(Error::UnknownSuite(id.to_string())),
    };
    let max = opts.max_order.unwrap_or(default_max);
    let cases = match id {
        "monoid-iso" => monoid_iso(opts, max)?,
        "diag-product" => diag_product(opts, max)?,
        "permuted-diag" => permuted_diag(opts, max)?,
        "cyclic-shift" => cyclic_shift(opts, max)?,
        "sum-formula" => triangular(opts, max, false)?,
        "upper-bound" => triangular(opts, max, true)?,
        "inner-invariance" => inner_invariance(opts, max)?,
        "conj-invariance" => conj_invariance(opts, max)?,
        "jabara" => jabara(opts, max)?,
        "johnson" => johnson(opts, max)?,
        "wreath-spectrum" => wreath_spectrum(opts, max)?,
        "characteristic-factor" => characteristic(opts, max)?,
        "product-containment" => product_containment(opts, max)?,
        "zdirectsum" => zdirectsum(opts)?,
        _ => unreachable!("checked above"),
    };
    let checks = cases.iter().map(|c| c.checks).sum();
    let failures = cases.iter().map(|c| c.failures).sum();
    let counterexample = cases
        .iter()
        .find(|c| c.counterexample.is_some())
        .map(|c| json!({ "case": c.case, "label": c.label, "witness": c.counterexample }));
    Ok(SuiteReport {
        suite: id.to_string(),
        sampling: opts.sampling,
        max_order: max,
        checks,
        failures,
        skipped: cases.iter().filter(|c| c.skipped.is_some()).count(),
        passed: failures == 0,
        counterexample,
        cases,
    })
}

fn monoid_iso(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let pool = groups(&["Z2", "Z3", "S3"], opts.order_cap)?;
    let cases = ordered_pairs(&pool, max);
    run_cases(
        &cases,
        |fs| label_of(fs),
        |fs, rng| {
            let p = product(fs, opts.order_cap)?;
            let ends = collect_endomorphisms(p.group(), opts.config)?;
            let mats: Vec<_> = ends.iter().map(|e| to_matrix(&p, e)).collect();
            let mut t = Tally::default();
            for (e, m) in ends.iter().zip(&mats) {
                t.record(&from_matrix(m)? == e, || json!({ "round_trip": e.map() }));
            }
            for ij in pick(&[ends.len(), ends.len()], opts.sampling, rng) {
                let (i, j) = (ij[0], ij[1]);
                let lhs = to_matrix(&p, &compose(&ends[i], &ends[j])?);
                let rhs = mats[i].compose(&mats[j])?;
                t.record(lhs == rhs, || json!({ "f": ends[i].map(), "g": ends[j].map() }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn diag_product(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let pool = groups(&["Z2", "Z3", "Z4", "S3"], opts.order_cap)?;
    let cases = multisets(&pool, max);
    run_cases(
        &cases,
        |fs| label_of(fs),
        |fs, rng| {
            let p = product(fs, opts.order_cap)?;
            let ends = fs
                .iter()
                .map(|g| collect_endomorphisms(g, opts.config))
                .collect::<Result<Vec<_>>>()?;
            let sizes: Vec<usize> = ends.iter().map(Vec::len).collect();
            let mut t = Tally::default();
            for idx in pick(&sizes, opts.sampling, rng) {
                let homs: Vec<GroupHom> = idx.iter().zip(&ends).map(|(&i, e)| e[i].clone()).collect();
                let brute = reidemeister_number(&from_matrix(&diag(&p, &homs)?)?);
                let formula = diag_reidemeister(&homs);
                t.record(formula == brute, || {
                    json!({ "maps": homs.iter().map(|h| h.map()).collect::<Vec<_>>(), "formula": formula, "brute": brute })
                });
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn permuted_diag(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let pool = groups(&["Z3", "S3"], opts.order_cap)?;
    let mut cases = Vec::new();
    for g in &pool {
        for n in 2..=3 {
            if g.order().pow(n as u32) <= max {
                for s in Permutation::all(n) {
                    cases.push((g.clone(), n, s));
                }
            }
        }
    }
    run_cases(
        &cases,
        |(g, n, s)| format!("{}^{n} sigma={s}", g.label()),
        |(g, n, s), rng| {
            let p = product(&vec![g.clone(); *n], opts.order_cap)?;
            let ends = collect_endomorphisms(g, opts.config)?;
            let mut t = Tally::default();
            for idx in pick(&vec![ends.len(); *n], opts.sampling, rng) {
                let homs: Vec<GroupHom> = idx.iter().map(|&i| ends[i].clone()).collect();
                let brute = reidemeister_number(&permuted_diag_endo(&p, &homs, s)?);
                let formula = permuted_diag_reidemeister(&homs, s)?;
                t.record(formula == brute, || {
                    json!({ "maps": homs.iter().map(|h| h.map()).collect::<Vec<_>>(), "formula": formula, "brute": brute })
                });
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn cyclic_shift(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let cases = catalog_groups(max);
    run_cases(
        &cases,
        |g| g.label().to_string(),
        |g, rng| {
            let ends = collect_endomorphisms(g, opts.config)?;
            let mut t = Tally::default();
            let tuples: Vec<Vec<usize>> = match opts.sampling {
                Sampling::Exhaustive => pick(&[ends.len(), ends.len()], opts.sampling, rng).collect(),
                Sampling::Random { samples, .. } => (0..samples)
                    .map(|_| {
                        let len = rng.gen_range(2..=4);
                        (0..len).map(|_| rng.gen_range(0..ends.len())).collect()
                    })
                    .collect(),
            };
            for idx in tuples {
                let homs: Vec<GroupHom> = idx.iter().map(|&i| ends[i].clone()).collect();
                t.record(cyclic_shift_check(&homs)?, || json!({ "maps": homs.iter().map(|h| h.map()).collect::<Vec<_>>() }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

/// `(α, β, δ)` with the commuting condition on the top row, over `H x K`.
fn valid_triples(h: &Arc<FiniteGroup>, k: &Arc<FiniteGroup>, config: SearchConfig) -> Result<Vec<(GroupHom, GroupHom, GroupHom)>> {
    let alphas = collect_endomorphisms(h, config)?;
    let betas = collect_homs(k, h, config)?;
    let deltas = collect_endomorphisms(k, config)?;
    let mut out = Vec::new();
    for a in &alphas {
        for b in &betas {
            if upper_triangular_matrix(a, b, &deltas[0]).is_err() {
                continue;
            }
            for d in &deltas {
                out.push((a.clone(), b.clone(), d.clone()));
            }
        }
    }
    Ok(out)
}

fn triangular(opts: &VerifyOptions, max: usize, bound_only: bool) -> Result<Vec<CaseResult>> {
    let pool = groups(&["Z2", "Z3", "Z4", "S3"], opts.order_cap)?;
    let cases = ordered_pairs(&pool, max);
    run_cases(
        &cases,
        |fs| label_of(fs),
        |fs, rng| {
            let triples = valid_triples(&fs[0], &fs[1], opts.config)?;
            let mut t = Tally::default();
            for idx in pick(&[triples.len()], opts.sampling, rng) {
                let (a, b, d) = &triples[idx[0]];
                let brute = triangular_reidemeister_brute(a, b, d)?;
                let ok = if bound_only {
                    brute <= reidemeister_number(a) * reidemeister_number(d)
                } else {
                    sum_formula_reidemeister(a, b, d)? == brute
                };
                t.record(ok, || json!({ "alpha": a.map(), "beta": b.map(), "delta": d.map(), "brute": brute }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn inner_invariance(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let cases = catalog_groups(max);
    run_cases(
        &cases,
        |g| g.label().to_string(),
        |g, rng| {
            let ends = collect_endomorphisms(g, opts.config)?;
            let mut t = Tally::default();
            for idx in pick(&[ends.len(), g.order()], opts.sampling, rng) {
                let (e, x) = (&ends[idx[0]], idx[1]);
                t.record(check_inner_invariance(e, x), || json!({ "endo": e.map(), "element": x }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn conj_invariance(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let cases = catalog_groups(max);
    run_cases(
        &cases,
        |g| g.label().to_string(),
        |g, rng| {
            let ends = collect_endomorphisms(g, opts.config)?;
            let autos = enumerate_automorphisms(g, opts.config)?;
            let mut t = Tally::default();
            for idx in pick(&[ends.len(), autos.len()], opts.sampling, rng) {
                let (e, a) = (&ends[idx[0]], &autos[idx[1]]);
                t.record(check_conjugate_invariance(e, a)?, || json!({ "endo": e.map(), "auto": a.map() }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn jabara(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let cases = catalog_groups(max);
    run_cases(
        &cases,
        |g| g.label().to_string(),
        |g, rng| {
            let autos = enumerate_automorphisms(g, opts.config)?;
            let mut t = Tally::default();
            for idx in pick(&[autos.len()], opts.sampling, rng) {
                let a = &autos[idx[0]];
                t.record(jabara_bound_check(a)?, || json!({ "auto": a.map() }));
            }
            Ok(t)
        },
        opts.sampling,
    )
}

fn johnson(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let specs: &[(&[&str], &[usize])] = &[
        (&["S3"], &[1]),
        (&["S3"], &[2]),
        (&["D5"], &[1]),
        (&["S3", "D5"], &[1, 1]),
        (&["S4"], &[1]),
        (&["S3", "S4"], &[1, 1]),
        (&["D5"], &[2]),
        (&["S3"], &[3]),
        (&["S3", "D5"], &[2, 1]),
    ];
    let mut cases = Vec::new();
    for (names, mult) in specs {
        let gs = groups(names, opts.order_cap)?;
        let order: usize = gs.iter().zip(*mult).map(|(g, &r)| g.order().pow(r as u32)).product();
        if order <= max {
            cases.push((gs, mult.to_vec()));
        }
    }
    run_cases(
        &cases,
        |(gs, mult)| gs.iter().zip(mult).map(|(g, r)| format!("{}^{r}", g.label())).join(" x "),
        |(gs, mult), _| {
            let r = johnson_decomposition_check_capped(gs, mult, opts.config, opts.order_cap)?;
            let mut t = Tally::default();
            t.record(r.passed, || serde_json::to_value(&r).expect("serializable"));
            Ok(t)
        },
        opts.sampling,
    )
}

/// Factor pool for the spectrum suites.
const SPECTRUM_POOL: &[&str] = &["trivial", "Z2", "Z3", "Z4", "V4", "Z5", "S3", "Z6", "Z7", "Z8", "D4", "Q8"];

fn too_many_automorphisms(g: &Arc<FiniteGroup>, config: SearchConfig) -> Result<bool> {
    Ok(count_automorphisms_up_to(g, config, AUTOMORPHISM_LIMIT)?.is_none())
}

fn wreath_spectrum(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let pool = groups(SPECTRUM_POOL, opts.order_cap)?;
    let cases: Vec<_> = pool.into_iter().filter(|g| g.order() * g.order() <= max).collect();
    run_cases(
        &cases,
        |g| format!("{}^2", g.label()),
        |g, _| {
            let p = product(&[g.clone(), g.clone()], opts.order_cap)?;
            if too_many_automorphisms(p.group(), opts.config)? {
                return Ok(Tally::skip(format!("more than {AUTOMORPHISM_LIMIT} automorphisms")));
            }
            let r = check_wreath_spectrum_equality_capped(g, 2, opts.config, opts.order_cap)?;
            let mut t = Tally::default();
            t.record(r.passed, || serde_json::to_value(&r).expect("serializable"));
            Ok(t)
        },
        opts.sampling,
    )
}

fn product_containment(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let pool = groups(SPECTRUM_POOL, opts.order_cap)?;
    let cases = unordered_pairs(&pool, max);
    run_cases(
        &cases,
        |fs| label_of(fs),
        |fs, _| {
            let p = product(fs, opts.order_cap)?;
            if too_many_automorphisms(p.group(), opts.config)? {
                return Ok(Tally::skip(format!("more than {AUTOMORPHISM_LIMIT} automorphisms")));
            }
            let r = check_product_containment_capped(fs, opts.config, opts.order_cap)?;
            let mut t = Tally::default();
            t.record(r.passed, || serde_json::to_value(&r).expect("serializable"));
            Ok(t)
        },
        opts.sampling,
    )
}

fn characteristic(opts: &VerifyOptions, max: usize) -> Result<Vec<CaseResult>> {
    let gs = groups(&["S3", "D5"], opts.order_cap)?;
    let mut cases = Vec::new();
    for g in &gs {
        for h in catalog_groups(max / g.order()) {
            cases.push((g.clone(), h));
        }
    }
    run_cases(
        &cases,
        |(g, h)| format!("{} x {}", g.label(), h.label()),
        |(g, h), _| match characteristic_factor_check_capped(std::slice::from_ref(g), h, opts.config, opts.order_cap) {
            Err(Error::HypothesisViolated(why)) => Ok(Tally::skip(format!("hypothesis fails: {why}"))),
            Err(e) => Err(e),
            Ok(r) => {
                let mut t = Tally::default();
                t.record(r.passed, || serde_json::to_value(&r).expect("serializable"));
                Ok(t)
            }
        },
        opts.sampling,
    )
}

fn random_sequence(rng: &mut ChaCha8Rng, max_support: usize) -> FinSuppIntSeq {
    let len = rng.gen_range(0..=max_support);
    let mut s = FinSuppIntSeq::zero();
    for _ in 0..len {
        s.set(rng.gen_range(1..=2 * max_support as u64), rng.gen_range(-1000..=1000));
    }
    s
}

fn zdirectsum(opts: &VerifyOptions) -> Result<Vec<CaseResult>> {
    let cases = ["inverse pair", "solver", "fixed point"];
    run_cases(
        &cases,
        |c| c.to_string(),
        |c, rng| {
            let seqs: Vec<FinSuppIntSeq> = match opts.sampling {
                Sampling::Exhaustive => (0..8)
                    .map(|_| [-1i64, 0, 1])
                    .multi_cartesian_product()
                    .map(|v| FinSuppIntSeq::from_dense(&v))
                    .chain((1..=100).map(FinSuppIntSeq::basis))
                    .collect(),
                Sampling::Random { samples, .. } => (0..samples).map(|_| random_sequence(rng, 30)).collect(),
            };
            let mut t = Tally::default();
            match *c {
                "inverse pair" => {
                    for a in &seqs {
                        let ok = psi_example(&phi_example(a)) == *a && phi_example(&psi_example(a)) == *a;
                        t.record(ok, || json!(a));
                    }
                }
                "solver" => {
                    for target in &seqs {
                        let a = solve_phi_minus_id(target);
                        t.record(phi_minus_id(&a) == *target, || json!({ "target": target, "preimage": a }));
                    }
                }
                _ => {
                    let e1 = FinSuppIntSeq::basis(1);
                    t.record(phi_example(&e1) == e1, || json!(e1));
                }
            }
            Ok(t)
        },
        opts.sampling,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(id: &str, sampling: Sampling, max_order: Option<usize>) -> SuiteReport {
        let opts = VerifyOptions {
            sampling,
            max_order,
            ..VerifyOptions::default()
        };
        run_suite(id, &opts).unwrap()
    }

    #[test]
    fn every_suite_runs_small() {
        let sampling = Sampling::Random { samples: 5, seed: 1 };
        for id in SUITES {
            let max = match *id {
                "johnson" | "characteristic-factor" => Some(36),
                "zdirectsum" => None,
                _ => Some(12),
            };
            let r = quick(id, sampling, max);
            assert!(r.passed, "{id}: {:?}", r.counterexample);
            assert!(r.checks > 0, "{id} ran no checks");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &VerifyOptions::default()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn deterministic_under_seed() {
        let s = Sampling::Random { samples: 20, seed: 7 };
        let a = serde_json::to_string(&quick("cyclic-shift", s, Some(8))).unwrap();
        let b = serde_json::to_string(&quick("cyclic-shift", s, Some(8))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multisets_respect_order() {
        let pool = groups(&["Z2", "Z3"], DEFAULT_ORDER_CAP).unwrap();
        let labels: Vec<String> = multisets(&pool, 6).iter().map(|fs| label_of(fs)).collect();
        assert_eq!(labels, ["Z2", "Z2 x Z2", "Z2 x Z3", "Z3"]);
    }
}
